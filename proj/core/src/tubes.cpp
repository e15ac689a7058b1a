#include "hss/tubes.hpp"

#include <cmath>
#include <numbers>
#include <set>
#include <sstream>
#include <stdexcept>

#include "hss/curvature.hpp"

namespace hss {
namespace {

constexpr double kSingular = 1e-14;

std::string fmt(double x) {
  std::ostringstream os;
  os.precision(17);
  os << x;
  return os.str();
}

std::string root_text(const RootSystem& rs, RootIndex a) { return rs.root(a).to_string(); }

double block_value(const Rational& kappa, bool tangent, double t) {
  const double k = kappa.get_d();
  const double w = std::sqrt(k);
  if (tangent) {
    if (k == 0) return 0.0;
    if (std::abs(std::cos(w * t)) < kSingular)
      throw std::invalid_argument("radius " + fmt(t) + " is a singularity of a tangent block");
    return -w * std::tan(w * t);
  }
  if (k == 0) return 1.0 / t;
  if (std::abs(std::sin(w * t)) < kSingular)
    throw std::invalid_argument("radius " + fmt(t) + " is a singularity of a normal block");
  return w / std::tan(w * t);
}

bool j_invariant(const HermitianSpace& hs, const std::vector<Vector>& vs) {
  Span s(hs.dim_p());
  for (const auto& v : vs) s.add(v);
  for (const auto& v : vs)
    if (!s.contains(hs.apply_J(v))) return false;
  return true;
}

}  // namespace

FocalModel focal_data(std::shared_ptr<const HermitianSpace> space, reference::TubeCase case_id, int sub_k) {
  if (!space) throw std::invalid_argument("null space");
  const HermitianSpace& hs = *space;
  const RootSystem& rs = hs.roots();
  if (!reference::case_in_range(case_id, rs.family(), rs.rank(), hs.node(), sub_k)) {
    std::ostringstream os;
    os << "tube case " << reference::case_numeral(case_id) << " (" << reference::case_name(case_id)
       << ") does not apply to " << rs.name() << " node " << hs.node();
    if (case_id == reference::TubeCase::CPk_in_CPr) os << " with k = " << sub_k;
    throw std::invalid_argument(os.str());
  }
  FocalModel f;
  f.space = space;
  f.case_id = case_id;
  f.sub_k = sub_k;
  for (const auto& w : reference::focal_roots(case_id, rs.rank(), hs.node(), sub_k)) {
    const RootIndex a = rs.index_of(w);
    hs.p_position(a);
    f.delta_f.push_back(a);
  }
  const std::set<RootIndex> df(f.delta_f.begin(), f.delta_f.end());
  const RootIndex top = rs.highest_index();
  const Matrix m = Rational(1, 2) * jacobi_operator(hs, hs.u(top)).matrix;
  auto eigenvalue = [&](const Vector& x, const std::string& what) {
    const Vector y = m.apply(x);
    std::size_t i = 0;
    while (i < x.size() && sgn(x[i]) == 0) ++i;
    const Rational lambda = y[i] / x[i];
    if (y != lambda * x) throw std::logic_error(what + " is not an eigenvector of the Jacobi operator");
    return lambda;
  };
  for (RootIndex a : hs.delta_M_pos()) {
    if (a == top) continue;
    const Rational k = eigenvalue(hs.u(a), "u" + root_text(rs, a));
    if (eigenvalue(hs.v(a), "v" + root_text(rs, a)) != k)
      throw std::logic_error("C u" + root_text(rs, a) + " is not a Jacobi eigenspace");
    f.blocks.push_back({a, k, df.count(a) == 1});
  }
  f.xi_kappa = eigenvalue(hs.v(top), "v_delta");
  return f;
}

std::vector<Vector> focal_tangent_span(const FocalModel& focal) {
  return complex_span(*focal.space, focal.delta_f);
}

double closed_form_curvature(CurvatureSlot s, double t) {
  const double r2 = std::numbers::sqrt2;
  switch (s) {
    case CurvatureSlot::B: return 0.0;
    case CurvatureSlot::D: return -std::tan(t / r2) / r2;
    case CurvatureSlot::C: return 1.0 / (std::tan(t / r2) * r2);
    case CurvatureSlot::A: return r2 / std::tan(r2 * t);
  }
  return 0.0;
}

TubeModel tube_shape_operator(const FocalModel& focal, double t) {
  const double tmax = std::numbers::pi / std::numbers::sqrt2;
  if (!(t > 0 && t < tmax))
    throw std::invalid_argument("radius " + fmt(t) + " is outside (0, pi/sqrt(2))");
  const HermitianSpace& hs = *focal.space;
  const RootIndex top = hs.roots().highest_index();
  TubeModel tube;
  tube.focal = focal;
  tube.t = t;

  std::vector<double> values;
  auto push = [&](std::size_t p, CurvatureSlot s, const Rational& k, double value) {
    tube.basis.push_back(p);
    tube.slot.push_back(s);
    tube.kappa.push_back(k);
    values.push_back(value);
  };
  std::size_t bi = 0;
  for (RootIndex a : hs.delta_M_pos()) {
    const std::size_t p = hs.p_position(a);
    if (a == top) {
      tube.xi_position = tube.basis.size();
      push(p + 1, CurvatureSlot::A, focal.xi_kappa, block_value(focal.xi_kappa, false, t));
      continue;
    }
    const FocalBlock& b = focal.blocks.at(bi++);
    CurvatureSlot s;
    if (b.tangent)
      s = sgn(b.kappa) == 0 ? CurvatureSlot::B : CurvatureSlot::D;
    else if (sgn(b.kappa) != 0)
      s = CurvatureSlot::C;
    else
      throw std::invalid_argument("normal block C u" + root_text(hs.roots(), a) +
                                  " with Jacobi eigenvalue 0 has no slot in the curvature table");
    const double value = block_value(b.kappa, b.tangent, t);
    push(p, s, b.kappa, value);
    push(p + 1, s, b.kappa, value);
  }

  const auto n = static_cast<Eigen::Index>(tube.basis.size());
  tube.shape_op = Eigen::MatrixXd::Zero(n, n);
  tube.phi = Eigen::MatrixXd::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i) tube.shape_op(i, i) = values[static_cast<std::size_t>(i)];
  for (Eigen::Index i = 0; i < n; ++i) {
    if (static_cast<std::size_t>(i) == tube.xi_position) continue;
    if (hs.p_basis()[tube.basis[static_cast<std::size_t>(i)]].kind == PKind::U) {
      tube.phi(i + 1, i) = 1.0;
      tube.phi(i, i + 1) = -1.0;
    }
  }
  for (CurvatureSlot s : {CurvatureSlot::B, CurvatureSlot::D, CurvatureSlot::C, CurvatureSlot::A})
    tube.curvatures[static_cast<std::size_t>(s)] = closed_form_curvature(s, t);
  for (CurvatureSlot s : tube.slot) ++tube.multiplicities[static_cast<std::size_t>(s)];
  return tube;
}

ReebCheck reeb_isometry_check(const TubeModel& tube) {
  const HermitianSpace& hs = *tube.focal.space;
  ReebCheck out;
  out.structural = true;
  for (std::size_t i = 0; i < tube.basis.size(); ++i) {
    if (i == tube.xi_position) continue;
    const std::size_t p = tube.basis[i];
    const std::size_t partner = hs.p_basis()[p].kind == PKind::U ? p + 1 : p - 1;
    bool found = false;
    for (std::size_t j = 0; j < tube.basis.size(); ++j)
      if (tube.basis[j] == partner) found = tube.slot[j] == tube.slot[i];
    if (!found) out.structural = false;
  }
  out.residual = (tube.shape_op * tube.phi - tube.phi * tube.shape_op).cwiseAbs().maxCoeff();
  return out;
}

ReebCheck reeb_isometry_check(const TubeModel& tube, const Eigen::MatrixXd& shape_op, double cluster_tol) {
  ReebCheck out;
  out.residual = (shape_op * tube.phi - tube.phi * shape_op).cwiseAbs().maxCoeff();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(shape_op);
  const Eigen::VectorXd& ev = es.eigenvalues();
  const Eigen::MatrixXd& vecs = es.eigenvectors();
  out.structural = true;
  Eigen::Index start = 0;
  while (start < ev.size()) {
    Eigen::Index end = start + 1;
    while (end < ev.size() && ev(end) - ev(end - 1) < cluster_tol) ++end;
    const Eigen::MatrixXd v = vecs.middleCols(start, end - start);
    const Eigen::MatrixXd proj = v * v.transpose();
    if ((tube.phi * proj - proj * tube.phi).cwiseAbs().maxCoeff() > 1e-9) out.structural = false;
    start = end;
  }
  return out;
}

std::vector<CheckResult> principal_curvature_identities(const TubeModel& tube, const VerifyOptions& opts) {
  std::vector<CheckResult> out;
  const double a = tube.curvatures[3], b = tube.curvatures[0], c = tube.curvatures[2], d = tube.curvatures[1];
  const std::string at = " at t = " + fmt(tube.t);
  {
    CheckAccumulator acc("tubes.identity.sum");
    const double e = std::abs(c + d - a);
    acc.record(e < opts.tol_algebraic, "|c + d - a| = " + fmt(e) + at);
    out.push_back(std::move(acc).finish());
  }
  {
    CheckAccumulator acc("tubes.identity.product");
    const double e = std::abs(c * d + 0.5);
    acc.record(e < opts.tol_algebraic, "|cd + 1/2| = " + fmt(e) + at);
    out.push_back(std::move(acc).finish());
  }
  {
    CheckAccumulator acc("tubes.identity.quadratic");
    for (double x : {c, d}) {
      const double e = std::abs(2 * x * x - 2 * a * x - 1);
      acc.record(e < opts.tol_composed, "|2x^2 - 2ax - 1| = " + fmt(e) + " for x = " + fmt(x) + at);
    }
    const double e = std::abs(b * (b - a));
    acc.record(e < opts.tol_composed, "|b(b - a)| = " + fmt(e) + at);
    out.push_back(std::move(acc).finish());
  }
  {
    CheckAccumulator acc("tubes.identity.eigen_relation");
    for (std::size_t i = 0; i < tube.basis.size(); ++i) {
      if (i == tube.xi_position) continue;
      const auto ii = static_cast<Eigen::Index>(i);
      const double x = tube.shape_op(ii, ii);
      const double e = std::abs(x * x - a * x - tube.kappa[i].get_d());
      acc.record(e < opts.tol_composed, "|x^2 - ax - kappa| = " + fmt(e) + " on " +
                                            tube.focal.space->label(tube.basis[i]) + at);
    }
    out.push_back(std::move(acc).finish());
  }
  return out;
}

double focal_shape_value(double kappa, double x, double t) {
  double c, cp, s, sp;
  if (kappa == 0) {
    c = 1;
    cp = 0;
    s = t;
    sp = 1;
  } else {
    const double w = std::sqrt(kappa);
    c = std::cos(w * t);
    cp = -w * std::sin(w * t);
    s = std::sin(w * t) / w;
    sp = std::cos(w * t);
  }
  return -(cp - x * sp) / (c - x * s);
}

FocalShapeReport focal_shape_operator(const FocalModel& focal, double t) {
  const TubeModel tube = tube_shape_operator(focal, t);
  FocalShapeReport rep;
  for (std::size_t i = 0; i < tube.basis.size(); ++i) {
    const auto ii = static_cast<Eigen::Index>(i);
    const double x = tube.shape_op(ii, ii);
    const double k = tube.kappa[i].get_d();
    const CurvatureSlot s = tube.slot[i];
    const bool in_c = i != tube.xi_position;
    if (in_c && s != CurvatureSlot::C) {
      rep.eigenvalues.push_back(focal_shape_value(k, x, t));
    } else {
      double z;
      if (k == 0) {
        z = 1 - x * t;
      } else {
        const double w = std::sqrt(k);
        z = std::cos(w * t) - x * std::sin(w * t) / w;
      }
      rep.vanishing_norms.push_back(std::abs(z));
    }
  }
  return rep;
}

FocalSetReport focal_set_reconstruction(const TubeModel& tube) {
  const HermitianSpace& hs = *tube.focal.space;
  const RootIndex top = hs.roots().highest_index();
  FocalSetReport rep;
  std::vector<Vector> p0, td, tc;
  for (std::size_t i = 0; i < tube.basis.size(); ++i) {
    if (i == tube.xi_position) continue;
    Vector e(hs.dim_p());
    e[tube.basis[i]] = 1;
    switch (tube.slot[i]) {
      case CurvatureSlot::B: p0.push_back(std::move(e)); break;
      case CurvatureSlot::D: td.push_back(std::move(e)); break;
      case CurvatureSlot::C: tc.push_back(std::move(e)); break;
      case CurvatureSlot::A: break;
    }
  }
  const std::vector<Vector> cu{hs.u(top), hs.v(top)};
  auto join = [](std::vector<Vector> a, const std::vector<Vector>& b) {
    a.insert(a.end(), b.begin(), b.end());
    return a;
  };
  rep.TP = join(p0, td);
  rep.nuP = join(cu, tc);
  rep.TQ = join(p0, tc);
  rep.nuQ = join(cu, td);
  rep.dim_P = static_cast<int>(rep.TP.size() / 2);
  rep.dim_Q = static_cast<int>(rep.TQ.size() / 2);
  rep.P_lie_triple = rep.TP.empty() || is_lie_triple(hs, rep.TP);
  rep.Q_lie_triple = rep.TQ.empty() || is_lie_triple(hs, rep.TQ);
  rep.P_j_invariant = j_invariant(hs, rep.TP);
  rep.Q_j_invariant = j_invariant(hs, rep.TQ);
  Span sp(hs.dim_p()), sq(hs.dim_p());
  for (const auto& v : join(rep.TP, rep.nuP)) sp.add(v);
  for (const auto& v : join(rep.TQ, rep.nuQ)) sq.add(v);
  rep.complementary = sp.dim() == hs.dim_p() && sq.dim() == hs.dim_p() &&
                      rep.TP.size() + rep.nuP.size() == hs.dim_p() && rep.TQ.size() + rep.nuQ.size() == hs.dim_p();
  return rep;
}

std::vector<CheckResult> verify_focal(const FocalModel& focal) {
  std::vector<CheckResult> out;
  const HermitianSpace& hs = *focal.space;
  const RootSystem& rs = hs.roots();
  const std::vector<Vector> f = focal_tangent_span(focal);
  {
    CheckAccumulator acc("tubes.focal.lie_triple");
    acc.record(f.empty() || is_lie_triple(hs, f), "span of Delta_f is not a Lie triple system");
    acc.record(j_invariant(hs, f), "span of Delta_f is not J-invariant");
    out.push_back(std::move(acc).finish());
  }
  {
    CheckAccumulator acc("tubes.focal.u_delta_normal");
    const Vector ud = hs.u(rs.highest_index());
    for (const auto& x : f) acc.record(sgn(hs.metric(ud, x)) == 0, "u_delta is not orthogonal to the focal tangent space");
    out.push_back(std::move(acc).finish());
  }
  {
    CheckAccumulator acc("tubes.focal.contains_p0");
    const std::set<RootIndex> df(focal.delta_f.begin(), focal.delta_f.end());
    for (RootIndex a : split_noncompact(hs).zero_set)
      acc.record(df.count(a) == 1, "Delta_M^+(0) root " + root_text(rs, a) + " is not in Delta_f");
    out.push_back(std::move(acc).finish());
  }
  {
    CheckAccumulator acc("tubes.sigma.dims");
    const NoncompactSplit split = split_noncompact(hs);
    const auto want = reference::subspace_dims(rs.family(), rs.rank(), hs.node());
    acc.record(static_cast<int>(split.zero_set.size()) == want.p0_complex,
               "dim_C Sigma(0) = " + std::to_string(split.zero_set.size()));
    acc.record(static_cast<int>(split.one_set.size()) == want.p1_complex,
               "dim_C Sigma(1) = " + std::to_string(split.one_set.size()));
    out.push_back(std::move(acc).finish());
  }
  return out;
}

std::vector<CheckResult> verify_tube(const FocalModel& focal, double t, const VerifyOptions& opts) {
  const TubeModel tube = tube_shape_operator(focal, t);
  const HermitianSpace& hs = *focal.space;
  const RootSystem& rs = hs.roots();
  const std::string at = " at t = " + fmt(t);
  std::vector<CheckResult> out;
  {
    CheckAccumulator acc("tubes.spectrum.closed_form");
    for (std::size_t i = 0; i < tube.basis.size(); ++i) {
      const auto ii = static_cast<Eigen::Index>(i);
      const double want = tube.curvatures[static_cast<std::size_t>(tube.slot[i])];
      const double e = std::abs(tube.shape_op(ii, ii) - want);
      acc.record(e < opts.tol_algebraic, "S(t) on " + hs.label(tube.basis[i]) + " differs from the closed form by " +
                                             fmt(e) + at);
    }
    out.push_back(std::move(acc).finish());
  }
  {
    CheckAccumulator acc("tubes.multiplicities");
    const auto want = reference::tube_multiplicities(focal.case_id, rs.rank(), hs.node(), focal.sub_k);
    const char* names[4] = {"b", "d", "c", "a"};
    for (std::size_t s = 0; s < 4; ++s)
      acc.record(tube.multiplicities[s] == want[s], std::string("multiplicity of ") + names[s] + " is " +
                                                        std::to_string(tube.multiplicities[s]) + ", expected " +
                                                        std::to_string(want[s]));
    out.push_back(std::move(acc).finish());
  }
  {
    CheckAccumulator acc("tubes.multiplicity_sum");
    int sum = 0;
    for (int m : tube.multiplicities) sum += m;
    acc.record(static_cast<std::size_t>(sum) + 1 == hs.dim_p(), "multiplicities sum to " + std::to_string(sum));
    for (std::size_t s = 0; s < 3; ++s)
      acc.record(tube.multiplicities[s] % 2 == 0, "odd multiplicity in C");
    out.push_back(std::move(acc).finish());
  }
  for (auto& c : principal_curvature_identities(tube, opts)) out.push_back(std::move(c));
  {
    CheckAccumulator acc("tubes.phi.square");
    const auto n = static_cast<Eigen::Index>(tube.basis.size());
    Eigen::MatrixXd want = -Eigen::MatrixXd::Identity(n, n);
    const auto xi = static_cast<Eigen::Index>(tube.xi_position);
    want(xi, xi) = 0.0;
    acc.record((tube.phi * tube.phi - want).cwiseAbs().maxCoeff() == 0.0, "phi^2 != -1 + eta (x) xi");
    acc.record(tube.phi.col(xi).cwiseAbs().maxCoeff() == 0.0, "phi xi != 0");
    out.push_back(std::move(acc).finish());
  }
  {
    const ReebCheck rc = reeb_isometry_check(tube);
    CheckAccumulator st("tubes.reeb.structural");
    st.record(rc.structural, "a principal curvature space in C is not J-invariant" + at);
    out.push_back(std::move(st).finish());
    CheckAccumulator res("tubes.reeb.residual");
    res.record(rc.residual < opts.tol_algebraic, "|S phi - phi S| = " + fmt(rc.residual) + at);
    out.push_back(std::move(res).finish());
  }
  {
    CheckAccumulator acc("tubes.reeb.adversarial");
    Eigen::MatrixXd s = tube.shape_op;
    std::size_t i = 0;
    while (i < tube.basis.size() && i == tube.xi_position) ++i;
    const auto ii = static_cast<Eigen::Index>(i);
    s(ii, ii) += 1.0;
    const ReebCheck rc = reeb_isometry_check(tube, s);
    acc.record(!rc.structural && rc.residual > 0, "splitting a complex line was not detected");
    out.push_back(std::move(acc).finish());
  }
  {
    const FocalShapeReport fs = focal_shape_operator(focal, t);
    CheckAccumulator acc("tubes.focal_shape.totally_geodesic");
    for (double e : fs.eigenvalues)
      acc.record(std::abs(e) < opts.tol_composed, "S^P eigenvalue " + fmt(e) + at);
    out.push_back(std::move(acc).finish());
    CheckAccumulator van("tubes.focal_shape.normal_vanish");
    for (double z : fs.vanishing_norms)
      van.record(z < opts.tol_composed, "normal Jacobi field does not vanish at P: " + fmt(z) + at);
    out.push_back(std::move(van).finish());
  }
  {
    const FocalSetReport fr = focal_set_reconstruction(tube);
    CheckAccumulator lt("tubes.focal_set.lie_triple");
    lt.record(fr.P_lie_triple, "T_pP is not a Lie triple system");
    lt.record(fr.Q_lie_triple, "T_qQ is not a Lie triple system");
    out.push_back(std::move(lt).finish());
    CheckAccumulator ji("tubes.focal_set.j_invariant");
    ji.record(fr.P_j_invariant, "T_pP is not J-invariant");
    ji.record(fr.Q_j_invariant, "T_qQ is not J-invariant");
    out.push_back(std::move(ji).finish());
    CheckAccumulator dims("tubes.focal_set.dims");
    const auto want = reference::focal_dims(focal.case_id, rs.rank(), hs.node(), focal.sub_k);
    dims.record(fr.dim_P == want[0], "dim_C P = " + std::to_string(fr.dim_P) + ", expected " + std::to_string(want[0]));
    dims.record(fr.dim_Q == want[1], "dim_C Q = " + std::to_string(fr.dim_Q) + ", expected " + std::to_string(want[1]));
    out.push_back(std::move(dims).finish());
    CheckAccumulator comp("tubes.focal_set.complementary");
    comp.record(fr.complementary, "tangent and normal spaces do not split p");
    Span f(hs.dim_p());
    for (const auto& v : focal_tangent_span(focal)) f.add(v);
    bool same = f.dim() == fr.TP.size();
    for (const auto& v : fr.TP) same = same && f.contains(v);
    comp.record(same, "T_pP differs from the focal tangent space");
    out.push_back(std::move(comp).finish());
  }
  return out;
}

}  // namespace hss
