#include "hss/hermitian.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

#include "hss/reference_tables.hpp"

namespace hss {
namespace {

std::string root_text(const RootSystem& rs, RootIndex a) { return rs.root(a).to_string(); }

AlgebraElement compact_basis_element(const StructureConstants& sc, std::size_t i) {
  const auto r = static_cast<std::size_t>(sc.rank());
  if (i < r) return GaussianRational::i() * sc.h(static_cast<int>(i) + 1);
  const RootIndex a = (i - r) / 2;
  return (i - r) % 2 == 0 ? sc.u(a) : sc.v(a);
}

std::vector<RootIndex> greedy_omega(const RootSystem& rs, const std::vector<RootIndex>& delta_m) {
  std::vector<RootIndex> out{rs.highest_index()};
  for (auto it = delta_m.rbegin(); it != delta_m.rend(); ++it) {
    const RootIndex a = *it;
    if (!rs.is_long(a) || a == rs.highest_index()) continue;
    bool ok = true;
    for (RootIndex b : out)
      if (rs.sum(a, b) != kNoRoot || rs.difference(a, b) != kNoRoot) ok = false;
    if (ok) out.push_back(a);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::vector<int> marked_nodes(const RootSystem& rs) {
  std::vector<int> out;
  const auto m = rs.simple_coefficients(rs.highest_index());
  for (std::size_t i = 0; i < m.size(); ++i)
    if (m[i] == 1) out.push_back(static_cast<int>(i) + 1);
  return out;
}

HermitianSpace HermitianSpace::build(std::shared_ptr<const StructureConstants> sc, int node) {
  if (!sc) throw std::invalid_argument("null structure constants");
  const RootSystem& rs = sc->roots();
  const auto marked = marked_nodes(rs);
  if (std::find(marked.begin(), marked.end(), node) == marked.end()) {
    std::ostringstream os;
    os << "node " << node << " is not a marked node of " << rs.name() << " (marked:";
    for (int k : marked) os << ' ' << k;
    os << ')';
    throw std::invalid_argument(os.str());
  }

  HermitianSpace hs;
  hs.sc_ = std::move(sc);
  hs.requested_node_ = node;
  hs.node_ = reference::canonical_node(rs.family(), rs.rank(), node);

  const auto r = static_cast<std::size_t>(rs.rank());
  hs.compact_dim_ = r + 2 * rs.num_positive();
  hs.p_of_root_.assign(rs.num_positive(), static_cast<std::size_t>(-1));
  hs.g_to_p_.assign(hs.compact_dim_, static_cast<std::size_t>(-1));
  for (RootIndex a = 0; a < rs.num_positive(); ++a) {
    const int c = hs.node_coefficient(a);
    if (c == 0) {
      hs.delta_K_pos_.push_back(a);
      continue;
    }
    hs.delta_M_pos_.push_back(a);
    hs.p_of_root_[a] = hs.p_basis_.size();
    for (PKind kind : {PKind::U, PKind::V}) {
      const std::size_t gi = r + 2 * a + (kind == PKind::U ? 0 : 1);
      hs.g_to_p_[gi] = hs.p_basis_.size();
      hs.p_to_g_.push_back(gi);
      hs.p_basis_.push_back({kind, a});
    }
  }

  const std::size_t n = hs.compact_dim_;
  std::vector<AlgebraElement> basis;
  basis.reserve(n);
  for (std::size_t i = 0; i < n; ++i) basis.push_back(compact_basis_element(*hs.sc_, i));
  hs.table_.assign(n * n, {});
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const Vector c = hs.sc_->compact_coordinates(hs.sc_->bracket(basis[i], basis[j]));
      auto& fwd = hs.table_[i * n + j];
      auto& bwd = hs.table_[j * n + i];
      for (std::size_t k = 0; k < n; ++k) {
        if (sgn(c[k]) == 0) continue;
        fwd.emplace_back(k, c[k]);
        bwd.emplace_back(k, -c[k]);
      }
    }

  const std::size_t d = hs.p_basis_.size();
  hs.metric_diag_.resize(d);
  hs.J_ = Matrix(d, d);
  for (std::size_t i = 0; i < d; ++i) {
    hs.metric_diag_[i] = Rational(4) / rs.norm2(hs.p_basis_[i].root);
    if (hs.p_basis_[i].kind == PKind::U)
      hs.J_(i + 1, i) = 1;
    else
      hs.J_(i - 1, i) = -1;
  }

  try {
    for (const auto& w : reference::omega(rs.family(), rs.rank(), hs.node_)) hs.omega_.push_back(rs.index_of(w));
    std::sort(hs.omega_.begin(), hs.omega_.end());
  } catch (const std::invalid_argument&) {
    hs.omega_ = greedy_omega(rs, hs.delta_M_pos_);
  }
  return hs;
}

int HermitianSpace::node_coefficient(RootIndex a) const {
  return roots().simple_coefficients(a)[static_cast<std::size_t>(node_ - 1)];
}

std::size_t HermitianSpace::p_position(RootIndex a) const {
  const RootSystem& rs = roots();
  if (a < rs.num_positive() && p_of_root_[a] != static_cast<std::size_t>(-1)) return p_of_root_[a];
  throw std::invalid_argument("root " + root_text(rs, a) + " is not in Delta_M^+");
}

Vector HermitianSpace::u(RootIndex a) const {
  Vector x(dim_p());
  x[p_position(a)] = 1;
  return x;
}

Vector HermitianSpace::v(RootIndex a) const {
  Vector x(dim_p());
  x[p_position(a) + 1] = 1;
  return x;
}

std::string HermitianSpace::label(std::size_t p_index) const {
  const PLabel& l = p_basis_.at(p_index);
  return (l.kind == PKind::U ? "u" : "v") + root_text(roots(), l.root);
}

Rational HermitianSpace::metric(const Vector& x, const Vector& y) const {
  Rational s;
  for (std::size_t i = 0; i < x.size(); ++i)
    if (sgn(x[i]) != 0 && sgn(y[i]) != 0) s += metric_diag_[i] * x[i] * y[i];
  return s;
}

Vector HermitianSpace::embed(const Vector& p) const {
  if (p.size() != dim_p()) throw std::invalid_argument("p-vector has the wrong length");
  Vector g(compact_dim_);
  for (std::size_t i = 0; i < p.size(); ++i) g[p_to_g_[i]] = p[i];
  return g;
}

Vector HermitianSpace::project_p(const Vector& g) const {
  Vector p(dim_p());
  for (std::size_t i = 0; i < p.size(); ++i) p[i] = g[p_to_g_[i]];
  return p;
}

bool HermitianSpace::in_p(const Vector& g) const {
  for (std::size_t i = 0; i < g.size(); ++i)
    if (sgn(g[i]) != 0 && g_to_p_[i] == static_cast<std::size_t>(-1)) return false;
  return true;
}

bool HermitianSpace::in_k(const Vector& g) const {
  for (std::size_t i = 0; i < g.size(); ++i)
    if (sgn(g[i]) != 0 && g_to_p_[i] != static_cast<std::size_t>(-1)) return false;
  return true;
}

Vector HermitianSpace::bracket(const Vector& x, const Vector& y) const {
  const std::size_t n = compact_dim_;
  if (x.size() != n || y.size() != n) throw std::invalid_argument("compact vector has the wrong length");
  Vector out(n);
  std::vector<std::size_t> ys;
  for (std::size_t j = 0; j < n; ++j)
    if (sgn(y[j]) != 0) ys.push_back(j);
  Rational w;
  for (std::size_t i = 0; i < n; ++i) {
    if (sgn(x[i]) == 0) continue;
    for (std::size_t j : ys) {
      const auto& entry = table_[i * n + j];
      if (entry.empty()) continue;
      w = x[i] * y[j];
      for (const auto& [k, c] : entry) out[k] += w * c;
    }
  }
  return out;
}

AlgebraElement HermitianSpace::real_bracket(const AlgebraElement& x, const AlgebraElement& y) const {
  if (!sc_->in_compact_real_form(x) || !sc_->in_compact_real_form(y))
    throw std::invalid_argument("real bracket operand is not in the compact real form");
  return sc_->bracket(x, y);
}

AlgebraElement HermitianSpace::to_algebra(const Vector& p) const { return sc_->from_compact_coordinates(embed(p)); }

Vector HermitianSpace::to_p(const AlgebraElement& x) const {
  const Vector g = sc_->compact_coordinates(x);
  if (!in_p(g)) throw std::invalid_argument("element is not in p");
  return project_p(g);
}

std::vector<Vector> centralizer_in_p(const HermitianSpace& hs, const std::vector<Vector>& elements) {
  const std::size_t d = hs.dim_p();
  const std::size_t n = hs.dim_g();
  Matrix m(n * elements.size(), d);
  for (std::size_t i = 0; i < d; ++i) {
    Vector e(n);
    e[hs.compact_index(i)] = 1;
    for (std::size_t j = 0; j < elements.size(); ++j) {
      const Vector b = hs.bracket(e, elements[j]);
      for (std::size_t k = 0; k < n; ++k) m(j * n + k, i) = b[k];
    }
  }
  return kernel(m);
}

std::vector<CheckResult> verify_hermitian(const HermitianSpace& hs, const VerifyOptions&) {
  std::vector<CheckResult> out;
  const RootSystem& rs = hs.roots();
  const StructureConstants& sc = hs.sc();
  const Family fam = rs.family();
  const int rank = rs.rank();
  const int node = hs.node();
  const std::size_t d = hs.dim_p();
  const RootIndex top = rs.highest_index();

  {
    CheckAccumulator acc("hermitian.node.marked");
    acc.record(marked_nodes(rs) == reference::marked_nodes(fam, rank), "marked nodes differ from the reference list");
    acc.record(hs.node_coefficient(top) == 1, "highest root has coefficient != 1 at the node");
    out.push_back(std::move(acc).finish());
  }
  {
    CheckAccumulator acc("hermitian.split.node_coefficient");
    for (RootIndex a = 0; a < rs.size(); ++a) {
      const int c = rs.simple_coefficients(a)[static_cast<std::size_t>(node - 1)];
      acc.record(c >= -1 && c <= 1, "root " + root_text(rs, a) + " has coefficient " + std::to_string(c));
    }
    acc.record(hs.delta_K_pos().size() + hs.delta_M_pos().size() == rs.num_positive(), "split does not cover Delta^+");
    out.push_back(std::move(acc).finish());
  }

  std::set<RootIndex> dm(hs.delta_M_pos().begin(), hs.delta_M_pos().end());
  {
    CheckAccumulator acc("hermitian.delta_m.reference");
    try {
      std::set<RootIndex> ref;
      for (const auto& w : reference::delta_M_pos(fam, rank, node)) {
        const auto a = rs.find(w);
        acc.record(a.has_value(), "listed vector " + w.to_string() + " is not a root");
        if (a) ref.insert(*a);
      }
      for (RootIndex a : ref)
        acc.record(dm.count(a) == 1, "listed root " + root_text(rs, a) + " is not in the computed Delta_M^+");
      for (RootIndex a : dm)
        acc.record(ref.count(a) == 1, "computed root " + root_text(rs, a) + " is missing from the list");
      out.push_back(std::move(acc).finish());
    } catch (const std::invalid_argument& e) {
      CheckResult c{"hermitian.delta_m.reference", CheckStatus::Skipped, 0, e.what()};
      out.push_back(std::move(c));
    }
  }
  if ((fam == Family::E6 && node == 6) || fam == Family::E7) {
    CheckAccumulator acc("hermitian.delta_m.display");
    std::set<std::vector<int>> shown, computed;
    for (const auto& c : reference::delta_M_pos_coefficients(fam)) shown.insert(c);
    for (RootIndex a : dm) computed.insert(rs.simple_coefficients(a));
    auto text = [](const std::vector<int>& c) {
      std::string s;
      for (int x : c) s += std::to_string(x);
      return s;
    };
    acc.record(reference::delta_M_pos_coefficients(fam).size() == shown.size(), "display lists a root twice");
    for (const auto& c : shown)
      acc.record(computed.count(c) == 1, "tabulated coefficient vector " + text(c) + " is not in Delta_M^+");
    for (const auto& c : computed)
      acc.record(shown.count(c) == 1, "coefficient vector " + text(c) + " is missing from the display");
    out.push_back(std::move(acc).finish());
  }
  {
    CheckAccumulator acc("hermitian.delta_m.count");
    const std::size_t want = reference::delta_M_count(fam, rank, node);
    acc.record(dm.size() == want,
               "|Delta_M^+| = " + std::to_string(dm.size()) + ", expected " + std::to_string(want));
    out.push_back(std::move(acc).finish());
  }
  {
    CheckAccumulator acc("hermitian.delta_m.sum_not_root");
    for (RootIndex a : dm)
      for (RootIndex b : dm)
        acc.record(rs.sum(a, b) == kNoRoot, root_text(rs, a) + " + " + root_text(rs, b) + " is a root");
    out.push_back(std::move(acc).finish());
  }

  {
    // H^k solves alpha_j(H^k) = delta_jk with alpha_j(h_nu) the Cartan integer c_{alpha_j, alpha_nu}.
    CheckAccumulator acc("hermitian.j.ad_ihk");
    const auto r = static_cast<std::size_t>(rank);
    Matrix aug(r, r + 1);
    for (std::size_t j = 0; j < r; ++j) {
      for (std::size_t nu = 0; nu < r; ++nu)
        aug(j, nu) = rs.cartan_integer(rs.simple_index(static_cast<int>(j) + 1), rs.simple_index(static_cast<int>(nu) + 1));
      aug(j, r) = (static_cast<int>(j) + 1 == node) ? 1 : 0;
    }
    const RowEchelon ech = row_reduce(aug);
    AlgebraElement z = sc.zero();
    for (std::size_t row = 0; row < ech.rank(); ++row)
      z.add(sc.h_index(static_cast<int>(ech.pivots[row]) + 1), GaussianRational(Rational(0), ech.reduced(row, r)));
    for (std::size_t i = 0; i < d; ++i) {
      Vector e(d);
      e[i] = 1;
      Vector img;
      try {
        img = hs.to_p(hs.real_bracket(z, hs.to_algebra(e)));
      } catch (const std::invalid_argument&) {
        acc.record(false, "ad(iH^k) does not preserve p at " + hs.label(i));
        continue;
      }
      acc.record(img == hs.J().column(i), "ad(iH^k) differs from J on " + hs.label(i));
    }
    out.push_back(std::move(acc).finish());
  }
  {
    CheckAccumulator acc("hermitian.j.square");
    acc.record(hs.J() * hs.J() == Rational(-1) * Matrix::identity(d), "J^2 != -1");
    out.push_back(std::move(acc).finish());
  }
  {
    CheckAccumulator acc("hermitian.j.isometry");
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) {
        Vector x(d), y(d);
        x[i] = 1;
        y[j] = 1;
        acc.record(hs.metric(hs.apply_J(x), hs.apply_J(y)) == hs.metric(x, y),
                   "g(Jx,Jy) != g(x,y) at " + hs.label(i) + ", " + hs.label(j));
      }
    out.push_back(std::move(acc).finish());
  }
  {
    CheckAccumulator acc("hermitian.metric.form");
    std::vector<AlgebraElement> pb;
    for (std::size_t i = 0; i < d; ++i) {
      Vector e(d);
      e[i] = 1;
      pb.push_back(hs.to_algebra(e));
    }
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = i; j < d; ++j) {
        const GaussianRational b = sc.invariant_form(pb[i], pb[j]);
        const Rational want = i == j ? hs.metric_diag()[i] : Rational(0);
        acc.record(b == GaussianRational(-want), "g != -B at " + hs.label(i) + ", " + hs.label(j));
      }
    for (std::size_t i = 0; i < d; ++i) acc.record(sgn(hs.metric_diag()[i]) > 0, "g not positive at " + hs.label(i));
    const Vector ud = hs.u(top);
    acc.record(hs.metric(ud, ud) == 2, "g(u_delta, u_delta) != 2");
    out.push_back(std::move(acc).finish());
  }
  {
    CheckAccumulator acc("hermitian.cartan_decomposition");
    const std::size_t n = hs.dim_g();
    std::vector<char> is_p(n, 0);
    for (std::size_t i = 0; i < d; ++i) is_p[hs.compact_index(i)] = 1;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < d; ++j) {
        Vector x(n), y(n);
        x[i] = 1;
        y[hs.compact_index(j)] = 1;
        const Vector b = hs.bracket(x, y);
        const bool ok = is_p[i] ? hs.in_k(b) : hs.in_p(b);
        acc.record(ok, std::string(is_p[i] ? "[p,p]" : "[k,p]") + " leaves its part at " + sc.basis_name(i) + ", " +
                           hs.label(j));
      }
    out.push_back(std::move(acc).finish());
  }
  {
    CheckAccumulator acc("hermitian.relations.primed");
    auto uu = [&](RootIndex g) { return g == kNoRoot ? sc.zero() : sc.u(g); };
    auto vv = [&](RootIndex g) { return g == kNoRoot ? sc.zero() : sc.v(g); };
    for (RootIndex a : dm)
      for (RootIndex b : dm) {
        if (a == b) continue;
        const RootIndex ma = rs.negative(a);
        const GaussianRational n(-sc.N(ma, b));
        const RootIndex diff = rs.difference(b, a);
        const std::string w = root_text(rs, a) + ", " + root_text(rs, b);
        acc.record(hs.real_bracket(sc.u(a), sc.u(b)) == n * uu(diff), "[u_a,u_b] at " + w);
        acc.record(hs.real_bracket(sc.v(a), sc.v(b)) == n * uu(diff), "[v_a,v_b] at " + w);
        acc.record(hs.real_bracket(sc.u(a), sc.v(b)) == n * vv(diff), "[u_a,v_b] at " + w);
        if (diff != kNoRoot)
          acc.record(std::abs(sc.N(ma, b)) == 1, "|N_{-a,b}| != 1 at " + w);
      }
    out.push_back(std::move(acc).finish());
  }

  const auto& om = hs.omega();
  {
    CheckAccumulator acc("hermitian.omega.reference");
    try {
      std::set<RootIndex> ref;
      for (const auto& w : reference::omega(fam, rank, node)) ref.insert(rs.index_of(w));
      acc.record(ref == std::set<RootIndex>(om.begin(), om.end()), "Omega differs from the listed set");
      for (RootIndex a : ref) acc.record(dm.count(a) == 1, "Omega member " + root_text(rs, a) + " is not in Delta_M^+");
      acc.record(ref.count(top) == 1, "delta is not in Omega");
      out.push_back(std::move(acc).finish());
    } catch (const std::invalid_argument& e) {
      out.push_back(CheckResult{"hermitian.omega.reference", CheckStatus::Skipped, 0, e.what()});
    }
  }
  {
    CheckAccumulator acc("hermitian.omega.abelian");
    for (RootIndex a : om)
      for (RootIndex b : om)
        acc.record(is_zero(hs.bracket(hs.embed(hs.u(a)), hs.embed(hs.u(b)))),
                   "[u_a,u_b] != 0 at " + root_text(rs, a) + ", " + root_text(rs, b));
    out.push_back(std::move(acc).finish());
  }
  {
    CheckAccumulator acc("hermitian.omega.strongly_orthogonal");
    for (std::size_t i = 0; i < om.size(); ++i)
      for (std::size_t j = i + 1; j < om.size(); ++j)
        acc.record(rs.sum(om[i], om[j]) == kNoRoot && rs.difference(om[i], om[j]) == kNoRoot,
                   root_text(rs, om[i]) + " and " + root_text(rs, om[j]) + " are not strongly orthogonal");
    out.push_back(std::move(acc).finish());
  }
  {
    CheckAccumulator acc("hermitian.omega.equal_length");
    for (RootIndex a : om)
      acc.record(rs.norm2(a) == rs.norm2(top), "Omega member " + root_text(rs, a) + " has length^2 " +
                                                    to_string(rs.norm2(a)));
    out.push_back(std::move(acc).finish());
  }
  {
    CheckAccumulator acc("hermitian.omega.maximal");
    std::vector<Vector> a_elems;
    for (RootIndex a : om) a_elems.push_back(hs.embed(hs.u(a)));
    const auto cent = centralizer_in_p(hs, a_elems);
    acc.record(cent.size() == om.size(), "centralizer of a in p has dimension " + std::to_string(cent.size()) +
                                             ", |Omega| = " + std::to_string(om.size()));
    Span span_a(d);
    for (RootIndex a : om) span_a.add(hs.u(a));
    for (const auto& c : cent) acc.record(span_a.contains(c), "centralizer contains a vector outside a");
    out.push_back(std::move(acc).finish());
  }
  {
    CheckAccumulator acc("hermitian.omega.rank");
    const int want = reference::complex_rank(fam, rank, node);
    acc.record(hs.complex_rank() == want, "|Omega| = " + std::to_string(hs.complex_rank()) + ", expected rank " +
                                              std::to_string(want));
    out.push_back(std::move(acc).finish());
  }
  return out;
}

}  // namespace hss
