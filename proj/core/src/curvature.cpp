#include "hss/curvature.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <stdexcept>
#include <string>

#include "hss/reference_tables.hpp"

namespace hss {
namespace {

Vector unit(std::size_t n, std::size_t i) {
  Vector e(n);
  e[i] = 1;
  return e;
}

Rational random_rational(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(-4, 4), den(1, 3);
  Rational q(num(rng), den(rng));
  q.canonicalize();
  return q;
}

Vector random_vector(std::mt19937_64& rng, std::size_t n) {
  Vector v(n);
  for (auto& x : v) x = random_rational(rng);
  return v;
}

std::string root_text(const RootSystem& rs, RootIndex a) { return rs.root(a).to_string(); }

bool same_span(const std::vector<Vector>& a, const std::vector<Vector>& b, std::size_t n) {
  Span sa(n), sb(n);
  for (const auto& v : a) sa.add(v);
  for (const auto& v : b) sb.add(v);
  if (sa.dim() != sb.dim()) return false;
  for (const auto& v : b)
    if (!sa.contains(v)) return false;
  return true;
}

// Complex n x n matrix stored as real and imaginary parts, row-major.
struct ComplexMatrix {
  std::size_t n = 0;
  Vector re, im;
  explicit ComplexMatrix(std::size_t size) : n(size), re(size * size), im(size * size) {}
};

ComplexMatrix multiply(const ComplexMatrix& a, const ComplexMatrix& b) {
  const std::size_t n = a.n;
  ComplexMatrix c(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      const Rational& ar = a.re[i * n + k];
      const Rational& ai = a.im[i * n + k];
      if (sgn(ar) == 0 && sgn(ai) == 0) continue;
      for (std::size_t j = 0; j < n; ++j) {
        const Rational& br = b.re[k * n + j];
        const Rational& bi = b.im[k * n + j];
        c.re[i * n + j] += ar * br - ai * bi;
        c.im[i * n + j] += ar * bi + ai * br;
      }
    }
  return c;
}

}  // namespace

bool closed_by_complex_engine(const HermitianSpace& hs, const std::vector<AlgebraElement>& spanning) {
  const StructureConstants& sc = hs.sc();
  Span span(hs.dim_g());
  for (const auto& x : spanning) span.add(sc.compact_coordinates(x));
  for (const auto& x : spanning)
    for (const auto& y : spanning)
      for (const auto& z : spanning)
        if (!span.contains(sc.compact_coordinates(hs.real_bracket(hs.real_bracket(x, y), z)))) return false;
  return true;
}

Vector curvature_tensor(const HermitianSpace& hs, const Vector& x, const Vector& y, const Vector& z) {
  const Vector w = hs.bracket(hs.bracket(hs.embed(x), hs.embed(y)), hs.embed(z));
  if (!hs.in_p(w)) throw std::logic_error("double bracket of p-vectors left p");
  return Rational(-1) * hs.project_p(w);
}

JacobiOperator jacobi_operator(const HermitianSpace& hs, const Vector& v) {
  const std::size_t d = hs.dim_p();
  if (v.size() != d) throw std::invalid_argument("Jacobi operator base vector has the wrong length");
  JacobiOperator op{v, Matrix(d, d)};
  const Vector gv = hs.embed(v);
  for (std::size_t i = 0; i < d; ++i) {
    const Vector w = hs.bracket(hs.bracket(hs.embed(unit(d, i)), gv), gv);
    if (!hs.in_p(w)) throw std::logic_error("double bracket of p-vectors left p");
    op.matrix.set_column(i, Rational(-1) * hs.project_p(w));
  }
  return op;
}

bool JacobiSpectrum::complete() const {
  std::size_t total = 0;
  for (const auto& s : spaces) total += s.basis.size();
  return total == dim_p;
}

JacobiSpectrum jacobi_spectrum_u_delta(const HermitianSpace& hs) {
  const std::size_t d = hs.dim_p();
  const Matrix m = Rational(1, 2) * jacobi_operator(hs, hs.u(hs.roots().highest_index())).matrix;
  JacobiSpectrum spec;
  spec.dim_p = d;
  for (const Rational& lambda : {Rational(0), Rational(1, 2), Rational(2)})
    spec.spaces.push_back({lambda, kernel(m - lambda * Matrix::identity(d))});
  return spec;
}

NoncompactSplit split_noncompact(const HermitianSpace& hs) {
  const RootSystem& rs = hs.roots();
  const RootIndex top = rs.highest_index();
  NoncompactSplit s;
  for (RootIndex a : hs.delta_M_pos()) {
    if (a == top) continue;
    const RootIndex diff = rs.difference(top, a);
    if (diff != kNoRoot && rs.is_positive(diff))
      s.one_set.push_back(a);
    else
      s.zero_set.push_back(a);
  }
  return s;
}

std::vector<Vector> complex_span(const HermitianSpace& hs, const std::vector<RootIndex>& roots) {
  std::vector<Vector> out;
  for (RootIndex a : roots) {
    out.push_back(hs.u(a));
    out.push_back(hs.v(a));
  }
  return out;
}

bool is_lie_triple(const HermitianSpace& hs, const std::vector<Vector>& spanning) {
  const std::size_t d = hs.dim_p();
  Span span(d);
  for (const auto& v : spanning)
    if (!span.add(v)) throw std::invalid_argument("Lie triple test needs a linearly independent list");
  const std::size_t m = spanning.size();
  std::vector<Vector> g;
  g.reserve(m);
  for (const auto& v : spanning) g.push_back(hs.embed(v));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j) {
      const Vector xy = hs.bracket(g[i], g[j]);
      if (is_zero(xy)) continue;
      for (std::size_t k = 0; k < m; ++k) {
        const Vector w = hs.bracket(xy, g[k]);
        if (!hs.in_p(w) || !span.contains(hs.project_p(w))) return false;
      }
    }
  return true;
}

K0Decomposition k0_decomposition(const HermitianSpace& hs) {
  K0Decomposition out;
  const NoncompactSplit split = split_noncompact(hs);
  const std::vector<Vector> p0 = complex_span(hs, split.zero_set);
  out.p0_dim = static_cast<int>(split.zero_set.size());
  out.p1_dim = static_cast<int>(split.one_set.size());

  Span k0(hs.dim_g());
  for (std::size_t i = 0; i < p0.size(); ++i)
    for (std::size_t j = i + 1; j < p0.size(); ++j) {
      Vector b = hs.bracket(hs.embed(p0[i]), hs.embed(p0[j]));
      if (k0.add(b)) out.k0_basis.push_back(std::move(b));
    }
  out.k0_dim = static_cast<int>(k0.dim());
  out.g0_dim = out.k0_dim + 2 * out.p0_dim;

  const std::size_t n = split.one_set.size();
  std::vector<std::size_t> slot(hs.dim_p(), static_cast<std::size_t>(-1));
  for (std::size_t a = 0; a < n; ++a) slot[hs.p_position(split.one_set[a])] = a;

  // ad(x) on p(1) as a complex matrix over the basis u_alpha, with v_alpha = i u_alpha.
  out.preserves_p1 = true;
  std::vector<ComplexMatrix> gens;
  for (const auto& x : out.k0_basis) {
    ComplexMatrix a(n);
    for (std::size_t b = 0; b < n; ++b) {
      const Vector wu = hs.bracket(x, hs.embed(hs.u(split.one_set[b])));
      const Vector wv = hs.bracket(x, hs.embed(hs.v(split.one_set[b])));
      if (!hs.in_p(wu) || !hs.in_p(wv)) {
        out.preserves_p1 = false;
        continue;
      }
      const Vector pu = hs.project_p(wu);
      if (hs.project_p(wv) != hs.apply_J(pu)) out.preserves_p1 = false;
      for (std::size_t i = 0; i < pu.size(); ++i) {
        if (sgn(pu[i]) == 0) continue;
        const std::size_t row = slot[i - (hs.p_basis()[i].kind == PKind::V ? 1 : 0)];
        if (row == static_cast<std::size_t>(-1)) {
          out.preserves_p1 = false;
          continue;
        }
        (hs.p_basis()[i].kind == PKind::U ? a.re : a.im)[row * n + b] = pu[i];
      }
    }
    gens.push_back(std::move(a));
  }

  // Unknown X = P + iQ with P at a*n+b and Q at n*n + a*n+b; equations XA - AX = 0.
  const std::size_t nn = n * n;
  SparseReducer solver(2 * nn);
  for (const auto& a : gens) {
    std::vector<std::vector<std::size_t>> row_nz(n), col_nz(n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (sgn(a.re[i * n + j]) != 0 || sgn(a.im[i * n + j]) != 0) {
          row_nz[i].push_back(j);
          col_nz[j].push_back(i);
        }
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) {
        std::map<std::size_t, Rational> re_eq, im_eq;
        for (std::size_t k : col_nz[c]) {
          const Rational& ar = a.re[k * n + c];
          const Rational& ai = a.im[k * n + c];
          re_eq[r * n + k] += ar;
          re_eq[nn + r * n + k] -= ai;
          im_eq[r * n + k] += ai;
          im_eq[nn + r * n + k] += ar;
        }
        for (std::size_t k : row_nz[r]) {
          const Rational& ar = a.re[r * n + k];
          const Rational& ai = a.im[r * n + k];
          re_eq[k * n + c] -= ar;
          re_eq[nn + k * n + c] += ai;
          im_eq[nn + k * n + c] -= ar;
          im_eq[k * n + c] -= ai;
        }
        for (auto* eq : {&re_eq, &im_eq}) {
          SparseRow row;
          for (auto& [col, v] : *eq)
            if (sgn(v) != 0) row.emplace_back(col, v);
          if (!row.empty()) solver.add(std::move(row));
        }
      }
  }
  const std::vector<Vector> sol = solver.kernel();
  out.commutant_dim = static_cast<int>(sol.size() / 2);

  std::vector<ComplexMatrix> mats;
  for (const auto& s : sol) {
    ComplexMatrix x(n);
    for (std::size_t i = 0; i < nn; ++i) {
      x.re[i] = s[i];
      x.im[i] = s[nn + i];
    }
    mats.push_back(std::move(x));
  }
  out.commutative = true;
  for (std::size_t i = 0; i < mats.size() && out.commutative; ++i)
    for (std::size_t j = i + 1; j < mats.size() && out.commutative; ++j) {
      const ComplexMatrix ab = multiply(mats[i], mats[j]);
      const ComplexMatrix ba = multiply(mats[j], mats[i]);
      if (ab.re != ba.re || ab.im != ba.im) out.commutative = false;
    }
  return out;
}

Vector verify_accoeff(const HermitianSpace& hs, const std::map<RootIndex, Rational>& a,
                      const std::map<RootIndex, Rational>& c) {
  const std::set<RootIndex> om(hs.omega().begin(), hs.omega().end());
  const std::size_t d = hs.dim_p();
  Vector xi(d), x(d);
  for (const auto& [root, coeff] : a) {
    if (om.count(root) == 0) throw std::invalid_argument("a-coefficient outside Omega");
    xi[hs.p_position(root) + 1] -= coeff;
  }
  for (const auto& [root, coeff] : c) {
    if (om.count(root) == 0) throw std::invalid_argument("c-coefficient outside Omega");
    x[hs.p_position(root)] += coeff;
  }
  return curvature_tensor(hs, x, xi, xi);
}

Rational measure_accoeff_constant(const HermitianSpace& hs, RootIndex beta) {
  const StructureConstants& sc = hs.sc();
  const AlgebraElement u = sc.u(beta), v = sc.v(beta);
  const AlgebraElement w = -hs.real_bracket(hs.real_bracket(u, v), v);
  return hs.to_p(w)[hs.p_position(beta)];
}

std::vector<CheckResult> verify_curvature(const HermitianSpace& hs, const VerifyOptions& opts) {
  std::vector<CheckResult> out;
  const RootSystem& rs = hs.roots();
  const Family fam = rs.family();
  const int rank = rs.rank();
  const int node = hs.node();
  const std::size_t d = hs.dim_p();
  const RootIndex top = rs.highest_index();
  const Vector ud = hs.u(top), vd = hs.v(top);
  const NoncompactSplit split = split_noncompact(hs);
  std::mt19937_64 rng(opts.seed);
  std::uniform_int_distribution<std::size_t> pick(0, d - 1);

  {
    CheckAccumulator acc("curvature.split.reference");
    try {
      std::set<RootIndex> ref;
      for (const auto& w : reference::delta_M0(fam, rank, node)) {
        const auto a = rs.find(w);
        acc.record(a.has_value(), "listed vector " + w.to_string() + " is not a root");
        if (a) ref.insert(*a);
      }
      const std::set<RootIndex> got(split.zero_set.begin(), split.zero_set.end());
      for (RootIndex a : ref) acc.record(got.count(a) == 1, "listed root " + root_text(rs, a) + " not in Delta_M^+(0)");
      for (RootIndex a : got) acc.record(ref.count(a) == 1, "root " + root_text(rs, a) + " missing from the list");
      out.push_back(std::move(acc).finish());
    } catch (const std::invalid_argument& e) {
      out.push_back(CheckResult{"curvature.split.reference", CheckStatus::Skipped, 0, e.what()});
    }
  }
  {
    CheckAccumulator acc("curvature.split.partition");
    std::set<RootIndex> all(split.zero_set.begin(), split.zero_set.end());
    for (RootIndex a : split.one_set) acc.record(all.insert(a).second, "root in both sets");
    acc.record(all.insert(top).second, "delta in a set");
    acc.record(all == std::set<RootIndex>(hs.delta_M_pos().begin(), hs.delta_M_pos().end()),
               "sets and delta do not cover Delta_M^+");
    out.push_back(std::move(acc).finish());
  }

  const JacobiOperator jd = jacobi_operator(hs, ud);
  {
    CheckAccumulator acc("curvature.jacobi.symmetric");
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j)
        acc.record(hs.metric_diag()[i] * jd.matrix(i, j) == hs.metric_diag()[j] * jd.matrix(j, i),
                   "g(Mx,y) != g(x,My) at " + hs.label(i) + ", " + hs.label(j));
    acc.record(is_zero(jd.matrix.apply(ud)), "Jacobi operator does not annihilate u_delta");
    const Vector w = random_vector(rng, d);
    acc.record(is_zero(jacobi_operator(hs, w).matrix.apply(w)), "random Jacobi operator does not annihilate its base");
    out.push_back(std::move(acc).finish());
  }
  {
    CheckAccumulator acc("curvature.spectrum.u_delta");
    const JacobiSpectrum spec = jacobi_spectrum_u_delta(hs);
    const std::size_t n0 = split.zero_set.size(), n1 = split.one_set.size();
    const std::size_t want[3] = {1 + 2 * n0, 2 * n1, 1};
    for (std::size_t s = 0; s < 3; ++s)
      acc.record(spec.spaces[s].basis.size() == want[s],
                 "eigenvalue " + to_string(spec.spaces[s].eigenvalue) + " has multiplicity " +
                     std::to_string(spec.spaces[s].basis.size()) + ", expected " + std::to_string(want[s]));
    acc.record(spec.complete(), "eigenvalues {0, 1/2, 2} do not exhaust p");
    std::vector<Vector> zero_space = complex_span(hs, split.zero_set);
    zero_space.push_back(ud);
    acc.record(same_span(spec.spaces[0].basis, zero_space, d), "0-eigenspace is not R u_delta + p(0)");
    acc.record(same_span(spec.spaces[1].basis, complex_span(hs, split.one_set), d), "1/2-eigenspace is not p(1)");
    acc.record(same_span(spec.spaces[2].basis, {vd}, d), "2-eigenspace is not R v_delta");
    out.push_back(std::move(acc).finish());
  }
  {
    CheckAccumulator acc("curvature.jacobi.singular");
    const std::size_t kdim = kernel(jd.matrix).size();
    acc.record(kdim == 1 + 2 * split.zero_set.size(), "kernel dimension " + std::to_string(kdim));
    if (hs.complex_rank() >= 2)
      acc.record(kdim > static_cast<std::size_t>(hs.complex_rank()),
                 "kernel dimension " + std::to_string(kdim) + " does not exceed the rank");
    out.push_back(std::move(acc).finish());
  }

  const bool exhaustive = rank <= opts.max_exhaustive_rank;
  {
    CheckAccumulator acc("curvature.bianchi");
    auto test = [&](std::size_t i, std::size_t j, std::size_t k) {
      const Vector x = unit(d, i), y = unit(d, j), z = unit(d, k);
      const Vector s = curvature_tensor(hs, x, y, z) + curvature_tensor(hs, y, z, x) + curvature_tensor(hs, z, x, y);
      acc.record(is_zero(s), "Bianchi sum nonzero at " + hs.label(i) + ", " + hs.label(j) + ", " + hs.label(k));
    };
    if (exhaustive) {
      for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = i + 1; j < d; ++j)
          for (std::size_t k = j + 1; k < d; ++k) test(i, j, k);
    } else {
      for (std::size_t s = 0; s < opts.samples; ++s) test(pick(rng), pick(rng), pick(rng));
    }
    out.push_back(std::move(acc).finish());
  }
  {
    CheckAccumulator sym("curvature.pair_symmetry");
    CheckAccumulator jinv("curvature.j_invariance");
    const std::size_t quads = std::max<std::size_t>(1000, opts.samples / 10);
    for (std::size_t s = 0; s < quads; ++s) {
      const std::size_t i = pick(rng), j = pick(rng), k = pick(rng), l = pick(rng);
      const Vector x = unit(d, i), y = unit(d, j), z = unit(d, k), w = unit(d, l);
      const std::string where = hs.label(i) + ", " + hs.label(j) + ", " + hs.label(k) + ", " + hs.label(l);
      const Rational r1 = hs.metric(curvature_tensor(hs, x, y, z), w);
      sym.record(r1 == hs.metric(curvature_tensor(hs, z, w, x), y), "g(R(x,y)z,w) != g(R(z,w)x,y) at " + where);
      sym.record(r1 == -hs.metric(curvature_tensor(hs, y, x, z), w), "R not skew at " + where);
      const Rational r2 = hs.metric(curvature_tensor(hs, hs.apply_J(x), hs.apply_J(y), hs.apply_J(z)), hs.apply_J(w));
      jinv.record(r1 == r2, "g(R(Jx,Jy)Jz,Jw) != g(R(x,y)z,w) at " + where);
    }
    out.push_back(std::move(sym).finish());
    out.push_back(std::move(jinv).finish());
  }
  {
    CheckAccumulator acc("curvature.nonnegative");
    for (int s = 0; s < 1000; ++s) {
      const Vector x = random_vector(rng, d), y = random_vector(rng, d);
      const Rational k = hs.metric(curvature_tensor(hs, x, y, y), x);
      acc.record(sgn(k) >= 0, "g(R(x,y)y,x) = " + to_string(k) + " < 0");
    }
    out.push_back(std::move(acc).finish());
  }
  {
    CheckAccumulator acc("curvature.jacobi.j_symmetry");
    const Matrix m = Rational(1, 2) * jd.matrix;
    std::vector<Vector> xs = complex_span(hs, split.one_set);
    for (int s = 0; s < 20 && !split.one_set.empty(); ++s) {
      Vector x(d);
      for (RootIndex a : split.one_set) {
        x[hs.p_position(a)] = random_rational(rng);
        x[hs.p_position(a) + 1] = random_rational(rng);
      }
      xs.push_back(std::move(x));
    }
    for (const auto& x : xs) {
      const Vector jx = hs.apply_J(x);
      const Rational a = hs.metric(m.apply(x), x), b = hs.metric(m.apply(jx), jx);
      acc.record(a == b && a == Rational(1, 2) * hs.metric(x, x),
                 "g(Rx,x) = " + to_string(a) + ", g(RJx,Jx) = " + to_string(b) + ", |x|^2/2 = " +
                     to_string(Rational(1, 2) * hs.metric(x, x)));
    }
    out.push_back(std::move(acc).finish());
  }

  auto triple = [&](std::string id, const std::vector<Vector>& span, bool expected) {
    CheckAccumulator acc(std::move(id));
    if (span.empty()) {
      acc.record(true);
    } else {
      const bool got = is_lie_triple(hs, span);
      acc.record(got == expected, got ? "unexpectedly closed under the triple bracket" : "not closed under the triple bracket");
    }
    out.push_back(std::move(acc).finish());
  };
  const std::vector<Vector> p0 = complex_span(hs, split.zero_set);
  const std::vector<Vector> p1 = complex_span(hs, split.one_set);
  triple("curvature.lie_triple.p0", p0, true);
  triple("curvature.lie_triple.p1", p1, true);
  triple("curvature.lie_triple.cu_delta", {ud, vd}, true);
  {
    std::vector<Vector> s = p0;
    s.push_back(ud);
    s.push_back(vd);
    triple("curvature.lie_triple.cu_delta_p0", s, true);
  }
  {
    std::vector<Vector> all;
    for (std::size_t i = 0; i < d; ++i) all.push_back(unit(d, i));
    triple("curvature.lie_triple.p", all, true);
  }
  if (!split.one_set.empty()) {
    const RootIndex a = split.one_set.front();
    {
      CheckAccumulator acc("curvature.lie_triple.mixed_line");
      const bool table = is_lie_triple(hs, {ud, hs.u(a)});
      const bool brute = closed_by_complex_engine(hs, {hs.sc().u(top), hs.sc().u(a)});
      acc.record(table == brute, std::string("triple-bracket test says ") + (table ? "closed" : "not closed") +
                                     " for R u_delta + R u_alpha, complex engine says " + (brute ? "closed" : "not closed"));
      out.push_back(std::move(acc).finish());
    }
    triple("curvature.lie_triple.negative_control", {ud, vd, hs.u(a)}, false);
  } else {
    out.push_back(CheckResult{"curvature.lie_triple.mixed_line", CheckStatus::Skipped, 0, "Delta_M^+(1) is empty"});
    out.push_back(CheckResult{"curvature.lie_triple.negative_control", CheckStatus::Skipped, 0, "Delta_M^+(1) is empty"});
  }
  {
    CheckAccumulator acc("curvature.sectional.cu_delta");
    const Rational num = hs.metric(curvature_tensor(hs, ud, vd, vd), ud);
    const Rational den = hs.metric(ud, ud) * hs.metric(vd, vd) - hs.metric(ud, vd) * hs.metric(ud, vd);
    acc.record(num / den == 2, "sectional curvature " + to_string(num / den));
    out.push_back(std::move(acc).finish());
  }
  {
    CheckAccumulator acc("curvature.flat");
    for (RootIndex a : hs.omega())
      for (RootIndex b : hs.omega())
        for (std::size_t k = 0; k < d; ++k)
          acc.record(is_zero(curvature_tensor(hs, hs.u(a), hs.u(b), unit(d, k))),
                     "R(u_a,u_b) != 0 at " + root_text(rs, a) + ", " + root_text(rs, b));
    out.push_back(std::move(acc).finish());
  }

  const K0Decomposition k0 = k0_decomposition(hs);
  {
    CheckAccumulator acc("curvature.k0.dims");
    const auto want = reference::subspace_dims(fam, rank, node);
    acc.record(k0.p0_dim == want.p0_complex, "dim_C p(0) = " + std::to_string(k0.p0_dim));
    acc.record(k0.p1_dim == want.p1_complex, "dim_C p(1) = " + std::to_string(k0.p1_dim));
    const bool degenerate = fam == Family::D && node == rank && rank == 4;
    if (!degenerate) {
      acc.record(k0.k0_dim == want.k0, "dim k(0) = " + std::to_string(k0.k0_dim) + ", expected " + std::to_string(want.k0));
      acc.record(k0.g0_dim == want.g0, "dim g(0) = " + std::to_string(k0.g0_dim) + ", expected " + std::to_string(want.g0));
    } else if (!acc.failed()) {
      acc.flag("u_{r-2} / so_{2r-4} formulas do not apply at r = 4: dim k(0) = " + std::to_string(k0.k0_dim) +
               ", dim g(0) = " + std::to_string(k0.g0_dim));
    }
    out.push_back(std::move(acc).finish());
  }
  {
    CheckAccumulator acc("curvature.k0.preserves_p1");
    acc.record(k0.preserves_p1, "ad(k(0)) does not act J-linearly on p(1)");
    out.push_back(std::move(acc).finish());
  }
  {
    const auto want = reference::expected_commutant(fam, rank, node);
    if (!want) {
      out.push_back(CheckResult{"curvature.commutant.dimension", CheckStatus::Skipped, 0,
                                "no component count is predicted here (commutant dim " +
                                    std::to_string(k0.commutant_dim) + ")"});
    } else {
      CheckAccumulator acc("curvature.commutant.dimension");
      acc.record(k0.commutant_dim == *want, "commutant has complex dimension " + std::to_string(k0.commutant_dim) +
                                                ", expected " + std::to_string(*want) +
                                                (k0.commutative ? "" : "; the commutant is not commutative, so "
                                                                       "p(1) has equivalent components"));
      out.push_back(std::move(acc).finish());
    }
  }
  if (reference::expected_commutant(fam, rank, node)) {
    CheckAccumulator acc("curvature.commutant.commutative");
    acc.record(k0.commutative, "commutant of dimension " + std::to_string(k0.commutant_dim) + " is not commutative");
    out.push_back(std::move(acc).finish());
  } else {
    out.push_back(CheckResult{"curvature.commutant.commutative", CheckStatus::Skipped, 0,
                              "multiplicity-freeness is not claimed here"});
  }

  {
    CheckAccumulator acc("curvature.accoeff.constant");
    const Rational kappa = measure_accoeff_constant(hs, top);
    acc.record(sgn(kappa) > 0, "measured constant " + to_string(kappa) + " is not positive");
    for (RootIndex b : hs.omega()) {
      const Rational kb = measure_accoeff_constant(hs, b);
      acc.record(kb == kappa, "constant at " + root_text(rs, b) + " is " + to_string(kb) + ", at delta " +
                                  to_string(kappa));
      const Vector w = verify_accoeff(hs, {{b, Rational(1)}}, {{b, Rational(1)}});
      acc.record(w == kappa * hs.u(b), "single-root case at " + root_text(rs, b) + " is not kappa u_beta");
    }
    out.push_back(std::move(acc).finish());

    CheckAccumulator dis("curvature.accoeff.disjoint");
    CheckAccumulator form("curvature.accoeff.formula");
    const auto& om = hs.omega();
    std::uniform_int_distribution<int> coin(0, 2);
    for (int s = 0; s < 50; ++s) {
      std::map<RootIndex, Rational> a, c, a_dis, c_dis;
      for (RootIndex b : om) {
        a[b] = random_rational(rng);
        c[b] = random_rational(rng);
        (coin(rng) == 0 ? a_dis : c_dis)[b] = random_rational(rng);
      }
      dis.record(is_zero(verify_accoeff(hs, a_dis, c_dis)), "disjoint supports give a nonzero result");
      dis.record(is_zero(verify_accoeff(hs, a, {})), "c = 0 gives a nonzero result");
      Vector want(d);
      for (RootIndex b : om) want = want + (kappa * c[b] * a[b] * a[b]) * hs.u(b);
      form.record(verify_accoeff(hs, a, c) == want, "R(x,xi)xi != kappa sum c a^2 u");
    }
    out.push_back(std::move(dis).finish());
    out.push_back(std::move(form).finish());
  }
  return out;
}

}  // namespace hss
