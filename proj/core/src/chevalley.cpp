#include "hss/chevalley.hpp"

#include <algorithm>
#include <random>
#include <sstream>
#include <stdexcept>

namespace hss {

GaussianRational AlgebraElement::coeff(BasisIndex i) const {
  auto it = terms_.find(i);
  return it == terms_.end() ? GaussianRational() : it->second;
}

void AlgebraElement::add(BasisIndex i, const GaussianRational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(i, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void AlgebraElement::require_same(const AlgebraElement& o) const {
  if (!same_system(o)) throw std::invalid_argument("algebra elements belong to different systems");
}

AlgebraElement& AlgebraElement::operator+=(const AlgebraElement& o) {
  require_same(o);
  for (const auto& [i, c] : o.terms_) add(i, c);
  return *this;
}

AlgebraElement& AlgebraElement::operator-=(const AlgebraElement& o) {
  require_same(o);
  for (const auto& [i, c] : o.terms_) add(i, -c);
  return *this;
}

AlgebraElement& AlgebraElement::operator*=(const GaussianRational& s) {
  if (s.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [i, c] : terms_) c *= s;
  return *this;
}

int StructureConstants::compute_mixed(RootIndex a, RootIndex b) const {
  // Uses N_{x,y}/(z,z) = N_{y,z}/(x,x) = N_{z,x}/(y,y) for x + y + z = 0 to reach a positive pair.
  const RootSystem& rs = rs_;
  const std::size_t n = rs.size();
  if (!rs.is_positive(a)) return -compute_mixed(b, a);
  const RootIndex c = rs.sum(a, b);
  Rational value;
  if (rs.is_positive(c)) {
    const RootIndex mb = rs.negative(b);
    value = -(rs.norm2(c) / rs.norm2(a)) * table_[mb * n + c];
  } else {
    const RootIndex mc = rs.negative(c);
    value = (rs.norm2(c) / rs.norm2(b)) * table_[mc * n + a];
  }
  return static_cast<int>(to_long(value));
}

StructureConstants StructureConstants::build(RootSystem rs_in) {
  StructureConstants sc(std::move(rs_in));
  const RootSystem& rs = sc.rs_;
  const std::size_t n = rs.size();
  const std::size_t np = rs.num_positive();
  const auto r = static_cast<std::size_t>(rs.rank());
  sc.table_.assign(n * n, 0);
  sc.extraspecial_.assign(np, {kNoRoot, kNoRoot});

  auto mixed_or_positive = [&](RootIndex a, RootIndex b) -> int {
    if (rs.sum(a, b) == kNoRoot) return 0;
    const bool pa = rs.is_positive(a), pb = rs.is_positive(b);
    if (pa && pb) return sc.table_[a * n + b];
    if (!pa && !pb) return -sc.table_[rs.negative(a) * n + rs.negative(b)];
    return sc.compute_mixed(a, b);
  };

  for (RootIndex xi = 0; xi < np; ++xi) {
    std::vector<std::pair<RootIndex, RootIndex>> pairs;
    for (RootIndex a = 0; a < np; ++a) {
      const RootIndex b = rs.difference(xi, a);
      if (b != kNoRoot && rs.is_positive(b) && a < b) pairs.emplace_back(a, b);
    }
    if (pairs.empty()) continue;
    const auto [g, d] = pairs.front();
    sc.extraspecial_[xi] = {g, d};
    const int ngd = rs.root_string(g, d).p + 1;
    sc.table_[g * n + d] = ngd;
    sc.table_[d * n + g] = -ngd;
    const Rational& xi2 = rs.norm2(xi);
    for (std::size_t k = 1; k < pairs.size(); ++k) {
      const auto [a, b] = pairs[k];
      Rational s;
      const RootIndex bg = rs.difference(b, g);
      if (bg != kNoRoot)
        s += Rational(mixed_or_positive(b, rs.negative(g)) * mixed_or_positive(a, rs.negative(d))) /
             rs.norm2(bg);
      const RootIndex ag = rs.difference(a, g);
      if (ag != kNoRoot)
        s += Rational(mixed_or_positive(rs.negative(g), a) * mixed_or_positive(b, rs.negative(d))) /
             rs.norm2(ag);
      const int nab = static_cast<int>(to_long(xi2 / ngd * s));
      sc.table_[a * n + b] = nab;
      sc.table_[b * n + a] = -nab;
    }
  }

  for (RootIndex a = 0; a < n; ++a)
    for (RootIndex b = 0; b < n; ++b) {
      if (rs.is_positive(a) && rs.is_positive(b)) continue;
      sc.table_[a * n + b] = mixed_or_positive(a, b);
    }

  sc.coroots_.resize(n);
  for (RootIndex a = 0; a < n; ++a) {
    std::vector<int> c(r);
    const auto& m = rs.simple_coefficients(a);
    for (std::size_t nu = 0; nu < r; ++nu) {
      Rational v = Rational(m[nu]) * rs.norm2(rs.simple_index(static_cast<int>(nu + 1))) / rs.norm2(a);
      c[nu] = static_cast<int>(to_long(v));
    }
    sc.coroots_[a] = std::move(c);
  }

  sc.cartan_form_.resize(r * r);
  for (std::size_t nu = 0; nu < r; ++nu)
    for (std::size_t mu = 0; mu < r; ++mu) {
      const RootIndex a = rs.simple_index(static_cast<int>(nu + 1));
      const RootIndex b = rs.simple_index(static_cast<int>(mu + 1));
      sc.cartan_form_[nu * r + mu] = 4 * rs.inner(a, b) / (rs.norm2(a) * rs.norm2(b));
    }
  return sc;
}

int StructureConstants::N(const RootVector& a, const RootVector& b) const {
  return N(rs_.index_of(a), rs_.index_of(b));
}

const std::vector<int>& StructureConstants::coroot_expansion(const RootVector& a) const {
  return coroots_.at(rs_.index_of(a));
}

AlgebraElement StructureConstants::basis(BasisIndex i) const {
  if (i >= dim()) throw std::out_of_range("basis index out of range");
  AlgebraElement x = zero();
  x.add(i, GaussianRational(1));
  return x;
}

AlgebraElement StructureConstants::coroot(RootIndex a) const {
  AlgebraElement x = zero();
  const auto& c = coroots_.at(a);
  for (std::size_t nu = 0; nu < c.size(); ++nu) x.add(nu, GaussianRational(c[nu]));
  return x;
}

AlgebraElement StructureConstants::u(RootIndex a) const {
  AlgebraElement x = zero();
  x.add(e_index(a), GaussianRational(1));
  x.add(e_index(rs_.negative(a)), GaussianRational(-1));
  return x;
}

AlgebraElement StructureConstants::v(RootIndex a) const {
  AlgebraElement x = zero();
  x.add(e_index(a), GaussianRational::i());
  x.add(e_index(rs_.negative(a)), GaussianRational::i());
  return x;
}

void StructureConstants::require_system(const AlgebraElement& x) const {
  if (x.family() != rs_.family() || x.rank() != rs_.rank())
    throw std::invalid_argument("algebra element does not belong to " + rs_.name());
}

AlgebraElement StructureConstants::bracket_basis(BasisIndex i, BasisIndex j) const {
  AlgebraElement out = zero();
  const bool hi = is_cartan_index(i), hj = is_cartan_index(j);
  if (hi && hj) return out;
  if (hi || hj) {
    const BasisIndex h = hi ? i : j;
    const RootIndex a = root_of(hi ? j : i);
    const int c = rs_.cartan_integer(a, rs_.simple_index(static_cast<int>(h + 1)));
    out.add(e_index(a), GaussianRational(hi ? c : -c));
    return out;
  }
  const RootIndex a = root_of(i), b = root_of(j);
  if (b == rs_.negative(a)) return coroot(a);
  const RootIndex s = rs_.sum(a, b);
  if (s != kNoRoot) out.add(e_index(s), GaussianRational(N(a, b)));
  return out;
}

AlgebraElement StructureConstants::bracket(const AlgebraElement& x, const AlgebraElement& y) const {
  require_system(x);
  require_system(y);
  AlgebraElement out = zero();
  for (const auto& [i, ci] : x.terms())
    for (const auto& [j, cj] : y.terms()) {
      AlgebraElement b = bracket_basis(i, j);
      if (b.is_zero()) continue;
      const GaussianRational c = ci * cj;
      for (const auto& [k, ck] : b.terms()) out.add(k, c * ck);
    }
  return out;
}

GaussianRational StructureConstants::invariant_form(const AlgebraElement& x, const AlgebraElement& y) const {
  require_system(x);
  require_system(y);
  GaussianRational s;
  const int r = rs_.rank();
  for (const auto& [i, ci] : x.terms()) {
    if (is_cartan_index(i)) {
      for (int mu = 1; mu <= r; ++mu) {
        GaussianRational cj = y.coeff(h_index(mu));
        if (!cj.is_zero()) s += ci * cj * cartan_form(static_cast<int>(i + 1), mu);
      }
      continue;
    }
    const RootIndex a = root_of(i);
    GaussianRational cj = y.coeff(e_index(rs_.negative(a)));
    if (!cj.is_zero()) s += ci * cj * (Rational(2) / rs_.norm2(a));
  }
  return s;
}

bool StructureConstants::in_compact_real_form(const AlgebraElement& x) const {
  if (x.family() != rs_.family() || x.rank() != rs_.rank()) return false;
  for (const auto& [i, c] : x.terms()) {
    if (is_cartan_index(i)) {
      if (!c.is_imaginary()) return false;
      continue;
    }
    const RootIndex a = root_of(i);
    if (!(x.coeff(e_index(rs_.negative(a))) == -c.conj())) return false;
  }
  return true;
}

Vector StructureConstants::compact_coordinates(const AlgebraElement& x) const {
  if (!in_compact_real_form(x)) throw std::invalid_argument("element is not in the compact real form");
  const auto r = static_cast<std::size_t>(rs_.rank());
  Vector c(r + 2 * rs_.num_positive());
  for (const auto& [i, z] : x.terms()) {
    if (is_cartan_index(i)) {
      c[i] = z.im();
      continue;
    }
    const RootIndex a = root_of(i);
    if (!rs_.is_positive(a)) continue;
    c[r + 2 * a] = z.re();
    c[r + 2 * a + 1] = z.im();
  }
  return c;
}

AlgebraElement StructureConstants::from_compact_coordinates(const Vector& c) const {
  const auto r = static_cast<std::size_t>(rs_.rank());
  if (c.size() != r + 2 * rs_.num_positive())
    throw std::invalid_argument("compact coordinate vector has the wrong length");
  AlgebraElement x = zero();
  for (std::size_t nu = 0; nu < r; ++nu) x.add(nu, GaussianRational(Rational(0), c[nu]));
  for (RootIndex a = 0; a < rs_.num_positive(); ++a) {
    const Rational& s = c[r + 2 * a];
    const Rational& t = c[r + 2 * a + 1];
    x.add(e_index(a), GaussianRational(s, t));
    x.add(e_index(rs_.negative(a)), GaussianRational(-s, t));
  }
  return x;
}

std::string StructureConstants::basis_name(BasisIndex i) const {
  if (is_cartan_index(i)) return "h" + std::to_string(i + 1);
  return "e" + rs_.root(root_of(i)).to_string();
}

std::string StructureConstants::to_string(const AlgebraElement& x) const {
  if (x.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [i, c] : x.terms()) {
    if (!first) os << " + ";
    first = false;
    os << '(' << c << ")*" << basis_name(i);
  }
  return os.str();
}

namespace {

std::string pair_text(const RootSystem& rs, RootIndex a, RootIndex b) {
  return "alpha=" + rs.root(a).to_string() + " beta=" + rs.root(b).to_string();
}

AlgebraElement jacobiator(const StructureConstants& sc, const AlgebraElement& x, const AlgebraElement& y,
                          const AlgebraElement& z) {
  return sc.bracket(sc.bracket(x, y), z) + sc.bracket(sc.bracket(y, z), x) +
         sc.bracket(sc.bracket(z, x), y);
}

}  // namespace

std::vector<CheckResult> verify_basis_properties(const StructureConstants& sc, const VerifyOptions& opts) {
  const RootSystem& rs = sc.roots();
  const std::size_t n = rs.size();
  const std::size_t np = rs.num_positive();
  const int r = rs.rank();
  std::vector<CheckResult> out;

  {
    CheckAccumulator acc("chevalley.basis.cartan_abelian");
    for (int nu = 1; nu <= r; ++nu)
      for (int mu = 1; mu <= r; ++mu)
        acc.record(sc.bracket(sc.h(nu), sc.h(mu)).is_zero(),
                   "[h" + std::to_string(nu) + ", h" + std::to_string(mu) + "] != 0");
    out.push_back(std::move(acc).finish());
  }
  {
    CheckAccumulator acc("chevalley.basis.cartan_action");
    for (int nu = 1; nu <= r; ++nu)
      for (RootIndex a = 0; a < n; ++a) {
        AlgebraElement expect = sc.zero();
        expect.add(sc.e_index(a), GaussianRational(rs.cartan_integer(a, rs.simple_index(nu))));
        acc.record(sc.bracket(sc.h(nu), sc.e(a)) == expect,
                   "[h" + std::to_string(nu) + ", e" + rs.root(a).to_string() + "]");
      }
    out.push_back(std::move(acc).finish());
  }
  {
    CheckAccumulator acc("chevalley.basis.coroot_integral");
    for (RootIndex a = 0; a < n; ++a) {
      AlgebraElement b = sc.bracket(sc.e(a), sc.e(rs.negative(a)));
      bool ok = true;
      for (const auto& [i, c] : b.terms())
        ok = ok && sc.is_cartan_index(i) && c.is_real() && is_integer(c.re());
      acc.record(ok && b == sc.coroot(a), "[e_a, e_-a] for a=" + rs.root(a).to_string());
    }
    out.push_back(std::move(acc).finish());
  }
  {
    CheckAccumulator acc("chevalley.coroot.duality");
    for (RootIndex a = 0; a < n; ++a) {
      const AlgebraElement ha = sc.coroot(a);
      for (RootIndex b = 0; b < n; ++b) {
        AlgebraElement expect = sc.zero();
        expect.add(sc.e_index(b), GaussianRational(rs.cartan_integer(b, a)));
        acc.record(sc.bracket(ha, sc.e(b)) == expect,
                   "[h_a, e_b] != c_{b,a} e_b for " + pair_text(rs, a, b));
      }
    }
    out.push_back(std::move(acc).finish());
  }
  {
    CheckAccumulator acc("chevalley.basis.n_magnitude");
    for (RootIndex a = 0; a < n; ++a)
      for (RootIndex b = 0; b < n; ++b) {
        if (b == a || b == rs.negative(a)) continue;
        const int N = sc.N(a, b);
        const bool is_root = rs.sum(a, b) != kNoRoot;
        const bool ok = is_root ? std::abs(N) == rs.root_string(a, b).p + 1 : N == 0;
        acc.record(ok, pair_text(rs, a, b) + " N=" + std::to_string(N));
      }
    out.push_back(std::move(acc).finish());
  }
  {
    CheckAccumulator acc("chevalley.n.antisymmetry");
    for (RootIndex a = 0; a < n; ++a)
      for (RootIndex b = 0; b < n; ++b) {
        const int N = sc.N(a, b);
        acc.record(N == -sc.N(b, a) && N == -sc.N(rs.negative(a), rs.negative(b)), pair_text(rs, a, b));
      }
    out.push_back(std::move(acc).finish());
  }
  {
    // Literal cyclic form: N_{a,b} = N_{b,-a-b} = N_{-a-b,a}.
    CheckAccumulator acc("chevalley.n.cyclic");
    for (RootIndex a = 0; a < n; ++a)
      for (RootIndex b = 0; b < n; ++b) {
        const RootIndex s = rs.sum(a, b);
        if (s == kNoRoot) continue;
        const RootIndex c = rs.negative(s);
        const int N = sc.N(a, b);
        acc.record(N == sc.N(b, c) && N == sc.N(c, a),
                   pair_text(rs, a, b) + ": N_{a,b}=" + std::to_string(N) + ", N_{b,-a-b}=" +
                       std::to_string(sc.N(b, c)) + ", N_{-a-b,a}=" + std::to_string(sc.N(c, a)));
      }
    out.push_back(std::move(acc).finish());
  }
  {
    CheckAccumulator acc("chevalley.n.ratio");
    for (RootIndex a = 0; a < n; ++a)
      for (RootIndex b = 0; b < n; ++b) {
        const RootIndex s = rs.sum(a, b);
        if (s == kNoRoot) continue;
        const RootIndex c = rs.negative(s);
        const Rational x = Rational(sc.N(a, b)) / rs.norm2(c);
        const Rational y = Rational(sc.N(b, c)) / rs.norm2(a);
        const Rational z = Rational(sc.N(c, a)) / rs.norm2(b);
        acc.record(x == y && y == z, pair_text(rs, a, b));
      }
    out.push_back(std::move(acc).finish());
  }
  {
    // Literal square form: N^2 = (1/2)(p+1) q (a,a).
    CheckAccumulator acc("chevalley.n.square");
    for (RootIndex a = 0; a < n; ++a)
      for (RootIndex b = 0; b < n; ++b) {
        if (b == a || b == rs.negative(a)) continue;
        const RootString st = rs.root_string(a, b);
        const int N = sc.N(a, b);
        const Rational rhs = Rational(1, 2) * (st.p + 1) * st.q * rs.norm2(a);
        acc.record(Rational(N * N) == rhs, pair_text(rs, a, b) + ": N^2=" + std::to_string(N * N) +
                                               ", (1/2)(p+1)q(a,a)=" + hss::to_string(rhs));
      }
    out.push_back(std::move(acc).finish());
  }
  {
    // Length-scaled form valid for every reduced system: q (a+b, a+b) = (p+1) (b, b).
    CheckAccumulator acc("chevalley.n.square_scaled");
    for (RootIndex a = 0; a < n; ++a)
      for (RootIndex b = 0; b < n; ++b) {
        const RootIndex s = rs.sum(a, b);
        if (s == kNoRoot) continue;
        const RootString st = rs.root_string(a, b);
        acc.record(st.q * rs.norm2(s) == (st.p + 1) * rs.norm2(b), pair_text(rs, a, b));
      }
    out.push_back(std::move(acc).finish());
  }
  {
    // For gamma + delta = eps + zeta with delta <= zeta <= eps <= gamma, eta = gamma + delta.
    CheckAccumulator acc("chevalley.n.quadruple");
    std::map<RootVector, std::vector<std::pair<RootIndex, RootIndex>>> by_sum;
    for (RootIndex x = 0; x < np; ++x)
      for (RootIndex y = 0; y <= x; ++y) by_sum[rs.root(x) + rs.root(y)].emplace_back(x, y);
    auto Nv = [&](const RootVector& a, const RootVector& b) {
      auto ia = rs.find(a), ib = rs.find(b);
      return ia && ib ? sc.N(*ia, *ib) : 0;
    };
    for (const auto& [eta, list] : by_sum)
      for (const auto& [g, d] : list)
        for (const auto& [e, z] : list) {
          if (!(d < z && z <= e && e <= g)) continue;
          const RootVector &G = rs.root(g), &D = rs.root(d), &E = rs.root(e), &Z = rs.root(z);
          const Rational lhs = Rational(Nv(D, -E) * Nv(G, Z - G) + Nv(-E, G) * Nv(D, Z - D));
          const Rational rhs = Rational(Nv(G, D) * Nv(-E, -Z)) * rs.norm2(z) / rs.inner(eta, eta);
          acc.record(lhs == rhs, "gamma=" + G.to_string() + " delta=" + D.to_string() +
                                     " eps=" + E.to_string() + " zeta=" + Z.to_string());
        }
    out.push_back(std::move(acc).finish());
  }
  {
    CheckAccumulator acc("chevalley.n.highest_root");
    const RootIndex md = rs.negative(rs.highest_index());
    for (RootIndex a = 0; a < np; ++a) {
      const RootIndex d = rs.difference(rs.highest_index(), a);
      if (d == kNoRoot || !rs.is_positive(d)) continue;
      acc.record(std::abs(sc.N(md, a)) == 1, "alpha=" + rs.root(a).to_string());
    }
    out.push_back(std::move(acc).finish());
  }
  {
    CheckAccumulator acc("chevalley.compact.relations");
    for (RootIndex a = 0; a < n; ++a) {
      const AlgebraElement ua = sc.u(a), va = sc.v(a);
      for (int nu = 1; nu <= r; ++nu) {
        const GaussianRational ah(rs.cartan_integer(a, rs.simple_index(nu)));
        const AlgebraElement h = sc.h(nu);
        acc.record(sc.bracket(h, ua) == -(GaussianRational::i() * ah) * va, "[h,u_a] a=" + rs.root(a).to_string());
        acc.record(sc.bracket(h, va) == (GaussianRational::i() * ah) * ua, "[h,v_a] a=" + rs.root(a).to_string());
      }
      acc.record(sc.bracket(ua, va) == (GaussianRational(2) * GaussianRational::i()) * sc.coroot(a),
                 "[u_a,v_a] a=" + rs.root(a).to_string());
      for (RootIndex b = 0; b < n; ++b) {
        if (b == a || b == rs.negative(a)) continue;
        const AlgebraElement ub = sc.u(b), vb = sc.v(b);
        AlgebraElement uu = sc.zero(), vv = sc.zero(), uv = sc.zero();
        const RootIndex s = rs.sum(a, b), d = rs.difference(b, a);
        const GaussianRational nab(sc.N(a, b)), nmab(sc.N(rs.negative(a), b));
        if (s != kNoRoot) {
          uu += nab * sc.u(s);
          vv -= nab * sc.u(s);
          uv += nab * sc.v(s);
        }
        if (d != kNoRoot) {
          uu -= nmab * sc.u(d);
          vv -= nmab * sc.u(d);
          uv -= nmab * sc.v(d);
        }
        const std::string w = pair_text(rs, a, b);
        acc.record(sc.bracket(ua, ub) == uu, "[u_a,u_b] " + w);
        acc.record(sc.bracket(va, vb) == vv, "[v_a,v_b] " + w);
        acc.record(sc.bracket(ua, vb) == uv, "[u_a,v_b] " + w);
      }
    }
    out.push_back(std::move(acc).finish());
  }
  {
    CheckAccumulator acc("chevalley.compact.closure");
    std::vector<AlgebraElement> basis;
    for (int nu = 1; nu <= r; ++nu) basis.push_back(GaussianRational::i() * sc.h(nu));
    for (RootIndex a = 0; a < np; ++a) {
      basis.push_back(sc.u(a));
      basis.push_back(sc.v(a));
    }
    for (std::size_t i = 0; i < basis.size(); ++i)
      for (std::size_t j = i + 1; j < basis.size(); ++j)
        acc.record(sc.in_compact_real_form(sc.bracket(basis[i], basis[j])),
                   "bracket of compact basis elements " + std::to_string(i) + ", " + std::to_string(j));
    out.push_back(std::move(acc).finish());
  }

  const bool exhaustive = r <= opts.max_exhaustive_rank;
  std::mt19937_64 rng(opts.seed);
  std::uniform_int_distribution<std::size_t> pick(0, sc.dim() - 1);
  {
    CheckAccumulator acc("chevalley.jacobi");
    auto test = [&](BasisIndex i, BasisIndex j, BasisIndex k) {
      acc.record(jacobiator(sc, sc.basis(i), sc.basis(j), sc.basis(k)).is_zero(),
                 sc.basis_name(i) + ", " + sc.basis_name(j) + ", " + sc.basis_name(k));
    };
    if (exhaustive) {
      for (BasisIndex i = 0; i < sc.dim(); ++i)
        for (BasisIndex j = i + 1; j < sc.dim(); ++j)
          for (BasisIndex k = j + 1; k < sc.dim(); ++k) test(i, j, k);
    } else {
      for (std::size_t s = 0; s < opts.samples; ++s) test(pick(rng), pick(rng), pick(rng));
    }
    out.push_back(std::move(acc).finish());
  }
  {
    CheckAccumulator acc("chevalley.form.invariance");
    auto test = [&](BasisIndex i, BasisIndex j, BasisIndex k) {
      const AlgebraElement x = sc.basis(i), y = sc.basis(j), z = sc.basis(k);
      acc.record(sc.invariant_form(sc.bracket(x, y), z) == sc.invariant_form(x, sc.bracket(y, z)),
                 sc.basis_name(i) + ", " + sc.basis_name(j) + ", " + sc.basis_name(k));
    };
    if (exhaustive) {
      for (BasisIndex i = 0; i < sc.dim(); ++i)
        for (BasisIndex j = 0; j < sc.dim(); ++j)
          for (BasisIndex k = 0; k < sc.dim(); ++k) test(i, j, k);
    } else {
      for (std::size_t s = 0; s < opts.samples; ++s) test(pick(rng), pick(rng), pick(rng));
    }
    out.push_back(std::move(acc).finish());
  }
  {
    CheckAccumulator acc("chevalley.form.compact_orthogonality");
    for (RootIndex a = 0; a < np; ++a) {
      const AlgebraElement ua = sc.u(a), va = sc.v(a);
      acc.record(sc.invariant_form(ua, va).is_zero(), "B(u_a,v_a) a=" + rs.root(a).to_string());
      for (RootIndex b = a + 1; b < np; ++b) {
        const AlgebraElement ub = sc.u(b), vb = sc.v(b);
        const std::string w = pair_text(rs, a, b);
        acc.record(sc.invariant_form(ua, ub).is_zero(), "B(u_a,u_b) " + w);
        acc.record(sc.invariant_form(ua, vb).is_zero(), "B(u_a,v_b) " + w);
        acc.record(sc.invariant_form(va, ub).is_zero(), "B(v_a,u_b) " + w);
        acc.record(sc.invariant_form(va, vb).is_zero(), "B(v_a,v_b) " + w);
      }
    }
    out.push_back(std::move(acc).finish());
  }
  {
    CheckAccumulator acc("chevalley.form.compact_norm");
    std::string short_root;
    for (RootIndex a = 0; a < np; ++a) {
      const GaussianRational expect(-Rational(4) / rs.norm2(a));
      acc.record(sc.invariant_form(sc.u(a), sc.u(a)) == expect && sc.invariant_form(sc.v(a), sc.v(a)) == expect,
                 "B(u_a,u_a) != -4/(a,a) for a=" + rs.root(a).to_string());
      if (short_root.empty() && rs.norm2(a) != 2) short_root = rs.root(a).to_string();
    }
    if (!short_root.empty())
      acc.flag("B(u_a,u_a) = -4/(a,a) differs from the constant -2 on short roots, e.g. a=" + short_root);
    out.push_back(std::move(acc).finish());
  }
  {
    CheckAccumulator acc("chevalley.determinism");
    const StructureConstants again = StructureConstants::build(rs);
    bool same = true;
    for (RootIndex a = 0; a < n && same; ++a)
      for (RootIndex b = 0; b < n && same; ++b) same = sc.N(a, b) == again.N(a, b);
    acc.record(same, "independent builds disagree");
    out.push_back(std::move(acc).finish());
  }
  return out;
}

}  // namespace hss
