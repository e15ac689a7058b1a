#include "hss/roots.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

#include "hss/exact_matrix.hpp"

namespace hss {

std::string_view family_name(Family f) {
  switch (f) {
    case Family::A: return "A";
    case Family::B: return "B";
    case Family::C: return "C";
    case Family::D: return "D";
    case Family::E6: return "E6";
    case Family::E7: return "E7";
  }
  return "?";
}

RootVector RootVector::unit(std::size_t dim, std::size_t i, const Rational& scale) {
  std::vector<Rational> c(dim);
  c.at(i) = scale;
  return RootVector(std::move(c));
}

bool RootVector::is_zero() const {
  return std::all_of(coords_.begin(), coords_.end(), [](const Rational& x) { return sgn(x) == 0; });
}

Rational RootVector::dot(const RootVector& o) const {
  if (o.dim() != dim()) throw std::invalid_argument("root vector dimension mismatch");
  Rational s;
  for (std::size_t i = 0; i < coords_.size(); ++i) s += coords_[i] * o.coords_[i];
  return s;
}

RootVector& RootVector::operator+=(const RootVector& o) {
  if (o.dim() != dim()) throw std::invalid_argument("root vector dimension mismatch");
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += o.coords_[i];
  return *this;
}

RootVector& RootVector::operator-=(const RootVector& o) {
  if (o.dim() != dim()) throw std::invalid_argument("root vector dimension mismatch");
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] -= o.coords_[i];
  return *this;
}

RootVector operator-(const RootVector& a) {
  std::vector<Rational> c(a.coords_.size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = -a.coords_[i];
  return RootVector(std::move(c));
}

RootVector operator*(const Rational& s, const RootVector& a) {
  std::vector<Rational> c(a.coords_.size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = s * a.coords_[i];
  return RootVector(std::move(c));
}

bool operator<(const RootVector& a, const RootVector& b) {
  return std::lexicographical_compare(a.coords_.begin(), a.coords_.end(), b.coords_.begin(),
                                      b.coords_.end());
}

std::string RootVector::to_string() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < coords_.size(); ++i) os << (i ? ", " : "") << hss::to_string(coords_[i]);
  os << ')';
  return os.str();
}

std::size_t expected_root_count(Family family, int rank) {
  const auto r = static_cast<std::size_t>(rank);
  switch (family) {
    case Family::A: return r * (r + 1);
    case Family::B:
    case Family::C: return 2 * r * r;
    case Family::D: return 2 * r * (r - 1);
    case Family::E6: return 72;
    case Family::E7: return 126;
  }
  return 0;
}

namespace {

// e_i +- e_j style vector; indices 0-based.
RootVector combo(std::size_t dim, std::size_t i, const Rational& a, std::size_t j, const Rational& b) {
  std::vector<Rational> c(dim);
  c[i] += a;
  c[j] += b;
  return RootVector(std::move(c));
}

void check_rank(Family family, int rank) {
  auto fail = [&](const char* range) {
    throw std::invalid_argument("rank " + std::to_string(rank) + " out of range for family " +
                                std::string(family_name(family)) + " (valid: " + range + ")");
  };
  switch (family) {
    case Family::A:
      if (rank < 1) fail("r >= 1");
      break;
    case Family::B:
      if (rank < 2) fail("r >= 2");
      break;
    case Family::C:
      if (rank < 3) fail("r >= 3");
      break;
    case Family::D:
      if (rank < 4) fail("r >= 4");
      break;
    case Family::E6:
      if (rank != 6) fail("r = 6");
      break;
    case Family::E7:
      if (rank != 7) fail("r = 7");
      break;
  }
}

// Half-integer vectors (1/2) sum (-1)^{n_i} e_i in R^8 with an even number of minus signs.
std::vector<RootVector> even_half_vectors() {
  std::vector<RootVector> out;
  const Rational half(1, 2);
  for (unsigned mask = 0; mask < 256; ++mask) {
    if (__builtin_popcount(mask) % 2 != 0) continue;
    std::vector<Rational> c(8);
    for (unsigned i = 0; i < 8; ++i) c[i] = (mask >> i) & 1U ? -half : half;
    out.emplace_back(std::move(c));
  }
  return out;
}

struct RawSystem {
  std::size_t dim = 0;
  std::vector<RootVector> roots;
  std::vector<RootVector> simple;
};

RawSystem raw_system(Family family, int rank) {
  RawSystem s;
  const auto r = static_cast<std::size_t>(rank);
  const Rational one(1), two(2), half(1, 2);
  switch (family) {
    case Family::A: {
      s.dim = r + 1;
      for (std::size_t i = 0; i <= r; ++i)
        for (std::size_t j = 0; j <= r; ++j)
          if (i != j) s.roots.push_back(combo(s.dim, i, one, j, -one));
      for (std::size_t i = 0; i < r; ++i) s.simple.push_back(combo(s.dim, i, one, i + 1, -one));
      break;
    }
    case Family::B:
    case Family::C:
    case Family::D: {
      s.dim = r;
      for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = i + 1; j < r; ++j)
          for (int a : {1, -1})
            for (int b : {1, -1}) s.roots.push_back(combo(r, i, Rational(a), j, Rational(b)));
      if (family == Family::B)
        for (std::size_t i = 0; i < r; ++i)
          for (int a : {1, -1}) s.roots.push_back(RootVector::unit(r, i, Rational(a)));
      if (family == Family::C)
        for (std::size_t i = 0; i < r; ++i)
          for (int a : {2, -2}) s.roots.push_back(RootVector::unit(r, i, Rational(a)));
      for (std::size_t i = 0; i + 1 < r; ++i) s.simple.push_back(combo(r, i, one, i + 1, -one));
      if (family == Family::B) s.simple.push_back(RootVector::unit(r, r - 1, one));
      if (family == Family::C) s.simple.push_back(RootVector::unit(r, r - 1, two));
      if (family == Family::D) s.simple.push_back(combo(r, r - 2, one, r - 1, one));
      break;
    }
    case Family::E6:
    case Family::E7: {
      s.dim = 8;
      const std::size_t last = family == Family::E6 ? 5 : 6;  // +-e_i +- e_j with i < j <= last
      for (std::size_t i = 0; i < last; ++i)
        for (std::size_t j = i + 1; j < last; ++j)
          for (int a : {1, -1})
            for (int b : {1, -1}) s.roots.push_back(combo(8, i, Rational(a), j, Rational(b)));
      if (family == Family::E7) {
        s.roots.push_back(combo(8, 6, one, 7, -one));
        s.roots.push_back(combo(8, 6, -one, 7, one));
      }
      for (auto& h : even_half_vectors()) {
        // Membership in V: E6 requires x6 = x7 and x7 = -x8; E7 requires x7 = -x8.
        bool in_v = h[6] == -h[7];
        if (family == Family::E6) in_v = in_v && h[5] == h[6];
        if (in_v) s.roots.push_back(std::move(h));
      }
      std::vector<Rational> a1(8, -half);
      a1[0] = half;
      a1[7] = half;
      s.simple.emplace_back(std::move(a1));
      s.simple.push_back(combo(8, 0, one, 1, one));  // alpha_2 = e1 + e2
      const std::size_t chain = family == Family::E6 ? 4 : 5;
      for (std::size_t i = 0; i < chain; ++i) s.simple.push_back(combo(8, i + 1, one, i, -one));
      break;
    }
  }
  return s;
}

}  // namespace

RootSystem RootSystem::build(Family family, int rank) {
  check_rank(family, rank);
  RawSystem raw = raw_system(family, rank);

  RootSystem rs;
  rs.family_ = family;
  rs.rank_ = rank;
  rs.ambient_dim_ = raw.dim;
  rs.simple_ = raw.simple;
  const auto r = static_cast<std::size_t>(rank);

  Matrix gram(r, r);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) gram(i, j) = raw.simple[i].dot(raw.simple[j]);
  Matrix aug(r, 2 * r);
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < r; ++j) aug(i, j) = gram(i, j);
    aug(i, r + i) = 1;
  }
  RowEchelon e = row_reduce(aug);
  if (e.rank() != r || e.pivots.back() != r - 1)
    throw std::logic_error("simple roots are linearly dependent");
  Matrix gram_inv(r, r);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) gram_inv(i, j) = e.reduced(i, r + j);

  struct Entry {
    RootVector v;
    std::vector<int> coeff;
    int height;
  };
  std::vector<Entry> positives;
  for (const auto& v : raw.roots) {
    Vector b(r);
    for (std::size_t i = 0; i < r; ++i) b[i] = v.dot(raw.simple[i]);
    Vector m = gram_inv.apply(b);
    std::vector<int> coeff(r);
    bool pos = false, neg = false;
    for (std::size_t i = 0; i < r; ++i) {
      coeff[i] = static_cast<int>(to_long(m[i]));
      pos = pos || coeff[i] > 0;
      neg = neg || coeff[i] < 0;
    }
    if (pos && neg) throw std::logic_error("root with mixed-sign coefficients: " + v.to_string());
    if (pos) {
      int h = 0;
      for (int c : coeff) h += c;
      positives.push_back({v, std::move(coeff), h});
    }
  }
  std::sort(positives.begin(), positives.end(), [](const Entry& a, const Entry& b) {
    if (a.height != b.height) return a.height < b.height;
    return a.coeff < b.coeff;
  });

  const std::size_t npos = positives.size();
  if (2 * npos != raw.roots.size()) throw std::logic_error("root set is not symmetric");
  rs.roots_.reserve(2 * npos);
  rs.coefficients_.reserve(2 * npos);
  for (const auto& p : positives) {
    rs.roots_.push_back(p.v);
    rs.coefficients_.push_back(p.coeff);
  }
  for (const auto& p : positives) {
    rs.roots_.push_back(-p.v);
    std::vector<int> c = p.coeff;
    for (auto& x : c) x = -x;
    rs.coefficients_.push_back(std::move(c));
  }

  rs.lookup_.reserve(rs.roots_.size());
  for (RootIndex i = 0; i < rs.roots_.size(); ++i) rs.lookup_.emplace_back(rs.roots_[i], i);
  std::sort(rs.lookup_.begin(), rs.lookup_.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });

  for (const auto& s : rs.simple_) rs.simple_index_.push_back(rs.index_of(s));
  rs.highest_ = npos - 1;
  for (RootIndex i = 1; i < npos; ++i)
    if (positives[i].height == positives[npos - 1].height && i != npos - 1)
      throw std::logic_error("highest root is not unique");

  rs.norm_scale_ = Rational(2) / rs.roots_[rs.highest_].dot(rs.roots_[rs.highest_]);

  const std::size_t n = rs.roots_.size();
  rs.sum_.assign(n * n, kNoRoot);
  rs.inner_.assign(n * n, Rational(0));
  rs.cartan_.assign(n * n, 0);
  for (RootIndex a = 0; a < n; ++a)
    for (RootIndex b = 0; b < n; ++b) {
      auto s = rs.find(rs.roots_[a] + rs.roots_[b]);
      if (s) rs.sum_[a * n + b] = *s;
      rs.inner_[a * n + b] = rs.norm_scale_ * rs.roots_[a].dot(rs.roots_[b]);
    }
  for (RootIndex a = 0; a < n; ++a)
    for (RootIndex b = 0; b < n; ++b) {
      Rational c = 2 * rs.inner_[a * n + b] / rs.inner_[b * n + b];
      rs.cartan_[a * n + b] = static_cast<int>(to_long(c));
    }
  return rs;
}

std::string RootSystem::name() const {
  switch (family_) {
    case Family::E6:
    case Family::E7: return std::string(family_name(family_));
    default: return std::string(family_name(family_)) + std::to_string(rank_);
  }
}

std::optional<RootIndex> RootSystem::find(const RootVector& v) const {
  if (v.dim() != ambient_dim_) return std::nullopt;
  auto it = std::lower_bound(lookup_.begin(), lookup_.end(), v,
                             [](const auto& e, const RootVector& x) { return e.first < x; });
  if (it != lookup_.end() && it->first == v) return it->second;
  return std::nullopt;
}

RootIndex RootSystem::index_of(const RootVector& v) const {
  auto i = find(v);
  if (!i) throw std::invalid_argument("not a root of " + name() + ": " + v.to_string());
  return *i;
}

Rational RootSystem::inner(const RootVector& a, const RootVector& b) const {
  if (a.dim() != ambient_dim_ || b.dim() != ambient_dim_)
    throw std::invalid_argument("inner product: expected vectors of dimension " +
                                std::to_string(ambient_dim_));
  return norm_scale_ * a.dot(b);
}

int RootSystem::cartan_integer(const RootVector& beta, const RootVector& alpha) const {
  return cartan_integer(index_of(beta), index_of(alpha));
}

RootString RootSystem::root_string(RootIndex alpha, RootIndex beta) const {
  if (alpha == beta || alpha == negative(beta))
    throw std::invalid_argument("root string undefined for beta = +-alpha");
  RootString s;
  RootIndex cur = beta;
  while ((cur = difference(cur, alpha)) != kNoRoot) ++s.p;
  cur = beta;
  while ((cur = sum(cur, alpha)) != kNoRoot) ++s.q;
  return s;
}

RootString RootSystem::root_string(const RootVector& alpha, const RootVector& beta) const {
  return root_string(index_of(alpha), index_of(beta));
}

const std::vector<int>& RootSystem::simple_coefficients(const RootVector& v) const {
  return coefficients_[index_of(v)];
}

int RootSystem::height(RootIndex i) const {
  int h = 0;
  for (int c : coefficients_.at(i)) h += c;
  return h;
}

RootVector RootSystem::reflect(const RootVector& v, int i) const {
  const RootVector& a = simple_.at(static_cast<std::size_t>(i - 1));
  Rational c = 2 * v.dot(a) / a.dot(a);
  return v - c * a;
}

std::vector<RootVector> RootSystem::weyl_orbit(const RootVector& alpha) const {
  index_of(alpha);
  std::set<RootVector> seen{alpha};
  std::vector<RootVector> frontier{alpha};
  while (!frontier.empty()) {
    std::vector<RootVector> next;
    for (const auto& v : frontier)
      for (int i = 1; i <= rank_; ++i) {
        RootVector w = reflect(v, i);
        if (seen.insert(w).second) next.push_back(std::move(w));
      }
    frontier = std::move(next);
  }
  return {seen.begin(), seen.end()};
}

}  // namespace hss
