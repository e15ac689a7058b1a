#include "hss/reference_tables.hpp"

#include <stdexcept>
#include <string>

namespace hss::reference {
namespace {

std::size_t ambient(Family family, int rank) {
  switch (family) {
    case Family::A: return static_cast<std::size_t>(rank) + 1;
    case Family::E6:
    case Family::E7: return 8;
    default: return static_cast<std::size_t>(rank);
  }
}

// a*e_i + b*e_j with 1-based indices.
RootVector ee(std::size_t dim, int i, int a, int j = 0, int b = 0) {
  std::vector<Rational> c(dim);
  c.at(static_cast<std::size_t>(i - 1)) += a;
  if (j > 0) c.at(static_cast<std::size_t>(j - 1)) += b;
  return RootVector(std::move(c));
}

// (1/2)(sum_{nu<=n} (-1)^{bit nu} e_nu + tail), tail given as integer coefficients for e_{n+1}..e_8.
std::vector<RootVector> half_family(int n, const std::vector<int>& tail, bool odd_minus) {
  std::vector<RootVector> out;
  for (unsigned mask = 0; mask < (1U << n); ++mask) {
    if ((__builtin_popcount(mask) % 2 == 1) != odd_minus) continue;
    std::vector<Rational> c(8);
    for (int i = 0; i < n; ++i) c[static_cast<std::size_t>(i)] = Rational((mask >> i) & 1U ? -1 : 1, 2);
    for (std::size_t i = 0; i < tail.size(); ++i) c[static_cast<std::size_t>(n) + i] = Rational(tail[i], 2);
    out.emplace_back(std::move(c));
  }
  return out;
}

[[noreturn]] void unsupported(Family family, int rank, int node) {
  throw std::invalid_argument("no explicit list for " + std::string(family_name(family)) +
                              " rank " + std::to_string(rank) + " node " + std::to_string(node));
}

int min_dim_k(int rank, int node) { return std::min(node, rank + 1 - node); }

}  // namespace

std::vector<int> marked_nodes(Family family, int rank) {
  switch (family) {
    case Family::A: {
      std::vector<int> v;
      for (int k = 1; k <= rank; ++k) v.push_back(k);
      return v;
    }
    case Family::B: return {1};
    case Family::C: return {rank};
    case Family::D: return {1, rank - 1, rank};
    case Family::E6: return {1, 6};
    case Family::E7: return {7};
  }
  return {};
}

int canonical_node(Family family, int rank, int node) {
  if (family == Family::D && node == rank - 1) return rank;
  return node;
}

std::vector<RootVector> delta_M_pos(Family family, int rank, int node) {
  const std::size_t n = ambient(family, rank);
  const int r = rank;
  std::vector<RootVector> out;
  switch (family) {
    case Family::A:
      for (int nu = 1; nu <= node; ++nu)
        for (int mu = node; mu <= r; ++mu) out.push_back(ee(n, nu, 1, mu + 1, -1));
      return out;
    case Family::B:
      for (int mu = 1; mu < r; ++mu) {
        out.push_back(ee(n, 1, 1, mu + 1, 1));
        out.push_back(ee(n, 1, 1, mu + 1, -1));
      }
      out.push_back(ee(n, 1, 1));
      return out;
    case Family::C:
      for (int nu = 1; nu <= r; ++nu)
        for (int mu = nu + 1; mu <= r; ++mu) out.push_back(ee(n, nu, 1, mu, 1));
      for (int nu = 1; nu <= r; ++nu) out.push_back(ee(n, nu, 2));
      return out;
    case Family::D:
      if (node == 1) {
        for (int mu = 2; mu <= r; ++mu) {
          out.push_back(ee(n, 1, 1, mu, 1));
          out.push_back(ee(n, 1, 1, mu, -1));
        }
        return out;
      }
      if (node == r) {
        for (int nu = 1; nu <= r; ++nu)
          for (int mu = nu + 1; mu <= r; ++mu) out.push_back(ee(n, nu, 1, mu, 1));
        return out;
      }
      break;
    case Family::E6:
      if (node != 6) break;
      for (int mu = 1; mu < 5; ++mu) {
        out.push_back(ee(8, 5, 1, mu, 1));
        out.push_back(ee(8, 5, 1, mu, -1));
      }
      for (auto& h : half_family(4, {1, -1, -1, 1}, false)) out.push_back(std::move(h));
      return out;
    case Family::E7:
      if (node != 7) break;
      for (int mu = 1; mu < 6; ++mu) {
        out.push_back(ee(8, 6, 1, mu, 1));
        out.push_back(ee(8, 6, 1, mu, -1));
      }
      out.push_back(ee(8, 8, 1, 7, -1));
      for (auto& h : half_family(5, {1, -1, 1}, true)) out.push_back(std::move(h));
      return out;
  }
  unsupported(family, rank, node);
}

std::vector<std::vector<int>> delta_M_pos_coefficients(Family family) {
  // Each entry is (top, bottom row) in Dynkin-diagram layout: the top is alpha_2, the bottom row reads
  // alpha_1, alpha_3, alpha_4, ... from left to right.
  struct Display {
    int top;
    std::vector<int> bottom;
  };
  std::vector<Display> shown;
  if (family == Family::E6) {
    shown = {{0, {0, 0, 0, 0, 1}}, {0, {0, 0, 0, 1, 1}}, {0, {0, 0, 1, 1, 1}}, {0, {0, 1, 1, 1, 1}},
             {1, {0, 0, 1, 1, 1}}, {1, {0, 1, 1, 1, 1}}, {1, {0, 1, 2, 1, 1}}, {1, {0, 1, 2, 2, 1}},
             {0, {1, 1, 1, 1, 1}}, {1, {1, 1, 1, 1, 1}}, {1, {1, 1, 2, 1, 1}}, {1, {1, 2, 2, 1, 1}},
             {1, {1, 1, 2, 2, 1}}, {1, {1, 2, 2, 2, 1}}, {1, {1, 2, 3, 2, 1}}, {2, {1, 2, 3, 2, 1}}};
  } else if (family == Family::E7) {
    shown = {{0, {0, 0, 0, 0, 0, 1}}, {0, {0, 0, 0, 0, 1, 1}}, {0, {0, 0, 0, 1, 1, 1}},
             {0, {0, 0, 1, 1, 1, 1}}, {0, {0, 1, 1, 1, 1, 1}}, {1, {0, 0, 1, 1, 1, 1}},
             {1, {0, 1, 1, 1, 1, 1}}, {1, {0, 1, 2, 1, 1, 1}}, {1, {0, 1, 2, 2, 1, 1}},
             {1, {0, 1, 2, 2, 2, 1}}, {0, {1, 1, 1, 1, 1, 1}}, {1, {1, 1, 1, 1, 1, 1}},
             {1, {1, 1, 2, 1, 1, 1}}, {1, {1, 1, 2, 2, 1, 1}}, {1, {1, 2, 2, 1, 1, 1}},
             {1, {1, 1, 2, 2, 2, 1}}, {1, {1, 2, 2, 2, 1, 1}}, {1, {1, 2, 2, 2, 2, 1}},
             {1, {1, 2, 3, 2, 1, 1}}, {1, {1, 2, 3, 2, 2, 1}}, {2, {1, 2, 3, 2, 1, 1}},
             {1, {1, 2, 3, 3, 2, 1}}, {2, {1, 2, 3, 2, 2, 1}}, {2, {1, 2, 3, 3, 2, 1}},
             {2, {1, 2, 4, 3, 2, 1}}, {2, {1, 3, 4, 3, 2, 1}}, {2, {2, 3, 4, 3, 2, 1}}};
  }
  std::vector<std::vector<int>> out;
  for (const auto& d : shown) {
    std::vector<int> c;
    c.push_back(d.bottom[0]);
    c.push_back(d.top);
    for (std::size_t i = 1; i < d.bottom.size(); ++i) c.push_back(d.bottom[i]);
    out.push_back(std::move(c));
  }
  return out;
}

std::vector<RootVector> delta_M0(Family family, int rank, int node) {
  const std::size_t n = ambient(family, rank);
  const int r = rank;
  std::vector<RootVector> out;
  switch (family) {
    case Family::A:
      for (int nu = 2; nu <= node; ++nu)
        for (int mu = node; mu <= r - 1; ++mu) out.push_back(ee(n, nu, 1, mu + 1, -1));
      return out;
    case Family::B: return {ee(n, 1, 1, 2, -1)};
    case Family::C:
      for (int nu = 2; nu <= r; ++nu)
        for (int mu = nu + 1; mu <= r; ++mu) out.push_back(ee(n, nu, 1, mu, 1));
      for (int nu = 2; nu <= r; ++nu) out.push_back(ee(n, nu, 2));
      return out;
    case Family::D:
      if (node == 1) return {ee(n, 1, 1, 2, -1)};
      if (node == r) {
        for (int nu = 3; nu <= r; ++nu)
          for (int mu = nu + 1; mu <= r; ++mu) out.push_back(ee(n, nu, 1, mu, 1));
        return out;
      }
      break;
    case Family::E6: {
      if (node != 6) break;
      for (int j = 4; j >= 1; --j) out.push_back(ee(8, 5, 1, j, -1));
      std::vector<Rational> h{Rational(-1, 2), Rational(-1, 2), Rational(-1, 2), Rational(-1, 2),
                              Rational(1, 2),  Rational(-1, 2), Rational(-1, 2), Rational(1, 2)};
      out.emplace_back(std::move(h));
      return out;
    }
    case Family::E7:
      if (node != 7) break;
      for (int j = 1; j < 6; ++j) {
        out.push_back(ee(8, 6, 1, j, 1));
        out.push_back(ee(8, 6, 1, j, -1));
      }
      return out;
  }
  unsupported(family, rank, node);
}

std::vector<RootVector> omega(Family family, int rank, int node) {
  const std::size_t n = ambient(family, rank);
  const int r = rank;
  std::vector<RootVector> out;
  switch (family) {
    case Family::A:
      for (int i = 1; i <= min_dim_k(r, node); ++i) out.push_back(ee(n, i, 1, r + 2 - i, -1));
      return out;
    case Family::B: return {ee(n, 1, 1, 2, 1), ee(n, 1, 1, 2, -1)};
    case Family::C:
      for (int i = 1; i <= r; ++i) out.push_back(ee(n, i, 2));
      return out;
    case Family::D:
      if (node == 1) return {ee(n, 1, 1, 2, 1), ee(n, 1, 1, 2, -1)};
      if (node == r) {
        for (int i = 1; 2 * i <= r; ++i) out.push_back(ee(n, 2 * i - 1, 1, 2 * i, 1));
        return out;
      }
      break;
    case Family::E6: {
      if (node != 6) break;
      std::vector<Rational> d{Rational(1, 2), Rational(1, 2),  Rational(1, 2),  Rational(1, 2),
                              Rational(1, 2), Rational(-1, 2), Rational(-1, 2), Rational(1, 2)};
      out.emplace_back(std::move(d));
      out.push_back(ee(8, 5, 1, 4, -1));
      return out;
    }
    case Family::E7:
      if (node != 7) break;
      return {ee(8, 8, 1, 7, -1), ee(8, 6, 1, 5, -1), ee(8, 6, 1, 5, 1)};
  }
  unsupported(family, rank, node);
}

std::size_t delta_M_count(Family family, int rank, int node) {
  const auto r = static_cast<std::size_t>(rank);
  switch (family) {
    case Family::A: return static_cast<std::size_t>(node) * (r + 1 - static_cast<std::size_t>(node));
    case Family::B: return 2 * r - 1;
    case Family::C: return r * (r + 1) / 2;
    case Family::D: return node == 1 ? 2 * (r - 1) : r * (r - 1) / 2;
    case Family::E6: return 16;
    case Family::E7: return 27;
  }
  return 0;
}

int complex_rank(Family family, int rank, int node) {
  switch (family) {
    case Family::A: return min_dim_k(rank, node);
    case Family::B: return 2;
    case Family::C: return rank;
    case Family::D: return node == 1 ? 2 : rank / 2;
    case Family::E6: return 2;
    case Family::E7: return 3;
  }
  return 0;
}

SubspaceDims subspace_dims(Family family, int rank, int node) {
  const int r = rank;
  switch (family) {
    case Family::A: {
      const int k = node;
      if (k == 1 || k == r) return {0, 0, 0, r - 1};
      return {(k - 1) * (k - 1) + (r - k) * (r - k) - 1, (r - 1) * (r - 1) - 1, (k - 1) * (r - k), r - 1};
    }
    case Family::B: return {1, 3, 1, 2 * r - 3};
    case Family::C: return {(r - 1) * (r - 1), (r - 1) * (2 * r - 1), r * (r - 1) / 2, r - 1};
    case Family::D:
      if (node == 1) return {1, 3, 1, 2 * r - 4};
      return {(r - 2) * (r - 2), (2 * r - 4) * (2 * r - 5) / 2, (r - 2) * (r - 3) / 2, 2 * (r - 2)};
    case Family::E6: return {25, 35, 5, 10};
    case Family::E7: return {46, 66, 10, 16};
  }
  return {};
}

std::optional<int> expected_commutant(Family family, int rank, int node) {
  switch (family) {
    case Family::C:
    case Family::E6:
    case Family::E7: return 1;
    case Family::A:
      if (node >= 2 && 2 * node <= rank + 1) return 2;
      return std::nullopt;
    case Family::D:
      if (node == rank && rank >= 5) return 2;
      return std::nullopt;
    default: return std::nullopt;
  }
}

std::string space_label(Family family, int rank, int node) {
  std::string buf;
  const std::string r = std::to_string(rank);
  switch (family) {
    case Family::A: {
      const int k = min_dim_k(rank, node);
      buf = k == 1 ? "CP^" + r : "G_" + std::to_string(k) + "(C^" + std::to_string(rank + 1) + ")";
      break;
    }
    case Family::B: buf = "G_2^+(R^" + std::to_string(2 * rank + 1) + ")"; break;
    case Family::C: buf = "Sp_" + r + "/U_" + r; break;
    case Family::D:
      buf = node == 1 ? "G_2^+(R^" + std::to_string(2 * rank) + ")" : "SO_" + std::to_string(2 * rank) + "/U_" + r;
      break;
    case Family::E6: buf = "E_6/Spin_10 U_1"; break;
    case Family::E7: buf = "E_7/E_6 U_1"; break;
  }
  return buf;
}

std::string_view case_numeral(TubeCase c) {
  switch (c) {
    case TubeCase::CPk_in_CPr: return "i";
    case TubeCase::Gk_in_Gk: return "ii";
    case TubeCase::CPr1_in_G2R2r: return "iii";
    case TubeCase::SO_in_SO: return "iv";
  }
  return "?";
}

std::string_view case_name(TubeCase c) {
  switch (c) {
    case TubeCase::CPk_in_CPr: return "CPk_in_CPr";
    case TubeCase::Gk_in_Gk: return "Gk_in_Gk";
    case TubeCase::CPr1_in_G2R2r: return "CPr1_in_G2R2r";
    case TubeCase::SO_in_SO: return "SO_in_SO";
  }
  return "?";
}

std::optional<TubeCase> parse_case(std::string_view text) {
  for (TubeCase c : {TubeCase::CPk_in_CPr, TubeCase::Gk_in_Gk, TubeCase::CPr1_in_G2R2r, TubeCase::SO_in_SO})
    if (text == case_numeral(c) || text == case_name(c)) return c;
  return std::nullopt;
}

std::optional<TubeCase> tube_case_for(Family family, int rank, int node) {
  if (family == Family::A && node == 1) return TubeCase::CPk_in_CPr;
  if (family == Family::A && node >= 2 && 2 * node <= rank + 1) return TubeCase::Gk_in_Gk;
  if (family == Family::D && node == 1) return TubeCase::CPr1_in_G2R2r;
  if (family == Family::D && node == rank && rank >= 5) return TubeCase::SO_in_SO;
  return std::nullopt;
}

bool case_in_range(TubeCase c, Family family, int rank, int node, int sub_k) {
  switch (c) {
    case TubeCase::CPk_in_CPr:
      return family == Family::A && node == 1 && rank >= 1 && sub_k >= 0 && sub_k <= rank - 1;
    case TubeCase::Gk_in_Gk: return family == Family::A && node >= 2 && 2 * node <= rank + 1;
    case TubeCase::CPr1_in_G2R2r: return family == Family::D && node == 1 && rank >= 4;
    case TubeCase::SO_in_SO: return family == Family::D && node == rank && rank >= 5;
  }
  return false;
}

std::vector<RootVector> focal_roots(TubeCase c, int rank, int node, int sub_k) {
  const int r = rank;
  std::vector<RootVector> out;
  switch (c) {
    case TubeCase::CPk_in_CPr: {
      const auto n = static_cast<std::size_t>(r + 1);
      for (int mu = 1; mu <= sub_k; ++mu) out.push_back(ee(n, 1, 1, mu + 1, -1));
      return out;
    }
    case TubeCase::Gk_in_Gk: {
      const auto n = static_cast<std::size_t>(r + 1);
      for (int nu = 1; nu <= node; ++nu)
        for (int mu = node; mu <= r - 1; ++mu) out.push_back(ee(n, nu, 1, mu + 1, -1));
      return out;
    }
    case TubeCase::CPr1_in_G2R2r: {
      const auto n = static_cast<std::size_t>(r);
      for (int mu = 1; mu <= r - 1; ++mu) out.push_back(ee(n, 1, 1, mu + 1, -1));
      return out;
    }
    case TubeCase::SO_in_SO: {
      const auto n = static_cast<std::size_t>(r);
      for (int nu = 2; nu <= r; ++nu)
        for (int mu = nu + 1; mu <= r; ++mu) out.push_back(ee(n, nu, 1, mu, 1));
      return out;
    }
  }
  return out;
}

std::array<int, 4> tube_multiplicities(TubeCase c, int rank, int node, int sub_k) {
  const int r = rank;
  switch (c) {
    case TubeCase::CPk_in_CPr: return {0, 2 * sub_k, 2 * (r - sub_k - 1), 1};
    case TubeCase::Gk_in_Gk: {
      const int k = node;
      return {2 * (k - 1) * (r - k), 2 * (r - k), 2 * (k - 1), 1};
    }
    case TubeCase::CPr1_in_G2R2r: return {2, 2 * (r - 2), 2 * (r - 2), 1};
    case TubeCase::SO_in_SO: return {(r - 3) * (r - 2), 2 * (r - 2), 2 * (r - 2), 1};
  }
  return {};
}

std::array<int, 2> focal_dims(TubeCase c, int rank, int node, int sub_k) {
  const int r = rank;
  switch (c) {
    case TubeCase::CPk_in_CPr: return {sub_k, r - 1 - sub_k};
    case TubeCase::Gk_in_Gk: {
      const int k = node;
      return {k * (r - k), (k - 1) * (r - k + 1)};
    }
    case TubeCase::CPr1_in_G2R2r: return {r - 1, r - 1};
    case TubeCase::SO_in_SO: return {(r - 1) * (r - 2) / 2, (r - 1) * (r - 2) / 2};
  }
  return {};
}

}  // namespace hss::reference
