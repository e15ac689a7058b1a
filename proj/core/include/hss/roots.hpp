#pragma once

#include <cstddef>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hss/rational.hpp"

namespace hss {

enum class Family { A, B, C, D, E6, E7 };

std::string_view family_name(Family f);

/// A vector of exact rational coordinates in the ambient Euclidean space of a root system.
class RootVector {
 public:
  RootVector() = default;
  explicit RootVector(std::vector<Rational> coords) : coords_(std::move(coords)) {}

  /// scale * e_i (0-based i) in dimension dim.
  static RootVector unit(std::size_t dim, std::size_t i, const Rational& scale = 1);

  const std::vector<Rational>& coords() const { return coords_; }
  std::size_t dim() const { return coords_.size(); }
  const Rational& operator[](std::size_t i) const { return coords_[i]; }

  bool is_zero() const;
  /// Plain Euclidean dot product (no normalization).
  Rational dot(const RootVector& o) const;

  RootVector& operator+=(const RootVector& o);
  RootVector& operator-=(const RootVector& o);
  friend RootVector operator+(RootVector a, const RootVector& b) { return a += b; }
  friend RootVector operator-(RootVector a, const RootVector& b) { return a -= b; }
  friend RootVector operator-(const RootVector& a);
  friend RootVector operator*(const Rational& s, const RootVector& a);

  friend bool operator==(const RootVector& a, const RootVector& b) { return a.coords_ == b.coords_; }
  friend bool operator<(const RootVector& a, const RootVector& b);

  /// e.g. "(1, -1/2, 0)".
  std::string to_string() const;

 private:
  std::vector<Rational> coords_;
};

using RootIndex = std::size_t;
inline constexpr RootIndex kNoRoot = std::numeric_limits<RootIndex>::max();

struct RootString {
  int p = 0;  // max n with beta - n*alpha a root
  int q = 0;  // max n with beta + n*alpha a root
};

/// A reduced root system of type A_r, B_r, C_r, D_r, E_6 or E_7 in its classical coordinates.
///
/// Roots are stored with positive roots first, ordered by height and then
/// lexicographically by simple-root coefficients; the negative of positive root i
/// sits at index num_positive() + i. The inner product is the dot product scaled
/// so that the highest root has squared length 2.
class RootSystem {
 public:
  /// Throws std::invalid_argument when the rank is outside the family's range.
  static RootSystem build(Family family, int rank);

  Family family() const { return family_; }
  int rank() const { return rank_; }
  std::size_t ambient_dim() const { return ambient_dim_; }
  const Rational& norm_scale() const { return norm_scale_; }
  std::string name() const;

  std::size_t size() const { return roots_.size(); }
  std::size_t num_positive() const { return roots_.size() / 2; }

  const std::vector<RootVector>& roots() const { return roots_; }
  std::span<const RootVector> positive_roots() const { return {roots_.data(), num_positive()}; }
  const RootVector& root(RootIndex i) const { return roots_.at(i); }

  /// alpha_1..alpha_r, as listed with the family's coordinates.
  const std::vector<RootVector>& simple_roots() const { return simple_; }
  /// Index of simple root alpha_i, i in [1, rank].
  RootIndex simple_index(int i) const { return simple_index_.at(static_cast<std::size_t>(i - 1)); }

  const RootVector& highest_root() const { return roots_[highest_]; }
  RootIndex highest_index() const { return highest_; }

  std::optional<RootIndex> find(const RootVector& v) const;
  bool contains(const RootVector& v) const { return find(v).has_value(); }
  /// Throws std::invalid_argument when v is not a root.
  RootIndex index_of(const RootVector& v) const;

  bool is_positive(RootIndex i) const { return i < num_positive(); }
  RootIndex negative(RootIndex i) const {
    return i < num_positive() ? i + num_positive() : i - num_positive();
  }
  /// Index of root(a) + root(b), or kNoRoot when the sum is not a root (zero included).
  RootIndex sum(RootIndex a, RootIndex b) const { return sum_[a * size() + b]; }
  /// Index of root(a) - root(b), or kNoRoot.
  RootIndex difference(RootIndex a, RootIndex b) const { return sum(a, negative(b)); }

  /// Normalized inner product. Throws std::invalid_argument on dimension mismatch.
  Rational inner(const RootVector& a, const RootVector& b) const;
  const Rational& inner(RootIndex a, RootIndex b) const { return inner_[a * size() + b]; }
  const Rational& norm2(RootIndex a) const { return inner(a, a); }
  bool is_long(RootIndex a) const { return norm2(a) == 2; }

  /// 2 (beta, alpha) / (alpha, alpha).
  int cartan_integer(RootIndex beta, RootIndex alpha) const { return cartan_[beta * size() + alpha]; }
  /// Throws std::invalid_argument when either vector is not a root.
  int cartan_integer(const RootVector& beta, const RootVector& alpha) const;

  /// The alpha-string through beta. Throws std::invalid_argument when beta = +-alpha.
  RootString root_string(RootIndex alpha, RootIndex beta) const;
  RootString root_string(const RootVector& alpha, const RootVector& beta) const;

  const std::vector<int>& simple_coefficients(RootIndex i) const { return coefficients_.at(i); }
  /// Throws std::invalid_argument when v is not a root.
  const std::vector<int>& simple_coefficients(const RootVector& v) const;
  int height(RootIndex i) const;

  /// s_i(v) = v - 2 (v, alpha_i)/(alpha_i, alpha_i) alpha_i, i in [1, rank].
  RootVector reflect(const RootVector& v, int i) const;
  /// Closure of {alpha} under the simple reflections, sorted.
  std::vector<RootVector> weyl_orbit(const RootVector& alpha) const;

 private:
  RootSystem() = default;

  Family family_ = Family::A;
  int rank_ = 0;
  std::size_t ambient_dim_ = 0;
  Rational norm_scale_{1};
  std::vector<RootVector> roots_;
  std::vector<RootVector> simple_;
  std::vector<RootIndex> simple_index_;
  std::vector<std::vector<int>> coefficients_;
  RootIndex highest_ = 0;
  std::vector<RootIndex> sum_;
  std::vector<Rational> inner_;
  std::vector<int> cartan_;
  std::vector<std::pair<RootVector, RootIndex>> lookup_;  // sorted by vector
};

/// Number of roots from the family formula: r(r+1), 2r^2, 2r^2, 2r(r-1), 72, 126.
std::size_t expected_root_count(Family family, int rank);

}  // namespace hss
