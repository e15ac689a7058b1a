#pragma once

#include <map>
#include <string>
#include <vector>

#include "hss/check.hpp"
#include "hss/exact_matrix.hpp"
#include "hss/rational.hpp"
#include "hss/roots.hpp"

namespace hss {

/// Index into the Chevalley basis: h_1..h_r occupy 0..r-1, e_alpha sits at r + root index.
using BasisIndex = std::size_t;

/// Finitely supported element of the complexified Lie algebra over the Chevalley basis.
class AlgebraElement {
 public:
  AlgebraElement() = default;
  AlgebraElement(Family family, int rank) : family_(family), rank_(rank) {}

  Family family() const { return family_; }
  int rank() const { return rank_; }
  bool same_system(const AlgebraElement& o) const { return family_ == o.family_ && rank_ == o.rank_; }

  const std::map<BasisIndex, GaussianRational>& terms() const { return terms_; }
  GaussianRational coeff(BasisIndex i) const;
  /// Adds c to the coefficient of basis element i, dropping it when it becomes zero.
  void add(BasisIndex i, const GaussianRational& c);
  bool is_zero() const { return terms_.empty(); }

  AlgebraElement& operator+=(const AlgebraElement& o);
  AlgebraElement& operator-=(const AlgebraElement& o);
  AlgebraElement& operator*=(const GaussianRational& s);
  friend AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b) { return a += b; }
  friend AlgebraElement operator-(AlgebraElement a, const AlgebraElement& b) { return a -= b; }
  friend AlgebraElement operator*(const GaussianRational& s, AlgebraElement a) { return a *= s; }
  friend AlgebraElement operator-(AlgebraElement a) { return a *= GaussianRational(-1); }
  friend bool operator==(const AlgebraElement& a, const AlgebraElement& b) {
    return a.same_system(b) && a.terms_ == b.terms_;
  }

 private:
  void require_same(const AlgebraElement& o) const;

  Family family_ = Family::A;
  int rank_ = 0;
  std::map<BasisIndex, GaussianRational> terms_;
};

/// Integer structure constants of a Chevalley basis with signs fixed by extraspecial pairs.
class StructureConstants {
 public:
  static StructureConstants build(RootSystem rs);

  const RootSystem& roots() const { return rs_; }
  int rank() const { return rs_.rank(); }
  /// Complex dimension of the algebra.
  std::size_t dim() const { return static_cast<std::size_t>(rs_.rank()) + rs_.size(); }

  /// N_{a,b}; zero when a + b is not a root.
  int N(RootIndex a, RootIndex b) const { return table_[a * rs_.size() + b]; }
  /// N_{a,b} for root vectors. Throws std::invalid_argument when either is not a root.
  int N(const RootVector& a, const RootVector& b) const;

  /// Extraspecial pair of each non-simple positive root, indexed by root; simple roots map to kNoRoot.
  const std::vector<std::pair<RootIndex, RootIndex>>& extraspecial_pairs() const { return extraspecial_; }

  /// Integer vector c with h_alpha = sum c_nu h_nu.
  const std::vector<int>& coroot_expansion(RootIndex a) const { return coroots_.at(a); }
  /// Throws std::invalid_argument when a is not a root.
  const std::vector<int>& coroot_expansion(const RootVector& a) const;

  BasisIndex h_index(int nu) const { return static_cast<BasisIndex>(nu - 1); }
  BasisIndex e_index(RootIndex a) const { return static_cast<BasisIndex>(rs_.rank()) + a; }
  bool is_cartan_index(BasisIndex i) const { return i < static_cast<BasisIndex>(rs_.rank()); }
  RootIndex root_of(BasisIndex i) const { return i - static_cast<BasisIndex>(rs_.rank()); }

  AlgebraElement zero() const { return {rs_.family(), rs_.rank()}; }
  AlgebraElement basis(BasisIndex i) const;
  AlgebraElement h(int nu) const { return basis(h_index(nu)); }
  AlgebraElement e(RootIndex a) const { return basis(e_index(a)); }
  /// h_alpha expanded over the simple coroots.
  AlgebraElement coroot(RootIndex a) const;
  /// u_alpha = e_alpha - e_{-alpha}.
  AlgebraElement u(RootIndex a) const;
  /// v_alpha = i (e_alpha + e_{-alpha}).
  AlgebraElement v(RootIndex a) const;

  /// Throws std::invalid_argument for operands from a different system.
  AlgebraElement bracket(const AlgebraElement& x, const AlgebraElement& y) const;
  AlgebraElement bracket_basis(BasisIndex i, BasisIndex j) const;

  /// Invariant form normalized by B(e_alpha, e_{-alpha}) = 2/(alpha, alpha).
  GaussianRational invariant_form(const AlgebraElement& x, const AlgebraElement& y) const;
  const Rational& cartan_form(int nu, int mu) const {
    return cartan_form_[static_cast<std::size_t>((nu - 1) * rs_.rank() + (mu - 1))];
  }

  /// Membership in the compact real form spanned by i h_nu, u_alpha, v_alpha.
  bool in_compact_real_form(const AlgebraElement& x) const;
  /// Real coordinates over (i h_1..i h_r, then u_alpha, v_alpha for each positive alpha).
  /// Throws std::invalid_argument when x is not in the compact real form.
  Vector compact_coordinates(const AlgebraElement& x) const;
  AlgebraElement from_compact_coordinates(const Vector& c) const;

  std::string basis_name(BasisIndex i) const;
  std::string to_string(const AlgebraElement& x) const;

 private:
  explicit StructureConstants(RootSystem rs) : rs_(std::move(rs)) {}
  void require_system(const AlgebraElement& x) const;
  int compute_mixed(RootIndex a, RootIndex b) const;

  RootSystem rs_;
  std::vector<int> table_;
  std::vector<std::vector<int>> coroots_;
  std::vector<std::pair<RootIndex, RootIndex>> extraspecial_;
  std::vector<Rational> cartan_form_;
};

/// Runs the structure-constant identities, basis properties, Jacobi identity and form checks.
std::vector<CheckResult> verify_basis_properties(const StructureConstants& sc,
                                                 const VerifyOptions& opts = {});

}  // namespace hss
