#pragma once

#include <memory>
#include <string>
#include <vector>

#include "hss/check.hpp"
#include "hss/chevalley.hpp"

namespace hss {

enum class PKind { U, V };

/// One real basis direction of p: u_alpha or v_alpha for alpha in Delta_M^+.
struct PLabel {
  PKind kind;
  RootIndex root;
};

/// Compact Hermitian symmetric space G/K at the base point: the Cartan decomposition g = k + p
/// of the compact real form cut out by a marked node, with complex structure and metric on p.
///
/// Vectors of p are coordinate vectors over `p_basis()`: u_alpha, v_alpha adjacent for each
/// alpha in Delta_M^+ in root order. Vectors of g use the compact coordinates of
/// `StructureConstants::compact_coordinates`.
class HermitianSpace {
 public:
  /// Throws std::invalid_argument when `node` is not a marked node. D node r-1 is relabeled to r.
  static HermitianSpace build(std::shared_ptr<const StructureConstants> sc, int node);

  const StructureConstants& sc() const { return *sc_; }
  const RootSystem& roots() const { return sc_->roots(); }
  std::shared_ptr<const StructureConstants> shared_sc() const { return sc_; }
  int node() const { return node_; }
  int requested_node() const { return requested_node_; }

  const std::vector<RootIndex>& delta_K_pos() const { return delta_K_pos_; }
  const std::vector<RootIndex>& delta_M_pos() const { return delta_M_pos_; }
  /// alpha(H^k): the coefficient of alpha_k in alpha.
  int node_coefficient(RootIndex a) const;

  std::size_t dim_p() const { return p_basis_.size(); }
  std::size_t dim_g() const { return compact_dim_; }
  const std::vector<PLabel>& p_basis() const { return p_basis_; }
  /// Position of u_alpha in p_basis (v_alpha follows). Throws when alpha is not in Delta_M^+.
  std::size_t p_position(RootIndex a) const;
  Vector u(RootIndex a) const;
  Vector v(RootIndex a) const;
  std::string label(std::size_t p_index) const;

  /// g(b_i, b_i); the metric is diagonal in p_basis.
  const Vector& metric_diag() const { return metric_diag_; }
  Rational metric(const Vector& x, const Vector& y) const;
  const Matrix& J() const { return J_; }
  Vector apply_J(const Vector& x) const { return J_.apply(x); }

  /// Compact coordinate index of a p-basis direction.
  std::size_t compact_index(std::size_t p_index) const { return p_to_g_[p_index]; }
  Vector embed(const Vector& p) const;
  /// Drops the k-components.
  Vector project_p(const Vector& g) const;
  bool in_p(const Vector& g) const;
  bool in_k(const Vector& g) const;

  /// Bracket of the compact real form in compact coordinates (table driven).
  Vector bracket(const Vector& x, const Vector& y) const;
  /// Bracket through the complex engine. Throws std::invalid_argument outside the compact real form.
  AlgebraElement real_bracket(const AlgebraElement& x, const AlgebraElement& y) const;
  AlgebraElement to_algebra(const Vector& p) const;
  /// Throws std::invalid_argument when x is not in p.
  Vector to_p(const AlgebraElement& x) const;

  /// Strongly orthogonal roots with a = span{u_alpha : alpha in Omega} maximal abelian in p.
  const std::vector<RootIndex>& omega() const { return omega_; }
  int complex_rank() const { return static_cast<int>(omega_.size()); }

 private:
  HermitianSpace() = default;

  std::shared_ptr<const StructureConstants> sc_;
  int node_ = 0;
  int requested_node_ = 0;
  std::vector<RootIndex> delta_K_pos_;
  std::vector<RootIndex> delta_M_pos_;
  std::vector<PLabel> p_basis_;
  std::vector<std::size_t> p_of_root_;
  std::vector<std::size_t> p_to_g_;
  std::vector<std::size_t> g_to_p_;
  std::size_t compact_dim_ = 0;
  // table_[i * dim + j]: sparse bracket of compact basis vectors i and j.
  std::vector<std::vector<std::pair<std::size_t, Rational>>> table_;
  Vector metric_diag_;
  Matrix J_;
  std::vector<RootIndex> omega_;
};

/// Marked nodes read off the highest root (1-based, ascending).
std::vector<int> marked_nodes(const RootSystem& rs);

/// Centralizer {x in p : [x, y] = 0 for all y in `elements`}, as a basis of p-vectors.
std::vector<Vector> centralizer_in_p(const HermitianSpace& hs, const std::vector<Vector>& elements);

std::vector<CheckResult> verify_hermitian(const HermitianSpace& hs, const VerifyOptions& opts = {});

}  // namespace hss
