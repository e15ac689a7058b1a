#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hss/roots.hpp"

// Closed-form lists and dimension formulas for the irreducible compact Hermitian
// symmetric spaces, written independently of the engine so suites can compare.
namespace hss::reference {

/// Marked nodes of the Dynkin diagram (simple roots with coefficient one in the highest root).
std::vector<int> marked_nodes(Family family, int rank);

/// Canonical node for a marked node: D node r-1 maps to r, everything else is unchanged.
int canonical_node(Family family, int rank, int node);

/// Positive roots with coefficient one at the marked node, from the set-builder descriptions.
std::vector<RootVector> delta_M_pos(Family family, int rank, int node);

/// Simple-root coefficient vectors (alpha_1..alpha_r) of the tabulated E6/E7 lists; empty otherwise.
std::vector<std::vector<int>> delta_M_pos_coefficients(Family family);

/// Roots alpha of Delta_M^+ with delta - alpha neither a positive root nor zero.
std::vector<RootVector> delta_M0(Family family, int rank, int node);

/// Strongly orthogonal long roots spanning a maximal abelian subspace of p.
std::vector<RootVector> omega(Family family, int rank, int node);

std::size_t delta_M_count(Family family, int rank, int node);
int complex_rank(Family family, int rank, int node);

struct SubspaceDims {
  int k0 = 0;          // real dimension of k(0)
  int g0 = 0;          // real dimension of g(0)
  int p0_complex = 0;  // complex dimension of p(0)
  int p1_complex = 0;  // complex dimension of p(1)
};
SubspaceDims subspace_dims(Family family, int rank, int node);

/// Complex dimension of the k(0)-commutant on p(1) predicted by the irreducible/two-component
/// dichotomy; nullopt outside the instances where a prediction is made.
std::optional<int> expected_commutant(Family family, int rank, int node);

/// Human-readable symmetric space, e.g. "G_2(C^6)".
std::string space_label(Family family, int rank, int node);

enum class TubeCase { CPk_in_CPr, Gk_in_Gk, CPr1_in_G2R2r, SO_in_SO };

/// Roman numeral id ("i".."iv").
std::string_view case_numeral(TubeCase c);
std::string_view case_name(TubeCase c);
/// Accepts "i".."iv" or the case names. Returns nullopt otherwise.
std::optional<TubeCase> parse_case(std::string_view text);

/// The tube case realized on the (family, rank, canonical node) space, if any.
std::optional<TubeCase> tube_case_for(Family family, int rank, int node);

/// Case parameter range check; `sub_k` is the dimension of CP^k in case (i), ignored otherwise.
bool case_in_range(TubeCase c, Family family, int rank, int node, int sub_k);

/// Tangent roots of the focal submanifold.
std::vector<RootVector> focal_roots(TubeCase c, int rank, int node, int sub_k);

/// Multiplicities of the principal curvatures (0, -tan/sqrt2, cot/sqrt2, sqrt2 cot), i.e. (b, d, c, a).
std::array<int, 4> tube_multiplicities(TubeCase c, int rank, int node, int sub_k);

/// Complex dimensions of the focal submanifolds (P, Q).
std::array<int, 2> focal_dims(TubeCase c, int rank, int node, int sub_k);

}  // namespace hss::reference
