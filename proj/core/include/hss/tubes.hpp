#pragma once

#include <array>
#include <memory>
#include <vector>

#include <Eigen/Dense>

#include "hss/check.hpp"
#include "hss/hermitian.hpp"
#include "hss/reference_tables.hpp"

namespace hss {

/// Principal curvature slots in the order of the multiplicity tables.
enum class CurvatureSlot { B = 0, D = 1, C = 2, A = 3 };

/// One complex line C u_alpha of p, classified along the geodesic in direction u_delta.
struct FocalBlock {
  RootIndex root;
  Rational kappa;     // eigenvalue of the unit Jacobi operator on C u_alpha (0 or 1/2)
  bool tangent;       // C u_alpha lies in the tangent space of the focal submanifold
};

struct FocalModel {
  std::shared_ptr<const HermitianSpace> space;
  reference::TubeCase case_id;
  int sub_k = 0;
  std::vector<RootIndex> delta_f;
  std::vector<FocalBlock> blocks;  // every alpha in Delta_M^+ except delta
  Rational xi_kappa;               // Jacobi eigenvalue on v_delta
};

/// Throws std::invalid_argument when the case does not apply to the space or its parameters are out of range.
FocalModel focal_data(std::shared_ptr<const HermitianSpace> space, reference::TubeCase case_id, int sub_k = 0);

/// Real p-vectors spanning the tangent space of the focal submanifold (u_alpha, v_alpha for alpha in Delta_f).
std::vector<Vector> focal_tangent_span(const FocalModel& focal);

struct TubeModel {
  FocalModel focal;
  double t = 0;
  /// Tube tangent directions: p_basis indices except u_delta.
  std::vector<std::size_t> basis;
  std::size_t xi_position = 0;          // position of v_delta within `basis`
  std::vector<CurvatureSlot> slot;      // per position in `basis`
  std::vector<Rational> kappa;          // Jacobi eigenvalue per position
  Eigen::MatrixXd shape_op;
  Eigen::MatrixXd phi;
  std::array<double, 4> curvatures{};   // values of slots B, D, C, A
  std::array<int, 4> multiplicities{};  // dim T_b, T_d, T_c, T_a (the xi line counts in T_a)
};

double closed_form_curvature(CurvatureSlot s, double t);

/// S(t) on the tube of radius t around the focal submanifold. Throws std::invalid_argument for t outside
/// (0, pi/sqrt 2) or at a block singularity.
TubeModel tube_shape_operator(const FocalModel& focal, double t);

struct ReebCheck {
  bool structural = false;
  double residual = 0;
};

/// Exact block test on the slot labels plus the max-norm of S phi - phi S.
ReebCheck reeb_isometry_check(const TubeModel& tube);
/// The same test for an arbitrary symmetric S on the tube basis; eigenvalues closer than `cluster_tol`
/// are treated as one principal curvature space.
ReebCheck reeb_isometry_check(const TubeModel& tube, const Eigen::MatrixXd& shape_op, double cluster_tol = 1e-9);

std::vector<CheckResult> principal_curvature_identities(const TubeModel& tube, const VerifyOptions& opts = {});

/// -Z'(t)/Z(t) for the Jacobi field with Z(0) = X, Z'(0) = -x X in a block of Jacobi eigenvalue kappa.
double focal_shape_value(double kappa, double x, double t);

struct FocalShapeReport {
  std::vector<double> eigenvalues;      // on the P-tangent blocks of C (b, d, and a when present)
  std::vector<double> vanishing_norms;  // |Z(t)| on the P-normal blocks (c and xi), expected 0
};

FocalShapeReport focal_shape_operator(const FocalModel& focal, double t);

struct FocalSetReport {
  std::vector<Vector> TP, nuP, TQ, nuQ;
  int dim_P = 0;  // complex
  int dim_Q = 0;  // complex
  bool P_lie_triple = false;
  bool Q_lie_triple = false;
  bool P_j_invariant = false;
  bool Q_j_invariant = false;
  bool complementary = false;
};

FocalSetReport focal_set_reconstruction(const TubeModel& tube);

/// Full tube suite at one radius.
std::vector<CheckResult> verify_tube(const FocalModel& focal, double t, const VerifyOptions& opts = {});

/// Focal-model invariants (Lie triple, u_delta normal, p(0) inside).
std::vector<CheckResult> verify_focal(const FocalModel& focal);

}  // namespace hss
