#pragma once

#include <map>
#include <vector>

#include "hss/check.hpp"
#include "hss/hermitian.hpp"

namespace hss {

/// R(x, y)z = -[[x, y], z] on p-vectors.
Vector curvature_tensor(const HermitianSpace& hs, const Vector& x, const Vector& y, const Vector& z);

struct JacobiOperator {
  Vector base;
  Matrix matrix;  // column i is R(b_i, base) base
};

/// The operator x -> R(x, v) v. Throws std::invalid_argument when v has the wrong length.
JacobiOperator jacobi_operator(const HermitianSpace& hs, const Vector& v);

struct Eigenspace {
  Rational eigenvalue;
  std::vector<Vector> basis;
};

struct JacobiSpectrum {
  std::vector<Eigenspace> spaces;  // eigenvalues 0, 1/2, 2 in this order
  std::size_t dim_p = 0;
  /// True when the listed eigenspaces exhaust p.
  bool complete() const;
};

/// Exact eigenspaces of the Jacobi operator of the unit vector u_delta / sqrt 2 at {0, 1/2, 2}.
JacobiSpectrum jacobi_spectrum_u_delta(const HermitianSpace& hs);

struct NoncompactSplit {
  std::vector<RootIndex> zero_set;  // delta - alpha not in Delta^+ and alpha != delta
  std::vector<RootIndex> one_set;   // delta - alpha in Delta^+
};

NoncompactSplit split_noncompact(const HermitianSpace& hs);

/// p(0) or p(1) as a list of p-vectors (u_alpha, v_alpha for each root of the set).
std::vector<Vector> complex_span(const HermitianSpace& hs, const std::vector<RootIndex>& roots);

/// [[x, y], z] in span for all spanning triples. Throws std::invalid_argument on a dependent list.
bool is_lie_triple(const HermitianSpace& hs, const std::vector<Vector>& spanning);

/// Same question as is_lie_triple, answered with the complex bracket engine on algebra elements.
bool closed_by_complex_engine(const HermitianSpace& hs, const std::vector<AlgebraElement>& spanning);

struct K0Decomposition {
  int k0_dim = 0;          // real
  int g0_dim = 0;          // real
  int p0_dim = 0;          // complex
  int p1_dim = 0;          // complex
  int commutant_dim = 0;   // complex
  bool commutative = false;
  bool preserves_p1 = false;
  std::vector<Vector> k0_basis;  // compact coordinates
};

/// k(0) = [p(0), p(0)] and the commutant of its action on p(1) among J-linear endomorphisms.
K0Decomposition k0_decomposition(const HermitianSpace& hs);

/// R(x, xi) xi for J xi = sum a_alpha u_alpha and x = sum c_alpha u_alpha over Omega.
/// Throws std::invalid_argument for coefficients outside Omega.
Vector verify_accoeff(const HermitianSpace& hs, const std::map<RootIndex, Rational>& a,
                      const std::map<RootIndex, Rational>& c);

/// Coefficient of u_beta in R(u_beta, v_beta) v_beta, evaluated through the complex bracket engine.
Rational measure_accoeff_constant(const HermitianSpace& hs, RootIndex beta);

std::vector<CheckResult> verify_curvature(const HermitianSpace& hs, const VerifyOptions& opts = {});

}  // namespace hss
