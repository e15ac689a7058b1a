#include <doctest.h>

#include <algorithm>

#include "fixtures.hpp"
#include "hss/curvature.hpp"
#include "su_model.hpp"

using namespace hss;

namespace {

std::vector<int> numeric_multiplicities(const Eigen::MatrixXd& m) {
  const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(m);
  std::vector<int> counts(3, 0);
  const double targets[3] = {0.0, 0.5, 2.0};
  for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i) {
    const double ev = es.eigenvalues()(i);
    bool hit = false;
    for (int t = 0; t < 3; ++t)
      if (std::abs(ev - targets[t]) < 1e-10) {
        ++counts[static_cast<std::size_t>(t)];
        hit = true;
      }
    CHECK_MESSAGE(hit, "unexpected Jacobi eigenvalue " << ev);
  }
  return counts;
}

}  // namespace

TEST_CASE("Jacobi spectrum agrees with the su(n) matrix model of G_k(C^n)") {
  for (int r = 1; r <= 6; ++r)
    for (int k = 1; 2 * k <= r + 1; ++k) {
      CAPTURE(r);
      CAPTURE(k);
      const oracle::GrassmannModel model(r + 1, k);
      const std::vector<int> want = numeric_multiplicities(model.jacobi(model.unit_u_delta()));
      const auto hs = testing::space(Family::A, r, k);
      const JacobiSpectrum spec = jacobi_spectrum_u_delta(*hs);
      REQUIRE(spec.complete());
      REQUIRE(spec.spaces.size() == 3);
      CHECK(spec.spaces[0].eigenvalue == 0);
      CHECK(spec.spaces[1].eigenvalue == Rational(1, 2));
      CHECK(spec.spaces[2].eigenvalue == 2);
      for (std::size_t i = 0; i < 3; ++i) CHECK(spec.spaces[i].basis.size() == static_cast<std::size_t>(want[i]));
    }
}

TEST_CASE("matrix model: maximal flats are flat and the Jacobi operator is nonnegative") {
  const oracle::GrassmannModel model(6, 3);
  for (const auto& b : model.basis) {
    const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(model.jacobi(b));
    CHECK(es.eigenvalues().minCoeff() > -1e-12);
  }
}

TEST_CASE("curvature tensor symmetries on random vectors") {
  const auto hs = testing::space(Family::C, 3, 3);
  const std::size_t d = hs->dim_p();
  auto vec = [&](int seed) {
    Vector v(d);
    for (std::size_t i = 0; i < d; ++i) v[i] = Rational(static_cast<long>((i * 7 + static_cast<std::size_t>(seed) * 13) % 11) - 5, 3);
    return v;
  };
  const Vector x = vec(1), y = vec(2), z = vec(3), w = vec(4);
  CHECK(is_zero(curvature_tensor(*hs, x, y, z) + curvature_tensor(*hs, y, z, x) + curvature_tensor(*hs, z, x, y)));
  CHECK(is_zero(curvature_tensor(*hs, x, y, z) + curvature_tensor(*hs, y, x, z)));
  CHECK(hs->metric(curvature_tensor(*hs, x, y, z), w) == hs->metric(curvature_tensor(*hs, z, w, x), y));
  CHECK(curvature_tensor(*hs, hs->apply_J(x), hs->apply_J(y), z) == curvature_tensor(*hs, x, y, z));
}

TEST_CASE("Lie triple systems") {
  const auto hs = testing::space(Family::E6, 6, 6);
  const NoncompactSplit split = split_noncompact(*hs);
  CHECK(is_lie_triple(*hs, complex_span(*hs, split.zero_set)));
  CHECK(is_lie_triple(*hs, complex_span(*hs, split.one_set)));
  const RootIndex top = hs->roots().highest_index();
  CHECK(is_lie_triple(*hs, {hs->u(top), hs->v(top)}));
  CHECK_FALSE(is_lie_triple(*hs, {hs->u(top), hs->v(top), hs->u(split.one_set.front())}));
  CHECK_THROWS_AS(is_lie_triple(*hs, {hs->u(top), Rational(2) * hs->u(top)}), std::invalid_argument);
}

TEST_CASE("commutant dimensions") {
  CHECK(k0_decomposition(*testing::space(Family::E6, 6, 6)).commutant_dim == 1);
  CHECK(k0_decomposition(*testing::space(Family::C, 4, 4)).commutant_dim == 1);
  const K0Decomposition a = k0_decomposition(*testing::space(Family::A, 5, 2));
  CHECK(a.commutant_dim == 2);
  CHECK(a.commutative);
  SUBCASE("D5 node 5: p(1) carries two equivalent copies, so the commutant is gl_2") {
    const K0Decomposition d = k0_decomposition(*testing::space(Family::D, 5, 5));
    CHECK(d.commutant_dim == 4);
    CHECK_FALSE(d.commutative);
    CHECK(d.p1_dim == 6);
  }
}

TEST_CASE("curvature on Omega: constant 4, zero on disjoint supports") {
  const auto hs = testing::space(Family::E7, 7, 7);
  const auto& om = hs->omega();
  REQUIRE(om.size() == 3);
  for (RootIndex b : om) CHECK(measure_accoeff_constant(*hs, b) == 4);
  CHECK(is_zero(verify_accoeff(*hs, {{om[0], Rational(3)}}, {{om[1], Rational(5)}})));
  const Vector w = verify_accoeff(*hs, {{om[0], Rational(3)}, {om[2], Rational(1, 2)}},
                                  {{om[0], Rational(2)}, {om[1], Rational(7)}, {om[2], Rational(-1)}});
  CHECK(w == Rational(4) * (Rational(2 * 9) * hs->u(om[0]) + Rational(-1, 4) * hs->u(om[2])));
  const auto& dm = hs->delta_M_pos();
  const RootIndex outside =
      *std::find_if(dm.begin(), dm.end(), [&](RootIndex a) { return std::find(om.begin(), om.end(), a) == om.end(); });
  CHECK_THROWS_AS(verify_accoeff(*hs, {{outside, Rational(1)}}, {}), std::invalid_argument);
}

TEST_CASE("curvature suite on G_3(C^7) passes") {
  const auto hs = testing::space(Family::A, 6, 3);
  for (const auto& c : verify_curvature(*hs)) {
    CAPTURE(c.id);
    CAPTURE(c.witness);
    CHECK(c.status != CheckStatus::Fail);
  }
}
