#include <doctest.h>

#include <cmath>
#include <numbers>

#include "fixtures.hpp"
#include "hss/tubes.hpp"
#include "jacobi_ode.hpp"

using namespace hss;
using reference::TubeCase;

namespace {

struct Instance {
  Family f;
  int rank;
  int node;
  TubeCase c;
  int sub_k;
};

const Instance kInstances[] = {
    {Family::A, 4, 1, TubeCase::CPk_in_CPr, 0}, {Family::A, 4, 1, TubeCase::CPk_in_CPr, 2},
    {Family::A, 5, 2, TubeCase::Gk_in_Gk, 0},   {Family::A, 6, 3, TubeCase::Gk_in_Gk, 0},
    {Family::D, 4, 1, TubeCase::CPr1_in_G2R2r, 0}, {Family::D, 5, 5, TubeCase::SO_in_SO, 0},
};

std::array<int, 4> expected_multiplicities(const Instance& in) {
  const int r = in.rank, k = in.c == TubeCase::CPk_in_CPr ? in.sub_k : in.node;
  switch (in.c) {
    case TubeCase::CPk_in_CPr: return {0, 2 * k, 2 * (r - k - 1), 1};
    case TubeCase::Gk_in_Gk: return {2 * (k - 1) * (r - k), 2 * (r - k), 2 * (k - 1), 1};
    case TubeCase::CPr1_in_G2R2r: return {2, 2 * (r - 2), 2 * (r - 2), 1};
    case TubeCase::SO_in_SO: return {(r - 3) * (r - 2), 2 * (r - 2), 2 * (r - 2), 1};
  }
  return {};
}

FocalModel focal(const Instance& in) { return focal_data(testing::space(in.f, in.rank, in.node), in.c, in.sub_k); }

}  // namespace

TEST_CASE("closed-form shape operator matches the integrated Jacobi equation") {
  for (const auto& in : kInstances)
    for (double t : {0.3, 0.7, 1.1}) {
      CAPTURE(in.rank);
      CAPTURE(t);
      const TubeModel tube = tube_shape_operator(focal(in), t);
      const Eigen::MatrixXd ode = oracle::ode_shape_operator(tube, 2000);
      CHECK((ode - tube.shape_op).cwiseAbs().maxCoeff() < 1e-8);
    }
}

TEST_CASE("multiplicities follow the classification table") {
  for (const auto& in : kInstances) {
    const TubeModel tube = tube_shape_operator(focal(in), 0.7);
    CHECK(tube.multiplicities == expected_multiplicities(in));
  }
}

TEST_CASE("principal curvatures at t = pi/sqrt(8)") {
  const double t = std::numbers::pi / std::sqrt(8.0);
  CHECK(std::abs(closed_form_curvature(CurvatureSlot::A, t)) < 1e-15);
  const double c = closed_form_curvature(CurvatureSlot::C, t), d = closed_form_curvature(CurvatureSlot::D, t);
  CHECK(c == doctest::Approx(1.0 / (std::sqrt(2.0) * std::tan(t / std::sqrt(2.0)))));
  CHECK(c + d == doctest::Approx(0.0).epsilon(1e-14));
  CHECK(c * d == doctest::Approx(-0.5));
}

TEST_CASE("focal shape value") {
  CHECK(focal_shape_value(0, 0.25, 2.0) == doctest::Approx(0.25 / (1 - 0.5)));
  const double t = 0.9, k = 0.5, d = -std::sqrt(k) * std::tan(std::sqrt(k) * t);
  CHECK(std::abs(focal_shape_value(k, d, t)) < 1e-14);
}

TEST_CASE("Reeb check detects a split complex line") {
  const TubeModel tube = tube_shape_operator(focal(kInstances[2]), 0.7);
  CHECK(reeb_isometry_check(tube).structural);
  CHECK(reeb_isometry_check(tube, tube.shape_op).structural);
  Eigen::MatrixXd s = tube.shape_op;
  s(0, 0) += 0.25;
  const ReebCheck bad = reeb_isometry_check(tube, s);
  CHECK_FALSE(bad.structural);
  CHECK(bad.residual == doctest::Approx(0.25));
}

TEST_CASE("focal sets: dimensions, Lie triples, complementary") {
  const FocalSetReport fr = focal_set_reconstruction(tube_shape_operator(focal(kInstances[5]), 0.5));
  CHECK(fr.dim_P == 6);
  CHECK(fr.dim_Q == 6);
  CHECK(fr.P_lie_triple);
  CHECK(fr.Q_lie_triple);
  CHECK(fr.P_j_invariant);
  CHECK(fr.complementary);
}

TEST_CASE("argument errors") {
  const auto g26 = testing::space(Family::A, 5, 2);
  CHECK_THROWS_AS(focal_data(g26, TubeCase::SO_in_SO), std::invalid_argument);
  CHECK_THROWS_AS(focal_data(testing::space(Family::A, 3, 1), TubeCase::CPk_in_CPr, 3), std::invalid_argument);
  CHECK_THROWS_AS(focal_data(testing::space(Family::D, 4, 4), TubeCase::SO_in_SO), std::invalid_argument);
  const FocalModel f = focal_data(g26, TubeCase::Gk_in_Gk);
  CHECK_THROWS_AS(tube_shape_operator(f, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(tube_shape_operator(f, std::numbers::pi / std::sqrt(2.0)), std::invalid_argument);
}

TEST_CASE("tube suite passes on every case") {
  for (const auto& in : kInstances) {
    const FocalModel f = focal(in);
    for (const auto& c : verify_focal(f)) {
      CAPTURE(c.id);
      CHECK(c.status == CheckStatus::Pass);
    }
    for (const auto& c : verify_tube(f, 1.1)) {
      CAPTURE(c.id);
      CAPTURE(c.witness);
      CHECK(c.status == CheckStatus::Pass);
    }
  }
}
