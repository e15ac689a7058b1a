#include <doctest.h>

#include <cmath>
#include <map>

#include "classical_matrices.hpp"
#include "fixtures.hpp"
#include "hss/chevalley.hpp"

using namespace hss;

namespace {

// Fixes scales with e_a = lambda(a) E_a: lambda = 1 on simple roots, lambda(a + b) read off one
// decomposition, lambda(-a) from [e_a, e_-a] = h_a. Every structure constant is then checked
// against the matrices.
void check_against_matrices(Family f, int rank) {
  CAPTURE(rank);
  const auto sc = testing::algebra(f, rank);
  const RootSystem& rs = sc->roots();
  const oracle::ClassicalMatrices mats(rs);
  REQUIRE(mats.supported());
  const std::size_t np = rs.num_positive();

  std::vector<double> lambda(rs.size(), 0.0);
  for (int i = 1; i <= rank; ++i) lambda[rs.simple_index(i)] = 1;
  for (RootIndex g = 0; g < np; ++g) {
    for (RootIndex a = 0; a < g && lambda[g] == 0; ++a) {
      const RootIndex b = rs.difference(g, a);
      if (b == kNoRoot || !rs.is_positive(b) || lambda[b] == 0 || lambda[a] == 0) continue;
      const auto c = mats.bracket_coefficient(a, b, g);
      REQUIRE(c.has_value());
      REQUIRE(sc->N(a, b) != 0);
      lambda[g] = lambda[a] * lambda[b] * *c / sc->N(a, b);
    }
    REQUIRE(lambda[g] != 0);
  }
  for (RootIndex a = 0; a < np; ++a) {
    const Eigen::MatrixXd x = mats.root_matrix(a), y = mats.root_matrix(rs.negative(a));
    const Eigen::MatrixXd h = x * y - y * x;
    CHECK((h - Eigen::MatrixXd(h.diagonal().asDiagonal())).cwiseAbs().maxCoeff() == 0.0);
    lambda[rs.negative(a)] = 2.0 / (lambda[a] * mats.evaluate(a, h));
  }

  std::size_t compared = 0;
  for (RootIndex a = 0; a < rs.size(); ++a)
    for (RootIndex b = 0; b < rs.size(); ++b) {
      const RootIndex g = rs.sum(a, b);
      if (g == kNoRoot) {
        CHECK(sc->N(a, b) == 0);
        continue;
      }
      const auto c = mats.bracket_coefficient(a, b, g);
      REQUIRE(c.has_value());
      const double want = lambda[a] * lambda[b] * *c / lambda[g];
      CHECK(sc->N(a, b) == doctest::Approx(want).epsilon(1e-12));
      ++compared;
    }
  CHECK((compared > 0 || np == 1));
}

}  // namespace

TEST_CASE("structure constants agree with sl(r+1) matrices") {
  for (int r = 1; r <= 5; ++r) check_against_matrices(Family::A, r);
}

TEST_CASE("structure constants agree with so(2r+1) matrices") {
  for (int r = 2; r <= 4; ++r) check_against_matrices(Family::B, r);
}

TEST_CASE("structure constants agree with sp(2r) matrices") {
  for (int r = 3; r <= 4; ++r) check_against_matrices(Family::C, r);
}

TEST_CASE("structure constants agree with so(2r) matrices") {
  for (int r = 4; r <= 5; ++r) check_against_matrices(Family::D, r);
}

TEST_CASE("|N_{a,b}| = p + 1 on every system including E6 and E7") {
  for (auto [f, r] : {std::pair{Family::B, 3}, {Family::C, 4}, {Family::E6, 6}, {Family::E7, 7}}) {
    const auto sc = testing::algebra(f, r);
    const RootSystem& rs = sc->roots();
    for (RootIndex a = 0; a < rs.size(); ++a)
      for (RootIndex b = 0; b < rs.size(); ++b) {
        if (rs.sum(a, b) == kNoRoot) continue;
        CHECK(std::abs(sc->N(a, b)) == rs.root_string(a, b).p + 1);
      }
  }
}

TEST_CASE("extraspecial pairs carry positive constants") {
  const auto sc = testing::algebra(Family::E6, 6);
  for (const auto& [a, b] : sc->extraspecial_pairs())
    if (a != kNoRoot) CHECK(sc->N(a, b) > 0);
}

TEST_CASE("brackets of basis elements") {
  const auto sc = testing::algebra(Family::A, 2);
  const RootSystem& rs = sc->roots();
  const RootIndex a1 = rs.simple_index(1);
  const AlgebraElement h = sc->bracket(sc->e(a1), sc->e(rs.negative(a1)));
  CHECK(h == sc->coroot(a1));
  CHECK(sc->bracket(sc->h(1), sc->e(a1)) == Rational(2) * sc->e(a1));
  CHECK_THROWS_AS(sc->bracket(sc->h(1), testing::algebra(Family::A, 3)->h(1)), std::invalid_argument);
}

TEST_CASE("suite on B2: literal square identity fails, corrected identities pass") {
  const auto sc = testing::algebra(Family::B, 2);
  std::map<std::string, CheckStatus> st;
  for (const auto& c : verify_basis_properties(*sc)) st[c.id] = c.status;
  CHECK(st.at("chevalley.n.square") == CheckStatus::Fail);
  CHECK(st.at("chevalley.n.cyclic") == CheckStatus::Fail);
  CHECK(st.at("chevalley.n.square_scaled") == CheckStatus::Pass);
  CHECK(st.at("chevalley.n.ratio") == CheckStatus::Pass);
  CHECK(st.at("chevalley.jacobi") == CheckStatus::Pass);
  CHECK(st.at("chevalley.form.compact_norm") == CheckStatus::Flagged);
}

TEST_CASE("suite on D5 passes everything") {
  const auto sc = testing::algebra(Family::D, 5);
  for (const auto& c : verify_basis_properties(*sc)) {
    CAPTURE(c.id);
    CAPTURE(c.witness);
    CHECK(c.status == CheckStatus::Pass);
  }
}
