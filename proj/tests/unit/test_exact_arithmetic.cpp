#include <doctest.h>

#include <random>

#include "hss/exact_matrix.hpp"
#include "hss/rational.hpp"

using namespace hss;

TEST_CASE("rational text form is canonical and round-trips") {
  CHECK(to_string(parse_rational("6/4")) == "3/2");
  CHECK(to_string(parse_rational("-4/2")) == "-2");
  CHECK(parse_rational("-10/4") == Rational(-5, 2));
  CHECK(to_string(parse_rational("7")) == "7");
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("x"), std::invalid_argument);
  CHECK(is_integer(parse_rational("8/4")));
}

TEST_CASE("gaussian rationals multiply like i^2 = -1") {
  const GaussianRational i = GaussianRational::i();
  CHECK(i * i == GaussianRational(-1));
  const GaussianRational z(Rational(1, 2), Rational(3));
  CHECK(z * z.conj() == GaussianRational(Rational(37, 4)));
}

TEST_CASE("kernel of a rank-deficient matrix") {
  Matrix m(3, 4);
  const int rows[3][4] = {{1, 2, 0, -1}, {2, 4, 1, 0}, {3, 6, 1, -1}};
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 4; ++j) m(i, j) = rows[i][j];
  CHECK(rank(m) == 2);
  const auto ker = kernel(m);
  REQUIRE(ker.size() == 2);
  for (const auto& v : ker) CHECK(is_zero(m.apply(v)));
}

TEST_CASE("span membership") {
  Span s(3);
  CHECK(s.add({1, 1, 0}));
  CHECK(s.add({0, 1, 1}));
  CHECK_FALSE(s.add({1, 2, 1}));
  CHECK(s.contains({2, 0, -2}));
  CHECK_FALSE(s.contains({0, 0, 1}));
  CHECK(s.dim() == 2);
}

TEST_CASE("sparse reducer agrees with the dense kernel on random systems") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> val(-3, 3), col(0, 9);
  for (int trial = 0; trial < 20; ++trial) {
    Matrix m(6, 10);
    SparseReducer red(10);
    for (std::size_t i = 0; i < 6; ++i) {
      for (int e = 0; e < 3; ++e) m(i, static_cast<std::size_t>(col(rng))) = val(rng);
      SparseRow row;
      for (std::size_t j = 0; j < 10; ++j)
        if (sgn(m(i, j)) != 0) row.emplace_back(j, m(i, j));
      red.add(row);
    }
    CHECK(red.rank() == rank(m));
    const auto ker = red.kernel();
    CHECK(ker.size() == 10 - rank(m));
    for (const auto& v : ker) CHECK(is_zero(m.apply(v)));
  }
}
