#include <doctest.h>

#include "hss/exact_matrix.hpp"
#include "hss/roots.hpp"

using namespace hss;

namespace {

struct Expect {
  Family f;
  int rank;
  std::size_t roots;           // textbook |Delta|
  int cartan_det;              // textbook det of the Cartan matrix
  std::vector<int> highest;    // highest root over the simple roots (Bourbaki labels)
};

const std::vector<Expect>& table() {
  static const std::vector<Expect> t = {
      {Family::A, 1, 2, 2, {1}},
      {Family::A, 4, 20, 5, {1, 1, 1, 1}},
      {Family::A, 6, 42, 7, {1, 1, 1, 1, 1, 1}},
      {Family::B, 2, 8, 2, {1, 2}},
      {Family::B, 5, 50, 2, {1, 2, 2, 2, 2}},
      {Family::C, 3, 18, 2, {2, 2, 1}},
      {Family::C, 5, 50, 2, {2, 2, 2, 2, 1}},
      {Family::D, 4, 24, 4, {1, 2, 1, 1}},
      {Family::D, 6, 60, 4, {1, 2, 2, 2, 1, 1}},
      {Family::E6, 6, 72, 3, {1, 2, 2, 3, 2, 1}},
      {Family::E7, 7, 126, 2, {2, 2, 3, 4, 3, 2, 1}},
  };
  return t;
}

}  // namespace

TEST_CASE("root counts, Cartan determinants and highest roots") {
  for (const auto& e : table()) {
    CAPTURE(e.rank);
    const RootSystem rs = RootSystem::build(e.f, e.rank);
    CHECK(rs.size() == e.roots);
    Matrix cartan(static_cast<std::size_t>(e.rank), static_cast<std::size_t>(e.rank));
    for (int i = 1; i <= e.rank; ++i)
      for (int j = 1; j <= e.rank; ++j)
        cartan(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(j - 1)) =
            rs.cartan_integer(rs.simple_index(i), rs.simple_index(j));
    const RowEchelon re = row_reduce(cartan);
    CHECK(re.rank() == static_cast<std::size_t>(e.rank));
    Matrix a = cartan;
    Rational det = 1;
    const std::size_t n = a.rows();
    for (std::size_t c = 0; c < n; ++c) {
      std::size_t p = c;
      while (sgn(a(p, c)) == 0) ++p;
      if (p != c) {
        for (std::size_t j = 0; j < n; ++j) std::swap(a(p, j), a(c, j));
        det = -det;
      }
      det *= a(c, c);
      for (std::size_t i = c + 1; i < n; ++i) {
        const Rational f = a(i, c) / a(c, c);
        for (std::size_t j = c; j < n; ++j) a(i, j) -= f * a(c, j);
      }
    }
    CHECK(det == e.cartan_det);
    CHECK(rs.simple_coefficients(rs.highest_index()) == e.highest);
  }
}

TEST_CASE("ordering: positive roots by height, negatives mirrored") {
  const RootSystem rs = RootSystem::build(Family::D, 5);
  for (RootIndex i = 0; i + 1 < rs.num_positive(); ++i) CHECK(rs.height(i) <= rs.height(i + 1));
  for (RootIndex i = 0; i < rs.num_positive(); ++i) CHECK(rs.root(rs.negative(i)) == -rs.root(i));
  CHECK(rs.highest_index() == rs.num_positive() - 1);
}

TEST_CASE("Weyl orbit of the highest root is the set of long roots") {
  for (const auto& e : table()) {
    const RootSystem rs = RootSystem::build(e.f, e.rank);
    std::size_t longs = 0;
    for (RootIndex i = 0; i < rs.size(); ++i) longs += rs.norm2(i) == rs.norm2(rs.highest_index());
    CHECK(rs.weyl_orbit(rs.highest_root()).size() == longs);
  }
}

TEST_CASE("root strings satisfy p - q = <beta, alpha>") {
  const RootSystem rs = RootSystem::build(Family::B, 3);
  for (RootIndex a = 0; a < rs.size(); ++a)
    for (RootIndex b = 0; b < rs.size(); ++b) {
      if (a == b || a == rs.negative(b)) continue;
      const RootString s = rs.root_string(a, b);
      CHECK(s.p - s.q == rs.cartan_integer(b, a));
    }
}

TEST_CASE("invalid builds throw") {
  CHECK_THROWS_AS(RootSystem::build(Family::D, 2), std::invalid_argument);
  CHECK_THROWS_AS(RootSystem::build(Family::E6, 5), std::invalid_argument);
}
