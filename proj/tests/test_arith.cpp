#include <doctest.h>

#include <random>

#include "gecliff/error.hpp"
#include "gecliff/rational.hpp"
#include "gecliff/smith.hpp"
#include "support/oracles.hpp"

using namespace gecliff;

TEST_CASE("rational parsing and rounding") {
  CHECK(parse_rational("3/6") == Rational(1, 2));
  CHECK(parse_rational("-7") == -7);
  CHECK(parse_rational("+2/4") == Rational(1, 2));
  CHECK_THROWS_AS(parse_rational("1/0"), InvalidArgument);
  CHECK_THROWS_AS(parse_rational("1/-2"), InvalidArgument);
  CHECK_THROWS_AS(parse_rational("x"), InvalidArgument);
  CHECK(round_half_up(Rational(1, 2)) == 1);
  CHECK(round_half_up(Rational(-1, 2)) == 0);
  CHECK(round_half_up(Rational(-3, 2)) == -1);
  CHECK(floor(Rational(-1, 3)) == -1);
  CHECK(ceil(Rational(-1, 3)) == 0);
  CHECK(isqrt_floor(Rational(17, 2)) == 2);
  CHECK(isqrt_floor(Rational(9)) == 3);
  CHECK(to_string(Rational(4, -6)) == "-2/3");
}

TEST_CASE("smith normal form examples") {
  CHECK(smith_diagonal({{2, 0}, {0, 3}}, 2) == std::vector<Integer>{1, 6});
  const auto zero = abelian_invariants({{0}}, 1);
  CHECK(zero.rank == 1);
  CHECK(zero.torsion.empty());
  const auto c12 = abelian_invariants({{4, 0}, {0, 3}}, 2);
  CHECK(c12.torsion == std::vector<Integer>{12});
  CHECK(c12.order() == 12);
  CHECK(to_string(abelian_invariants({{2, 0, 0}, {0, 2, 0}}, 3)) == "Z x C2 x C2");
  CHECK(abelian_invariants({}, 2).rank == 2);
}

TEST_CASE("smith diagonal matches determinant divisors") {
  std::mt19937_64 rng(7);
  for (int t = 0; t < 120; ++t) {
    const std::size_t r = 1 + rng() % 5, c = 1 + rng() % 5;
    IntMatrix m(r, IntVector(c));
    std::vector<std::vector<oracle::Z>> o(r, std::vector<oracle::Z>(c));
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j) {
        const long v = static_cast<long>(rng() % 19) - 9;
        m[i][j] = v;
        o[i][j] = v;
      }
    const auto diag = smith_diagonal(m, c);
    for (std::size_t k = 1; k < diag.size(); ++k) CHECK(diag[k] % diag[k - 1] == 0);
    CHECK(diag == oracle::invariant_factors_by_minors(o));
  }
}

TEST_CASE("smith diagonal of dense square matrices") {
  std::mt19937_64 rng(8);
  for (const std::size_t size : {7, 12, 24, 40}) {
    IntMatrix m(size, IntVector(size));
    std::vector<std::vector<oracle::Q>> o(size, std::vector<oracle::Q>(size));
    for (std::size_t i = 0; i < size; ++i)
      for (std::size_t j = 0; j < size; ++j) {
        const long v = static_cast<long>(rng() % 41) - 20;
        m[i][j] = v;
        o[i][j] = v;
      }
    const auto diag = smith_diagonal(m, size);
    REQUIRE(diag.size() == size);
    Integer prod = 1;
    for (const auto& d : diag) prod *= d;
    CHECK(oracle::Q(prod) == abs(oracle::det(o)));
    for (std::size_t k = 1; k < size; ++k) CHECK(diag[k] % diag[k - 1] == 0);
  }
}

TEST_CASE("integer lattice membership and quotient") {
  IntLattice lat(3);
  lat.insert({2, 0, 0});
  lat.insert({0, 4, 2});
  lat.insert({2, 4, 2});
  CHECK(lat.contains({4, 8, 4}));
  CHECK(lat.contains({0, 0, 0}));
  CHECK_FALSE(lat.contains({1, 0, 0}));
  CHECK_FALSE(lat.contains({0, 2, 1}));
  const auto inv = lat.quotient_invariants();
  CHECK(inv.rank == 1);
  CHECK(inv.torsion == std::vector<Integer>{2, 2});
}
