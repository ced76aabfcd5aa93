#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "vgcone/linalg.hpp"

using namespace vgcone;

namespace {

RationalVector vec(std::initializer_list<long> xs) {
  RationalVector v;
  for (auto x : xs) v.emplace_back(x);
  return v;
}

bool is_multiple(const RationalVector& v, const RationalVector& w) {
  std::size_t p = 0;
  while (p < w.size() && sgn(w[p]) == 0) ++p;
  if (p == w.size() || sgn(v[p]) == 0) return false;
  const Rational f = v[p] / w[p];
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] != f * w[i]) return false;
  }
  return true;
}

bool satisfies(const RationalVector& x, const std::vector<RationalVector>& eqs, const std::vector<RationalVector>& stricts) {
  for (const auto& e : eqs) {
    if (sgn(dot(e, x)) != 0) return false;
  }
  for (const auto& s : stricts) {
    if (sgn(dot(s, x)) <= 0) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("parse_rational") {
  CHECK(parse_rational("3") == 3);
  CHECK(parse_rational("-4/6") == Rational(-2, 3));
  CHECK(parse_rational("+5/10") == Rational(1, 2));
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("1.5"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("2/-3"), std::invalid_argument);
}

TEST_CASE("rank") {
  CHECK(rank(RationalMatrix::identity(3)) == 3);
  CHECK(rank(RationalMatrix(2, 4)) == 0);
  const std::vector<RationalVector> rows{vec({1, -1}), vec({0, 1}), vec({1, 1})};
  CHECK(rank(RationalMatrix::from_rows(rows, 2)) == 2);
}

TEST_CASE("kernel_basis") {
  SUBCASE("three vectors in the plane") {
    const std::vector<RationalVector> cols{vec({1, -1}), vec({0, 1}), vec({1, 1})};
    const auto k = kernel_basis(RationalMatrix::from_columns(cols, 2));
    REQUIRE(k.size() == 1);
    CHECK(is_multiple(k[0], vec({1, 2, -1})));
  }
  SUBCASE("identity is injective") { CHECK(kernel_basis(RationalMatrix::identity(4)).empty()); }
  SUBCASE("four normals of the extended example") {
    const std::vector<RationalVector> cols{vec({1, 1, -2}), vec({1, -1, -2}), vec({1, -1, 0}), vec({1, 1, 0})};
    const auto k = kernel_basis(RationalMatrix::from_columns(cols, 3));
    REQUIRE(k.size() == 1);
    CHECK(is_multiple(k[0], vec({-1, 1, -1, 1})));
  }
}

TEST_CASE("kernel is orthogonal to rows and rank-nullity holds") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t r = std::uniform_int_distribution<std::size_t>(1, 5)(rng);
    const std::size_t c = std::uniform_int_distribution<std::size_t>(1, 6)(rng);
    RationalMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i) {
      for (std::size_t j = 0; j < c; ++j) m(i, j) = Rational(std::uniform_int_distribution<int>(-3, 3)(rng), 1 + trial % 3);
    }
    const auto k = kernel_basis(m);
    CHECK(rank(m) + k.size() == c);
    for (const auto& v : k) {
      for (std::size_t i = 0; i < r; ++i) CHECK(sgn(dot(m.row(i), v)) == 0);
    }
  }
}

TEST_CASE("determinant") {
  RationalMatrix m(2, 2);
  m(0, 0) = 0;
  m(0, 1) = 1;
  m(1, 0) = 1;
  m(1, 1) = 1;
  CHECK(determinant(m) == -1);
  CHECK(determinant(RationalMatrix::identity(5)) == 1);
  CHECK(determinant(RationalMatrix(3, 3)) == 0);
  CHECK_THROWS_AS(determinant(RationalMatrix(2, 3)), std::invalid_argument);
}

TEST_CASE("strict_feasible examples") {
  SUBCASE("open quadrant") {
    const std::vector<RationalVector> s{vec({1, 0}), vec({0, 1})};
    auto w = strict_feasible({}, s, 2);
    REQUIRE(w);
    CHECK(satisfies(*w, {}, s));
  }
  SUBCASE("forced to the origin") {
    const std::vector<RationalVector> e{vec({1, 0}), vec({0, 1})};
    const std::vector<RationalVector> s{vec({1, 1})};
    CHECK_FALSE(strict_feasible(e, s, 2));
  }
  SUBCASE("extended example: ray (2t, 0, t)") {
    const std::vector<RationalVector> e{vec({1, 1, -2}), vec({1, -1, -2})};
    const std::vector<RationalVector> s{vec({1, -1, 0}), vec({1, 1, 0})};
    auto w = strict_feasible(e, s, 3);
    REQUIRE(w);
    CHECK(*w == vec({2, 0, 1}));
  }
  SUBCASE("dimension mismatch") {
    const std::vector<RationalVector> s{vec({1, 0, 0})};
    CHECK_THROWS_AS(strict_feasible({}, s, 2), std::invalid_argument);
  }
  SUBCASE("no strict rows") {
    const std::vector<RationalVector> e{vec({1, 0})};
    auto w = strict_feasible(e, {}, 2);
    REQUIRE(w);
    CHECK(satisfies(*w, e, {}));
  }
}

TEST_CASE("strict_feasible agrees with Fourier-Motzkin and the Gordan alternative") {
  std::mt19937 rng(11);
  int feasible = 0;
  int infeasible = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t dim = std::uniform_int_distribution<std::size_t>(1, 4)(rng);
    const std::size_t n_eq = std::uniform_int_distribution<std::size_t>(0, 2)(rng);
    const std::size_t n_strict = std::uniform_int_distribution<std::size_t>(1, 6 - n_eq)(rng);
    auto random_vec = [&] {
      RationalVector v(dim);
      for (auto& x : v) x = std::uniform_int_distribution<int>(-2, 2)(rng);
      return v;
    };
    std::vector<RationalVector> e, s;
    for (std::size_t i = 0; i < n_eq; ++i) e.push_back(random_vec());
    for (std::size_t i = 0; i < n_strict; ++i) s.push_back(random_vec());
    const auto w = strict_feasible(e, s, dim);
    CHECK(w.has_value() == oracle::fm_strict_feasible(e, s, dim));
    if (w) {
      ++feasible;
      CHECK(satisfies(*w, e, s));
      // coprime integer witness
      BigInt g = 0;
      for (const auto& x : *w) {
        CHECK(x.get_den() == 1);
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_num_mpz_t());
      }
      CHECK(g == 1);
    } else {
      ++infeasible;
      CHECK(oracle::has_gordan_certificate(e, s, dim));
    }
  }
  CHECK(feasible > 20);
  CHECK(infeasible > 20);
}

TEST_CASE("primitive_integer") {
  RationalVector v{Rational(1, 2), Rational(-3, 4), Rational(0)};
  CHECK(primitive_integer(v) == vec({2, -3, 0}));
  CHECK(primitive_integer(vec({0, 0})) == vec({0, 0}));
}
