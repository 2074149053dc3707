#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "dyckcells/error.hpp"
#include "dyckcells/poly.hpp"
#include "oracles.hpp"

using namespace dyckcells;

TEST_CASE("t-integers") {
  CHECK(t_integer(0) == Poly());
  CHECK(t_integer(1) == Poly(1));
  CHECK(t_integer(3) == Poly(std::vector<Int>{1, 1, 1}));
  CHECK_THROWS_AS(t_integer(-1), error);
}

TEST_CASE("t-factorial") {
  CHECK(t_factorial(0) == Poly(1));
  CHECK(t_factorial(3) == Poly(std::vector<Int>{1, 2, 2, 1}));
  CHECK(t_factorial(3)(Int(1)) == 6);
  CHECK(t_factorial(4)(Int(1)) == 24);
}

TEST_CASE("canonical form") {
  CHECK(Poly(std::vector<Int>{1, 0}).degree() == 0);
  CHECK(Poly(std::vector<Int>{0, 0}).is_zero());
  CHECK(Poly(0).is_zero());
  CHECK(Poly().degree() == -1);
  CHECK(Poly(std::vector<Int>{0, 1}).coeff(1) == 1);
  CHECK(Poly(std::vector<Int>{0, 1}).coeff(7) == 0);
}

TEST_CASE("arithmetic") {
  Poly one_plus_t(std::vector<Int>{1, 1});
  CHECK(one_plus_t * one_plus_t == Poly(std::vector<Int>{1, 2, 1}));
  CHECK(one_plus_t - one_plus_t == Poly());
  CHECK(Poly() * one_plus_t == Poly());
  CHECK(Poly::monomial(2) * Poly::monomial(3, 5) == Poly::monomial(5, 5));
}

TEST_CASE("evaluation and palindromicity") {
  Poly p(std::vector<Int>{1, 2, 2});
  CHECK(p(Int(2)) == 13);
  CHECK(p(Int(0)) == 1);
  CHECK_FALSE(p.palindromic());
  CHECK(Poly(std::vector<Int>{1, 3, 4, 3, 1}).palindromic());
  CHECK(Poly().palindromic());
}

TEST_CASE("printing") {
  CHECK(Poly().str() == "0");
  CHECK(Poly(std::vector<Int>{1, 2, 2}).str() == "1 + 2*t + 2*t^2");
  CHECK(Poly(std::vector<Int>{1, 2, 2}).str("q") == "1 + 2*q + 2*q^2");
  CHECK(Poly(std::vector<Int>{0, 1}).str() == "t");
  CHECK(Poly(std::vector<Int>{0, -1, 0, 3}).str() == "-t + 3*t^3");
}

TEST_CASE("ring identities on random inputs") {
  std::mt19937 rng(20240811);
  for (int trial = 0; trial < 200; ++trial) {
    Poly a = oracle::random_poly(rng, 5, 6);
    Poly b = oracle::random_poly(rng, 5, 6);
    Poly c = oracle::random_poly(rng, 3, 6);
    CHECK(a * b == b * a);
    CHECK((a + b) * c == a * c + b * c);
    Int x(3);
    CHECK((a * b)(x) == a(x) * b(x));
    CHECK((a + b)(x) == a(x) + b(x));
  }
}

TEST_CASE("products of t-integers are palindromic") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    Poly prod = 1;
    for (int f = 0; f < 4; ++f) prod *= t_integer(1 + static_cast<int>(rng() % 5));
    CHECK(prod.palindromic());
  }
}
