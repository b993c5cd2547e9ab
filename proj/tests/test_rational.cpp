#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdint>
#include <limits>
#include <random>
#include <stdexcept>

#include "gcalc/rational.hpp"

using gcalc::Rational;

TEST_CASE("construction reduces to lowest terms with positive denominator") {
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational(-3, 6) == Rational(1, -2));
  CHECK(Rational(0, 7) == Rational(0));
  CHECK(Rational(6, 3).num() == 2);
  CHECK(Rational(6, 3).den() == 1);
  CHECK(Rational(5, -10).num() == -1);
  CHECK(Rational(5, -10).den() == 2);
  CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
}

TEST_CASE("arithmetic on known fractions") {
  Rational a(1, 2), b(1, 3);
  CHECK(a + b == Rational(5, 6));
  CHECK(a - b == Rational(1, 6));
  CHECK(a * b == Rational(1, 6));
  CHECK(a / b == Rational(3, 2));
  CHECK(-a == Rational(-1, 2));
  CHECK(a + Rational(-1, 2) == Rational(0));
  CHECK_THROWS_AS(a / Rational(0), std::domain_error);
}

TEST_CASE("ordering is the usual order on the rationals") {
  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK(Rational(-1, 2) < Rational(-1, 3));
  CHECK(Rational(2, 4) <= Rational(1, 2));
  CHECK(Rational(7, 2) > Rational(3));
  CHECK(Rational(-5) < Rational(0));
}

TEST_CASE("to_string") {
  CHECK(Rational(3).to_string() == "3");
  CHECK(Rational(-3, 2).to_string() == "-3/2");
  CHECK(Rational(4, 2).to_string() == "2");
  CHECK(Rational(0).to_string() == "0");
}

TEST_CASE("field axioms hold on seeded random samples") {
  std::mt19937_64 rng(12345);
  std::uniform_int_distribution<long long> num(-40, 40);
  std::uniform_int_distribution<long long> den(1, 24);
  for (int trial = 0; trial < 500; ++trial) {
    Rational a(num(rng), den(rng)), b(num(rng), den(rng)), c(num(rng), den(rng));
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a + b == b + a);
    CHECK(a - a == Rational(0));
    if (b != Rational(0)) CHECK((a / b) * b == a);
  }
}

TEST_CASE("64-bit overflow is detected, not wrapped") {
  Rational big(std::numeric_limits<long long>::max(), 1);
  CHECK_THROWS_AS(big + big, std::overflow_error);
  CHECK_THROWS_AS(big * Rational(2), std::overflow_error);
  // Intermediate products that fit after reduction are fine.
  Rational x(1, 1000000007LL), y(1000000007LL, 3);
  CHECK(x * y == Rational(1, 3));
}
