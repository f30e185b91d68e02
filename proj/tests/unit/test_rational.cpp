#include <doctest.h>

#include <random>

#include "parakp/rational.hpp"
#include "../support/test_support.hpp"

using namespace parakp;

TEST_CASE("rationals canonicalize on construction") {
  const Rational r(6, 4);
  CHECK(r.numerator() == 3);
  CHECK(r.denominator() == 2);

  const Rational negative_den(1, -2);
  CHECK(negative_den.numerator() == -1);
  CHECK(negative_den.denominator() == 2);

  CHECK(Rational(0, 7) == Rational(0));
  CHECK_THROWS_AS(Rational(1, 0), std::invalid_argument);
}

TEST_CASE("random fractions stay canonical through construct/deconstruct") {
  std::mt19937_64 rng(42);
  for (int t = 0; t < 500; ++t) {
    const long long num = test::draw_in(rng, -1000, 1000);
    const long long den = test::draw_in(rng, 1, 1000) * (test::draw_in(rng, 0, 1) ? 1 : -1);
    if (den == 0) continue;
    const Rational r(num, den);
    CHECK(r.denominator() > 0);
    Integer g;
    mpz_gcd(g.get_mpz_t(), r.numerator().get_mpz_t(), r.denominator().get_mpz_t());
    CHECK(g == 1);
    // value preserved: num/den == num'/den'  <=>  num * den' == num' * den
    CHECK(Integer(num) * r.denominator() == r.numerator() * Integer(den));
    // textual round trip
    CHECK(Rational::parse(r.to_string()) == r);
  }
}

TEST_CASE("arithmetic is exact") {
  CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
  CHECK(Rational(1, 3) - Rational(1, 2) == Rational(-1, 6));
  CHECK(Rational(2, 3) * Rational(9, 4) == Rational(3, 2));
  CHECK(Rational(2, 3) / Rational(4, 3) == Rational(1, 2));
  CHECK(-Rational(5, 7) == Rational(-5, 7));
  CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
}

TEST_CASE("floor and ceil handle negatives") {
  CHECK(Rational(7, 2).floor() == 3);
  CHECK(Rational(-7, 2).floor() == -4);
  CHECK(Rational(6, 3).floor() == 2);
  CHECK(Rational(7, 2).ceil() == 4);
  CHECK(Rational(-7, 2).ceil() == -3);
}

TEST_CASE("comparisons are total and exact") {
  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK(Rational(-1, 2) < Rational(-1, 3));
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational(10) > Rational(19, 2));
}

TEST_CASE("parsing accepts n and n/d, rejects everything else") {
  CHECK(Rational::parse("42") == Rational(42));
  CHECK(Rational::parse("-3/9") == Rational(-1, 3));
  CHECK_THROWS_AS(Rational::parse("1.5"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("x"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse(""), std::invalid_argument);
}

TEST_CASE("decimal rendering keeps 12 significant digits") {
  CHECK(Rational(1, 2).to_decimal() == "0.5");
  CHECK(Rational(1, 3).to_decimal() == "0.333333333333");
  CHECK(Rational(-25, 4).to_decimal() == "-6.25");
}
