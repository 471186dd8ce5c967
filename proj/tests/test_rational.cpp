#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "pathcrystal/rational.hpp"

using pathcrystal::Rational;

TEST_CASE("normalization and arithmetic") {
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational(-2, -4) == Rational(1, 2));
  CHECK(Rational(2, -4) == Rational(-1, 2));
  CHECK(Rational(0, 7) == Rational(0));
  CHECK(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
  CHECK(Rational(1, 2) - Rational(1, 3) == Rational(1, 6));
  CHECK(Rational(2, 3) * Rational(9, 4) == Rational(3, 2));
  CHECK(Rational(2, 3) / Rational(4, 3) == Rational(1, 2));
  CHECK(-Rational(3, 5) == Rational(-3, 5));
}

TEST_CASE("ordering") {
  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK(Rational(-1, 2) < Rational(-1, 3));
  CHECK(Rational(7, 7) == Rational(1));
  CHECK(Rational(5, 3) > Rational(3, 2));
}

TEST_CASE("errors") {
  CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
  CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
  Rational big(INT64_MAX);
  CHECK_THROWS_AS(big * big, std::overflow_error);
  CHECK_THROWS_AS(big + Rational(1), std::overflow_error);
}

TEST_CASE("strings") {
  CHECK(Rational(3).str() == "3");
  CHECK(Rational(-4, 6).str() == "-2/3");
  CHECK(Rational::parse("7") == Rational(7));
  CHECK(Rational::parse("-2/3") == Rational(-2, 3));
  CHECK(Rational::parse("4/6") == Rational(2, 3));
  CHECK_THROWS_AS(Rational::parse("x"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("1/2/3"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse(""), std::invalid_argument);
  for (long long n = -6; n <= 6; ++n) {
    for (long long d = 1; d <= 5; ++d) {
      Rational r(n, d);
      CHECK(Rational::parse(r.str()) == r);
    }
  }
}

TEST_CASE("integrality flags") {
  CHECK(Rational(4, 2).is_integer());
  CHECK(!Rational(1, 2).is_integer());
  CHECK(Rational(0).is_zero());
  CHECK(Rational(1, 2).sign() == 1);
  CHECK(Rational(-1, 2).sign() == -1);
}
