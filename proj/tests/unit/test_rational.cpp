#include <doctest.h>

#include <cmath>

#include "blackwell/rational.hpp"
#include "oracles.hpp"

using namespace blackwell;

TEST_CASE("parse_rational accepts integers and fractions") {
  CHECK(parse_rational("3") == 3);
  CHECK(parse_rational("-7/21") == Rational(-1, 3));
  CHECK(parse_rational("0/5") == 0);
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("0.5"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("1/2x"), std::invalid_argument);
}

TEST_CASE("parse_decimal is exact") {
  CHECK(parse_decimal("0.25") == Rational(1, 4));
  CHECK(parse_decimal("1e-4") == Rational(1, 10000));
  CHECK(parse_decimal("2.5E3") == 2500);
  CHECK(parse_decimal("-0.1") == Rational(-1, 10));
  CHECK(parse_decimal("3/8") == Rational(3, 8));
  CHECK_THROWS_AS(parse_decimal("1e"), std::invalid_argument);
  CHECK_THROWS_AS(parse_decimal("abc"), std::invalid_argument);
}

TEST_CASE("to_string and to_decimal") {
  CHECK(to_string(bwtest::frac(6, 4)) == "3/2");
  CHECK(to_string(bwtest::frac(-4, 2)) == "-2");
  CHECK(to_decimal(Rational(1, 3), 5) == "0.33333");
  CHECK(to_decimal(Rational(-1, 8), 4) == "-0.1250");
  CHECK(to_decimal(Rational(13, 16), 4) == "0.8125");
  CHECK(to_decimal(Rational(7), 2) == "7.00");
}

TEST_CASE("digits_below_one") {
  CHECK(digits_below_one(Rational(0)) == doctest::Approx(0.0));
  CHECK(digits_below_one(Rational(99, 100)) == doctest::Approx(2.0));
  CHECK(digits_below_one(Rational(999999999, 1000000000)) == doctest::Approx(9.0));
  CHECK(std::isinf(digits_below_one(Rational(1))));
}
