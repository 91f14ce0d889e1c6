#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>
#include <stdexcept>

#include "upq/rational.hpp"

using upq::Rational;

TEST_CASE("normalization and string form") {
  CHECK(Rational::frac(4, -6).str() == "-2/3");
  CHECK(Rational::frac(10, 5).str() == "2");
  CHECK(Rational::frac(0, -7).str() == "0");
  CHECK(Rational::frac(0, -7).den() == 1);
  CHECK_THROWS_AS(Rational::frac(1, 0), std::domain_error);
}

TEST_CASE("parse") {
  CHECK(Rational::parse("5/2") == Rational::frac(5, 2));
  CHECK(Rational::parse("-3") == Rational(-3));
  CHECK(Rational::parse("6/-4") == Rational::frac(-3, 2));
  CHECK_THROWS_AS(Rational::parse(""), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("1/"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("a/2"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("1.5"), std::invalid_argument);
  CHECK_THROWS(Rational::parse("3/0"));
}

TEST_CASE("arithmetic and order") {
  const Rational a = Rational::frac(1, 3), b = Rational::frac(1, 6);
  CHECK(a + b == Rational::frac(1, 2));
  CHECK(a - b == b);
  CHECK(a * b == Rational::frac(1, 18));
  CHECK(a / b == Rational(2));
  CHECK(b < a);
  CHECK(-a < b);
  CHECK_THROWS_AS(a / Rational(0), std::domain_error);
}

TEST_CASE("floor, ceil, integer helpers") {
  CHECK(upq::floor(Rational::frac(-7, 2)) == Rational(-4));
  CHECK(upq::ceil(Rational::frac(-7, 2)) == Rational(-3));
  CHECK(upq::floor(Rational(3)) == Rational(3));
  CHECK(upq::floor_div(-7, 2) == -4);
  CHECK(upq::ceil_div(-7, 2) == -3);
  CHECK(upq::floor_div(7, -2) == -4);
  CHECK(upq::gcd(-4, 6) == 2);
  CHECK(upq::gcd(0, 0) == 0);
  CHECK(upq::gcd(4, 6, 9) == 1);
  CHECK(upq::abs(Rational::frac(-1, 2)) == Rational::frac(1, 2));
}

TEST_CASE("large values stay exact") {
  Rational x(1);
  for (int i = 0; i < 40; ++i) x = x * Rational::frac(1000003, 7);
  for (int i = 0; i < 40; ++i) x = x / Rational::frac(1000003, 7);
  CHECK(x == Rational(1));
  std::ostringstream os;
  os << Rational::frac(9, 12);
  CHECK(os.str() == "3/4");
}
