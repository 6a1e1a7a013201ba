#include "planelab/scalar.hpp"

#include <doctest.h>

using namespace planelab;

TEST_CASE("parse_rational handles p/q and decimal strings") {
  CHECK(parse_rational("3/4") == Rational(3, 4));
  CHECK(parse_rational("-3/4") == Rational(-3, 4));
  CHECK(parse_rational("0.25") == Rational(1, 4));
  CHECK(parse_rational("-0.053118") == Rational(-53118, 1000000));
  CHECK(parse_rational("2") == Rational(2));
  CHECK(parse_rational("1.5e-2") == Rational(3, 200));
  CHECK(parse_rational("1e3") == Rational(1000));
  CHECK(parse_rational("007/8") == Rational(7, 8));
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("abc"), std::invalid_argument);
}

TEST_CASE("rational_to_string round trips") {
  CHECK(rational_to_string(Rational(3, 4)) == "3/4");
  CHECK(rational_to_string(Rational(5)) == "5");
  CHECK(parse_rational(rational_to_string(Rational(-22, 7))) == Rational(-22, 7));
}

TEST_CASE("adaptive precision guard scopes the working precision") {
  CHECK(AdaptivePrecision::current_bits() == 128);
  {
    AdaptivePrecision p(256);
    CHECK(AdaptivePrecision::current_bits() == 256);
    MpFloat eps = AdaptivePrecision::eps_snap();
    CHECK(eps < MpFloat(1e-38));  // 2^-128
  }
  CHECK(AdaptivePrecision::current_bits() == 128);
  CHECK_THROWS_AS(AdaptivePrecision(32), std::invalid_argument);
}

TEST_CASE("adaptive reals carry at least 64 bits through arithmetic") {
  AdaptivePrecision p(128);
  AdaptiveReal a(1);
  AdaptiveReal tiny(MpFloat(ldexp(MpFloat(1), -90)));
  AdaptiveReal sum = a + tiny;
  CHECK(sum > a);  // would be lost in double
  CHECK(abs(sum - a - tiny).v == 0);
}
