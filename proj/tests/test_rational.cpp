#include <doctest.h>

#include "fet/rational.hpp"

using fet::Rational;

TEST_CASE("rational arithmetic and normalization") {
  Rational half(1, 2);
  Rational third(1, 3);
  CHECK(half + third == Rational(5, 6));
  CHECK(half - third == Rational(1, 6));
  CHECK(half * third == Rational(1, 6));
  CHECK(half / third == Rational(3, 2));
  CHECK(Rational(2, 4) == half);
  CHECK(Rational(-1, -2) == half);
  CHECK(Rational(1, -2) == -half);
  CHECK(Rational(0, 7) == Rational(0));
  CHECK(Rational(0).is_zero());
}

TEST_CASE("rational ordering") {
  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK(Rational(-1, 2) < Rational(1, 3));
  CHECK(Rational(7, 3) > Rational(2));
  CHECK(Rational(4, 2) <= Rational(2));
  CHECK(Rational(4, 2) >= Rational(2));
}

TEST_CASE("dyadic constructor strips shared powers of two") {
  CHECK(Rational::dyadic(6, 3) == Rational(3, 4));
  CHECK(Rational::dyadic(1, 0) == Rational(1));
  CHECK(Rational::dyadic(0, 10) == Rational(0));
  CHECK(Rational::dyadic(-4, 2) == Rational(-1));
}

TEST_CASE("rational string and double conversions") {
  CHECK(Rational(3, 2).to_string() == "3/2");
  CHECK(Rational(4, 2).to_string() == "2");
  CHECK(Rational(-7, 4).to_double() == doctest::Approx(-1.75));
}

TEST_CASE("rational errors") {
  CHECK_THROWS_AS(Rational(1, 0), fet::BadParams);
  CHECK_THROWS_AS(Rational(1) / Rational(0), fet::BadParams);
}

TEST_CASE("rational addition is associative on a small grid") {
  for (int a = -4; a <= 4; ++a) {
    for (int b = 1; b <= 4; ++b) {
      for (int c = -3; c <= 3; ++c) {
        Rational x(a, b), y(c, 5), z(b, 7);
        CHECK((x + y) + z == x + (y + z));
        CHECK(x * (y + z) == x * y + x * z);
      }
    }
  }
}
