#include <catch2/catch_amalgamated.hpp>

#include "rsc/rational.hpp"

using rsc::Rational;

TEST_CASE("rationals normalize to lowest terms with positive denominator") {
    CHECK(Rational(6, 4) == Rational(3, 2));
    CHECK(Rational(-6, 4) == Rational(-3, 2));
    CHECK(Rational(6, -4) == Rational(-3, 2));
    CHECK(Rational(0, 7) == Rational(0));
    CHECK(Rational(5, 1).is_integer());
    CHECK_FALSE(Rational(5, 3).is_integer());
}

TEST_CASE("rational arithmetic is exact") {
    CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
    CHECK(Rational(1, 2) - Rational(1, 3) == Rational(1, 6));
    CHECK(Rational(2, 3) * Rational(9, 4) == Rational(3, 2));
    CHECK(Rational(2, 3) / Rational(4, 3) == Rational(1, 2));
    CHECK(-Rational(1, 2) == Rational(-1, 2));
    CHECK_THROWS_AS(Rational(1, 2) / Rational(0), rsc::Error);
}

TEST_CASE("rational ordering") {
    CHECK(Rational(1, 3) < Rational(1, 2));
    CHECK(Rational(-1, 2) < Rational(0));
    CHECK(Rational(7, 3) >= Rational(7, 3));
    CHECK(Rational(10, 4) <= Rational(5, 2));
}

TEST_CASE("floor and ceil") {
    CHECK(Rational(7, 2).floor() == 3);
    CHECK(Rational(7, 2).ceil() == 4);
    CHECK(Rational(-7, 2).floor() == -4);
    CHECK(Rational(-7, 2).ceil() == -3);
    CHECK(Rational(4).floor() == 4);
    CHECK(Rational(4).ceil() == 4);
}

TEST_CASE("string round trip") {
    CHECK(Rational(3, 1).to_string() == "3/1");
    CHECK(Rational(-1, 2).to_string() == "-1/2");
    CHECK(Rational::parse("3/1") == Rational(3));
    CHECK(Rational::parse("6/4") == Rational(3, 2));
    CHECK(Rational::parse("7") == Rational(7));
    CHECK_THROWS_AS(Rational::parse("1/0"), rsc::ParseError);
    CHECK_THROWS_AS(Rational::parse("1/-2"), rsc::ParseError);
    CHECK_THROWS_AS(Rational::parse("abc"), rsc::ParseError);
    CHECK_THROWS_AS(Rational::parse("1/2x"), rsc::ParseError);
}

TEST_CASE("overflow is loud") {
    const Rational big(INT64_MAX, 1);
    CHECK_THROWS_AS(big * big, rsc::OverflowError);
    CHECK_THROWS_AS(big + big, rsc::OverflowError);
}
