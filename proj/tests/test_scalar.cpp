#include <doctest.h>

#include "dlower/random.hpp"
#include "dlower/scalar.hpp"

using dlower::Scalar;
using dlower::parse_scalar;

TEST_CASE("parse_scalar reduces and normalizes sign") {
    CHECK(parse_scalar("3/6") == Scalar(1, 2));
    CHECK(parse_scalar("0") == Scalar(0));
    CHECK(parse_scalar("-29/5") == Scalar(-29, 5));
    CHECK(parse_scalar("-3/6").to_string() == "-1/2");
    CHECK(parse_scalar("7").to_string() == "7");
}

TEST_CASE("parse_scalar rejects garbage and zero denominators") {
    CHECK_THROWS_AS(parse_scalar(""), dlower::ParseError);
    CHECK_THROWS_AS(parse_scalar("1/0"), dlower::ParseError);
    CHECK_THROWS_AS(parse_scalar("x"), dlower::ParseError);
    CHECK_THROWS_AS(parse_scalar("3/-6"), dlower::ParseError);
    CHECK_THROWS_AS(parse_scalar("1.5"), dlower::ParseError);
}

TEST_CASE("arithmetic is exact") {
    const Scalar third(1, 3);
    CHECK(third + third + third == Scalar(1));
    CHECK(Scalar(2, 3) * Scalar(3, 4) == Scalar(1, 2));
    CHECK(Scalar(5, 2) - Scalar(1, 2) == Scalar(2));
    CHECK(Scalar(5).pow(-2) == Scalar(1, 25));
    CHECK(Scalar(-2).pow(3) == Scalar(-8));
    CHECK(Scalar(7, 3).pow(0) == Scalar(1));
}

TEST_CASE("division by zero is rejected") {
    CHECK_THROWS_AS(Scalar(1) / Scalar(0), dlower::DivisionByZero);
    CHECK_THROWS_AS((void)Scalar(0).inverse(), dlower::DivisionByZero);
    CHECK_THROWS_AS((void)Scalar(0).pow(-1), dlower::DivisionByZero);
}

TEST_CASE("ordering and numerator/denominator order") {
    CHECK(Scalar(1, 3) < Scalar(1, 2));
    CHECK(dlower::numden_less(Scalar(-1), Scalar(1, 2)));
    CHECK(dlower::binom(4, 2) == 6);
    CHECK(dlower::binom(1, 2) == 0);
}

TEST_CASE("field axioms and rendering round trip on random values") {
    dlower::Rng rng(17);
    for (int k = 0; k < 200; ++k) {
        const Scalar x = rng.rational(50, 20);
        const Scalar y = rng.rational(50, 20);
        const Scalar z = rng.rational(50, 20);
        CHECK((x + y) + z == x + (y + z));
        CHECK((x * y) * z == x * (y * z));
        CHECK(x * (y + z) == x * y + x * z);
        if (!x.is_zero()) CHECK(x * x.inverse() == Scalar(1));
        CHECK(parse_scalar(x.to_string()) == x);
    }
}
