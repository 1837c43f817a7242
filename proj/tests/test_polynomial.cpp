#include <doctest.h>

#include <vector>

#include "dlower/polynomial.hpp"

using namespace dlower;

namespace {

Poly P(std::vector<Scalar> c) { return Poly(std::move(c)); }

}  // namespace

TEST_CASE("degree and leading coefficient") {
    CHECK_FALSE(Poly().degree().has_value());
    CHECK(P({0, 0, 0}).is_zero());
    CHECK(P({1, 2, 0}).degree() == Degree(1));
    CHECK(P({-1, 0, 1}).is_monic());
}

TEST_CASE("poly_eval") {
    CHECK(poly_eval(P({-1, 0, 1}), 3) == Scalar(8));
    CHECK(poly_eval(Poly(), 7) == Scalar(0));
    const Scalar a0(5, 2);
    const Scalar a1(101, 10);
    const Scalar c(10, 3);
    const Poly p = Poly::linear_root(a0) * Poly::linear_root(a1);
    CHECK(poly_eval(p, c) == (c - a0) * (c - a1));
}

TEST_CASE("ring operations") {
    const Poly x = Poly::monomial(1);
    CHECK(x * x - P({1}) == P({-1, 0, 1}));
    CHECK((x + P({1})) * (x - P({1})) == P({-1, 0, 1}));
    CHECK(P({1, 1}) - P({1, 1}) == Poly());
}

TEST_CASE("embed_symmetric sends x to y + 1/y") {
    CHECK(embed_symmetric(P({1})) == LaurentPoly::constant(1));
    CHECK(embed_symmetric(Poly::monomial(1)) == LaurentPoly(-1, {1, 0, 1}));
    CHECK(embed_symmetric(Poly::monomial(2)) == LaurentPoly(-2, {1, 0, 2, 0, 1}));
}

TEST_CASE("pullback inverts the embedding and rejects asymmetric input") {
    const Poly p = P({Scalar(3, 2), -4, 0, 1});
    const LaurentPoly l = embed_symmetric(p);
    CHECK(l.is_symmetric());
    CHECK(pullback_symmetric(l) == p);
    CHECK_THROWS_AS(pullback_symmetric(LaurentPoly(0, {0, 1})), std::domain_error);
}

TEST_CASE("coords_in_basis") {
    const Scalar a0(1);
    const Scalar b0(2);
    const std::vector<Poly> basis{P({1}), Poly::linear_root(a0)};
    SUBCASE("basis element gives a unit vector") {
        CHECK(coords_in_basis(basis[1], basis).d == std::vector<Scalar>{0, 1});
    }
    SUBCASE("x - b0 against {1, x - a0}") {
        const auto c = coords_in_basis(Poly::linear_root(b0), basis);
        CHECK(c.d == std::vector<Scalar>{a0 - b0, 1});
        CHECK(c.reconstruct(basis) == Poly::linear_root(b0));
    }
}
