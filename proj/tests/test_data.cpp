#include <doctest.h>

#include "dlower/data.hpp"
#include "dlower/lowering.hpp"
#include "dlower/qracah.hpp"
#include "dlower/random.hpp"

using namespace dlower;

namespace {

Data D(std::vector<Scalar> a, std::vector<Scalar> b) { return {std::move(a), std::move(b)}; }

std::size_t degenerate_index(const Data& d) {
    try {
        validate(d);
    } catch (const DegenerateData& e) {
        return e.index();
    }
    return 0;
}

}  // namespace

TEST_CASE("validate") {
    CHECK_NOTHROW(validate(D({1, 0, 0, 4}, {2, 0, 0, 2})));
    CHECK(degenerate_index(D({1, 0, 0, 2}, {2, 0, 0, 1})) == 4);
    CHECK(degenerate_index(D({0}, {0})) == 1);
    CHECK_THROWS_WITH(validate(D({0}, {0})), "DegenerateData(1)");
    CHECK_THROWS_AS(D({1, 2}, {1}), std::invalid_argument);
}

TEST_CASE("tau and eta") {
    const Data d = D({1, 0, 0, 4}, {2, 0, 0, 2});
    CHECK(tau(d, 0) == Poly::constant(1));
    CHECK(tau(d, 1) == Poly(std::vector<Scalar>{-1, 1}));
    CHECK(tau(d, 3) == Poly(std::vector<Scalar>{0, 0, -1, 1}));
    CHECK(eta(d, 1) == Poly(std::vector<Scalar>{-2, 1}));
    CHECK(tau_basis(d).size() == 5);
}

TEST_CASE("vartheta") {
    const Data d = qracah_data(QRacahParams(5, 2, 3, 3));
    const VarthetaTable vt = vartheta(d);
    CHECK(vt[0] == Scalar(0));
    CHECK(vt[1] == Scalar(1));
    CHECK(vt[2] == Scalar(174, 25));
    // partial sums directly
    CHECK(vt[2] == (d.a()[0] + d.a()[1] - d.b()[0] - d.b()[1]) / (d.a()[0] - d.b()[0]));
}

TEST_CASE("bracket") {
    const Data d = qracah_data(QRacahParams(5, 2, 3, 4));
    const VarthetaTable vt = vartheta(d);
    for (std::size_t j = 0; j <= 4; ++j) {
        CHECK(bracket(vt, j, 0) == Scalar(1));
        CHECK(bracket(vt, j, j) == Scalar(1));
        for (std::size_t i = 0; i <= j; ++i) CHECK(bracket(vt, j, i) == bracket(vt, j, j - i));
    }
    CHECK(bracket(vt, 2, 1) == vt[2] / vt[1]);
    CHECK(bracket(d, 2, 1) == Scalar(174, 25));
}

TEST_CASE("affine action") {
    const Data d = D({1, 0, 0, 4}, {2, 0, 0, 2});
    CHECK(affine(d, 1, 0) == d);
    CHECK(affine(d, -1, 0).a() == std::vector<Scalar>{-1, 0, 0, -4});
    CHECK_THROWS_AS(affine(d, 0, 1), std::invalid_argument);

    const AffineMap g = affine_normalizer(d, 0, 1);
    const Data n = affine(d, g.s, g.t);
    CHECK(n.a()[0] == Scalar(0));
    CHECK(n.b()[0] == Scalar(1));
    CHECK(g.s == (Scalar(0) - 1) / (d.a()[0] - d.b()[0]));

    Rng rng(5);
    for (int k = 0; k < 20; ++k) {
        const Scalar s = rng.nonzero_rational();
        const Scalar t = rng.rational();
        CHECK(affine(affine(d, s, t), s.inverse(), -t / s) == d);
    }
}

TEST_CASE("extend_check") {
    CHECK(extend_check(D({0, 1}, {3, 4}), 2, 5));
    CHECK_FALSE(extend_check(D({0, 1, 2}, {3, 4, 5}), 3, 7));
    CHECK(extend_check(D({0, 1, 2}, {3, 4, 5}), 3, 6));
    // shift-down data stays shift-down when b_N = a_{N-1}
    const Data shifted = D({1, 2, 5}, {7, 1, 2});
    CHECK(extend_check(shifted, 9, 5));
    CHECK(extend_check(shifted, 9, 5) == (lowering_space(extend(shifted, 9, 5)).dim == 1));
}
