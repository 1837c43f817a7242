#include <doctest.h>

#include "dlower/lowering.hpp"
#include "dlower/matrix.hpp"
#include "dlower/random.hpp"

using namespace dlower;

namespace {

Matrix from_rows(std::initializer_list<std::initializer_list<Scalar>> rows) {
    Matrix m(rows.size(), rows.begin()->size());
    std::size_t i = 0;
    for (const auto& r : rows) {
        std::size_t j = 0;
        for (const auto& v : r) m(i, j++) = v;
        ++i;
    }
    return m;
}

Matrix random_strict_upper(Rng& rng, std::size_t n) {
    Matrix t(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) t(i, j) = rng.rational();
    return t;
}

}  // namespace

TEST_CASE("product and identity") {
    const Matrix a = from_rows({{1, 2}, {3, 4}});
    CHECK(a * Matrix::identity(2) == a);
    CHECK(a * a == from_rows({{7, 10}, {15, 22}}));
    CHECK(mat_vec(a, std::vector<Scalar>{1, 1}) == std::vector<Scalar>{3, 7});
}

TEST_CASE("inverse of a rational matrix") {
    const Matrix a = from_rows({{2, 1}, {1, 1}});
    const auto inv = inverse(a);
    REQUIRE(inv);
    CHECK(a * *inv == Matrix::identity(2));
    CHECK_FALSE(inverse(from_rows({{1, 2}, {2, 4}})).has_value());
}

TEST_CASE("nullspace") {
    const auto ns = nullspace(from_rows({{1, 2, 3}, {2, 4, 6}}));
    CHECK(ns.size() == 2);
    for (const auto& v : ns) CHECK(v[0] + 2 * v[1] + 3 * v[2] == Scalar(0));
    CHECK(nullspace(Matrix::identity(3)).empty());
}

TEST_CASE("first_mismatch with a column range") {
    const Matrix a = from_rows({{1, 2}, {3, 4}});
    const Matrix b = from_rows({{1, 0}, {3, 4}});
    CHECK(first_mismatch(a, b) == std::pair<std::size_t, std::size_t>{0, 1});
    CHECK_FALSE(first_mismatch(a, b, 1).has_value());
}

TEST_CASE("nilpotent_inverse") {
    SUBCASE("zero gives identity") { CHECK(nilpotent_inverse(Matrix(3, 3)) == Matrix::identity(3)); }
    SUBCASE("superdiagonal of ones, size 3") {
        Matrix t(3, 3);
        t(0, 1) = 1;
        t(1, 2) = 1;
        CHECK(nilpotent_inverse(t) == Matrix::identity(3) + t + t * t);
    }
    SUBCASE("randomized") {
        Rng rng(11);
        for (int k = 0; k < 20; ++k) {
            const Matrix t = random_strict_upper(rng, 5);
            CHECK((Matrix::identity(5) - t) * nilpotent_inverse(t) == Matrix::identity(5));
        }
    }
    SUBCASE("rejects a non-nilpotent input") { CHECK_THROWS(nilpotent_inverse(Matrix::identity(2))); }
}

TEST_CASE("basis names round trip") {
    for (Basis b : {Basis::Tau, Basis::Eta, Basis::W, Basis::WPrime}) CHECK(parse_basis(to_string(b)) == b);
    CHECK_THROWS(parse_basis("monomial"));
}
