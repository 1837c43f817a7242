#include <doctest.h>

#include <variant>

#include "dlower/corpus.hpp"
#include "dlower/lowering.hpp"
#include "dlower/qracah.hpp"
#include "dlower/recurrence.hpp"

using namespace dlower;

namespace {

using Seq = std::vector<Scalar>;

}  // namespace

TEST_CASE("beta_gamma_solutions") {
    SUBCASE("arithmetic progression") {
        const auto s = beta_gamma_solutions(Seq{0, 1, 2, 3});
        CHECK(contains(s, {2, 0}));
    }
    SUBCASE("constant sequence gives a line") {
        const Scalar c(7, 2);
        const auto s = beta_gamma_solutions(Seq{c, c, c, c});
        REQUIRE(std::holds_alternative<SolutionLine>(s));
        for (long beta : {-3, 0, 2, 5}) CHECK(contains(s, {beta, c * (Scalar(2) - beta)}));
        CHECK_FALSE(contains(s, {0, 0}));
    }
    SUBCASE("a single equation gives a line") {
        const auto s = beta_gamma_solutions(Seq{0, 1, 2});
        REQUIRE(std::holds_alternative<SolutionLine>(s));
        CHECK(contains(s, {Scalar(7, 3), Scalar(-1, 3)}));
        CHECK(contains(s, {5, -3}));
    }
    SUBCASE("inconsistent system") {
        CHECK(std::holds_alternative<NoSolution>(beta_gamma_solutions(Seq{0, 0, 0, 1})));
    }
    CHECK_THROWS(beta_gamma_solutions(Seq{0, 1}));
}

TEST_CASE("rho_for") {
    CHECK(rho_for(Seq{0, 1, 2, 3}, 2, 0) == Scalar(1));
    // (7/3, -1/3) solves the linear recurrence for (3, 4, 6), so rho is forced to be constant
    CHECK(rho_for(Seq{3, 4, 6}, Scalar(7, 3), Scalar(-1, 3)) == Scalar(-2, 3));
    CHECK_FALSE(rho_for(Seq{3, 4, 6}, 2, 0).has_value());
    CHECK(rho_for(Seq{0, 1, 2}, Scalar(7, 3), Scalar(-1, 3)) == Scalar(4, 3));
}

TEST_CASE("are_twins") {
    const auto t = are_twins(Seq{0, 1, 2, 3}, Seq{3, 4, 5, 6});
    REQUIRE(t);
    CHECK(*t == ParameterTriple{2, 0, 1});
    CHECK_FALSE(are_twins(Seq{0, 1, 2}, Seq{3, 4, 6}).has_value());
    const Seq q_racah = make_recurrent(RecurrenceCase::I, {0, 2, Scalar(1, 2), 5}, 5);
    CHECK(are_twins(q_racah, q_racah).has_value());
}

TEST_CASE("e_equation") {
    const Seq a{0, 1, 0, 1};
    const Seq b{0, 0, 1, 0};
    for (std::size_t j = 0; j <= 3; ++j) {
        CHECK(e_equation(a, b, 0, j));
        CHECK(e_equation(a, b, j, j));
    }
    CHECK_FALSE(e_equation(a, b, 2, 3));
    CHECK_THROWS_AS(e_equation(a, b, 3, 2), std::out_of_range);
}

TEST_CASE("make_recurrent closed forms") {
    CHECK(make_recurrent(RecurrenceCase::II, {0, 1, 0}, 3) == Seq{0, 1, 2, 3});
    CHECK(make_recurrent(RecurrenceCase::I, {0, 2, Scalar(1, 2), 5}, 1) == Seq{Scalar(5, 2), Scalar(101, 10)});
    CHECK(make_recurrent(RecurrenceCase::III, {0, 1, 1}, 3) == Seq{1, -2, 3, -4});
    CHECK_THROWS(make_recurrent(RecurrenceCase::I, {0, 1, 1, 1}, 3));
}

TEST_CASE("make_recurrent carries its parameter triple") {
    Rng rng(3);
    for (auto c : {RecurrenceCase::I, RecurrenceCase::II, RecurrenceCase::III}) {
        for (int k = 0; k < 10; ++k) {
            RecurrenceParams p{rng.rational(), rng.rational(), rng.rational(), 3};
            const Seq s = make_recurrent(c, p, 6);
            CHECK(has_triple(s, parameter_triple(c, p)));
        }
    }
}

TEST_CASE("partial_sum_closed against direct summation") {
    CHECK(partial_sum_closed(RecurrenceCase::II, {0, 1, 0}, 0) == Scalar(0));
    CHECK(partial_sum_closed(RecurrenceCase::II, {0, 1, 0}, 4) == Scalar(6));
    CHECK(partial_sum_closed(RecurrenceCase::I, {0, 2, Scalar(1, 2), 5}, 2) == Scalar(63, 5));
    Rng rng(4);
    for (auto c : {RecurrenceCase::I, RecurrenceCase::II, RecurrenceCase::III}) {
        RecurrenceParams p{rng.rational(), rng.rational(), rng.rational(), Scalar(2, 3)};
        const Seq s = make_recurrent(c, p, 7);
        Scalar acc(0);
        for (std::size_t i = 0; i <= 7; ++i) {
            CHECK(partial_sum_closed(c, p, i) == acc);
            acc += s[i];
        }
    }
}

TEST_CASE("classify") {
    SUBCASE("theta family") {
        const Classification c = classify(Data({1, 0, 0, 4}, {2, 0, 0, 2}));
        CHECK(c.verdict == Verdict::DoubleLowering);
        REQUIRE(c.has(CaseKind::Theta));
        for (const auto& hit : c.cases)
            if (hit.kind == CaseKind::Theta) CHECK(hit.theta == Scalar(0));
    }
    SUBCASE("not double lowering") {
        const Classification c = classify(Data({0, 1, 2}, {3, 4, 6}));
        CHECK(c.verdict == Verdict::NotDoubleLowering);
        CHECK(c.cases.empty());
    }
    SUBCASE("q-Racah data are twins") {
        const Classification c = classify(qracah_data(QRacahParams(5, 2, 3, 6)));
        CHECK(c.verdict == Verdict::DoubleLowering);
        REQUIRE(c.has(CaseKind::Twins));
        const Scalar qd = Scalar(5) - Scalar(1, 5);
        for (const auto& hit : c.cases)
            if (hit.kind == CaseKind::Twins) CHECK(*hit.triple == ParameterTriple{Scalar(26, 5), 0, -(qd * qd)});
    }
    SUBCASE("short data is always double lowering") {
        const Classification c = classify(Data({1, 5}, {2, 3}));
        CHECK(c.verdict == Verdict::DoubleLowering);
        CHECK(c.cases.empty());
    }
    SUBCASE("constant shift can be several cases at once") {
        const Classification c = classify(Data({1, 2, 3, 4}, {0, 1, 2, 3}));
        CHECK(c.has(CaseKind::ShiftDown));
        CHECK(c.has(CaseKind::Twins));
        CHECK_FALSE(c.has(CaseKind::ShiftUp));
    }
    CHECK(to_string(CaseKind::ShiftDown) == "CaseI_shiftDown");
    CHECK(to_string(CaseKind::Twins) == "CaseIV_twins");
    CHECK(to_string(Verdict::NotDoubleLowering) == "NotDoubleLowering");
}

TEST_CASE("theta family at N = 3 still needs a_1 = b_1") {
    // endpoint identity holds for theta = 0 but the middle entries differ
    const Data d({1, 0, 4}, {2, 5, 2});
    CHECK_FALSE(theta_family(d).has_value());
    CHECK(lowering_space(Data({1, 0, 4}, {2, 0, 2})).dim == 1);
    CHECK(theta_family(Data({1, 0, 4}, {2, 0, 2})) == Scalar(0));
}

TEST_CASE("classify agrees with the solver on random data") {
    Rng rng(8);
    for (int k = 0; k < 200; ++k) {
        const auto n = static_cast<std::size_t>(rng.between(3, 6));
        std::vector<Scalar> a;
        std::vector<Scalar> b;
        for (std::size_t i = 0; i < n; ++i) {
            a.push_back(rng.rational(2, 1));
            b.push_back(rng.rational(2, 1));
        }
        const Data d(std::move(a), std::move(b));
        try {
            validate(d);
        } catch (const DegenerateData&) {
            continue;
        }
        CHECK((classify(d).verdict == Verdict::DoubleLowering) == (lowering_space(d).dim == 1));
    }
}
