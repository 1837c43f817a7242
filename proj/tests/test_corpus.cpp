#include <doctest.h>

#include "dlower/corpus.hpp"
#include "dlower/json_io.hpp"
#include "dlower/lowering.hpp"

using namespace dlower;

TEST_CASE("rng is deterministic and in range") {
    Rng a(42);
    Rng b(42);
    for (int k = 0; k < 100; ++k) {
        const long x = a.between(-3, 3);
        CHECK(x == b.between(-3, 3));
        CHECK(x >= -3);
        CHECK(x <= 3);
    }
}

TEST_CASE("kind names round trip") {
    for (CorpusKind k : all_corpus_kinds()) CHECK(parse_corpus_kind(to_string(k)) == k);
    CHECK_THROWS(parse_corpus_kind("case-v"));
}

TEST_CASE("case-i corpus entries are shifted") {
    const auto c = generate_corpus({1, 1, 3, 10, {CorpusKind::CaseI}});
    REQUIRE(c.size() == 1);
    const Data& d = c.front().data;
    for (std::size_t i = 1; i < d.size(); ++i) CHECK(d.a()[i - 1] == d.b()[i]);
}

TEST_CASE("corpus is deterministic and valid") {
    const CorpusOptions opts{1, 100, 3, 10};
    const auto c1 = generate_corpus(opts);
    const auto c2 = generate_corpus(opts);
    CHECK(c1 == c2);
    CHECK(to_json(c1).dump() == to_json(c2).dump());
    CHECK(c1.size() == 100);
    for (const auto& e : c1) {
        CHECK_NOTHROW(validate(e.data));
        CHECK(e.data.size() >= 3);
        CHECK(e.data.size() <= 10);
    }
    CHECK(generate_corpus({2, 20, 3, 10}) != generate_corpus({1, 20, 3, 10}));
}

TEST_CASE("corpus entries land in their intended case") {
    const auto c = generate_corpus({5, 70, 3, 7});
    for (const auto& e : c) {
        const Classification cl = classify(e.data);
        INFO(to_string(e.kind));
        switch (e.kind) {
            case CorpusKind::CaseI: CHECK(cl.has(CaseKind::ShiftDown)); break;
            case CorpusKind::CaseII: CHECK(cl.has(CaseKind::ShiftUp)); break;
            case CorpusKind::CaseIII: CHECK(cl.has(CaseKind::Theta)); break;
            case CorpusKind::Negative: CHECK(cl.verdict == Verdict::NotDoubleLowering); break;
            default: CHECK(cl.has(CaseKind::Twins)); break;
        }
        CHECK((cl.verdict == Verdict::DoubleLowering) == (lowering_space(e.data).dim == 1));
    }
}
