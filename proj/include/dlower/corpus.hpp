#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "dlower/data.hpp"
#include "dlower/qracah.hpp"
#include "dlower/random.hpp"
#include "dlower/recurrence.hpp"

namespace dlower {

enum class CorpusKind { CaseI, CaseII, CaseIII, TwinsI, TwinsII, TwinsIII, Negative };

/// "case-i", "case-ii", "case-iii", "twins-I", "twins-II", "twins-III", "negative"
std::string to_string(CorpusKind k);
CorpusKind parse_corpus_kind(const std::string& s);
const std::vector<CorpusKind>& all_corpus_kinds();

struct CorpusEntry {
    CorpusKind kind;
    Data data;
    friend bool operator==(const CorpusEntry&, const CorpusEntry&) = default;
};

struct CorpusOptions {
    std::uint64_t seed = 1;
    std::size_t count = 100;
    std::size_t min_n = 3;
    std::size_t max_n = 10;
    std::vector<CorpusKind> kinds = all_corpus_kinds();
};

/// Entry k has kind kinds[k % kinds.size()]; every entry passes validate.
std::vector<CorpusEntry> generate_corpus(const CorpusOptions& opts);

// Single draws, each re-sampled until the data validates.
Data random_shift_down(Rng& rng, std::size_t n);
Data random_shift_up(Rng& rng, std::size_t n);
Data random_theta_family(Rng& rng, std::size_t n);
Data random_twins(Rng& rng, RecurrenceCase c, std::size_t n);
/// A twin pair with one b_j (j >= 2) bumped by 1, kept only if it is no
/// longer double lowering. Needs n >= 3.
Data random_negative(Rng& rng, std::size_t n);
Data random_entry(Rng& rng, CorpusKind kind, std::size_t n);

/// Valid q-Racah parameters with small numerators and denominators.
QRacahParams random_qracah_params(Rng& rng, std::size_t n);

}  // namespace dlower
