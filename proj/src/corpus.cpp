#include "dlower/corpus.hpp"

#include <stdexcept>

namespace dlower {

namespace {

bool valid(const Data& d) {
    try {
        validate(d);
        return true;
    } catch (const DegenerateData&) {
        return false;
    }
}

Data twins_once(Rng& rng, RecurrenceCase c, std::size_t n) {
    RecurrenceParams p;
    RecurrenceParams r;
    switch (c) {
        case RecurrenceCase::I: {
            Scalar q = rng.nonzero_rational(5, 3);
            while (q == Scalar(1) || q == Scalar(-1)) q = rng.nonzero_rational(5, 3);
            p = {rng.rational(), rng.nonzero_rational(), rng.nonzero_rational(), q};
            const Scalar a2 = rng.nonzero_rational();
            r = {p.alpha1, a2, p.alpha2 * p.alpha3 / a2, q};
            break;
        }
        case RecurrenceCase::II: {
            p = {rng.rational(), rng.rational(), rng.nonzero_rational()};
            const Scalar a2 = rng.rational();
            const Scalar a1 = p.alpha1 - (p.alpha2 - a2) * (p.alpha2 + a2 - p.alpha3) / (Scalar(2) * p.alpha3);
            r = {a1, a2, p.alpha3};
            break;
        }
        case RecurrenceCase::III: {
            p = {rng.rational(), rng.rational(), rng.rational()};
            r = {p.alpha1, rng.rational(), rng.coin() ? p.alpha3 : -p.alpha3};
            break;
        }
    }
    return {make_recurrent(c, p, n - 1), make_recurrent(c, r, n - 1)};
}

}  // namespace

std::string to_string(CorpusKind k) {
    switch (k) {
        case CorpusKind::CaseI: return "case-i";
        case CorpusKind::CaseII: return "case-ii";
        case CorpusKind::CaseIII: return "case-iii";
        case CorpusKind::TwinsI: return "twins-I";
        case CorpusKind::TwinsII: return "twins-II";
        case CorpusKind::TwinsIII: return "twins-III";
        case CorpusKind::Negative: return "negative";
    }
    return "?";
}

CorpusKind parse_corpus_kind(const std::string& s) {
    for (CorpusKind k : all_corpus_kinds())
        if (to_string(k) == s) return k;
    throw std::invalid_argument("unknown corpus kind: " + s);
}

const std::vector<CorpusKind>& all_corpus_kinds() {
    static const std::vector<CorpusKind> kinds{CorpusKind::CaseI,   CorpusKind::CaseII,   CorpusKind::CaseIII,
                                               CorpusKind::TwinsI,  CorpusKind::TwinsII,  CorpusKind::TwinsIII,
                                               CorpusKind::Negative};
    return kinds;
}

Data random_shift_down(Rng& rng, std::size_t n) {
    for (;;) {
        std::vector<Scalar> a;
        std::vector<Scalar> b{rng.rational()};
        for (std::size_t i = 0; i < n; ++i) a.push_back(rng.rational());
        for (std::size_t i = 1; i < n; ++i) b.push_back(a[i - 1]);
        Data d(std::move(a), std::move(b));
        if (valid(d)) return d;
    }
}

Data random_shift_up(Rng& rng, std::size_t n) {
    for (;;) {
        std::vector<Scalar> a{rng.rational()};
        std::vector<Scalar> b;
        for (std::size_t i = 0; i < n; ++i) b.push_back(rng.rational());
        for (std::size_t i = 1; i < n; ++i) a.push_back(b[i - 1]);
        Data d(std::move(a), std::move(b));
        if (valid(d)) return d;
    }
}

Data random_theta_family(Rng& rng, std::size_t n) {
    if (n < 3) throw std::invalid_argument("random_theta_family: need n >= 3");
    for (;;) {
        const Scalar theta = rng.rational();
        const Scalar a0 = rng.rational();
        const Scalar b0 = rng.rational();
        if (a0 == theta || b0 == theta) continue;
        const Scalar last_a = rng.rational();
        // (theta - a_{N-1})(theta - a_0) == (theta - b_{N-1})(theta - b_0)
        const Scalar last_b = theta - (theta - last_a) * (theta - a0) / (theta - b0);
        std::vector<Scalar> a{a0};
        std::vector<Scalar> b{b0};
        for (std::size_t i = 1; i + 1 < n; ++i) {
            a.push_back(theta);
            b.push_back(theta);
        }
        a.push_back(last_a);
        b.push_back(last_b);
        Data d(std::move(a), std::move(b));
        if (valid(d)) return d;
    }
}

Data random_twins(Rng& rng, RecurrenceCase c, std::size_t n) {
    for (;;) {
        Data d = twins_once(rng, c, n);
        if (valid(d)) return d;
    }
}

Data random_negative(Rng& rng, std::size_t n) {
    if (n < 3) throw std::invalid_argument("random_negative: need n >= 3");
    static const RecurrenceCase cases[] = {RecurrenceCase::I, RecurrenceCase::II, RecurrenceCase::III};
    for (;;) {
        const Data base = random_twins(rng, cases[rng.below(3)], n);
        std::vector<Scalar> b = base.b();
        const auto j = static_cast<std::size_t>(rng.between(2, static_cast<long>(n) - 1));
        b[j] += Scalar(1);
        Data d(base.a(), std::move(b));
        if (valid(d) && classify(d).verdict == Verdict::NotDoubleLowering) return d;
    }
}

Data random_entry(Rng& rng, CorpusKind kind, std::size_t n) {
    switch (kind) {
        case CorpusKind::CaseI: return random_shift_down(rng, n);
        case CorpusKind::CaseII: return random_shift_up(rng, n);
        case CorpusKind::CaseIII: return random_theta_family(rng, n);
        case CorpusKind::TwinsI: return random_twins(rng, RecurrenceCase::I, n);
        case CorpusKind::TwinsII: return random_twins(rng, RecurrenceCase::II, n);
        case CorpusKind::TwinsIII: return random_twins(rng, RecurrenceCase::III, n);
        case CorpusKind::Negative: return random_negative(rng, n);
    }
    throw std::invalid_argument("bad corpus kind");
}

std::vector<CorpusEntry> generate_corpus(const CorpusOptions& opts) {
    if (opts.kinds.empty()) throw std::invalid_argument("generate_corpus: no kinds selected");
    if (opts.min_n < 3 || opts.max_n < opts.min_n) throw std::invalid_argument("generate_corpus: need 3 <= min_n <= max_n");
    Rng rng(opts.seed);
    std::vector<CorpusEntry> out;
    out.reserve(opts.count);
    for (std::size_t k = 0; k < opts.count; ++k) {
        const CorpusKind kind = opts.kinds[k % opts.kinds.size()];
        const auto n = static_cast<std::size_t>(rng.between(static_cast<long>(opts.min_n), static_cast<long>(opts.max_n)));
        out.push_back({kind, random_entry(rng, kind, n)});
    }
    return out;
}

QRacahParams random_qracah_params(Rng& rng, std::size_t n) {
    for (;;) {
        const Scalar q = rng.nonzero_rational(5, 3);
        const Scalar a = rng.nonzero_rational(5, 3);
        const Scalar b = rng.nonzero_rational(5, 3);
        try {
            return {q, a, b, n};
        } catch (const InvalidParams&) {
        }
    }
}

}  // namespace dlower
