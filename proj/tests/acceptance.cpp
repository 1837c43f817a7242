// Acceptance run: one PASS/FAIL line per criterion, exact arithmetic throughout.
#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "dlower/corpus.hpp"
#include "dlower/json_io.hpp"
#include "dlower/lowering.hpp"
#include "dlower/qracah.hpp"
#include "dlower/recurrence.hpp"
#include "dlower/verify.hpp"

using namespace dlower;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
    bool pass = true;
    std::string detail;
};

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

bool valid(const Data& d) {
    try {
        validate(d);
        return true;
    } catch (const DegenerateData&) {
        return false;
    }
}

bool is_lowering(const Data& d) { return lowering_space(d).dim == 1; }

const std::vector<CorpusEntry>& corpus() {
    static const std::vector<CorpusEntry> c = generate_corpus({20240611, 560, 3, 10});
    return c;
}

Outcome classification_vs_solver() {
    const auto t0 = Clock::now();
    std::size_t mismatches = 0;
    std::size_t big = 0;
    std::size_t positive = 0;
    for (const auto& e : corpus()) {
        std::size_t dim = 0;
        try {
            dim = lowering_space(e.data).dim;
        } catch (const InternalDisagreement&) {
            ++big;
            continue;
        }
        const bool verdict = classify(e.data).verdict == Verdict::DoubleLowering;
        if (verdict != (dim == 1)) ++mismatches;
        if (dim == 1) ++positive;
    }
    const double secs = seconds_since(t0);
    std::ostringstream os;
    os << corpus().size() << " sets (" << positive << " double lowering), " << mismatches << " mismatches, " << big
       << " with dim >= 2, " << secs << " s";
    return {mismatches == 0 && big == 0 && corpus().size() >= 500 && secs < 10.0, os.str()};
}

Outcome normalized_psi_criterion() {
    std::size_t bad = 0;
    std::size_t negatives = 0;
    for (const auto& e : corpus()) {
        const Data& d = e.data;
        if (is_lowering(d)) {
            const Matrix psi = candidate_psi(d).matrix;
            const VarthetaTable vt = vartheta(d);
            const auto taus = tau_basis(d);
            for (std::size_t i = 1; i <= d.size(); ++i) {
                const Poly image = BasisCoords{mat_vec(psi, coords_in_basis(taus[i], taus).d)}.reconstruct(taus);
                if (image != taus[i - 1] * vt[i]) ++bad;
            }
            if (first_eta_lowering_failure(d)) ++bad;
        } else {
            ++negatives;
            if (!first_eta_lowering_failure(d)) ++bad;
        }
    }
    std::ostringstream os;
    os << corpus().size() << " sets, " << negatives << " negative, " << bad << " violations";
    return {bad == 0 && negatives > 0, os.str()};
}

Outcome delta_series_identities() {
    std::size_t checked = 0;
    std::size_t bad = 0;
    for (const auto& e : corpus()) {
        const Data& d = e.data;
        if (!is_lowering(d)) continue;
        ++checked;
        const Matrix dm = delta(d).matrix;
        const Matrix psi = candidate_psi(d).matrix;
        if (dm != delta_series(d)) ++bad;
        if (delta_inv(d).matrix != delta_inv_series(d)) ++bad;
        if (dm * psi != psi * dm) ++bad;
    }
    std::ostringstream os;
    os << checked << " double lowering sets, " << bad << " failures";
    return {bad == 0 && checked > 0, os.str()};
}

Outcome degenerate_families() {
    Rng rng(404);
    std::size_t bad = 0;
    for (int k = 0; k < 20; ++k) {
        const auto n = static_cast<std::size_t>(rng.between(3, 10));
        const Matrix id = Matrix::identity(n + 1);

        const Data down = random_shift_down(rng, n);
        const Matrix pd = candidate_psi(down).matrix;
        if (delta(down).matrix != id + pd * (down.a()[0] - down.b()[0])) ++bad;

        const Data up = random_shift_up(rng, n);
        const Matrix pu = candidate_psi(up).matrix;
        if (delta_inv(up).matrix != id + pu * (up.b()[0] - up.a()[0])) ++bad;

        const Data th = random_theta_family(rng, n);
        const auto theta = theta_family(th);
        if (!theta) {
            ++bad;
            continue;
        }
        const Matrix pt = candidate_psi(th).matrix;
        const Scalar& a0 = th.a()[0];
        const Scalar& b0 = th.b()[0];
        const Matrix over_a = id + pt * (*theta - a0);
        const Matrix over_b = id + pt * (*theta - b0);
        if (delta(th).matrix != over_b * nilpotent_inverse(pt * (a0 - *theta))) ++bad;
        if (delta_inv(th).matrix != over_a * nilpotent_inverse(pt * (b0 - *theta))) ++bad;
    }
    std::ostringstream os;
    os << "20 instances per family, " << bad << " failures";
    return {bad == 0, os.str()};
}

Outcome extension_equivalence() {
    Rng rng(505);
    std::size_t done = 0;
    std::size_t bad = 0;
    std::size_t kept = 0;
    const std::vector<CorpusKind> kinds{CorpusKind::CaseI,  CorpusKind::CaseII,  CorpusKind::CaseIII,
                                        CorpusKind::TwinsI, CorpusKind::TwinsII, CorpusKind::TwinsIII};
    while (done < 100) {
        const auto n = static_cast<std::size_t>(rng.between(3, 8));
        const CorpusKind kind = kinds[rng.below(kinds.size())];
        // half the draws continue a longer double lowering set, half append random values
        const Data longer = random_entry(rng, kind, n + 1);
        const Data base(std::vector<Scalar>(longer.a().begin(), longer.a().end() - 1),
                        std::vector<Scalar>(longer.b().begin(), longer.b().end() - 1));
        if (!valid(base) || !is_lowering(base)) continue;
        Scalar an = longer.a().back();
        Scalar bn = longer.b().back();
        if (rng.coin()) {
            an = rng.rational();
            bn = rng.rational();
        }
        const Data ext = extend(base, an, bn);
        if (!valid(ext)) continue;
        const bool fast = extend_check(base, an, bn);
        if (fast != is_lowering(ext)) ++bad;
        if (fast) ++kept;
        ++done;
    }
    std::ostringstream os;
    os << done << " extensions (" << kept << " stay double lowering), " << bad << " mismatches";
    return {bad == 0 && kept > 0 && kept < done, os.str()};
}

Outcome twin_equations() {
    Rng rng(606);
    std::size_t bad = 0;
    for (auto c : {RecurrenceCase::I, RecurrenceCase::II, RecurrenceCase::III}) {
        for (int k = 0; k < 100; ++k) {
            const Data d = random_twins(rng, c, static_cast<std::size_t>(rng.between(3, 10)));
            const std::size_t top = d.size() - 1;
            for (std::size_t j = 0; j <= top; ++j)
                for (std::size_t i = 0; i <= j; ++i)
                    if (!e_equation(d.a(), d.b(), i, j)) ++bad;
        }
    }

    // converse: hypotheses a_1 != b_0, a_1 != b_1 and E(1, j), E(2, j)
    std::size_t converse = 0;
    static const RecurrenceCase cases[] = {RecurrenceCase::I, RecurrenceCase::II, RecurrenceCase::III};
    while (converse < 100) {
        const auto n = static_cast<std::size_t>(rng.between(4, 10));
        const Data twins = random_twins(rng, cases[rng.below(3)], n);
        const Data d = affine(twins, rng.nonzero_rational(), rng.rational());
        const auto& a = d.a();
        const auto& b = d.b();
        if (a[1] == b[0] || a[1] == b[1]) continue;
        bool hypotheses = true;
        for (std::size_t i = 1; i <= 2; ++i)
            for (std::size_t j = i + 1; j < n; ++j) hypotheses = hypotheses && e_equation(a, b, i, j);
        if (!hypotheses) {
            ++bad;
            continue;
        }
        if (!are_twins(a, b)) ++bad;
        ++converse;
    }

    const std::vector<Scalar> ca{0, 1, 0, 1};
    const std::vector<Scalar> cb{0, 0, 1, 0};
    const bool counterexample = !e_equation(ca, cb, 2, 3);
    std::ostringstream os;
    os << "300 twin pairs, " << converse << " converse instances, " << bad << " failures, E(2,3) fails on the "
       << "counterexample: " << (counterexample ? "yes" : "no");
    return {bad == 0 && counterexample, os.str()};
}

Outcome qracah_suite() {
    const auto t0 = Clock::now();
    Rng rng(707);
    std::size_t identities = 0;
    std::size_t failures = 0;
    std::string first;
    for (int k = 0; k < 25; ++k) {
        const QRacahParams p = random_qracah_params(rng, static_cast<std::size_t>(rng.between(2, 12)));
        for (const auto& e : full_suite(p)) {
            ++identities;
            if (!e.pass) {
                ++failures;
                if (first.empty()) first = e.identity;
            }
        }
    }
    const double secs = seconds_since(t0);
    std::ostringstream os;
    os << "25 parameter sets, " << identities << " identity checks, " << failures << " failures";
    if (!first.empty()) os << " (first: " << first << ")";
    os << ", " << secs << " s";
    return {failures == 0 && secs < 60.0, os.str()};
}

Outcome closed_form_cross_checks() {
    Rng rng(808);
    std::size_t bad = 0;
    for (int k = 0; k < 25; ++k) {
        const QRacahParams p = random_qracah_params(rng, static_cast<std::size_t>(rng.between(1, 8)));
        for (const auto& e : closed_form_check(p))
            if (!e.pass) ++bad;
        if (wprime_basis(p) != w_basis(p.inverted())) ++bad;
        if (qracah_data(p) != qracah_data(p.inverted())) ++bad;

        Scalar q = rng.nonzero_rational();
        while (q == Scalar(1) || q == Scalar(-1)) q = rng.nonzero_rational();
        const Scalar z = rng.rational();
        const auto j = static_cast<std::size_t>(rng.between(0, 8));
        for (std::size_t i = 0; i <= j; ++i)
            if (!q_integer_identity(q, i, j)) ++bad;
        if (!q_binomial_identity(z, q, j)) ++bad;
    }
    std::ostringstream os;
    os << "25 parameter sets, " << bad << " failures";
    return {bad == 0, os.str()};
}

// f(x) -> f((x - t)/s) on polynomials of degree <= n, monomial basis.
Matrix substitution(const Scalar& s, const Scalar& t, std::size_t n) {
    const Poly inner(std::vector<Scalar>{-t / s, s.inverse()});
    Matrix m(n + 1, n + 1);
    Poly power = Poly::constant(1);
    for (std::size_t k = 0; k <= n; ++k) {
        for (std::size_t i = 0; i <= n; ++i) m(i, k) = power.coeff(i);
        power = power * inner;
    }
    return m;
}

Outcome affine_invariance() {
    Rng rng(909);
    std::size_t bad = 0;
    std::size_t actions = 0;
    const auto sample = generate_corpus({99, 21, 3, 7});
    for (const auto& e : sample) {
        const Data& d = e.data;
        const LoweringSolution base = lowering_space(d);
        for (int k = 0; k < 50; ++k) {
            const Scalar s = rng.nonzero_rational();
            const Scalar t = rng.rational();
            const Data moved = affine(d, s, t);
            const LoweringSolution image = lowering_space(moved);
            ++actions;
            if (image.dim != base.dim) {
                ++bad;
                continue;
            }
            if (base.dim == 0) continue;
            const std::size_t n = d.size();
            const Matrix to_mono = tau_to_monomial(d);
            const Matrix to_mono_moved = tau_to_monomial(moved);
            const Matrix sub = substitution(s, t, n);
            const Matrix conjugated = sub * to_mono * base.psi->matrix * *inverse(to_mono) * *inverse(sub) * s.inverse();
            const Matrix expected = to_mono_moved * image.psi->matrix * *inverse(to_mono_moved);
            if (conjugated != expected) ++bad;
        }
    }
    std::ostringstream os;
    os << sample.size() << " sets x 50 actions (" << actions << "), " << bad << " failures";
    return {bad == 0, os.str()};
}

Outcome reproducibility() {
    const CorpusOptions opts{31337, 120, 3, 10};
    const std::string c1 = to_json(generate_corpus(opts)).dump();
    const std::string c2 = to_json(generate_corpus(opts)).dump();
    const std::string other = to_json(generate_corpus({31338, 120, 3, 10})).dump();

    auto suite_text = [](std::uint64_t seed) {
        Rng rng(seed);
        std::string out;
        for (int k = 0; k < 3; ++k) out += to_json(full_suite(random_qracah_params(rng, 5))).dump();
        return out;
    };
    auto verify_text = [](const std::string& corpus_text) {
        std::string out;
        for (const auto& e : corpus_from_json(parse_json(corpus_text))) out += to_json(verify_data(e.data)).dump();
        return out;
    };
    const bool corpus_same = c1 == c2 && c1 != other;
    const bool suite_same = suite_text(5) == suite_text(5);
    const bool verify_same = verify_text(c1) == verify_text(c2);
    std::ostringstream os;
    os << "corpus " << (corpus_same ? "identical" : "differs") << ", suite reports "
       << (suite_same ? "identical" : "differ") << ", data reports " << (verify_same ? "identical" : "differ");
    return {corpus_same && suite_same && verify_same, os.str()};
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
        {"classification matches the lowering-space solver", classification_vs_solver},
        {"normalized psi lowers both bases exactly on double lowering data", normalized_psi_criterion},
        {"Delta and its inverse equal their psi series and commute with psi", delta_series_identities},
        {"shifted and theta families give the closed forms of Delta", degenerate_families},
        {"extension check matches the solver on extended data", extension_equivalence},
        {"twin pairs satisfy every E(i,j) and the converse holds", twin_equations},
        {"q-Racah identity suite", qracah_suite},
        {"closed-form and scalar q-identities", closed_form_cross_checks},
        {"double lowering is invariant under affine maps", affine_invariance},
        {"identical seeds give identical corpora and reports", reproducibility},
    };
    int failed = 0;
    for (std::size_t k = 0; k < criteria.size(); ++k) {
        Outcome o;
        try {
            o = criteria[k].second();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        if (!o.pass) ++failed;
        std::printf("%s criterion %zu: %s [%s]\n", o.pass ? "PASS" : "FAIL", k + 1, criteria[k].first.c_str(),
                    o.detail.c_str());
    }
    return failed == 0 ? 0 : 1;
}
