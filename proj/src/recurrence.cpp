#include "dlower/recurrence.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

#include "dlower/matrix.hpp"

namespace dlower {

namespace {

// Rows are [coef_beta, coef_gamma | rhs].
void append_equations(std::vector<std::array<Scalar, 3>>& rows, std::span<const Scalar> seq) {
    for (std::size_t i = 1; i + 1 < seq.size(); ++i) rows.push_back({seq[i], Scalar(1), seq[i - 1] + seq[i + 1]});
}

BetaGammaSet solve(const std::vector<std::array<Scalar, 3>>& rows) {
    if (rows.empty()) return WholePlane{};
    Matrix aug(rows.size(), 3);
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (std::size_t c = 0; c < 3; ++c) aug(r, c) = rows[r][c];
    const RowEchelon re = row_reduce(std::move(aug));
    if (std::find(re.pivots.begin(), re.pivots.end(), std::size_t{2}) != re.pivots.end()) return NoSolution{};
    if (re.rank() == 0) return WholePlane{};
    if (re.rank() == 2) return UniqueSolution{{re.reduced(0, 2), re.reduced(1, 2)}};
    const std::size_t pivot = re.pivots[0];
    const Scalar rhs = re.reduced(0, 2);
    if (pivot == 0) {
        // beta + c gamma = rhs, gamma free
        const Scalar c = re.reduced(0, 1);
        return SolutionLine{{rhs, Scalar(0)}, {-c, Scalar(1)}};
    }
    // gamma = rhs, beta free
    return SolutionLine{{Scalar(0), rhs}, {Scalar(1), Scalar(0)}};
}

void require_length(std::span<const Scalar> seq, std::size_t min, const char* what) {
    if (seq.size() < min) {
        throw std::invalid_argument(std::string(what) + ": sequence needs at least " + std::to_string(min) +
                                    " terms, got " + std::to_string(seq.size()));
    }
}

Scalar rho_term(std::span<const Scalar> seq, std::size_t i, const Scalar& beta, const Scalar& gamma) {
    const Scalar& u = seq[i - 1];
    const Scalar& v = seq[i];
    return u * u - beta * u * v + v * v - gamma * (u + v);
}

}  // namespace

bool contains(const BetaGammaSet& set, const BetaGamma& bg) {
    return std::visit(
        [&](const auto& s) -> bool {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, NoSolution>) {
                return false;
            } else if constexpr (std::is_same_v<T, UniqueSolution>) {
                return s.point == bg;
            } else if constexpr (std::is_same_v<T, SolutionLine>) {
                // solve point + t dir == bg for t
                const BetaGamma d{bg.beta - s.point.beta, bg.gamma - s.point.gamma};
                if (!s.direction.beta.is_zero()) {
                    const Scalar t = d.beta / s.direction.beta;
                    return t * s.direction.gamma == d.gamma;
                }
                return d.beta.is_zero();
            } else {
                return true;
            }
        },
        set);
}

BetaGammaSet beta_gamma_solutions(std::span<const Scalar> seq) {
    require_length(seq, 3, "beta_gamma_solutions");
    std::vector<std::array<Scalar, 3>> rows;
    append_equations(rows, seq);
    return solve(rows);
}

BetaGammaSet common_beta_gamma(std::span<const Scalar> a, std::span<const Scalar> b) {
    if (a.size() != b.size()) throw std::invalid_argument("common_beta_gamma: length mismatch");
    require_length(a, 3, "common_beta_gamma");
    std::vector<std::array<Scalar, 3>> rows;
    append_equations(rows, a);
    append_equations(rows, b);
    return solve(rows);
}

std::optional<Scalar> rho_for(std::span<const Scalar> seq, const Scalar& beta, const Scalar& gamma) {
    require_length(seq, 2, "rho_for");
    const Scalar first = rho_term(seq, 1, beta, gamma);
    for (std::size_t i = 2; i < seq.size(); ++i)
        if (rho_term(seq, i, beta, gamma) != first) return std::nullopt;
    return first;
}

bool has_triple(std::span<const Scalar> seq, const ParameterTriple& t) {
    for (std::size_t i = 1; i + 1 < seq.size(); ++i)
        if (seq[i - 1] - t.beta * seq[i] + seq[i + 1] != t.gamma) return false;
    const auto rho = rho_for(seq, t.beta, t.gamma);
    return rho && *rho == t.rho;
}

std::optional<ParameterTriple> are_twins(std::span<const Scalar> a, std::span<const Scalar> b) {
    const BetaGammaSet common = common_beta_gamma(a, b);
    auto triple_at = [&](const BetaGamma& bg) -> std::optional<ParameterTriple> {
        const auto ra = rho_for(a, bg.beta, bg.gamma);
        const auto rb = rho_for(b, bg.beta, bg.gamma);
        if (ra && rb && *ra == *rb) return ParameterTriple{bg.beta, bg.gamma, *ra};
        return std::nullopt;
    };
    if (const auto* u = std::get_if<UniqueSolution>(&common)) return triple_at(u->point);
    if (const auto* line = std::get_if<SolutionLine>(&common)) {
        // The rho difference at i = 1 is affine in t along the line.
        auto gap = [&](const Scalar& t) {
            const BetaGamma bg = line->at(t);
            return rho_term(a, 1, bg.beta, bg.gamma) - rho_term(b, 1, bg.beta, bg.gamma);
        };
        const Scalar g0 = gap(Scalar(0));
        const Scalar slope = gap(Scalar(1)) - g0;
        if (slope.is_zero()) return g0.is_zero() ? triple_at(line->point) : std::nullopt;
        return triple_at(line->at(-g0 / slope));
    }
    // NoSolution; WholePlane cannot occur for length >= 3.
    return std::nullopt;
}

bool e_equation(std::span<const Scalar> a, std::span<const Scalar> b, std::size_t i, std::size_t j) {
    if (a.size() != b.size()) throw std::invalid_argument("e_equation: length mismatch");
    if (i > j || j >= a.size()) {
        throw std::out_of_range("e_equation: need 0 <= i <= j < " + std::to_string(a.size()) + ", got (" +
                                std::to_string(i) + ", " + std::to_string(j) + ")");
    }
    Scalar head(0);
    for (std::size_t h = 0; h <= i; ++h) head += a[h] - b[h];
    Scalar tail(0);
    for (std::size_t h = j - i; h <= j; ++h) tail += a[h] - b[h];
    return head * (a[j - i] - b[j]) == (a[0] - b[i]) * tail;
}

std::string to_string(RecurrenceCase c) {
    switch (c) {
        case RecurrenceCase::I: return "I";
        case RecurrenceCase::II: return "II";
        case RecurrenceCase::III: return "III";
    }
    return "?";
}

namespace {

void check_q(RecurrenceCase c, const RecurrenceParams& p) {
    if (c == RecurrenceCase::I && (p.q.is_zero() || p.q == Scalar(1) || p.q == Scalar(-1))) {
        throw std::invalid_argument("case I needs q outside {0, 1, -1}, got " + p.q.to_string());
    }
}

Scalar sign_pow(std::size_t i) { return (i % 2 == 0) ? Scalar(1) : Scalar(-1); }

}  // namespace

std::vector<Scalar> make_recurrent(RecurrenceCase c, const RecurrenceParams& p, std::size_t n) {
    check_q(c, p);
    std::vector<Scalar> out;
    out.reserve(n + 1);
    for (std::size_t i = 0; i <= n; ++i) {
        const auto li = static_cast<long>(i);
        switch (c) {
            case RecurrenceCase::I:
                out.push_back(p.alpha1 + p.alpha2 * p.q.pow(li) + p.alpha3 * p.q.pow(-li));
                break;
            case RecurrenceCase::II:
                out.push_back(p.alpha1 + p.alpha2 * Scalar(li) + p.alpha3 * Scalar(binom(li, 2)));
                break;
            case RecurrenceCase::III:
                out.push_back(p.alpha1 + p.alpha2 * sign_pow(i) + p.alpha3 * Scalar(li) * sign_pow(i));
                break;
        }
    }
    return out;
}

ParameterTriple parameter_triple(RecurrenceCase c, const RecurrenceParams& p) {
    check_q(c, p);
    switch (c) {
        case RecurrenceCase::I: {
            const Scalar qi = p.q.inverse();
            const Scalar qm1sq = (p.q - 1) * (p.q - 1);
            const Scalar qdiff = p.q - qi;
            return {p.q + qi, -p.alpha1 * qm1sq * qi,
                    p.alpha1 * p.alpha1 * qm1sq * qi - p.alpha2 * p.alpha3 * qdiff * qdiff};
        }
        case RecurrenceCase::II:
            return {Scalar(2), p.alpha3, p.alpha2 * p.alpha2 - p.alpha2 * p.alpha3 - Scalar(2) * p.alpha1 * p.alpha3};
        case RecurrenceCase::III:
            return {Scalar(-2), Scalar(4) * p.alpha1, p.alpha3 * p.alpha3 - Scalar(4) * p.alpha1 * p.alpha1};
    }
    throw std::invalid_argument("bad recurrence case");
}

Scalar partial_sum_closed(RecurrenceCase c, const RecurrenceParams& p, std::size_t i) {
    check_q(c, p);
    const auto li = static_cast<long>(i);
    const Scalar si(li);
    switch (c) {
        case RecurrenceCase::I: {
            const Scalar qi = p.q.inverse();
            return p.alpha1 * si + p.alpha2 * (Scalar(1) - p.q.pow(li)) / (Scalar(1) - p.q) +
                   p.alpha3 * (Scalar(1) - p.q.pow(-li)) / (Scalar(1) - qi);
        }
        case RecurrenceCase::II:
            return p.alpha1 * si + p.alpha2 * Scalar(binom(li, 2)) + p.alpha3 * Scalar(binom(li, 3));
        case RecurrenceCase::III: {
            const Scalar s = sign_pow(i);
            return (Scalar(2) * p.alpha2 - p.alpha3 + Scalar(4) * p.alpha1 * si +
                    (p.alpha3 - Scalar(2) * p.alpha2) * s - Scalar(2) * p.alpha3 * si * s) /
                   Scalar(4);
        }
    }
    throw std::invalid_argument("bad recurrence case");
}

std::string to_string(CaseKind k) {
    switch (k) {
        case CaseKind::ShiftDown: return "CaseI_shiftDown";
        case CaseKind::ShiftUp: return "CaseII_shiftUp";
        case CaseKind::Theta: return "CaseIII_theta";
        case CaseKind::Twins: return "CaseIV_twins";
    }
    return "?";
}

std::string to_string(Verdict v) {
    return v == Verdict::DoubleLowering ? "DoubleLowering" : "NotDoubleLowering";
}

bool Classification::has(CaseKind k) const {
    return std::any_of(cases.begin(), cases.end(), [k](const CaseHit& h) { return h.kind == k; });
}

bool is_shift_down(const Data& data) {
    for (std::size_t i = 1; i < data.size(); ++i)
        if (data.a()[i - 1] != data.b()[i]) return false;
    return true;
}

bool is_shift_up(const Data& data) {
    for (std::size_t i = 1; i < data.size(); ++i)
        if (data.a()[i] != data.b()[i - 1]) return false;
    return true;
}

std::optional<Scalar> theta_family(const Data& data) {
    const std::size_t n = data.size();
    if (n < 3) return std::nullopt;
    const auto& a = data.a();
    const auto& b = data.b();
    const Scalar theta = a[1];
    for (std::size_t i = 1; i + 1 < n; ++i)
        if (a[i] != theta || b[i] != theta) return std::nullopt;
    if (theta == a[0] || theta == b[0]) return std::nullopt;
    // (theta - a_{N-1}) / (theta - b_0) == (theta - b_{N-1}) / (theta - a_0), cleared
    if ((theta - a[n - 1]) * (theta - a[0]) != (theta - b[n - 1]) * (theta - b[0])) return std::nullopt;
    return theta;
}

Classification classify(const Data& data) {
    validate(data);
    Classification out;
    if (data.size() <= 2) {
        out.verdict = Verdict::DoubleLowering;
        return out;
    }
    if (is_shift_down(data)) out.cases.push_back({CaseKind::ShiftDown, std::nullopt, std::nullopt});
    if (is_shift_up(data)) out.cases.push_back({CaseKind::ShiftUp, std::nullopt, std::nullopt});
    if (auto theta = theta_family(data)) out.cases.push_back({CaseKind::Theta, theta, std::nullopt});
    if (auto triple = are_twins(data.a(), data.b())) out.cases.push_back({CaseKind::Twins, std::nullopt, triple});
    out.verdict = out.cases.empty() ? Verdict::NotDoubleLowering : Verdict::DoubleLowering;
    return out;
}

}  // namespace dlower
