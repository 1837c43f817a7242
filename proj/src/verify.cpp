#include "dlower/verify.hpp"

#include "dlower/lowering.hpp"

namespace dlower {

namespace {

using Where = std::optional<std::pair<std::size_t, std::size_t>>;

IdentityResult flag(std::string id, bool ok) { return {std::move(id), ok, ok ? Where{} : Where{std::pair{0UL, 0UL}}}; }

IdentityResult compare(std::string id, const Matrix& l, const Matrix& r) {
    auto mm = first_mismatch(l, r);
    return {std::move(id), !mm.has_value(), mm};
}

}  // namespace

CrossCheck cross_check(const Data& data) {
    validate(data);
    CrossCheck out;
    out.classification = classify(data);
    out.dim = lowering_space(data).dim;
    out.agree = (out.classification.verdict == Verdict::DoubleLowering) == (out.dim == 1);
    return out;
}

Report verify_data(const Data& data) {
    const CrossCheck cc = cross_check(data);
    const bool lowering = cc.dim == 1;
    Report out;
    out.push_back(flag("classification_matches_lowering_space", cc.agree));
    out.push_back(flag("expansion_matches_lowering_space", is_double_lowering_via_expansion(data) == lowering));
    out.push_back(flag("dual_expansion_matches_lowering_space", is_double_lowering_via_dual_expansion(data) == lowering));

    const Matrix psi = candidate_psi(data).matrix;
    if (!lowering) {
        out.push_back(flag("eta_lowering_fails", first_eta_lowering_failure(data).has_value()));
        return out;
    }

    const std::size_t n = data.size();
    const Matrix id = Matrix::identity(n + 1);
    const Matrix d = delta(data).matrix;
    const Matrix di = delta_inv(data).matrix;
    const VarthetaTable vt = vartheta(data);
    out.push_back(compare("lowering_space_equals_candidate_psi", lowering_space(data).psi->matrix, psi));
    {
        const auto failure = first_eta_lowering_failure(data);
        out.push_back({"psi_lowers_eta", !failure, failure ? Where{std::pair{*failure, *failure - 1}} : Where{}});
    }
    {
        const Matrix t = tau_to_monomial(data);
        const Matrix mono = t * psi * *inverse(t);
        Where bad;
        for (std::size_t i = 1; i <= n && !bad; ++i)
            if (mono(i - 1, i) != vt[i]) bad = std::pair{i - 1, i};
        out.push_back({"psi_monomial_subdiagonal", !bad, bad});
    }
    out.push_back(compare("delta_series", d, delta_series(data)));
    out.push_back(compare("delta_inv_series", di, delta_inv_series(data)));
    out.push_back(compare("delta_times_delta_inv", d * di, id));
    out.push_back(compare("delta_commutes_with_psi", d * psi, psi * d));

    if (n >= 3) {
        const Scalar& a0 = data.a()[0];
        const Scalar& b0 = data.b()[0];
        if (is_shift_down(data)) out.push_back(compare("shift_down_delta", d, id + psi * (a0 - b0)));
        if (is_shift_up(data)) out.push_back(compare("shift_up_delta_inv", di, id + psi * (b0 - a0)));
        if (auto theta = theta_family(data)) {
            const Matrix over_a = id + psi * (*theta - a0);
            const Matrix over_b = id + psi * (*theta - b0);
            out.push_back(compare("theta_delta_ratio", d, over_b * nilpotent_inverse(psi * (a0 - *theta))));
            out.push_back(compare("theta_delta_inv_ratio", di, over_a * nilpotent_inverse(psi * (b0 - *theta))));
            out.push_back(compare("theta_ratio_terms_commute", over_a * over_b, over_b * over_a));
        }
    }
    return out;
}

}  // namespace dlower
