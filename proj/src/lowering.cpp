#include "dlower/lowering.hpp"

#include <string>

namespace dlower {

OperatorMatrix candidate_psi(const Data& data) {
    const VarthetaTable vt = vartheta(data);
    const std::size_t n = data.size();
    Matrix m(n + 1, n + 1);
    for (std::size_t i = 1; i <= n; ++i) m(i - 1, i) = vt[i];
    return {Basis::Tau, std::move(m)};
}

namespace {

// Column j holds the coordinates of from[j] against `to`.
Matrix transition(const std::vector<Poly>& from, const std::vector<Poly>& to) {
    const std::size_t n = from.size();
    Matrix m(n, n);
    for (std::size_t j = 0; j < n; ++j) m.set_column(j, coords_in_basis(from[j], to).d);
    return m;
}

Scalar eval_product(const std::vector<Scalar>& roots, std::size_t i, const Scalar& at) {
    Scalar p(1);
    for (std::size_t h = 0; h < i; ++h) p *= at - roots[h];
    return p;
}

Matrix psi_series(const Data& data, const std::vector<Scalar>& roots, const Scalar& at) {
    const VarthetaTable vt = vartheta(data);
    const Matrix psi = candidate_psi(data).matrix;
    const std::size_t n = data.size();
    Matrix acc(n + 1, n + 1);
    Matrix power = Matrix::identity(n + 1);
    for (std::size_t i = 0; i <= n; ++i) {
        acc += power * (eval_product(roots, i, at) / vt.rising_product(i));
        power = power * psi;
    }
    return acc;
}

bool expansion_holds(const Data& data, const std::vector<Poly>& target, const std::vector<Poly>& source,
                     const std::vector<Scalar>& roots, const Scalar& at) {
    const VarthetaTable vt = vartheta(data);
    for (std::size_t j = 0; j < target.size(); ++j) {
        Poly sum;
        for (std::size_t i = 0; i <= j; ++i) sum += source[i] * (eval_product(roots, j - i, at) * bracket(vt, j, i));
        if (sum != target[j]) return false;
    }
    return true;
}

}  // namespace

LoweringSolution lowering_space(const Data& data) {
    validate(data);
    const std::size_t n = data.size();
    const auto taus = tau_basis(data);
    const auto etas = eta_basis(data);
    const Matrix eta_in_tau = transition(etas, taus);
    const Matrix tau_in_eta = transition(taus, etas);

    // Unknown k - 1 is c_k. psi eta_i = sum_k d_{k} c_k tau_{k-1}, re-expanded in eta.
    std::vector<std::vector<Scalar>> rows;
    for (std::size_t i = 1; i <= n; ++i) {
        for (std::size_t m = 0; m <= n; ++m) {
            if (m + 1 == i) continue;
            std::vector<Scalar> row(n);
            bool any = false;
            for (std::size_t k = 1; k <= i; ++k) {
                const Scalar v = eta_in_tau(k, i) * tau_in_eta(m, k - 1);
                if (!v.is_zero()) any = true;
                row[k - 1] = v;
            }
            if (any) rows.push_back(std::move(row));
        }
    }
    Matrix system(rows.size(), n);
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (std::size_t c = 0; c < n; ++c) system(r, c) = rows[r][c];
    const auto kernel = nullspace(system);

    LoweringSolution out;
    out.dim = kernel.size();
    if (out.dim >= 2) {
        throw InternalDisagreement("double lowering space has dimension " + std::to_string(out.dim));
    }
    if (out.dim == 1) {
        const auto& c = kernel.front();
        if (c[0].is_zero()) throw InternalDisagreement("nonzero double lowering map kills x");
        Matrix psi(n + 1, n + 1);
        for (std::size_t k = 1; k <= n; ++k) psi(k - 1, k) = c[k - 1] / c[0];
        out.psi = OperatorMatrix{Basis::Tau, std::move(psi)};
    }
    return out;
}

std::optional<std::size_t> first_eta_lowering_failure(const Data& data) {
    const VarthetaTable vt = vartheta(data);
    const Matrix psi = candidate_psi(data).matrix;
    const auto taus = tau_basis(data);
    const auto etas = eta_basis(data);
    for (std::size_t i = 1; i <= data.size(); ++i) {
        const auto image = mat_vec(psi, coords_in_basis(etas[i], taus).d);
        const Poly lhs = BasisCoords{image}.reconstruct(taus);
        if (lhs != etas[i - 1] * vt[i]) return i;
    }
    return std::nullopt;
}

bool is_double_lowering_via_expansion(const Data& data) {
    return expansion_holds(data, eta_basis(data), tau_basis(data), data.b(), data.a()[0]);
}

bool is_double_lowering_via_dual_expansion(const Data& data) {
    return expansion_holds(data, tau_basis(data), eta_basis(data), data.a(), data.b()[0]);
}

OperatorMatrix delta(const Data& data) {
    validate(data);
    return {Basis::Tau, transition(eta_basis(data), tau_basis(data))};
}

OperatorMatrix delta_inv(const Data& data) {
    validate(data);
    return {Basis::Tau, transition(tau_basis(data), eta_basis(data))};
}

Matrix delta_series(const Data& data) { return psi_series(data, data.b(), data.a()[0]); }

Matrix delta_inv_series(const Data& data) { return psi_series(data, data.a(), data.b()[0]); }

Matrix nilpotent_inverse(const Matrix& t) {
    if (!t.is_strictly_upper_triangular()) {
        throw std::invalid_argument("nilpotent_inverse: matrix is not strictly upper triangular");
    }
    const std::size_t n = t.rows();
    Matrix acc = Matrix::identity(n);
    Matrix power = Matrix::identity(n);
    for (std::size_t i = 1; i < n; ++i) {
        power = power * t;
        acc += power;
    }
    return acc;
}

Matrix tau_to_monomial(const Data& data) {
    const auto taus = tau_basis(data);
    const std::size_t n = taus.size();
    Matrix m(n, n);
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t i = 0; i < n; ++i) m(i, j) = taus[j].coeff(i);
    return m;
}

}  // namespace dlower
