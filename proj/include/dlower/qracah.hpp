#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "dlower/data.hpp"
#include "dlower/matrix.hpp"
#include "dlower/polynomial.hpp"
#include "dlower/report.hpp"

namespace dlower {

/// Raised when (q, a, b, N) violates one of the q-Racah parameter invariants.
class InvalidParams : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// q, a, b nonzero with a != b, q^i != 1 and a b q^{i-1} != 1 for 1 <= i <= N.
/// Checked eagerly at construction.
class QRacahParams {
public:
    QRacahParams(Scalar q, Scalar a, Scalar b, std::size_t n);

    [[nodiscard]] const Scalar& q() const noexcept { return q_; }
    [[nodiscard]] const Scalar& a() const noexcept { return a_; }
    [[nodiscard]] const Scalar& b() const noexcept { return b_; }
    [[nodiscard]] std::size_t n() const noexcept { return n_; }
    /// 1 - ab
    [[nodiscard]] Scalar xi() const { return Scalar(1) - a_ * b_; }
    /// (q, a, b) -> (1/q, 1/a, 1/b)
    [[nodiscard]] QRacahParams inverted() const;

private:
    Scalar q_;
    Scalar a_;
    Scalar b_;
    std::size_t n_;
};

/// a_i = a q^i + a^{-1} q^{-i}, b_i likewise, for 0 <= i <= N-1.
Data qracah_data(const QRacahParams& p);

/// (alpha; q)_i
Scalar q_pochhammer(const Scalar& alpha, const Scalar& q, std::size_t i);

Scalar vartheta_closed(const QRacahParams& p, std::size_t i);
/// The second closed form, written in q^{-1}, a^{-1}, b^{-1}.
Scalar vartheta_closed_inverted(const QRacahParams& p, std::size_t i);

/// (vartheta_1...vartheta_i, vartheta_j...vartheta_{j-i+1}) in closed form.
std::pair<Scalar, Scalar> vartheta_products(const QRacahParams& p, std::size_t i, std::size_t j);

Scalar bracket_closed(const QRacahParams& p, std::size_t j, std::size_t i);

/// tau_i and eta_i under x = y + y^{-1}.
LaurentPoly tau_laurent(const QRacahParams& p, std::size_t i);
LaurentPoly eta_laurent(const QRacahParams& p, std::size_t i);

Scalar tau_at_b0(const QRacahParams& p, std::size_t i);
Scalar eta_at_a0(const QRacahParams& p, std::size_t i);

/// sum_i q^{C(i,2)} (1-q)^i T^i / (q;q)_i for strictly upper triangular T.
Matrix expq_nilpotent(const Matrix& t, const Scalar& q);
/// exp_{1/q}(-T), the inverse of expq_nilpotent(T, q).
Matrix expq_inv_nilpotent(const Matrix& t, const Scalar& q);

/// psi_hat for the q-Racah data.
Matrix psi_hat(const QRacahParams& p);

/// w_0..w_N built from tau (resp. eta); w'_0..w'_N likewise.
std::vector<Poly> w_basis(const QRacahParams& p);
std::vector<Poly> w_basis_via_eta(const QRacahParams& p);
std::vector<Poly> wprime_basis(const QRacahParams& p);
std::vector<Poly> wprime_basis_via_eta(const QRacahParams& p);

/// The basic hypergeometric form of w'_j (Basis::WPrime) or w_j (Basis::W),
/// assembled as a Laurent polynomial in y and pulled back to x.
Poly w_hypergeometric(const QRacahParams& p, std::size_t j, Basis which = Basis::WPrime);

struct KBM {
    OperatorMatrix k;
    OperatorMatrix b;
    OperatorMatrix m;
};

/// K, B, M represented in the requested basis, by conjugating the diagonal
/// representations with exact transition matrices.
KBM kbm_matrices(const QRacahParams& p, Basis basis);

/// Transition matrix from tau to the requested basis (column j = coordinates
/// of basis_j in the tau basis).
Matrix transition_from_tau(const QRacahParams& p, Basis basis);

/// Multiplication by x from V_{N-1} into V_N; (N+1) x N.
OperatorMatrix a_matrix(const QRacahParams& p, Basis basis);

Report delta_factorization_check(const QRacahParams& p);
Report w_three_term_check(const QRacahParams& p);
Report w_hypergeometric_check(const QRacahParams& p);
Report kbm_closed_form_check(const QRacahParams& p);
Report relation_suite(const QRacahParams& p);
Report geometric_series_forms_check(const QRacahParams& p);
/// Scalar and polynomial closed forms against their direct definitions.
Report closed_form_check(const QRacahParams& p);

/// Everything above, in a fixed order.
Report full_suite(const QRacahParams& p);

/// (q^{-j}; q)_i (q; q)_{j-i} == (-1)^i (q; q)_j q^{C(i,2)} q^{-ij}
bool q_integer_identity(const Scalar& q, std::size_t i, std::size_t j);
/// (z q^{-j}; q)_j == sum_i (q^{-j}; q)_i z^i / (q; q)_i
bool q_binomial_identity(const Scalar& z, const Scalar& q, std::size_t j);

}  // namespace dlower
