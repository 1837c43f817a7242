#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

#include "dlower/data.hpp"
#include "dlower/matrix.hpp"

namespace dlower {

/// Raised when a computation contradicts a structural fact that must hold
/// (for instance a lowering space of dimension 2).
class InternalDisagreement : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// Tau-basis matrix with (i-1, i)-entry vartheta_i and zeros elsewhere.
OperatorMatrix candidate_psi(const Data& data);

struct LoweringSolution {
    std::size_t dim = 0;
    std::optional<OperatorMatrix> psi;  // normalized, Tau basis; present iff dim == 1
};

/// Solves the raw membership constraints for the double lowering space:
/// unknowns c_1..c_N with psi tau_i = c_i tau_{i-1}, and psi eta_i forced
/// into the span of eta_{i-1}. Throws InternalDisagreement if dim >= 2.
LoweringSolution lowering_space(const Data& data);

/// First i (1-based) at which psi_hat eta_i != vartheta_i eta_{i-1}, if any.
/// psi_hat is the candidate from candidate_psi.
std::optional<std::size_t> first_eta_lowering_failure(const Data& data);

/// eta_j == sum_i eta_{j-i}(a_0) [j over i] tau_i for every j.
bool is_double_lowering_via_expansion(const Data& data);
/// tau_j == sum_i tau_{j-i}(b_0) [j over i] eta_i for every j.
bool is_double_lowering_via_dual_expansion(const Data& data);

/// Transition matrix from Tau to Eta: column j holds eta_j in the tau basis.
OperatorMatrix delta(const Data& data);
/// Column j holds tau_j in the eta basis.
OperatorMatrix delta_inv(const Data& data);

/// sum_i eta_i(a_0) / (vartheta_1...vartheta_i) psi_hat^i
Matrix delta_series(const Data& data);
/// sum_i tau_i(b_0) / (vartheta_1...vartheta_i) psi_hat^i
Matrix delta_inv_series(const Data& data);

/// (I - T)^{-1} = I + T + ... + T^n for strictly upper triangular T.
Matrix nilpotent_inverse(const Matrix& t);

/// Coordinates of each column (a vector in the tau basis) in the monomial basis.
Matrix tau_to_monomial(const Data& data);

}  // namespace dlower
