#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "dlower/data.hpp"
#include "dlower/scalar.hpp"

namespace dlower {

struct BetaGamma {
    Scalar beta;
    Scalar gamma;
    friend bool operator==(const BetaGamma&, const BetaGamma&) = default;
};

/// Solution sets of the (beta, gamma) linear system.
struct NoSolution {};
struct UniqueSolution {
    BetaGamma point;
};
/// { point + t * direction : t in Q }
struct SolutionLine {
    BetaGamma point;
    BetaGamma direction;
    [[nodiscard]] BetaGamma at(const Scalar& t) const {
        return {point.beta + t * direction.beta, point.gamma + t * direction.gamma};
    }
};
struct WholePlane {};

using BetaGammaSet = std::variant<NoSolution, UniqueSolution, SolutionLine, WholePlane>;

/// Membership test for any of the four shapes.
bool contains(const BetaGammaSet& set, const BetaGamma& bg);

/// All (beta, gamma) with a_{i-1} - beta a_i + a_{i+1} = gamma for 1 <= i <= n,
/// where seq = a_0..a_n, n >= 2.
BetaGammaSet beta_gamma_solutions(std::span<const Scalar> seq);

/// Common solutions for two sequences of the same length.
BetaGammaSet common_beta_gamma(std::span<const Scalar> a, std::span<const Scalar> b);

/// The common value of a_{i-1}^2 - beta a_{i-1} a_i + a_i^2 - gamma (a_{i-1} + a_i)
/// over 1 <= i <= n, if there is one.
std::optional<Scalar> rho_for(std::span<const Scalar> seq, const Scalar& beta, const Scalar& gamma);

struct ParameterTriple {
    Scalar beta;
    Scalar gamma;
    Scalar rho;
    friend bool operator==(const ParameterTriple&, const ParameterTriple&) = default;
};

/// True when seq is (beta, gamma)-recurrent and (beta, gamma, rho)-recurrent.
bool has_triple(std::span<const Scalar> seq, const ParameterTriple& t);

/// A parameter triple shared by both sequences, if any.
std::optional<ParameterTriple> are_twins(std::span<const Scalar> a, std::span<const Scalar> b);

/// E(i, j):
/// (sum_{h<=i} (a_h - b_h)) (a_{j-i} - b_j) == (a_0 - b_i) (sum_{h=j-i}^{j} (a_h - b_h))
bool e_equation(std::span<const Scalar> a, std::span<const Scalar> b, std::size_t i, std::size_t j);

enum class RecurrenceCase { I, II, III };

std::string to_string(RecurrenceCase c);

struct RecurrenceParams {
    Scalar alpha1;
    Scalar alpha2;
    Scalar alpha3;
    Scalar q{2};  // only read in case I
};

/// a_0..a_n from the closed form of the given case.
std::vector<Scalar> make_recurrent(RecurrenceCase c, const RecurrenceParams& p, std::size_t n);

/// The parameter triple carried by make_recurrent(c, p, n).
ParameterTriple parameter_triple(RecurrenceCase c, const RecurrenceParams& p);

/// a_0 + ... + a_{i-1} in closed form.
Scalar partial_sum_closed(RecurrenceCase c, const RecurrenceParams& p, std::size_t i);

enum class CaseKind { ShiftDown, ShiftUp, Theta, Twins };

std::string to_string(CaseKind k);

struct CaseHit {
    CaseKind kind;
    std::optional<Scalar> theta;
    std::optional<ParameterTriple> triple;
};

enum class Verdict { DoubleLowering, NotDoubleLowering };

std::string to_string(Verdict v);

struct Classification {
    Verdict verdict = Verdict::NotDoubleLowering;
    std::vector<CaseHit> cases;

    [[nodiscard]] bool has(CaseKind k) const;
};

/// Tests each of the four structural conditions independently and reports
/// all that hold. Data with N <= 2 is always double lowering.
Classification classify(const Data& data);

/// Individual conditions, for N >= 3.
bool is_shift_down(const Data& data);
bool is_shift_up(const Data& data);
std::optional<Scalar> theta_family(const Data& data);

}  // namespace dlower
