#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "dlower/polynomial.hpp"
#include "dlower/scalar.hpp"

namespace dlower {

/// Raised when the partial sums of a and b coincide at some prefix length.
class DegenerateData : public std::invalid_argument {
public:
    explicit DegenerateData(std::size_t index)
        : std::invalid_argument("DegenerateData(" + std::to_string(index) + ")"), index_(index) {}
    /// The first prefix length i (1-based) with a_0+..+a_{i-1} == b_0+..+b_{i-1}.
    [[nodiscard]] std::size_t index() const noexcept { return index_; }

private:
    std::size_t index_;
};

/// The pair of sequences a_0..a_{N-1}, b_0..b_{N-1}.
///
/// Construction only checks the shape (equal, nonzero lengths); call
/// validate() for the nondegeneracy condition.
class Data {
public:
    Data() = default;
    Data(std::vector<Scalar> a, std::vector<Scalar> b);

    [[nodiscard]] std::size_t size() const noexcept { return a_.size(); }
    [[nodiscard]] const std::vector<Scalar>& a() const noexcept { return a_; }
    [[nodiscard]] const std::vector<Scalar>& b() const noexcept { return b_; }

    friend bool operator==(const Data&, const Data&) = default;

private:
    std::vector<Scalar> a_;
    std::vector<Scalar> b_;
};

/// Throws DegenerateData naming the first violated prefix length.
void validate(const Data& data);

/// tau_i = (x - a_0)...(x - a_{i-1}) for 0 <= i <= N.
Poly tau(const Data& data, std::size_t i);
/// eta_i = (x - b_0)...(x - b_{i-1}) for 0 <= i <= N.
Poly eta(const Data& data, std::size_t i);

/// All of tau_0..tau_N (resp. eta_0..eta_N).
std::vector<Poly> tau_basis(const Data& data);
std::vector<Poly> eta_basis(const Data& data);

/// vartheta_0..vartheta_N, with vartheta_i the prefix-sum difference over a_0 - b_0.
struct VarthetaTable {
    std::vector<Scalar> values;

    [[nodiscard]] const Scalar& operator[](std::size_t i) const { return values.at(i); }
    [[nodiscard]] std::size_t size() const noexcept { return values.size(); }
    /// vartheta_1 * ... * vartheta_i
    [[nodiscard]] Scalar rising_product(std::size_t i) const;
    /// vartheta_j * vartheta_{j-1} * ... * vartheta_{j-i+1}
    [[nodiscard]] Scalar falling_product(std::size_t j, std::size_t i) const;
};

VarthetaTable vartheta(const Data& data);

/// The vartheta-binomial [j over i] for 0 <= i <= j <= N.
Scalar bracket(const VarthetaTable& table, std::size_t j, std::size_t i);
Scalar bracket(const Data& data, std::size_t j, std::size_t i);

/// Entrywise x -> s*x + t. Throws std::invalid_argument when s == 0.
Data affine(const Data& data, const Scalar& s, const Scalar& t);

/// The (s, t) pair moving (a_0, b_0) onto (a0_target, b0_target).
struct AffineMap {
    Scalar s;
    Scalar t;
};
AffineMap affine_normalizer(const Data& data, const Scalar& a0_target, const Scalar& b0_target);

/// Data with (aN, bN) appended.
Data extend(const Data& data, const Scalar& aN, const Scalar& bN);

/// For double lowering data, decides whether appending (aN, bN) keeps the
/// data double lowering, via the extension equations indexed by
/// eta_i(a_0) != 0 and tau_i(b_0) != 0. Throws DegenerateData if the full
/// extended sums coincide.
bool extend_check(const Data& data, const Scalar& aN, const Scalar& bN);

}  // namespace dlower
