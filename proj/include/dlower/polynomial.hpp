#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "dlower/scalar.hpp"

namespace dlower {

/// Degree of a polynomial; std::nullopt stands for the zero polynomial (-inf).
using Degree = std::optional<std::size_t>;

/// Dense univariate polynomial in x, coefficients in ascending degree order.
/// The coefficient vector never carries trailing zeros.
class Poly {
public:
    Poly() = default;
    explicit Poly(std::vector<Scalar> coeffs);
    static Poly constant(const Scalar& c);
    static Poly monomial(std::size_t k, const Scalar& c = Scalar(1));
    /// x - c
    static Poly linear_root(const Scalar& c);

    [[nodiscard]] Degree degree() const noexcept;
    [[nodiscard]] bool is_zero() const noexcept { return c_.empty(); }
    [[nodiscard]] bool is_monic() const noexcept { return !c_.empty() && c_.back().is_one(); }

    /// Coefficient of x^k (zero beyond the degree).
    [[nodiscard]] Scalar coeff(std::size_t k) const;
    [[nodiscard]] const std::vector<Scalar>& coeffs() const noexcept { return c_; }

    /// Horner evaluation.
    [[nodiscard]] Scalar operator()(const Scalar& at) const;

    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    Poly& operator*=(const Scalar& s);

    friend Poly operator+(Poly l, const Poly& r) { return l += r; }
    friend Poly operator-(Poly l, const Poly& r) { return l -= r; }
    friend Poly operator*(Poly l, const Scalar& s) { return l *= s; }
    friend Poly operator*(const Scalar& s, Poly r) { return r *= s; }
    friend Poly operator*(const Poly& l, const Poly& r);
    friend bool operator==(const Poly& l, const Poly& r) = default;

    [[nodiscard]] std::string to_string() const;

private:
    void trim();
    std::vector<Scalar> c_;
};

inline Scalar poly_eval(const Poly& p, const Scalar& c) { return p(c); }

/// Laurent polynomial in y with finitely many nonzero coefficients.
class LaurentPoly {
public:
    LaurentPoly() = default;
    /// Coefficients of y^low, y^(low+1), ...
    LaurentPoly(long low, std::vector<Scalar> coeffs);
    static LaurentPoly constant(const Scalar& c);
    /// c * y^k
    static LaurentPoly term(long k, const Scalar& c);

    [[nodiscard]] bool is_zero() const noexcept { return c_.empty(); }
    /// Exponent range of the nonzero coefficients; only valid when nonzero.
    [[nodiscard]] long min_exponent() const noexcept { return low_; }
    [[nodiscard]] long max_exponent() const noexcept { return low_ + static_cast<long>(c_.size()) - 1; }
    [[nodiscard]] Scalar coeff(long k) const;

    /// coefficient(k) == coefficient(-k) for all k.
    [[nodiscard]] bool is_symmetric() const;

    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly& operator-=(const LaurentPoly& o);
    LaurentPoly& operator*=(const Scalar& s);

    friend LaurentPoly operator+(LaurentPoly l, const LaurentPoly& r) { return l += r; }
    friend LaurentPoly operator-(LaurentPoly l, const LaurentPoly& r) { return l -= r; }
    friend LaurentPoly operator*(LaurentPoly l, const Scalar& s) { return l *= s; }
    friend LaurentPoly operator*(const Scalar& s, LaurentPoly r) { return r *= s; }
    friend LaurentPoly operator*(const LaurentPoly& l, const LaurentPoly& r);
    friend bool operator==(const LaurentPoly& l, const LaurentPoly& r) = default;

    [[nodiscard]] std::string to_string() const;

private:
    void trim();
    long low_ = 0;
    std::vector<Scalar> c_;
};

/// Image of p under x -> y + 1/y.
LaurentPoly embed_symmetric(const Poly& p);

/// Inverse of embed_symmetric on the symmetric part.
/// Throws std::domain_error if the input is not symmetric.
Poly pullback_symmetric(const LaurentPoly& l);

/// Coordinates of a polynomial against a monic degree-graded basis.
struct BasisCoords {
    std::vector<Scalar> d;

    /// Sum of d_i * basis_i.
    [[nodiscard]] Poly reconstruct(std::span<const Poly> basis) const;
};

/// Back-substitution against basis_0..basis_n (basis_i monic of degree i).
/// Throws std::invalid_argument on degree overflow or a malformed basis.
BasisCoords coords_in_basis(const Poly& p, std::span<const Poly> basis);

}  // namespace dlower
