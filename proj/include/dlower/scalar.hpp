#pragma once

#include <compare>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace dlower {

/// Raised when a scalar string is malformed or names a zero denominator.
class ParseError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Raised on division by (or inversion of) zero.
class DivisionByZero : public std::domain_error {
public:
    DivisionByZero() : std::domain_error("division by zero") {}
};

/// Exact rational number in canonical form (reduced, positive denominator).
///
/// Thin value wrapper over GMP's mpq_class. Every operation keeps the
/// canonical form, so structural equality is mathematical equality.
class Scalar {
public:
    Scalar() = default;
    Scalar(long v) : q_(v) {}  // NOLINT(google-explicit-constructor)
    Scalar(int v) : q_(static_cast<long>(v)) {}  // NOLINT(google-explicit-constructor)
    Scalar(long num, long den);
    explicit Scalar(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }

    [[nodiscard]] const mpq_class& raw() const noexcept { return q_; }

    [[nodiscard]] bool is_zero() const noexcept { return sgn(q_) == 0; }
    [[nodiscard]] bool is_one() const noexcept { return q_ == 1; }
    [[nodiscard]] int sign() const noexcept { return sgn(q_); }

    [[nodiscard]] mpz_class numerator() const { return q_.get_num(); }
    [[nodiscard]] mpz_class denominator() const { return q_.get_den(); }

    [[nodiscard]] Scalar inverse() const;
    /// Integer power; negative exponents invert (zero base then throws).
    [[nodiscard]] Scalar pow(long e) const;

    Scalar& operator+=(const Scalar& o) { q_ += o.q_; return *this; }
    Scalar& operator-=(const Scalar& o) { q_ -= o.q_; return *this; }
    Scalar& operator*=(const Scalar& o) { q_ *= o.q_; return *this; }
    Scalar& operator/=(const Scalar& o);

    friend Scalar operator+(Scalar l, const Scalar& r) { return l += r; }
    friend Scalar operator-(Scalar l, const Scalar& r) { return l -= r; }
    friend Scalar operator*(Scalar l, const Scalar& r) { return l *= r; }
    friend Scalar operator/(Scalar l, const Scalar& r) { return l /= r; }
    friend Scalar operator-(const Scalar& v) { return Scalar(mpq_class(-v.q_)); }

    friend bool operator==(const Scalar& l, const Scalar& r) { return l.q_ == r.q_; }
    friend std::strong_ordering operator<=>(const Scalar& l, const Scalar& r) {
        const int c = cmp(l.q_, r.q_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    /// Canonical wire form: "p/q", or "p" when q == 1.
    [[nodiscard]] std::string to_string() const;

private:
    mpq_class q_{0};
};

/// Parses `[-]?digits` or `[-]?digits/digits` into canonical form.
Scalar parse_scalar(std::string_view text);

/// Total order used for deterministic tie-breaks: (numerator, denominator)
/// compared lexicographically on the canonical representation.
bool numden_less(const Scalar& l, const Scalar& r);

/// Binomial coefficient C(n, k) as a signed integer; zero when k < 0 or k > n.
long binom(long n, long k);

inline std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

}  // namespace dlower
