#include "dlower/scalar.hpp"

#include <cctype>

namespace dlower {

Scalar::Scalar(long num, long den) {
    if (den == 0) throw DivisionByZero();
    q_ = mpq_class(num, den);
    q_.canonicalize();
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw DivisionByZero();
    return Scalar(mpq_class(1 / q_));
}

Scalar Scalar::pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    mpq_class base = q_;
    mpq_class acc = 1;
    auto n = static_cast<unsigned long>(e);
    while (n != 0) {
        if (n & 1UL) acc *= base;
        base *= base;
        n >>= 1U;
    }
    return Scalar(std::move(acc));
}

Scalar& Scalar::operator/=(const Scalar& o) {
    if (o.is_zero()) throw DivisionByZero();
    q_ /= o.q_;
    return *this;
}

std::string Scalar::to_string() const {
    // mpq_class::get_str already omits "/1" for integers.
    return q_.get_str(10);
}

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s) {
        if (std::isdigit(static_cast<unsigned char>(c)) == 0) return false;
    }
    return true;
}

}  // namespace

Scalar parse_scalar(std::string_view text) {
    std::string_view body = text;
    bool negative = false;
    if (!body.empty() && body.front() == '-') {
        negative = true;
        body.remove_prefix(1);
    }
    const auto slash = body.find('/');
    const std::string_view num = body.substr(0, slash);
    const std::string_view den = slash == std::string_view::npos ? std::string_view{} : body.substr(slash + 1);
    if (!all_digits(num) || (slash != std::string_view::npos && !all_digits(den))) {
        throw ParseError("malformed scalar: '" + std::string(text) + "'");
    }
    mpz_class n(std::string(num), 10);
    mpz_class d = den.empty() ? mpz_class(1) : mpz_class(std::string(den), 10);
    if (d == 0) throw ParseError("zero denominator in scalar: '" + std::string(text) + "'");
    if (negative) n = -n;
    mpq_class q(n, d);
    q.canonicalize();
    return Scalar(std::move(q));
}

bool numden_less(const Scalar& l, const Scalar& r) {
    const int c = cmp(l.raw().get_num(), r.raw().get_num());
    if (c != 0) return c < 0;
    return cmp(l.raw().get_den(), r.raw().get_den()) < 0;
}

long binom(long n, long k) {
    if (k < 0 || k > n) return 0;
    long r = 1;
    for (long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

}  // namespace dlower
