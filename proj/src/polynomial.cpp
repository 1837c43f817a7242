#include "dlower/polynomial.hpp"

#include <algorithm>
#include <sstream>

namespace dlower {

// ---------------------------------------------------------------- Poly

Poly::Poly(std::vector<Scalar> coeffs) : c_(std::move(coeffs)) { trim(); }

Poly Poly::constant(const Scalar& c) { return Poly(std::vector<Scalar>{c}); }

Poly Poly::monomial(std::size_t k, const Scalar& c) {
    std::vector<Scalar> v(k + 1);
    v[k] = c;
    return Poly(std::move(v));
}

Poly Poly::linear_root(const Scalar& c) { return Poly(std::vector<Scalar>{-c, Scalar(1)}); }

void Poly::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Degree Poly::degree() const noexcept {
    if (c_.empty()) return std::nullopt;
    return c_.size() - 1;
}

Scalar Poly::coeff(std::size_t k) const { return k < c_.size() ? c_[k] : Scalar(0); }

Scalar Poly::operator()(const Scalar& at) const {
    Scalar acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * at + *it;
    return acc;
}

Poly& Poly::operator+=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
}

Poly& Poly::operator*=(const Scalar& s) {
    if (s.is_zero()) {
        c_.clear();
        return *this;
    }
    for (auto& c : c_) c *= s;
    return *this;
}

Poly operator*(const Poly& l, const Poly& r) {
    if (l.is_zero() || r.is_zero()) return {};
    std::vector<Scalar> out(l.c_.size() + r.c_.size() - 1);
    for (std::size_t i = 0; i < l.c_.size(); ++i) {
        if (l.c_[i].is_zero()) continue;
        for (std::size_t j = 0; j < r.c_.size(); ++j) out[i + j] += l.c_[i] * r.c_[j];
    }
    return Poly(std::move(out));
}

std::string Poly::to_string() const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = c_.size(); k-- > 0;) {
        if (c_[k].is_zero()) continue;
        if (!first) os << " + ";
        first = false;
        os << "(" << c_[k] << ")";
        if (k > 0) os << "*x^" << k;
    }
    return os.str();
}

// ---------------------------------------------------------------- LaurentPoly

LaurentPoly::LaurentPoly(long low, std::vector<Scalar> coeffs) : low_(low), c_(std::move(coeffs)) { trim(); }

LaurentPoly LaurentPoly::constant(const Scalar& c) { return LaurentPoly(0, {c}); }

LaurentPoly LaurentPoly::term(long k, const Scalar& c) { return LaurentPoly(k, {c}); }

void LaurentPoly::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    std::size_t lead = 0;
    while (lead < c_.size() && c_[lead].is_zero()) ++lead;
    if (lead > 0) {
        c_.erase(c_.begin(), c_.begin() + static_cast<std::ptrdiff_t>(lead));
        low_ += static_cast<long>(lead);
    }
    if (c_.empty()) low_ = 0;
}

Scalar LaurentPoly::coeff(long k) const {
    if (c_.empty() || k < low_ || k > max_exponent()) return Scalar(0);
    return c_[static_cast<std::size_t>(k - low_)];
}

bool LaurentPoly::is_symmetric() const {
    if (c_.empty()) return true;
    if (low_ != -max_exponent()) return false;
    for (long k = low_; k <= max_exponent(); ++k) {
        if (coeff(k) != coeff(-k)) return false;
    }
    return true;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
    if (o.c_.empty()) return *this;
    if (c_.empty()) return *this = o;
    const long lo = std::min(low_, o.low_);
    const long hi = std::max(max_exponent(), o.max_exponent());
    std::vector<Scalar> out(static_cast<std::size_t>(hi - lo + 1));
    for (long k = lo; k <= hi; ++k) out[static_cast<std::size_t>(k - lo)] = coeff(k) + o.coeff(k);
    *this = LaurentPoly(lo, std::move(out));
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) { return *this += o * Scalar(-1); }

LaurentPoly& LaurentPoly::operator*=(const Scalar& s) {
    for (auto& c : c_) c *= s;
    trim();
    return *this;
}

LaurentPoly operator*(const LaurentPoly& l, const LaurentPoly& r) {
    if (l.c_.empty() || r.c_.empty()) return {};
    std::vector<Scalar> out(l.c_.size() + r.c_.size() - 1);
    for (std::size_t i = 0; i < l.c_.size(); ++i) {
        for (std::size_t j = 0; j < r.c_.size(); ++j) out[i + j] += l.c_[i] * r.c_[j];
    }
    return LaurentPoly(l.low_ + r.low_, std::move(out));
}

std::string LaurentPoly::to_string() const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (long k = max_exponent(); k >= low_; --k) {
        const Scalar c = coeff(k);
        if (c.is_zero()) continue;
        if (!first) os << " + ";
        first = false;
        os << "(" << c << ")";
        if (k != 0) os << "*y^" << k;
    }
    return os.str();
}

// ---------------------------------------------------------------- embedding

LaurentPoly embed_symmetric(const Poly& p) {
    const LaurentPoly x(-1, {Scalar(1), Scalar(0), Scalar(1)});
    LaurentPoly acc;
    const auto& c = p.coeffs();
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + LaurentPoly::constant(*it);
    return acc;
}

Poly pullback_symmetric(const LaurentPoly& l) {
    if (!l.is_symmetric()) throw std::domain_error("pullback of a non-symmetric Laurent polynomial: " + l.to_string());
    LaurentPoly rest = l;
    std::vector<Scalar> out;
    while (!rest.is_zero()) {
        const long d = rest.max_exponent();
        const Scalar c = rest.coeff(d);
        const auto k = static_cast<std::size_t>(d);
        if (out.size() <= k) out.resize(k + 1);
        out[k] = c;
        rest -= embed_symmetric(Poly::monomial(k, c));
    }
    return Poly(std::move(out));
}

// ---------------------------------------------------------------- coordinates

Poly BasisCoords::reconstruct(std::span<const Poly> basis) const {
    Poly acc;
    for (std::size_t i = 0; i < d.size() && i < basis.size(); ++i) {
        if (!d[i].is_zero()) acc += basis[i] * d[i];
    }
    return acc;
}

BasisCoords coords_in_basis(const Poly& p, std::span<const Poly> basis) {
    if (basis.empty()) throw std::invalid_argument("coords_in_basis: empty basis");
    const std::size_t n = basis.size() - 1;
    for (std::size_t i = 0; i <= n; ++i) {
        if (basis[i].degree() != Degree(i) || !basis[i].is_monic()) {
            throw std::invalid_argument("coords_in_basis: basis element " + std::to_string(i) +
                                        " is not monic of degree " + std::to_string(i));
        }
    }
    if (const auto deg = p.degree(); deg && *deg > n) {
        throw std::invalid_argument("coords_in_basis: degree " + std::to_string(*deg) + " exceeds basis size");
    }
    BasisCoords out{std::vector<Scalar>(n + 1)};
    Poly rest = p;
    for (std::size_t k = n + 1; k-- > 0;) {
        const Scalar lead = rest.coeff(k);
        if (lead.is_zero()) continue;
        out.d[k] = lead;
        rest -= basis[k] * lead;
    }
    return out;
}

}  // namespace dlower
