#include "dlower/data.hpp"

namespace dlower {

Data::Data(std::vector<Scalar> a, std::vector<Scalar> b) : a_(std::move(a)), b_(std::move(b)) {
    if (a_.size() != b_.size()) {
        throw std::invalid_argument("data sequences differ in length: " + std::to_string(a_.size()) + " vs " +
                                    std::to_string(b_.size()));
    }
    if (a_.empty()) throw std::invalid_argument("data sequences must be nonempty");
}

void validate(const Data& data) {
    Scalar diff(0);
    for (std::size_t i = 1; i <= data.size(); ++i) {
        diff += data.a()[i - 1] - data.b()[i - 1];
        if (diff.is_zero()) throw DegenerateData(i);
    }
}

namespace {

Poly root_product(const std::vector<Scalar>& roots, std::size_t i) {
    if (i > roots.size()) throw std::out_of_range("basis index " + std::to_string(i) + " exceeds N");
    Poly p = Poly::constant(Scalar(1));
    for (std::size_t h = 0; h < i; ++h) p = p * Poly::linear_root(roots[h]);
    return p;
}

std::vector<Poly> root_products(const std::vector<Scalar>& roots) {
    std::vector<Poly> out;
    out.reserve(roots.size() + 1);
    out.push_back(Poly::constant(Scalar(1)));
    for (const auto& r : roots) out.push_back(out.back() * Poly::linear_root(r));
    return out;
}

}  // namespace

Poly tau(const Data& data, std::size_t i) { return root_product(data.a(), i); }
Poly eta(const Data& data, std::size_t i) { return root_product(data.b(), i); }
std::vector<Poly> tau_basis(const Data& data) { return root_products(data.a()); }
std::vector<Poly> eta_basis(const Data& data) { return root_products(data.b()); }

Scalar VarthetaTable::rising_product(std::size_t i) const {
    Scalar p(1);
    for (std::size_t k = 1; k <= i; ++k) p *= values.at(k);
    return p;
}

Scalar VarthetaTable::falling_product(std::size_t j, std::size_t i) const {
    Scalar p(1);
    for (std::size_t k = 0; k < i; ++k) p *= values.at(j - k);
    return p;
}

VarthetaTable vartheta(const Data& data) {
    validate(data);
    const Scalar base = data.a()[0] - data.b()[0];
    VarthetaTable t;
    t.values.reserve(data.size() + 1);
    Scalar diff(0);
    t.values.push_back(diff);
    for (std::size_t i = 0; i < data.size(); ++i) {
        diff += data.a()[i] - data.b()[i];
        t.values.push_back(diff / base);
    }
    return t;
}

Scalar bracket(const VarthetaTable& table, std::size_t j, std::size_t i) {
    if (i > j || j >= table.size()) {
        throw std::out_of_range("bracket index out of range: (" + std::to_string(j) + ", " + std::to_string(i) + ")");
    }
    return table.falling_product(j, i) / table.rising_product(i);
}

Scalar bracket(const Data& data, std::size_t j, std::size_t i) { return bracket(vartheta(data), j, i); }

Data affine(const Data& data, const Scalar& s, const Scalar& t) {
    if (s.is_zero()) throw std::invalid_argument("affine: s must be nonzero");
    std::vector<Scalar> a;
    std::vector<Scalar> b;
    a.reserve(data.size());
    b.reserve(data.size());
    for (std::size_t i = 0; i < data.size(); ++i) {
        a.push_back(s * data.a()[i] + t);
        b.push_back(s * data.b()[i] + t);
    }
    return {std::move(a), std::move(b)};
}

AffineMap affine_normalizer(const Data& data, const Scalar& a0_target, const Scalar& b0_target) {
    if (a0_target == b0_target) throw std::invalid_argument("affine_normalizer: targets must be distinct");
    const Scalar& a0 = data.a()[0];
    const Scalar& b0 = data.b()[0];
    const Scalar denom = a0 - b0;
    return {(a0_target - b0_target) / denom, (a0 * b0_target - a0_target * b0) / denom};
}

Data extend(const Data& data, const Scalar& aN, const Scalar& bN) {
    auto a = data.a();
    auto b = data.b();
    a.push_back(aN);
    b.push_back(bN);
    return {std::move(a), std::move(b)};
}

bool extend_check(const Data& data, const Scalar& aN, const Scalar& bN) {
    validate(data);
    const Data ext = extend(data, aN, bN);
    validate(ext);  // only the new prefix can fail here

    const std::size_t n = data.size();
    const auto& a = ext.a();
    const auto& b = ext.b();
    // d[h] = a_h - b_h on the extended data
    std::vector<Scalar> d(n + 1);
    for (std::size_t h = 0; h <= n; ++h) d[h] = a[h] - b[h];
    auto window = [&](std::size_t lo, std::size_t hi) {
        Scalar s(0);
        for (std::size_t h = lo; h <= hi; ++h) s += d[h];
        return s;
    };

    const Scalar& a0 = a[0];
    const Scalar& b0 = b[0];
    Scalar eta_at_a0(1);
    Scalar tau_at_b0(1);
    for (std::size_t i = 0; i < n; ++i) {
        if (i > 0) {
            eta_at_a0 *= a0 - b[i - 1];
            tau_at_b0 *= b0 - a[i - 1];
        }
        const Scalar head = window(0, i);
        const Scalar tail = window(n - i, n);
        if (!eta_at_a0.is_zero() && head * (a[n - i] - b[n]) != (a0 - b[i]) * tail) return false;
        // Same equation with the roles of a and b exchanged; sums flip sign.
        if (!tau_at_b0.is_zero() && -head * (b[n - i] - a[n]) != -(b0 - a[i]) * tail) return false;
    }
    return true;
}

}  // namespace dlower
