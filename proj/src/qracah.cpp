#include "dlower/qracah.hpp"

#include <algorithm>
#include <functional>

#include "dlower/lowering.hpp"

namespace dlower {

namespace {

long c2(long i) { return i * (i - 1) / 2; }

Scalar neg_one_pow(long e) { return (e % 2 == 0) ? Scalar(1) : Scalar(-1); }

Matrix inv_or_throw(const Matrix& m, const std::string& what) {
    auto r = inverse(m);
    if (!r) throw InternalDisagreement("singular matrix: " + what);
    return *std::move(r);
}

IdentityResult compare(std::string id, const Matrix& l, const Matrix& r,
                       std::optional<std::size_t> cols = std::nullopt) {
    auto mm = first_mismatch(l, r, cols);
    return {std::move(id), !mm.has_value(), mm};
}

IdentityResult truth(std::string id, std::optional<std::pair<std::size_t, std::size_t>> failure) {
    return {std::move(id), !failure.has_value(), failure};
}

std::optional<std::pair<std::size_t, std::size_t>> poly_mismatch(const Poly& l, const Poly& r, std::size_t index) {
    if (l == r) return std::nullopt;
    const std::size_t top = std::max(l.coeffs().size(), r.coeffs().size());
    for (std::size_t k = 0; k < top; ++k)
        if (l.coeff(k) != r.coeff(k)) return std::pair{index, k};
    return std::pair{index, std::size_t{0}};
}

IdentityResult compare_polys(std::string id, const std::vector<Poly>& l, const std::vector<Poly>& r) {
    if (l.size() != r.size()) return {std::move(id), false, std::pair{l.size(), r.size()}};
    for (std::size_t i = 0; i < l.size(); ++i)
        if (auto mm = poly_mismatch(l[i], r[i], i)) return {std::move(id), false, mm};
    return {std::move(id), true, std::nullopt};
}

std::vector<Poly> combine_columns(const Matrix& t, const std::vector<Poly>& basis) {
    std::vector<Poly> out;
    out.reserve(t.cols());
    for (std::size_t j = 0; j < t.cols(); ++j) {
        Poly p;
        for (std::size_t i = 0; i < t.rows(); ++i)
            if (!t(i, j).is_zero()) p += basis[i] * t(i, j);
        out.push_back(std::move(p));
    }
    return out;
}

Matrix coords_matrix(const std::vector<Poly>& polys, const std::vector<Poly>& basis) {
    Matrix m(basis.size(), polys.size());
    for (std::size_t j = 0; j < polys.size(); ++j) m.set_column(j, coords_in_basis(polys[j], basis).d);
    return m;
}

struct Exps {
    Matrix ea;   // exp_q(a^{-1} xi psi)
    Matrix eb;   // exp_q(b^{-1} xi psi)
    Matrix eia;  // exp_{1/q}(-a^{-1} xi psi)
    Matrix eib;  // exp_{1/q}(-b^{-1} xi psi)
};

Exps exps(const QRacahParams& p) {
    const Matrix psi = psi_hat(p);
    const Matrix ta = psi * (p.a().inverse() * p.xi());
    const Matrix tb = psi * (p.b().inverse() * p.xi());
    return {expq_nilpotent(ta, p.q()), expq_nilpotent(tb, p.q()), expq_inv_nilpotent(ta, p.q()),
            expq_inv_nilpotent(tb, p.q())};
}

Matrix diag_powers(const Scalar& q, std::size_t n, long sign) {
    std::vector<Scalar> d;
    d.reserve(n + 1);
    for (std::size_t i = 0; i <= n; ++i) d.push_back(q.pow(sign * static_cast<long>(i)));
    return Matrix::diagonal(d);
}

// Append a zero column so products with (N+1)x(N+1) matrices line up.
Matrix pad_square(const Matrix& a) {
    Matrix out(a.rows(), a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = a(i, j);
    return out;
}

Matrix psi_geometric(const Matrix& psi, const Scalar& ratio, std::size_t from) {
    const std::size_t n = psi.rows();
    Matrix acc(n, n);
    Matrix power = Matrix::identity(n);
    Scalar c(1);
    for (std::size_t i = 0; i < n; ++i) {
        if (i >= from) acc += power * c;
        power = power * psi;
        c *= ratio;
    }
    return acc;
}

// Shared by the direct and inverted forms of the K/B commutation relations.
void kb_relations(Report& out, const std::string& prefix, const Scalar& q, const Scalar& a, const Scalar& b,
                  const Matrix& k, const Matrix& bm, const Matrix& ki, const Matrix& bi) {
    const std::size_t n = k.rows();
    const Matrix id = Matrix::identity(n);
    const Matrix zero(n, n);
    const Matrix bkab = k * b - bm * a;
    const Matrix kmb = k - bm;
    out.push_back(compare(prefix + "bK_minus_aB_q_commutes_with_K_minus_B", bkab * kmb, kmb * bkab * q));

    const Scalar qm1 = q - 1;
    const Matrix quad = bm * bm * a - bm * k * ((b * q - a) / qm1) - k * bm * ((a * q - b) / qm1) + k * k * b;
    out.push_back(compare(prefix + "KB_quadratic_relation", quad, zero));

    const Matrix kbi = k * bi;
    const Matrix bki = bm * ki;
    const Matrix kib = ki * bm;
    const Matrix bik = bi * k;
    out.push_back(compare(prefix + "KB_factored_relation_1", (id * b - kib * a) * (id - kbi),
                          (id - kib) * (id * a - kbi * b) * q));
    out.push_back(compare(prefix + "KB_factored_relation_2", (id * a - bik * b) * (id - kbi),
                          (id - bik) * (id * a - kbi * b) * q));
    out.push_back(compare(prefix + "KB_factored_relation_3", (id * a - bik * b) * (id - bki),
                          (id - bik) * (id * b - bki * a) * q));
    out.push_back(compare(prefix + "KB_factored_relation_4", (id * b - kib * a) * (id - bki),
                          (id - kib) * (id * b - bki * a) * q));
}

}  // namespace

QRacahParams::QRacahParams(Scalar q, Scalar a, Scalar b, std::size_t n)
    : q_(std::move(q)), a_(std::move(a)), b_(std::move(b)), n_(n) {
    if (n_ == 0) throw InvalidParams("N must be positive");
    if (q_.is_zero()) throw InvalidParams("invariant q != 0 violated");
    if (a_.is_zero()) throw InvalidParams("invariant a != 0 violated");
    if (b_.is_zero()) throw InvalidParams("invariant b != 0 violated");
    if (a_ == b_) throw InvalidParams("invariant a != b violated");
    for (std::size_t i = 1; i <= n_; ++i) {
        const auto li = static_cast<long>(i);
        if (q_.pow(li).is_one()) throw InvalidParams("invariant q^i != 1 violated at i=" + std::to_string(i));
        if ((a_ * b_ * q_.pow(li - 1)).is_one()) {
            throw InvalidParams("invariant a*b*q^(i-1) != 1 violated at i=" + std::to_string(i));
        }
    }
}

QRacahParams QRacahParams::inverted() const { return {q_.inverse(), a_.inverse(), b_.inverse(), n_}; }

Data qracah_data(const QRacahParams& p) {
    std::vector<Scalar> a;
    std::vector<Scalar> b;
    for (std::size_t i = 0; i < p.n(); ++i) {
        const auto li = static_cast<long>(i);
        const Scalar qi = p.q().pow(li);
        const Scalar qmi = p.q().pow(-li);
        a.push_back(p.a() * qi + p.a().inverse() * qmi);
        b.push_back(p.b() * qi + p.b().inverse() * qmi);
    }
    return {std::move(a), std::move(b)};
}

Scalar q_pochhammer(const Scalar& alpha, const Scalar& q, std::size_t i) {
    Scalar acc(1);
    Scalar term = alpha;
    for (std::size_t k = 0; k < i; ++k) {
        acc *= Scalar(1) - term;
        term *= q;
    }
    return acc;
}

Scalar vartheta_closed(const QRacahParams& p, std::size_t i) {
    const auto li = static_cast<long>(i);
    const Scalar& q = p.q();
    const Scalar ab = p.a() * p.b();
    return (Scalar(1) - q.pow(li)) / (Scalar(1) - q) * (Scalar(1) - ab * q.pow(li - 1)) / (Scalar(1) - ab) *
           q.pow(1 - li);
}

Scalar vartheta_closed_inverted(const QRacahParams& p, std::size_t i) {
    const auto li = static_cast<long>(i);
    const Scalar& q = p.q();
    const Scalar abi = (p.a() * p.b()).inverse();
    return (Scalar(1) - q.pow(-li)) / (Scalar(1) - q.inverse()) * (Scalar(1) - abi * q.pow(1 - li)) /
           (Scalar(1) - abi) * q.pow(li - 1);
}

std::pair<Scalar, Scalar> vartheta_products(const QRacahParams& p, std::size_t i, std::size_t j) {
    if (i > j || j > p.n()) throw std::out_of_range("vartheta_products: need 0 <= i <= j <= N");
    const auto li = static_cast<long>(i);
    const auto lj = static_cast<long>(j);
    const Scalar& q = p.q();
    const Scalar ab = p.a() * p.b();
    const Scalar abi = ab.inverse();
    const Scalar asc = q_pochhammer(q, q, i) * q_pochhammer(ab, q, i) * q.pow(-c2(li)) /
                       ((Scalar(1) - q).pow(li) * (Scalar(1) - ab).pow(li));
    const Scalar desc = q_pochhammer(q.pow(-lj), q, i) * q_pochhammer(abi * q.pow(1 - lj), q, i) *
                        q.pow(li * (lj - li)) * q.pow(c2(li)) /
                        ((Scalar(1) - q.inverse()).pow(li) * (Scalar(1) - abi).pow(li));
    return {asc, desc};
}

Scalar bracket_closed(const QRacahParams& p, std::size_t j, std::size_t i) {
    if (i > j || j > p.n()) throw std::out_of_range("bracket_closed: need 0 <= i <= j <= N");
    const auto li = static_cast<long>(i);
    const auto lj = static_cast<long>(j);
    const Scalar& q = p.q();
    const Scalar ab = p.a() * p.b();
    return q_pochhammer(q.pow(-lj), q, i) * q_pochhammer(ab.inverse() * q.pow(1 - lj), q, i) * q.pow(li * lj) *
           ab.pow(li) / (q_pochhammer(q, q, i) * q_pochhammer(ab, q, i));
}

namespace {

LaurentPoly laurent_product(const Scalar& c, const Scalar& q, std::size_t i) {
    const auto li = static_cast<long>(i);
    LaurentPoly acc = LaurentPoly::constant(neg_one_pow(li) * c.pow(-li) * q.pow(-c2(li)));
    Scalar cq = c;
    for (std::size_t k = 0; k < i; ++k) {
        acc = acc * LaurentPoly(0, {Scalar(1), -cq}) * LaurentPoly(-1, {-cq, Scalar(1)});
        cq *= q;
    }
    return acc;
}

}  // namespace

LaurentPoly tau_laurent(const QRacahParams& p, std::size_t i) { return laurent_product(p.a(), p.q(), i); }
LaurentPoly eta_laurent(const QRacahParams& p, std::size_t i) { return laurent_product(p.b(), p.q(), i); }

Scalar tau_at_b0(const QRacahParams& p, std::size_t i) {
    const auto li = static_cast<long>(i);
    const Scalar& q = p.q();
    return neg_one_pow(li) * p.a().pow(-li) * q.pow(-c2(li)) * q_pochhammer(p.a() * p.b(), q, i) *
           q_pochhammer(p.a() / p.b(), q, i);
}

Scalar eta_at_a0(const QRacahParams& p, std::size_t i) {
    const auto li = static_cast<long>(i);
    const Scalar& q = p.q();
    return neg_one_pow(li) * p.b().pow(-li) * q.pow(-c2(li)) * q_pochhammer(p.a() * p.b(), q, i) *
           q_pochhammer(p.b() / p.a(), q, i);
}

Matrix expq_nilpotent(const Matrix& t, const Scalar& q) {
    if (!t.is_strictly_upper_triangular()) {
        throw std::invalid_argument("expq_nilpotent: matrix is not strictly upper triangular");
    }
    const std::size_t n = t.rows();
    Matrix acc = Matrix::identity(n);
    Matrix power = Matrix::identity(n);
    for (std::size_t i = 1; i < n; ++i) {
        power = power * t;
        const Scalar denom = q_pochhammer(q, q, i);
        if (denom.is_zero()) throw InvalidParams("expq_nilpotent: (q;q)_" + std::to_string(i) + " vanishes");
        const auto li = static_cast<long>(i);
        acc += power * (q.pow(c2(li)) * (Scalar(1) - q).pow(li) / denom);
    }
    return acc;
}

Matrix expq_inv_nilpotent(const Matrix& t, const Scalar& q) { return expq_nilpotent(t * Scalar(-1), q.inverse()); }

Matrix psi_hat(const QRacahParams& p) { return candidate_psi(qracah_data(p)).matrix; }

std::vector<Poly> w_basis(const QRacahParams& p) { return combine_columns(exps(p).eib, tau_basis(qracah_data(p))); }

std::vector<Poly> w_basis_via_eta(const QRacahParams& p) {
    return combine_columns(exps(p).eia, eta_basis(qracah_data(p)));
}

std::vector<Poly> wprime_basis(const QRacahParams& p) {
    return combine_columns(exps(p).ea, tau_basis(qracah_data(p)));
}

std::vector<Poly> wprime_basis_via_eta(const QRacahParams& p) {
    return combine_columns(exps(p).eb, eta_basis(qracah_data(p)));
}

Poly w_hypergeometric(const QRacahParams& p, std::size_t j, Basis which) {
    if (which == Basis::W) return w_hypergeometric(p.inverted(), j, Basis::WPrime);
    if (which != Basis::WPrime) throw std::invalid_argument("w_hypergeometric: basis must be w or wprime");
    if (j > p.n()) throw std::out_of_range("w_hypergeometric: j exceeds N");
    const Scalar& q = p.q();
    const Scalar& a = p.a();
    const Scalar ab = a * p.b();
    const auto lj = static_cast<long>(j);
    LaurentPoly sum;
    LaurentPoly pair = LaurentPoly::constant(Scalar(1));  // (ay;q)_i (ay^{-1};q)_i
    Scalar aq = a;
    for (std::size_t i = 0; i <= j; ++i) {
        const auto li = static_cast<long>(i);
        const Scalar c = q_pochhammer(q.pow(-lj), q, i) * q.pow(li) / (q_pochhammer(ab, q, i) * q_pochhammer(q, q, i));
        sum += pair * c;
        pair = pair * LaurentPoly(0, {Scalar(1), -aq}) * LaurentPoly(-1, {-aq, Scalar(1)});
        aq *= q;
    }
    sum *= a.pow(-lj) * q_pochhammer(ab, q, j);
    return pullback_symmetric(sum);
}

Matrix transition_from_tau(const QRacahParams& p, Basis basis) {
    const Data data = qracah_data(p);
    switch (basis) {
        case Basis::Tau: return Matrix::identity(p.n() + 1);
        case Basis::Eta: return delta(data).matrix;
        case Basis::W: return coords_matrix(w_basis_via_eta(p), tau_basis(data));
        case Basis::WPrime: return coords_matrix(wprime_basis_via_eta(p), tau_basis(data));
    }
    throw std::invalid_argument("bad basis");
}

KBM kbm_matrices(const QRacahParams& p, Basis basis) {
    const Matrix dg = diag_powers(p.q(), p.n(), -1);
    const Matrix d = transition_from_tau(p, Basis::Eta);
    const Matrix w = transition_from_tau(p, Basis::W);
    const Matrix k_tau = dg;
    const Matrix b_tau = d * dg * inv_or_throw(d, "tau to eta");
    const Matrix m_tau = w * dg * inv_or_throw(w, "tau to w");
    const Matrix t = transition_from_tau(p, basis);
    const Matrix ti = inv_or_throw(t, "tau to " + to_string(basis));
    return {{basis, ti * k_tau * t}, {basis, ti * b_tau * t}, {basis, ti * m_tau * t}};
}

OperatorMatrix a_matrix(const QRacahParams& p, Basis basis) {
    const Data data = qracah_data(p);
    std::vector<Poly> polys;
    switch (basis) {
        case Basis::Tau: polys = tau_basis(data); break;
        case Basis::Eta: polys = eta_basis(data); break;
        case Basis::W: polys = w_basis(p); break;
        case Basis::WPrime: polys = wprime_basis(p); break;
    }
    const std::size_t n = p.n();
    const Poly x = Poly::monomial(1);
    Matrix m(n + 1, n);
    for (std::size_t j = 0; j < n; ++j) m.set_column(j, coords_in_basis(x * polys[j], polys).d);
    return {basis, std::move(m)};
}

Report delta_factorization_check(const QRacahParams& p) {
    const Data data = qracah_data(p);
    const Exps e = exps(p);
    const Matrix d = delta(data).matrix;
    const Matrix di = delta_inv(data).matrix;
    Report out;
    out.push_back(compare("delta_factorization", d, e.ea * e.eib));
    out.push_back(compare("delta_inverse_factorization", di, e.eb * e.eia));
    out.push_back(compare("delta_factors_commute", e.ea * e.eib, e.eib * e.ea));
    out.push_back(compare("expq_inv_a_times_delta", e.eia * d, e.eib));
    out.push_back(compare("expq_b_times_delta", e.eb * d, e.ea));

    const std::size_t n = p.n();
    Matrix entries(n + 1, n + 1);
    Matrix inv_entries(n + 1, n + 1);
    for (std::size_t j = 0; j <= n; ++j) {
        for (std::size_t i = 0; i <= j; ++i) {
            entries(i, j) = eta_at_a0(p, j - i) * bracket_closed(p, j, i);
            inv_entries(i, j) = tau_at_b0(p, j - i) * bracket_closed(p, j, i);
        }
    }
    out.push_back(compare("delta_entries", e.ea * e.eib, entries));
    out.push_back(compare("delta_inverse_entries", e.eb * e.eia, inv_entries));
    return out;
}

Report w_three_term_check(const QRacahParams& p) {
    const std::size_t n = p.n();
    const Scalar& q = p.q();
    const Scalar& a = p.a();
    const Scalar& b = p.b();
    const Scalar ai = a.inverse();
    const Scalar bi = b.inverse();
    const auto w = w_basis(p);
    const auto wp = wprime_basis(p);
    const Poly x = Poly::monomial(1);
    Report out;

    std::optional<std::pair<std::size_t, std::size_t>> bad;
    for (std::size_t i = 0; i < n && !bad; ++i) {
        const auto li = static_cast<long>(i);
        Poly rhs = w[i + 1] + w[i] * (q.pow(-li) * (ai + bi));
        if (i > 0) rhs += w[i - 1] * ((Scalar(1) - q.pow(-li)) * (Scalar(1) - q.pow(1 - li) * ai * bi));
        bad = poly_mismatch(x * w[i], rhs, i);
    }
    out.push_back(truth("w_three_term", bad));

    bad.reset();
    for (std::size_t i = 0; i < n && !bad; ++i) {
        const auto li = static_cast<long>(i);
        Poly rhs = wp[i + 1] + wp[i] * (q.pow(li) * (a + b));
        if (i > 0) rhs += wp[i - 1] * ((Scalar(1) - q.pow(li)) * (Scalar(1) - q.pow(li - 1) * a * b));
        bad = poly_mismatch(x * wp[i], rhs, i);
    }
    out.push_back(truth("wprime_three_term", bad));

    out.push_back(compare_polys("w_routes_agree", w, w_basis_via_eta(p)));
    out.push_back(compare_polys("wprime_routes_agree", wp, wprime_basis_via_eta(p)));
    out.push_back(compare_polys("wprime_inversion_symmetry", wp, w_basis(p.inverted())));

    bad.reset();
    for (std::size_t i = 0; i <= n && !bad; ++i)
        if (w[i].degree() != Degree(i) || !w[i].is_monic() || wp[i].degree() != Degree(i) || !wp[i].is_monic())
            bad = std::pair{i, i};
    out.push_back(truth("w_monic_graded", bad));

    // w_0, w_1, w_2 against their small-index forms
    const Data data = qracah_data(p);
    const auto taus = tau_basis(data);
    const auto etas = eta_basis(data);
    const Scalar xi = p.xi();
    std::vector<Poly> expect{Poly::constant(Scalar(1)), Poly(std::vector<Scalar>{-(ai + bi), Scalar(1)})};
    std::vector<Poly> via_tau{taus[0], taus[1] - taus[0] * (xi * bi)};
    std::vector<Poly> via_eta{etas[0], etas[1] - etas[0] * (xi * ai)};
    if (n >= 2) {
        const Scalar qi = q.inverse();
        const Scalar abq = Scalar(1) - a * b * q;
        expect.push_back(Poly(std::vector<Scalar>{-(ai + bi), Scalar(1)}) *
                             Poly(std::vector<Scalar>{-(qi * ai + qi * bi), Scalar(1)}) +
                         Poly::constant((qi - 1) * (Scalar(1) - ai * bi)));
        via_tau.push_back(taus[2] - taus[1] * ((qi + 1) * abq * bi) + taus[0] * (qi * xi * abq * bi * bi));
        via_eta.push_back(etas[2] - etas[1] * ((qi + 1) * abq * ai) + etas[0] * (qi * xi * abq * ai * ai));
    }
    const std::vector<Poly> head(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(expect.size()));
    out.push_back(compare_polys("w_small_index_forms", head, expect));
    out.push_back(compare_polys("w_small_index_tau_forms", head, via_tau));
    out.push_back(compare_polys("w_small_index_eta_forms", head, via_eta));

    // psi w_i = vartheta_i w_{i-1}
    const VarthetaTable vt = vartheta(data);
    const Matrix psi = psi_hat(p);
    bad.reset();
    for (std::size_t i = 0; i <= n && !bad; ++i) {
        const Poly image = BasisCoords{mat_vec(psi, coords_in_basis(w[i], taus).d)}.reconstruct(taus);
        const Poly expect_i = i == 0 ? Poly() : w[i - 1] * vt[i];
        bad = poly_mismatch(image, expect_i, i);
    }
    out.push_back(truth("psi_lowers_w", bad));
    return out;
}

Report w_hypergeometric_check(const QRacahParams& p) {
    std::vector<Poly> hw;
    std::vector<Poly> hwp;
    for (std::size_t j = 0; j <= p.n(); ++j) {
        hw.push_back(w_hypergeometric(p, j, Basis::W));
        hwp.push_back(w_hypergeometric(p, j, Basis::WPrime));
    }
    return {compare_polys("wprime_hypergeometric", wprime_basis(p), hwp),
            compare_polys("w_hypergeometric", w_basis(p), hw)};
}

Report kbm_closed_form_check(const QRacahParams& p) {
    const std::size_t n = p.n();
    const Scalar& q = p.q();
    const Scalar& a = p.a();
    const Scalar& b = p.b();
    const Scalar ab = a * b;
    const Scalar ai = a.inverse();
    const Scalar bi = b.inverse();

    // (-1)^{j-i} z^{i-j} (ab;q)_j (q;q)_j q^{C(i,2)-C(j,2)+e} / ((ab;q)_i (q;q)_i), e = +i or -j
    auto form = [&](const Scalar& z, std::size_t i, std::size_t j, bool plus_i) {
        const auto li = static_cast<long>(i);
        const auto lj = static_cast<long>(j);
        return neg_one_pow(lj - li) * z.pow(li - lj) * q_pochhammer(ab, q, j) * q_pochhammer(q, q, j) *
               q.pow(c2(li) - c2(lj) + (plus_i ? li : -lj)) / (q_pochhammer(ab, q, i) * q_pochhammer(q, q, i));
    };
    auto upper = [&](const Scalar& z, bool plus_i) {
        Matrix m(n + 1, n + 1);
        for (std::size_t j = 0; j <= n; ++j)
            for (std::size_t i = 0; i <= j; ++i) m(i, j) = form(z, i, j, plus_i);
        return m;
    };
    auto scaled_upper = [&](const Scalar& scale, const Scalar& z, bool plus_i, long diag_sign) {
        Matrix m(n + 1, n + 1);
        for (std::size_t j = 0; j <= n; ++j) {
            m(j, j) = q.pow(diag_sign * static_cast<long>(j));
            for (std::size_t i = 0; i < j; ++i) m(i, j) = scale * form(z, i, j, plus_i);
        }
        return m;
    };
    auto bidiagonal = [&](long diag_sign, const std::function<Scalar(long)>& super) {
        Matrix m(n + 1, n + 1);
        for (std::size_t i = 0; i <= n; ++i) {
            m(i, i) = q.pow(diag_sign * static_cast<long>(i));
            if (i > 0) m(i - 1, i) = super(static_cast<long>(i));
        }
        return m;
    };

    const KBM tau = kbm_matrices(p, Basis::Tau);
    const KBM eta = kbm_matrices(p, Basis::Eta);
    const KBM w = kbm_matrices(p, Basis::W);
    auto inv = [](const OperatorMatrix& m) { return inv_or_throw(m.matrix, "kbm inverse"); };
    const Matrix dg = diag_powers(q, n, -1);

    Report out;
    out.push_back(compare("K_diagonal_in_tau", tau.k.matrix, dg));
    out.push_back(compare("B_diagonal_in_eta", eta.b.matrix, dg));
    out.push_back(compare("M_diagonal_in_w", w.m.matrix, dg));
    out.push_back(compare("K_in_w", w.k.matrix, bidiagonal(-1, [&](long i) {
                              return (Scalar(1) - q.pow(-i)) * (a - bi * q.pow(1 - i));
                          })));
    out.push_back(compare("B_in_w", w.b.matrix, bidiagonal(-1, [&](long i) {
                              return (Scalar(1) - q.pow(-i)) * (b - ai * q.pow(1 - i));
                          })));
    out.push_back(compare("Minv_in_tau", inv(tau.m), bidiagonal(1, [&](long i) {
                              return (q.pow(i) - 1) * (a * q.pow(i - 1) - bi);
                          })));
    out.push_back(compare("Minv_in_eta", inv(eta.m), bidiagonal(1, [&](long i) {
                              return (q.pow(i) - 1) * (b * q.pow(i - 1) - ai);
                          })));
    out.push_back(compare("M_in_tau", tau.m.matrix, upper(b, false)));
    out.push_back(compare("Kinv_in_w", inv(w.k), upper(b, true)));
    out.push_back(compare("M_in_eta", eta.m.matrix, upper(a, false)));
    out.push_back(compare("Binv_in_w", inv(w.b), upper(a, true)));
    out.push_back(compare("K_in_eta", eta.k.matrix, scaled_upper((b - a) / b, a, false, -1)));
    out.push_back(compare("B_in_tau", tau.b.matrix, scaled_upper((a - b) / a, b, false, -1)));
    out.push_back(compare("Kinv_in_eta", inv(eta.k), scaled_upper((a - b) / a, b, true, 1)));
    out.push_back(compare("Binv_in_tau", inv(tau.b), scaled_upper((b - a) / b, a, true, 1)));
    return out;
}

Report relation_suite(const QRacahParams& p) {
    const std::size_t n = p.n();
    const Scalar& q = p.q();
    const Scalar& a = p.a();
    const Scalar& b = p.b();
    const Scalar qi = q.inverse();
    const Scalar ai = a.inverse();
    const Scalar bi = b.inverse();
    const Scalar ab = a * b;
    const Scalar xi = p.xi();
    const Matrix id = Matrix::identity(n + 1);
    const Matrix psi = psi_hat(p);
    const KBM tau = kbm_matrices(p, Basis::Tau);
    const Matrix& k = tau.k.matrix;
    const Matrix& bm = tau.b.matrix;
    const Matrix& m = tau.m.matrix;
    const Matrix ki = inv_or_throw(k, "K");
    const Matrix bmi = inv_or_throw(bm, "B");
    const Matrix mi = inv_or_throw(m, "M");
    const Data data = qracah_data(p);
    const Matrix d = delta(data).matrix;
    const Exps e = exps(p);
    Report out;

    out.push_back(compare("K_psi_q_commute", k * psi, psi * k * q));
    out.push_back(compare("B_psi_q_commute", bm * psi, psi * bm * q));
    out.push_back(compare("M_psi_q_commute", m * psi, psi * m * q));
    out.push_back(compare("B_delta_eq_delta_K", bm * d, d * k));
    out.push_back(compare("K_expq_b_intertwines_M", k * e.eb, e.eb * m));
    out.push_back(compare("B_expq_a_intertwines_M", bm * e.ea, e.ea * m));

    out.push_back(compare("K_Minv_linear_in_psi", k * mi, id + psi * ((q - 1) * (a - bi))));
    out.push_back(compare("Minv_K_linear_in_psi", mi * k, id + psi * ((qi - 1) * (bi - a))));
    out.push_back(compare("B_Minv_linear_in_psi", bm * mi, id + psi * ((q - 1) * (b - ai))));
    out.push_back(compare("Minv_B_linear_in_psi", mi * bm, id + psi * ((qi - 1) * (ai - b))));

    const Scalar qm1sq = (q - 1) * (q - 1);
    out.push_back(compare("psi_from_K_M_commutator", psi, (mi * k - k * mi) * (b * q / xi / qm1sq)));
    out.push_back(compare("psi_from_B_M_commutator", psi, (mi * bm - bm * mi) * (a * q / xi / qm1sq)));
    out.push_back(compare("M_from_K_and_B", m, (k * b - bm * a) * (b - a).inverse()));

    auto invertible = [](const std::string& id_, const Matrix& x) {
        return truth(id_, inverse(x).has_value() ? std::nullopt
                                                : std::optional<std::pair<std::size_t, std::size_t>>{{0, 0}});
    };
    out.push_back(invertible("denominator_aI_minus_bBinvK_invertible", id * a - bmi * k * b));
    out.push_back(invertible("denominator_bI_minus_aKinvB_invertible", id * b - ki * bm * a));
    out.push_back(invertible("denominator_ainvI_minus_binvBKinv_invertible", id * ai - bm * ki * bi));
    out.push_back(invertible("denominator_binvI_minus_ainvKBinv_invertible", id * bi - k * bmi * ai));

    const Matrix kmb_scaled = (k - bm) * (ab / xi / (a - b));
    out.push_back(compare("psi_M_from_K_minus_B", psi * m, kmb_scaled * (Scalar(1) - q).inverse()));
    out.push_back(compare("M_psi_from_K_minus_B", m * psi, kmb_scaled * (q / (Scalar(1) - q))));

    kb_relations(out, "", q, a, b, k, bm, ki, bmi);
    kb_relations(out, "inverted_", qi, ai, bi, ki, bmi, k, bm);

    // ratio forms, each denominator inverted as a nilpotent series
    auto ratio = [&](const Scalar& num, const Scalar& den, Report& sink, const std::string& id_, const Matrix& lhs) {
        const Matrix top = id + psi * num;
        const Matrix bottom = id + psi * den;
        sink.push_back(compare(id_, lhs, top * nilpotent_inverse(psi * (-den))));
        sink.push_back(compare(id_ + "_terms_commute", top * bottom, bottom * top));
    };
    const Matrix kbi = k * bmi;
    const Matrix bki = bm * ki;
    const Matrix kib = ki * bm;
    const Matrix bik = bmi * k;
    ratio((q - 1) * (a - bi), (q - 1) * (b - ai), out, "K_Binv_ratio", kbi);
    ratio((q - 1) * (b - ai), (q - 1) * (a - bi), out, "B_Kinv_ratio", bki);
    ratio((qi - 1) * (ai - b), (qi - 1) * (bi - a), out, "Kinv_B_ratio", kib);
    ratio((qi - 1) * (bi - a), (qi - 1) * (ai - b), out, "Binv_K_ratio", bik);

    {
        const std::vector<const Matrix*> family{&psi, &kbi, &bki, &kib, &bik};
        std::optional<std::pair<std::size_t, std::size_t>> bad;
        for (std::size_t i = 0; i < family.size() && !bad; ++i)
            for (std::size_t j = i + 1; j < family.size() && !bad; ++j)
                bad = first_mismatch(*family[i] * *family[j], *family[j] * *family[i]);
        out.push_back(truth("psi_and_KB_ratios_commute", bad));
    }

    const Scalar c1 = (q - 1) * xi;
    const Scalar c2_ = (qi - 1) * (Scalar(1) - ai * bi);
    out.push_back(compare("psi_ratio_K_Binv", psi * (id * bi - kbi * ai) * c1, id - kbi));
    out.push_back(compare("psi_ratio_B_Kinv", psi * (id * ai - bki * bi) * c1, id - bki));
    out.push_back(compare("psi_ratio_Kinv_B", psi * (id * b - kib * a) * c2_, id - kib));
    out.push_back(compare("psi_ratio_Binv_K", psi * (id * a - bik * b) * c2_, id - bik));

    out.push_back(compare("q_weyl_M_K", (mi * k * q - k * mi) * (q - 1).inverse(), id));
    out.push_back(compare("q_weyl_M_B", (mi * bm * q - bm * mi) * (q - 1).inverse(), id));

    // psi_hat represents psi in every basis
    for (Basis basis : {Basis::Eta, Basis::W, Basis::WPrime}) {
        const Matrix t = transition_from_tau(p, basis);
        out.push_back(compare("psi_hat_in_" + to_string(basis), inv_or_throw(t, "transition") * psi * t, psi));
    }

    // transition matrices
    const auto taus = tau_basis(data);
    const auto etas = eta_basis(data);
    const auto w = w_basis(p);
    out.push_back(compare("transition_tau_to_w", coords_matrix(w_basis_via_eta(p), taus), e.eib));
    out.push_back(compare("transition_w_to_tau", coords_matrix(taus, w), e.eb));
    out.push_back(compare("transition_eta_to_w", coords_matrix(w, etas), e.eia));
    out.push_back(compare("transition_w_to_eta", coords_matrix(etas, w), e.ea));
    out.push_back(compare("transition_eta_to_tau", coords_matrix(taus, etas), e.eb * e.eia));

    // exp entries
    for (const auto& [tag, z] : {std::pair{std::string("a"), ai}, std::pair{std::string("b"), bi}}) {
        Matrix fwd(n + 1, n + 1);
        Matrix bwd(n + 1, n + 1);
        for (std::size_t j = 0; j <= n; ++j) {
            for (std::size_t i = 0; i <= j; ++i) {
                const auto li = static_cast<long>(i);
                const auto lj = static_cast<long>(j);
                const Scalar common = z.pow(lj - li) * q_pochhammer(ab, q, j) * q_pochhammer(q.pow(-lj), q, i) /
                                      (q_pochhammer(ab, q, i) * q_pochhammer(q, q, i));
                fwd(i, j) = neg_one_pow(li) * common * q.pow(li + c2(li));
                bwd(i, j) = neg_one_pow(lj) * common * q.pow(li * lj - c2(lj));
            }
        }
        const Matrix t = psi * (z * xi);
        out.push_back(compare("expq_entries_" + tag, expq_nilpotent(t, q), fwd));
        out.push_back(compare("expq_inverse_entries_" + tag, expq_inv_nilpotent(t, q), bwd));
    }

    // multiplication by x
    const Matrix a_tau = a_matrix(p, Basis::Tau).matrix;
    const Matrix a_eta = a_matrix(p, Basis::Eta).matrix;
    {
        Matrix shape_tau(n + 1, n);
        Matrix shape_eta(n + 1, n);
        for (std::size_t j = 0; j < n; ++j) {
            shape_tau(j, j) = data.a()[j];
            shape_tau(j + 1, j) = Scalar(1);
            shape_eta(j, j) = data.b()[j];
            shape_eta(j + 1, j) = Scalar(1);
        }
        out.push_back(compare("A_tau_shape", a_tau, shape_tau));
        out.push_back(compare("A_eta_shape", a_eta, shape_eta));
        out.push_back(compare("A_eta_is_delta_conjugate", a_eta, delta_inv(data).matrix * a_tau * d.block(n, n)));
    }

    const Matrix am = pad_square(a_tau);
    const std::size_t v1 = n;      // columns 0..N-1
    const std::size_t v2 = n - 1;  // columns 0..N-2
    const Scalar qq = q + qi;
    const Scalar qd = q - qi;
    out.push_back(compare("A_K_relation", (k * am * q - am * k) * (q - 1).inverse(), k * k * ai + id * a, v1));
    out.push_back(compare("A_B_relation", (bm * am * q - am * bm) * (q - 1).inverse(), bm * bm * bi + id * b, v1));
    out.push_back(compare("A_psi_relation", psi * am * q - am * psi,
                          (mi * ((q + 1) * ab) - id * (q + ab)) * (ab - 1).inverse(), v1));
    out.push_back(compare("A_Minv_relation", (am * mi * q - mi * am) * (q - 1).inverse(),
                          id * (ai + bi) + psi * (qd * (Scalar(1) - ai * bi)), v1));
    const Scalar psi_coef = (Scalar(1) - q) * (Scalar(1) + qi * ab) / xi;
    out.push_back(compare("psi_psi_A_relation", psi * psi * am - psi * am * psi * qq + am * psi * psi, psi * psi_coef,
                          v1));
    out.push_back(compare("Minv_Minv_A_relation", mi * mi * am - mi * am * mi * qq + am * mi * mi,
                          mi * ((q - 1) * (qi - 1) * (ai + bi)), v1));
    out.push_back(compare("A_A_psi_relation", am * am * psi - am * psi * am * qq + psi * am * am + psi * (qd * qd),
                          am * psi_coef + id * (qd * (a + b) / xi), v2));
    out.push_back(compare("A_A_Minv_relation", am * am * mi - am * mi * am * qq + mi * am * am + mi * (qd * qd),
                          id * ((q - 1) * qd * (qi + ai * bi)) - am * (qi * (q - 1) * (q - 1) * (ai + bi)), v2));
    return out;
}

Report geometric_series_forms_check(const QRacahParams& p) {
    const Scalar& q = p.q();
    const Scalar& a = p.a();
    const Scalar& b = p.b();
    const Scalar qi = q.inverse();
    const Scalar base = -(Scalar(1) - q) * p.xi();  // (-1)(1-q)(1-ab)
    const Matrix psi = psi_hat(p);
    const Matrix id = Matrix::identity(p.n() + 1);
    const KBM tau = kbm_matrices(p, Basis::Tau);
    const Matrix& k = tau.k.matrix;
    const Matrix& bm = tau.b.matrix;
    const Matrix& m = tau.m.matrix;
    const Matrix ki = inv_or_throw(k, "K");
    const Matrix bmi = inv_or_throw(bm, "B");
    Report out;
    out.push_back(compare("M_Kinv_series", m * ki, psi_geometric(psi, base / b, 0)));
    out.push_back(compare("Kinv_M_series", ki * m, psi_geometric(psi, base * qi / b, 0)));
    out.push_back(compare("M_Binv_series", m * bmi, psi_geometric(psi, base / a, 0)));
    out.push_back(compare("Binv_M_series", bmi * m, psi_geometric(psi, base * qi / a, 0)));
    out.push_back(compare("K_Binv_series", k * bmi, id + psi_geometric(psi, base / a, 1) * ((b - a) / b)));
    out.push_back(compare("B_Kinv_series", bm * ki, id + psi_geometric(psi, base / b, 1) * ((a - b) / a)));
    out.push_back(compare("Kinv_B_series", ki * bm, id + psi_geometric(psi, base * qi / b, 1) * ((a - b) / a)));
    out.push_back(compare("Binv_K_series", bmi * k, id + psi_geometric(psi, base * qi / a, 1) * ((b - a) / b)));
    out.push_back(compare("nilpotent_geometric_inverse", (id - psi) * nilpotent_inverse(psi), id));
    return out;
}

Report closed_form_check(const QRacahParams& p) {
    const std::size_t n = p.n();
    const Scalar& q = p.q();
    const Scalar& a = p.a();
    const Scalar& b = p.b();
    const Data data = qracah_data(p);
    const VarthetaTable vt = vartheta(data);
    using Where = std::optional<std::pair<std::size_t, std::size_t>>;
    Report out;

    auto scan = [&](const std::string& id, std::size_t lo, std::size_t hi, const std::function<bool(std::size_t)>& ok) {
        Where bad;
        for (std::size_t i = lo; i <= hi && !bad; ++i)
            if (!ok(i)) bad = std::pair{i, i};
        out.push_back(truth(id, bad));
    };
    auto scan2 = [&](const std::string& id, const std::function<bool(std::size_t, std::size_t)>& ok) {
        Where bad;
        for (std::size_t j = 0; j <= n && !bad; ++j)
            for (std::size_t i = 0; i <= j && !bad; ++i)
                if (!ok(i, j)) bad = std::pair{i, j};
        out.push_back(truth(id, bad));
    };

    scan("vartheta_closed", 0, n, [&](std::size_t i) { return vartheta_closed(p, i) == vt[i]; });
    scan("vartheta_closed_inverted", 0, n, [&](std::size_t i) { return vartheta_closed_inverted(p, i) == vt[i]; });
    scan2("vartheta_products", [&](std::size_t i, std::size_t j) {
        const auto [asc, desc] = vartheta_products(p, i, j);
        return asc == vt.rising_product(i) && desc == vt.falling_product(j, i);
    });
    scan2("bracket_closed", [&](std::size_t i, std::size_t j) { return bracket_closed(p, j, i) == bracket(vt, j, i); });
    scan("tau_laurent", 0, n, [&](std::size_t i) { return tau_laurent(p, i) == embed_symmetric(tau(data, i)); });
    scan("eta_laurent", 0, n, [&](std::size_t i) { return eta_laurent(p, i) == embed_symmetric(eta(data, i)); });
    scan("tau_at_b0", 0, n, [&](std::size_t i) { return tau_at_b0(p, i) == tau(data, i)(data.b()[0]); });
    scan("eta_at_a0", 0, n, [&](std::size_t i) { return eta_at_a0(p, i) == eta(data, i)(data.a()[0]); });

    const Scalar qd = q - q.inverse();
    if (n >= 2) {
        scan("data_differences", 1, n - 1, [&](std::size_t i) {
            const auto li = static_cast<long>(i);
            const auto& as = data.a();
            const auto& bs = data.b();
            return q * as[i] - as[i - 1] == qd * a * q.pow(li) && q * bs[i] - bs[i - 1] == qd * b * q.pow(li) &&
                   as[i] - as[i - 1] == (q - 1) * (a * q.pow(li - 1) - a.inverse() * q.pow(-li)) &&
                   bs[i] - bs[i - 1] == (q - 1) * (b * q.pow(li - 1) - b.inverse() * q.pow(-li)) &&
                   as[i] - q * as[i - 1] == (Scalar(1) - q * q) * a.inverse() * q.pow(-li) &&
                   bs[i] - q * bs[i - 1] == (Scalar(1) - q * q) * b.inverse() * q.pow(-li);
        });
    }
    scan("data_partial_sums", 0, n, [&](std::size_t i) {
        const auto li = static_cast<long>(i);
        Scalar sa(0);
        Scalar sb(0);
        for (std::size_t h = 0; h < i; ++h) {
            sa += data.a()[h];
            sb += data.b()[h];
        }
        const Scalar f = (Scalar(1) - q.pow(li)) / (Scalar(1) - q);
        return sa == f * (a + a.inverse() * q.pow(1 - li)) && sb == f * (b + b.inverse() * q.pow(1 - li));
    });
    scan("vartheta_differences", 0, n - 1, [&](std::size_t i) {
        const auto li = static_cast<long>(i);
        const Scalar ab = a * b;
        const Scalar xi = p.xi();
        return q * vt[i + 1] - vt[i] == (q + ab - (q + 1) * ab * q.pow(li)) / xi &&
               vt[i + 1] - vt[i] == (q.pow(-li) - ab * q.pow(li)) / xi &&
               vt[i + 1] - q * vt[i] == ((Scalar(1) + q) * q.pow(-li) - q - ab) / xi;
    });
    scan2("q_integer_identity", [&](std::size_t i, std::size_t j) { return q_integer_identity(q, i, j); });
    scan("q_binomial_instance", 0, n, [&](std::size_t j) {
        return q_binomial_identity(b / a * q.pow(static_cast<long>(j)), q, j);
    });
    out.push_back(truth("data_inversion_symmetry", qracah_data(p) == qracah_data(p.inverted())
                                                      ? Where{}
                                                      : Where{std::pair{std::size_t{0}, std::size_t{0}}}));

    const Matrix t = psi_hat(p) * (a.inverse() * p.xi());
    const Matrix id = Matrix::identity(n + 1);
    out.push_back(compare("expq_shift_identity", (id - t * (q - 1)) * expq_nilpotent(t * q, q), expq_nilpotent(t, q)));
    out.push_back(compare("expq_inverse_pair", expq_nilpotent(t, q) * expq_inv_nilpotent(t, q), id));
    {
        Matrix series(n + 1, n + 1);
        Matrix power = id;
        for (std::size_t i = 0; i <= n; ++i) {
            const auto li = static_cast<long>(i);
            series += power * (neg_one_pow(li) * (Scalar(1) - q).pow(li) / q_pochhammer(q, q, i));
            power = power * t;
        }
        out.push_back(compare("expq_inverse_series", expq_inv_nilpotent(t, q), series));
    }
    return out;
}

Report full_suite(const QRacahParams& p) {
    Report out;
    for (auto part : {delta_factorization_check(p), w_three_term_check(p), w_hypergeometric_check(p),
                      kbm_closed_form_check(p), relation_suite(p), geometric_series_forms_check(p),
                      closed_form_check(p)}) {
        out.insert(out.end(), part.begin(), part.end());
    }
    return out;
}

bool q_integer_identity(const Scalar& q, std::size_t i, std::size_t j) {
    const auto li = static_cast<long>(i);
    const auto lj = static_cast<long>(j);
    return q_pochhammer(q.pow(-lj), q, i) * q_pochhammer(q, q, j - i) ==
           neg_one_pow(li) * q_pochhammer(q, q, j) * q.pow(c2(li)) * q.pow(-li * lj);
}

bool q_binomial_identity(const Scalar& z, const Scalar& q, std::size_t j) {
    const auto lj = static_cast<long>(j);
    Scalar sum(0);
    for (std::size_t i = 0; i <= j; ++i)
        sum += q_pochhammer(q.pow(-lj), q, i) * z.pow(static_cast<long>(i)) / q_pochhammer(q, q, i);
    return q_pochhammer(z * q.pow(-lj), q, j) == sum;
}

}  // namespace dlower
