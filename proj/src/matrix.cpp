#include "dlower/matrix.hpp"

#include <algorithm>
#include <stdexcept>

namespace dlower {

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = Scalar(1);
    return m;
}

Matrix Matrix::diagonal(std::span<const Scalar> diag) {
    Matrix m(diag.size(), diag.size());
    for (std::size_t i = 0; i < diag.size(); ++i) m(i, i) = diag[i];
    return m;
}

std::vector<Scalar> Matrix::column(std::size_t j) const {
    std::vector<Scalar> v(rows_);
    for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
    return v;
}

void Matrix::set_column(std::size_t j, std::span<const Scalar> v) {
    if (v.size() != rows_) throw std::invalid_argument("set_column: length mismatch");
    for (std::size_t i = 0; i < rows_; ++i) (*this)(i, j) = v[i];
}

Matrix Matrix::block(std::size_t rows, std::size_t cols) const {
    if (rows > rows_ || cols > cols_) throw std::invalid_argument("block: out of range");
    Matrix out(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) out(i, j) = (*this)(i, j);
    return out;
}

bool Matrix::is_upper_triangular() const {
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_ && j < i; ++j)
            if (!(*this)(i, j).is_zero()) return false;
    return true;
}

bool Matrix::is_strictly_upper_triangular() const {
    if (!is_square()) return false;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j <= i; ++j)
            if (!(*this)(i, j).is_zero()) return false;
    return true;
}

Matrix& Matrix::operator+=(const Matrix& o) {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix sum: shape mismatch");
    for (std::size_t k = 0; k < m_.size(); ++k) m_[k] += o.m_[k];
    return *this;
}

Matrix& Matrix::operator-=(const Matrix& o) {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix difference: shape mismatch");
    for (std::size_t k = 0; k < m_.size(); ++k) m_[k] -= o.m_[k];
    return *this;
}

Matrix& Matrix::operator*=(const Scalar& s) {
    for (auto& v : m_) v *= s;
    return *this;
}

Matrix operator*(const Matrix& l, const Matrix& r) {
    if (l.cols_ != r.rows_) throw std::invalid_argument("matrix product: shape mismatch");
    Matrix out(l.rows_, r.cols_);
    for (std::size_t i = 0; i < l.rows_; ++i) {
        for (std::size_t k = 0; k < l.cols_; ++k) {
            const Scalar& lik = l(i, k);
            if (lik.is_zero()) continue;
            for (std::size_t j = 0; j < r.cols_; ++j) {
                if (!r(k, j).is_zero()) out(i, j) += lik * r(k, j);
            }
        }
    }
    return out;
}

std::vector<Scalar> mat_vec(const Matrix& m, std::span<const Scalar> v) {
    if (v.size() != m.cols()) throw std::invalid_argument("mat_vec: length mismatch");
    std::vector<Scalar> out(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (!v[j].is_zero()) out[i] += m(i, j) * v[j];
    return out;
}

std::optional<std::pair<std::size_t, std::size_t>> first_mismatch(const Matrix& l, const Matrix& r,
                                                                  std::optional<std::size_t> cols) {
    if (l.rows() != r.rows() || l.cols() != r.cols()) return std::pair{l.rows(), l.cols()};
    const std::size_t limit = cols ? std::min(*cols, l.cols()) : l.cols();
    for (std::size_t i = 0; i < l.rows(); ++i)
        for (std::size_t j = 0; j < limit; ++j)
            if (l(i, j) != r(i, j)) return std::pair{i, j};
    return std::nullopt;
}

RowEchelon row_reduce(Matrix m) {
    RowEchelon out;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        std::size_t piv = row;
        while (piv < m.rows() && m(piv, col).is_zero()) ++piv;
        if (piv == m.rows()) continue;
        if (piv != row)
            for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(piv, j), m(row, j));
        const Scalar inv = m(row, col).inverse();
        for (std::size_t j = 0; j < m.cols(); ++j) m(row, j) *= inv;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == row || m(i, col).is_zero()) continue;
            const Scalar f = m(i, col);
            for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) -= f * m(row, j);
        }
        out.pivots.push_back(col);
        ++row;
    }
    out.reduced = std::move(m);
    return out;
}

std::vector<std::vector<Scalar>> nullspace(const Matrix& m) {
    const RowEchelon re = row_reduce(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto p : re.pivots) is_pivot[p] = true;
    std::vector<std::vector<Scalar>> basis;
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) continue;
        std::vector<Scalar> v(m.cols());
        v[free] = Scalar(1);
        for (std::size_t r = 0; r < re.pivots.size(); ++r) v[re.pivots[r]] = -re.reduced(r, free);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<Matrix> inverse(const Matrix& m) {
    if (!m.is_square()) throw std::invalid_argument("inverse: matrix is not square");
    const std::size_t n = m.rows();
    if (n == 0) return Matrix();
    Matrix aug(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
        aug(i, n + i) = Scalar(1);
    }
    const RowEchelon re = row_reduce(std::move(aug));
    if (re.rank() < n || re.pivots[n - 1] != n - 1) return std::nullopt;
    Matrix out(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) out(i, j) = re.reduced(i, n + j);
    return out;
}

Matrix matrix_polynomial(const Matrix& t, std::span<const Scalar> coeffs) {
    if (!t.is_square()) throw std::invalid_argument("matrix_polynomial: matrix is not square");
    const Matrix id = Matrix::identity(t.rows());
    Matrix acc(t.rows(), t.cols());
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * t + id * *it;
    return acc;
}

Matrix matrix_power(const Matrix& m, std::size_t e) {
    Matrix acc = Matrix::identity(m.rows());
    for (std::size_t k = 0; k < e; ++k) acc = acc * m;
    return acc;
}

Matrix commutator(const Matrix& l, const Matrix& r) { return l * r - r * l; }

std::string to_string(Basis b) {
    switch (b) {
        case Basis::Tau: return "tau";
        case Basis::Eta: return "eta";
        case Basis::W: return "w";
        case Basis::WPrime: return "wprime";
    }
    return "?";
}

Basis parse_basis(std::string_view s) {
    if (s == "tau") return Basis::Tau;
    if (s == "eta") return Basis::Eta;
    if (s == "w") return Basis::W;
    if (s == "wprime") return Basis::WPrime;
    throw std::invalid_argument("unknown basis tag: " + std::string(s));
}

}  // namespace dlower
