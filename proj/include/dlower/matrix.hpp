#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "dlower/scalar.hpp"

namespace dlower {

/// Dense rectangular matrix over Scalar, rows and columns indexed from 0.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), m_(rows * cols) {}

    static Matrix identity(std::size_t n);
    static Matrix diagonal(std::span<const Scalar> diag);

    [[nodiscard]] std::size_t rows() const noexcept { return rows_; }
    [[nodiscard]] std::size_t cols() const noexcept { return cols_; }
    [[nodiscard]] bool is_square() const noexcept { return rows_ == cols_; }

    Scalar& operator()(std::size_t i, std::size_t j) { return m_[i * cols_ + j]; }
    const Scalar& operator()(std::size_t i, std::size_t j) const { return m_[i * cols_ + j]; }

    [[nodiscard]] std::vector<Scalar> column(std::size_t j) const;
    void set_column(std::size_t j, std::span<const Scalar> v);

    /// Top-left block with the given shape.
    [[nodiscard]] Matrix block(std::size_t rows, std::size_t cols) const;

    [[nodiscard]] bool is_upper_triangular() const;
    [[nodiscard]] bool is_strictly_upper_triangular() const;

    Matrix& operator+=(const Matrix& o);
    Matrix& operator-=(const Matrix& o);
    Matrix& operator*=(const Scalar& s);

    friend Matrix operator+(Matrix l, const Matrix& r) { return l += r; }
    friend Matrix operator-(Matrix l, const Matrix& r) { return l -= r; }
    friend Matrix operator*(Matrix l, const Scalar& s) { return l *= s; }
    friend Matrix operator*(const Scalar& s, Matrix r) { return r *= s; }
    friend Matrix operator*(const Matrix& l, const Matrix& r);
    friend bool operator==(const Matrix& l, const Matrix& r) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Scalar> m_;
};

/// Matrix-vector product.
std::vector<Scalar> mat_vec(const Matrix& m, std::span<const Scalar> v);

/// First (i, j) where the two matrices differ within the leading `cols`
/// columns (all columns when omitted). Shape mismatch reports (rows, cols).
std::optional<std::pair<std::size_t, std::size_t>> first_mismatch(const Matrix& l, const Matrix& r,
                                                                  std::optional<std::size_t> cols = std::nullopt);

/// Row-reduced echelon form plus pivot columns.
struct RowEchelon {
    Matrix reduced;
    std::vector<std::size_t> pivots;
    [[nodiscard]] std::size_t rank() const noexcept { return pivots.size(); }
};
RowEchelon row_reduce(Matrix m);

/// Basis of the right null space {v : m v = 0}.
std::vector<std::vector<Scalar>> nullspace(const Matrix& m);

/// Exact inverse by Gauss-Jordan; std::nullopt if singular.
std::optional<Matrix> inverse(const Matrix& m);

/// Sum of coeffs[i] * t^i, accumulated Horner style.
Matrix matrix_polynomial(const Matrix& t, std::span<const Scalar> coeffs);

/// m^e for e >= 0.
Matrix matrix_power(const Matrix& m, std::size_t e);

/// l*r - r*l
Matrix commutator(const Matrix& l, const Matrix& r);

/// Which polynomial basis a matrix is written against.
enum class Basis { Tau, Eta, W, WPrime };

std::string to_string(Basis b);
Basis parse_basis(std::string_view s);

/// A matrix tagged with the basis it represents a map in. Column j holds the
/// coordinates of the image of basis_j. Endomorphisms of V are square of size
/// N+1; the multiplication map A : V_{N-1} -> V_N is (N+1) x N.
struct OperatorMatrix {
    Basis basis = Basis::Tau;
    Matrix matrix;

    friend bool operator==(const OperatorMatrix&, const OperatorMatrix&) = default;
};

}  // namespace dlower
