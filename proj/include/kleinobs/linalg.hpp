#pragma once

#include "kleinobs/rational.hpp"

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <vector>

namespace kleinobs {

/// Dense row-major matrix over the rationals.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols);

    static Matrix identity(std::size_t n);
    /// Small integer literals, mostly for tests and catalogs.
    static Matrix from_rows(std::initializer_list<std::initializer_list<long>> rows);
    static Matrix from_columns(const std::vector<std::vector<Scalar>>& columns, std::size_t rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool empty() const { return rows_ == 0 || cols_ == 0; }

    Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    std::vector<Scalar> row(std::size_t r) const;
    std::vector<Scalar> column(std::size_t c) const;
    void set_column(std::size_t c, std::span<const Scalar> values);

    Matrix transpose() const;
    Scalar trace() const;
    bool is_zero() const;
    bool is_square() const { return rows_ == cols_; }

    Matrix& operator+=(const Matrix& o);
    Matrix& operator-=(const Matrix& o);
    Matrix& operator*=(const Scalar& s);

    friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
    friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
    friend Matrix operator*(Matrix a, const Scalar& s) { return a *= s; }
    friend Matrix operator*(const Scalar& s, Matrix a) { return a *= s; }
    friend Matrix operator-(Matrix a) { return a *= Scalar(-1); }
    friend Matrix operator*(const Matrix& a, const Matrix& b);
    friend bool operator==(const Matrix& a, const Matrix& b) = default;

    std::vector<Scalar> apply(std::span<const Scalar> v) const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Scalar> data_;
};

Matrix commutator(const Matrix& a, const Matrix& b);
Matrix matrix_power(const Matrix& m, unsigned k);
Matrix hstack(const Matrix& a, const Matrix& b);
Matrix vstack(const Matrix& a, const Matrix& b);

struct EchelonForm {
    Matrix reduced;
    std::vector<std::size_t> pivots;
};

/// Gauss-Jordan reduced row echelon form (unique for a given row space).
EchelonForm rref(Matrix m);

/// Rank by fraction-free (Bareiss) elimination on the row-integerized matrix.
std::size_t rank(const Matrix& m);

/// Determinant by fraction-free elimination. Requires a square matrix.
Scalar determinant(const Matrix& m);

/// Columns form the canonical null-space basis: one column per free
/// variable of the RREF, with that variable set to 1.
Matrix kernel(const Matrix& m);

/// Indices of a maximal independent set of columns, leftmost first.
std::vector<std::size_t> independent_columns(const Matrix& m);

/// A particular solution of m x = b, or nullopt if inconsistent.
std::optional<std::vector<Scalar>> solve(const Matrix& m, std::span<const Scalar> b);

std::optional<Matrix> inverse(const Matrix& m);

} // namespace kleinobs
