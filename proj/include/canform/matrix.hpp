#pragma once

#include <span>
#include <string>
#include <vector>

#include "canform/field.hpp"
#include "canform/polynomial.hpp"

namespace canform {

using Vector = std::vector<Scalar>;

/// Dense row-major matrix over a single Field.
class Matrix {
  public:
    /// Zero matrix.
    Matrix(const Field& field, std::size_t rows, std::size_t cols);
    Matrix(const Field& field, std::size_t rows, std::size_t cols, std::vector<Scalar> entries);

    static Matrix identity(const Field& field, std::size_t n);
    static Matrix from_ints(const Field& field, const std::vector<std::vector<long long>>& rows);
    static Matrix from_columns(const Field& field, std::size_t rows, std::span<const Vector> columns);

    const Field& field() const noexcept { return field_; }
    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool is_square() const noexcept { return rows_ == cols_; }

    const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
    Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    std::span<const Scalar> entries() const noexcept { return data_; }

    Vector column(std::size_t c) const;
    Matrix block(std::size_t row0, std::size_t col0, std::size_t nrows, std::size_t ncols) const;
    Matrix transpose() const;
    bool is_zero() const;

    Scalar trace() const;
    Scalar determinant() const;
    Vector apply(const Vector& v) const;

    friend Matrix operator+(const Matrix& a, const Matrix& b);
    friend Matrix operator-(const Matrix& a, const Matrix& b);
    friend Matrix operator*(const Matrix& a, const Matrix& b);
    friend Matrix operator*(const Scalar& k, const Matrix& a);
    friend bool operator==(const Matrix& a, const Matrix& b) = default;

    std::string to_string() const;

  private:
    Field field_;
    std::size_t rows_;
    std::size_t cols_;
    std::vector<Scalar> data_;
};

/// Throws SingularMatrix for singular input, NonSquare for non-square input.
Matrix inverse(const Matrix& a);

struct RankKernel {
    std::size_t rank;
    /// Basis of the right null space. One vector per non-pivot column, with a
    /// 1 in that column (first-nonzero-pivot elimination, column order).
    std::vector<Vector> kernel;
};

RankKernel rank_kernel(const Matrix& a);

Matrix block_diagonal(std::span<const Matrix> blocks);

/// P(A) for square A.
Matrix evaluate(const Polynomial& p, const Matrix& a);
/// P(A) v without forming P(A).
Vector apply_polynomial(const Polynomial& p, const Matrix& a, const Vector& v);

/// Scales v so its first nonzero entry is 1; the zero vector is returned as is.
Vector normalize_leading(Vector v);

} // namespace canform
