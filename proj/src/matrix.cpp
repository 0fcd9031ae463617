#include "canform/matrix.hpp"

#include <optional>

namespace canform {

namespace {

void require_square(const Matrix& a, const char* what) {
    if (!a.is_square())
        throw Error(ErrorKind::NonSquare, std::string(what) + " needs a square matrix, got " +
                                              std::to_string(a.rows()) + "x" + std::to_string(a.cols()));
}

// In-place reduced row echelon form. Returns the pivot column of each
// nonzero row. Pivot is the first nonzero entry in the current column.
std::vector<std::size_t> rref_in_place(Matrix& m) {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        std::optional<std::size_t> pivot;
        for (std::size_t r = row; r < m.rows(); ++r)
            if (!m(r, col).is_zero()) {
                pivot = r;
                break;
            }
        if (!pivot) continue;
        if (*pivot != row)
            for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(row, c), m(*pivot, c));
        Scalar inv = m(row, col).inverse();
        for (std::size_t c = col; c < m.cols(); ++c) m(row, c) *= inv;
        for (std::size_t r = 0; r < m.rows(); ++r) {
            if (r == row || m(r, col).is_zero()) continue;
            Scalar factor = m(r, col);
            for (std::size_t c = col; c < m.cols(); ++c) m(r, c) -= factor * m(row, c);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

} // namespace

Matrix::Matrix(const Field& field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols), data_(rows * cols, Scalar::zero(field)) {}

Matrix::Matrix(const Field& field, std::size_t rows, std::size_t cols, std::vector<Scalar> entries)
    : field_(field), rows_(rows), cols_(cols), data_(std::move(entries)) {
    if (data_.size() != rows * cols)
        throw Error(ErrorKind::DimensionMismatch, "expected " + std::to_string(rows * cols) + " entries, got " +
                                                      std::to_string(data_.size()));
    for (const Scalar& s : data_) require_same_field(field_, s.field());
}

Matrix Matrix::identity(const Field& field, std::size_t n) {
    Matrix m(field, n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = Scalar::one(field);
    return m;
}

Matrix Matrix::from_ints(const Field& field, const std::vector<std::vector<long long>>& rows) {
    std::size_t nr = rows.size();
    std::size_t nc = nr ? rows.front().size() : 0;
    std::vector<Scalar> entries;
    entries.reserve(nr * nc);
    for (const auto& row : rows) {
        if (row.size() != nc) throw Error(ErrorKind::DimensionMismatch, "ragged rows");
        for (long long v : row) entries.emplace_back(field, v);
    }
    return Matrix(field, nr, nc, std::move(entries));
}

Matrix Matrix::from_columns(const Field& field, std::size_t rows, std::span<const Vector> columns) {
    Matrix m(field, rows, columns.size());
    for (std::size_t c = 0; c < columns.size(); ++c) {
        if (columns[c].size() != rows) throw Error(ErrorKind::DimensionMismatch, "column length");
        for (std::size_t r = 0; r < rows; ++r) {
            require_same_field(field, columns[c][r].field());
            m(r, c) = columns[c][r];
        }
    }
    return m;
}

Vector Matrix::column(std::size_t c) const {
    Vector v;
    v.reserve(rows_);
    for (std::size_t r = 0; r < rows_; ++r) v.push_back((*this)(r, c));
    return v;
}

Matrix Matrix::block(std::size_t row0, std::size_t col0, std::size_t nrows, std::size_t ncols) const {
    if (row0 + nrows > rows_ || col0 + ncols > cols_) throw Error(ErrorKind::DimensionMismatch, "block out of range");
    Matrix m(field_, nrows, ncols);
    for (std::size_t r = 0; r < nrows; ++r)
        for (std::size_t c = 0; c < ncols; ++c) m(r, c) = (*this)(row0 + r, col0 + c);
    return m;
}

Matrix Matrix::transpose() const {
    Matrix m(field_, cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) m(c, r) = (*this)(r, c);
    return m;
}

bool Matrix::is_zero() const {
    for (const Scalar& s : data_)
        if (!s.is_zero()) return false;
    return true;
}

Scalar Matrix::trace() const {
    require_square(*this, "trace");
    Scalar t = Scalar::zero(field_);
    for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
    return t;
}

Scalar Matrix::determinant() const {
    require_square(*this, "determinant");
    Matrix m = *this;
    Scalar det = Scalar::one(field_);
    std::size_t n = rows_;
    for (std::size_t col = 0; col < n; ++col) {
        std::optional<std::size_t> pivot;
        for (std::size_t r = col; r < n; ++r)
            if (!m(r, col).is_zero()) {
                pivot = r;
                break;
            }
        if (!pivot) return Scalar::zero(field_);
        if (*pivot != col) {
            for (std::size_t c = 0; c < n; ++c) std::swap(m(col, c), m(*pivot, c));
            det = -det;
        }
        det *= m(col, col);
        Scalar inv = m(col, col).inverse();
        for (std::size_t r = col + 1; r < n; ++r) {
            if (m(r, col).is_zero()) continue;
            Scalar factor = m(r, col) * inv;
            for (std::size_t c = col; c < n; ++c) m(r, c) -= factor * m(col, c);
        }
    }
    return det;
}

Vector Matrix::apply(const Vector& v) const {
    if (v.size() != cols_) throw Error(ErrorKind::DimensionMismatch, "vector length");
    Vector out(rows_, Scalar::zero(field_));
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            if (!(*this)(r, c).is_zero()) out[r] += (*this)(r, c) * v[c];
    return out;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
    require_same_field(a.field_, b.field_);
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw Error(ErrorKind::DimensionMismatch, "matrix sum shapes");
    Matrix m = a;
    for (std::size_t i = 0; i < m.data_.size(); ++i) m.data_[i] += b.data_[i];
    return m;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
    require_same_field(a.field_, b.field_);
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
        throw Error(ErrorKind::DimensionMismatch, "matrix difference shapes");
    Matrix m = a;
    for (std::size_t i = 0; i < m.data_.size(); ++i) m.data_[i] -= b.data_[i];
    return m;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    require_same_field(a.field_, b.field_);
    if (a.cols_ != b.rows_)
        throw Error(ErrorKind::DimensionMismatch, "cannot multiply " + std::to_string(a.rows_) + "x" +
                                                      std::to_string(a.cols_) + " by " + std::to_string(b.rows_) +
                                                      "x" + std::to_string(b.cols_));
    Matrix m(a.field_, a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const Scalar& aik = a(i, k);
            if (aik.is_zero()) continue;
            for (std::size_t j = 0; j < b.cols_; ++j)
                if (!b(k, j).is_zero()) m(i, j) += aik * b(k, j);
        }
    return m;
}

Matrix operator*(const Scalar& k, const Matrix& a) {
    require_same_field(k.field(), a.field_);
    Matrix m = a;
    for (Scalar& s : m.data_) s *= k;
    return m;
}

std::string Matrix::to_string() const {
    std::string out;
    for (std::size_t r = 0; r < rows_; ++r) {
        out += "[";
        for (std::size_t c = 0; c < cols_; ++c) {
            if (c) out += ' ';
            out += (*this)(r, c).to_string();
        }
        out += "]\n";
    }
    return out;
}

Matrix inverse(const Matrix& a) {
    require_square(a, "inverse");
    std::size_t n = a.rows();
    Matrix aug(a.field(), n, 2 * n);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) aug(r, c) = a(r, c);
        aug(r, n + r) = Scalar::one(a.field());
    }
    auto pivots = rref_in_place(aug);
    if (pivots.size() < n || pivots[n - 1] != n - 1) throw Error(ErrorKind::SingularMatrix, "matrix is singular");
    return aug.block(0, n, n, n);
}

RankKernel rank_kernel(const Matrix& a) {
    Matrix m = a;
    auto pivots = rref_in_place(m);
    std::vector<bool> is_pivot(a.cols(), false);
    for (std::size_t p : pivots) is_pivot[p] = true;

    RankKernel out{pivots.size(), {}};
    for (std::size_t free = 0; free < a.cols(); ++free) {
        if (is_pivot[free]) continue;
        Vector v(a.cols(), Scalar::zero(a.field()));
        v[free] = Scalar::one(a.field());
        for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m(r, free);
        out.kernel.push_back(std::move(v));
    }
    return out;
}

Matrix block_diagonal(std::span<const Matrix> blocks) {
    if (blocks.empty()) throw Error(ErrorKind::EmptyInput, "block_diagonal of no blocks");
    const Field& field = blocks.front().field();
    std::size_t n = 0;
    for (const Matrix& b : blocks) {
        require_same_field(field, b.field());
        require_square(b, "block_diagonal");
        n += b.rows();
    }
    Matrix m(field, n, n);
    std::size_t at = 0;
    for (const Matrix& b : blocks) {
        for (std::size_t r = 0; r < b.rows(); ++r)
            for (std::size_t c = 0; c < b.cols(); ++c) m(at + r, at + c) = b(r, c);
        at += b.rows();
    }
    return m;
}

Matrix evaluate(const Polynomial& p, const Matrix& a) {
    require_square(a, "evaluate");
    require_same_field(p.field(), a.field());
    Matrix acc(a.field(), a.rows(), a.cols());
    Matrix id = Matrix::identity(a.field(), a.rows());
    auto c = p.coefficients();
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * a + (*it) * id;
    return acc;
}

Vector apply_polynomial(const Polynomial& p, const Matrix& a, const Vector& v) {
    require_square(a, "apply_polynomial");
    Vector acc(v.size(), Scalar::zero(a.field()));
    auto c = p.coefficients();
    for (auto it = c.rbegin(); it != c.rend(); ++it) {
        acc = a.apply(acc);
        for (std::size_t i = 0; i < acc.size(); ++i) acc[i] += (*it) * v[i];
    }
    return acc;
}

Vector normalize_leading(Vector v) {
    for (const Scalar& s : v) {
        if (s.is_zero()) continue;
        Scalar inv = s.inverse();
        for (Scalar& x : v) x *= inv;
        break;
    }
    return v;
}

} // namespace canform
