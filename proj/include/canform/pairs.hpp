#pragma once

#include <optional>
#include <vector>

#include "canform/matrix.hpp"

namespace canform {

/// A pair (A, B) of trace-zero 2x2 matrices over one field.
class Sl2Pair {
  public:
    /// Throws DimensionMismatch, FieldMismatch or TraceNonzero.
    Sl2Pair(Matrix a, Matrix b);

    const Matrix& a() const noexcept { return a_; }
    const Matrix& b() const noexcept { return b_; }
    const Field& field() const noexcept { return a_.field(); }

    /// (g^{-1} A g, g^{-1} B g)
    Sl2Pair conjugated_by(const Matrix& g) const;

    friend bool operator==(const Sl2Pair&, const Sl2Pair&) = default;

  private:
    Matrix a_;
    Matrix b_;
};

/// (det A, tr AB, det B)
struct InvariantTriple {
    Scalar x1;
    Scalar x2;
    Scalar x3;

    friend bool operator==(const InvariantTriple&, const InvariantTriple&) = default;
};

/// The pair A = [[a11, 1], [0, -a11]], B = [[b11, 0], [b21, -b11]], subject to
/// a11 b11 b21 (4 a11 b11 + b21) != 0.
class QForm {
  public:
    /// Throws NotInQ when the nonvanishing condition fails.
    QForm(Scalar a11, Scalar b11, Scalar b21);

    const Scalar& a11() const noexcept { return a11_; }
    const Scalar& b11() const noexcept { return b11_; }
    const Scalar& b21() const noexcept { return b21_; }

    Sl2Pair realize() const;

    friend bool operator==(const QForm&, const QForm&) = default;

  private:
    Scalar a11_;
    Scalar b11_;
    Scalar b21_;
};

/// A pair of n x n matrices: a module over the free algebra on two letters.
class PairPoint {
  public:
    /// Throws NonSquare, DimensionMismatch or FieldMismatch.
    PairPoint(Matrix m1, Matrix m2);
    explicit PairPoint(const Sl2Pair& pair) : PairPoint(pair.a(), pair.b()) {}

    const Matrix& m1() const noexcept { return m1_; }
    const Matrix& m2() const noexcept { return m2_; }
    const Field& field() const noexcept { return m1_.field(); }
    std::size_t size() const noexcept { return m1_.rows(); }

    PairPoint conjugated_by(const Matrix& g) const;

    friend bool operator==(const PairPoint&, const PairPoint&) = default;

  private:
    Matrix m1_;
    Matrix m2_;
};

PairPoint direct_sum(const PairPoint& x, const PairPoint& y);

InvariantTriple invariants(const Sl2Pair& pair);

/// x1 x3 (x2^2 - 4 x1 x3). The triple lies in Y iff this is nonzero.
Scalar g_value(const InvariantTriple& y);

/// Every QForm over y, in lexicographic order of (a11, b11). Four points in
/// odd characteristic, one in characteristic 2.
/// Throws NotInY, or RootsMissingInField when -x1 or -x3 has no square root.
std::vector<QForm> q_points(const InvariantTriple& y);

/// A common eigenvector of A and B, normalized so its first nonzero entry is
/// 1, or nullopt. Among several candidates the one whose leading 1 comes
/// first wins, ties broken lexicographically.
/// Throws EigenvaluesMissingInField when -det A or -det B is a non-square.
std::optional<Vector> common_eigenvector(const Sl2Pair& pair);

struct Reduction {
    /// g^{-1} A g and g^{-1} B g realize q.
    Matrix g;
    QForm q;
};

/// Conjugates a pair with invariants in Y into Q. Uses the first square
/// roots from sqrt_if_exists for a11 and b11.
/// Throws NotInY or EigenvaluesMissingInField.
Reduction reduce_to_q(const Sl2Pair& pair);

/// Basis of the space of f (n' x n) with f m_i = m'_i f for i = 1, 2.
std::vector<Matrix> hom_space(const PairPoint& m, const PairPoint& m_prime);

/// dim Hom(M, M') = n n' - rank of the intertwiner system.
std::size_t hom_dimension(const PairPoint& m, const PairPoint& m_prime);

/// s = (diag(1, 2, ..., n-2), cyclic permutation matrix of size n-2) for n >= 3.
/// The permutation sends e_i to e_{i+1} (indices mod n-2).
/// Throws DegenerateDiagonal when 1..n-2 are not distinct in the field.
PairPoint simple_pair(const Field& field, std::size_t n);

struct SplitOff {
    /// The 2x2 complement with h^{-1} m h = s (+) t.
    PairPoint t;
    Matrix h;
};

/// Splits the fixed simple s off a point m of size n with [S,M] = [M,S] = 1.
/// Throws NotInW, DegenerateComposite or BasisFailure.
SplitOff split_off_simple(const PairPoint& m);

} // namespace canform
