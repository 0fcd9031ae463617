#pragma once

#include <span>
#include <utility>
#include <vector>

#include "canform/matrix.hpp"
#include "canform/rnf.hpp"

namespace canform {

/// Generalized companion matrix C(Q_1, ..., Q_s): the companions B(Q_j) on
/// the diagonal, with the whole subdiagonal set to 1 (including the entries
/// that join consecutive blocks). Every Q_j must be monic of degree >= 1.
Matrix generalized_companion(std::span<const Polynomial> qs);

/// The unique nilpotent member of C(q): the m x m matrix with ones on the
/// subdiagonal, m = sum of q.
Matrix nilpotent_base(const Field& field, std::span<const std::size_t> q);

/// Entry positions (row, col) of C(q) that carry polynomial coefficients, in
/// block order and ascending coefficient index within a block.
std::vector<std::pair<std::size_t, std::size_t>> coefficient_positions(std::span<const std::size_t> q);

/// Jump structure of a partition p = (p_1, ..., p_r).
///
/// jumps holds j_1 < ... < j_{s-1}, the 1-based indices i < r with
/// p_i != p_{i+1}; qs holds q_i = p_{j_i} - p_{j_i + 1} for i < s and
/// q_s = p_r. The q_i sum to p_1.
struct JumpData {
    std::vector<std::size_t> jumps;
    std::vector<std::size_t> qs;

    std::size_t block_count() const noexcept { return qs.size(); }
};

JumpData jump_data(const Partition& p);

/// A point of the affine family A(p), stored by its coordinates (p, Q_1..Q_s).
class AffineRepresentative {
  public:
    /// Throws NotMonic or DegreeMismatch when deg Q_i != q_i.
    AffineRepresentative(Partition p, std::vector<Polynomial> qs);

    const Partition& partition() const noexcept { return partition_; }
    std::span<const Polynomial> qs() const noexcept { return qs_; }
    const Field& field() const noexcept { return qs_.front().field(); }

    friend bool operator==(const AffineRepresentative&, const AffineRepresentative&) = default;

  private:
    Partition partition_;
    std::vector<Polynomial> qs_;
};

/// Block diagonal D_1, ..., D_r with D_i = C(Q_k, ..., Q_s) for j_{k-1} < i <= j_k.
Matrix affine_point(const AffineRepresentative& rep);
Matrix affine_point(const Partition& p, std::span<const Polynomial> qs);

/// P_i = Q_k Q_{k+1} ... Q_s for j_{k-1} < i <= j_k.
RationalNormalForm to_rnf(const AffineRepresentative& rep);

/// Q_i = P_{j_i} / P_{j_i + 1} for i < s, Q_s = P_r. Throws ChainViolation on
/// a nonzero remainder.
AffineRepresentative to_affine(const RationalNormalForm& rnf);

/// Dimension of A(p): the number of free coefficients, sum of q_i = p_1.
std::size_t free_parameter_count(const Partition& p);

} // namespace canform
