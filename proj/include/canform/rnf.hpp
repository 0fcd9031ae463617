#pragma once

#include <string>
#include <vector>

#include "canform/matrix.hpp"
#include "canform/polynomial.hpp"

namespace canform {

/// Weakly decreasing sequence of positive integers.
class Partition {
  public:
    /// Throws InvalidPartition unless parts is nonempty, positive and weakly decreasing.
    explicit Partition(std::vector<std::size_t> parts);

    std::span<const std::size_t> parts() const noexcept { return parts_; }
    std::size_t length() const noexcept { return parts_.size(); }
    std::size_t largest() const noexcept { return parts_.front(); }
    /// The n being partitioned.
    std::size_t total() const noexcept;
    std::size_t operator[](std::size_t i) const { return parts_.at(i); }

    friend bool operator==(const Partition&, const Partition&) = default;
    std::string to_string() const;

  private:
    std::vector<std::size_t> parts_;
};

/// All partitions of n, in reverse lexicographic order ((n) first, (1,...,1) last).
std::vector<Partition> partitions_of(std::size_t n);

/// The invariant-factor chain (P_1, ..., P_r): monic, degree >= 1, with
/// P_{i+1} dividing P_i. P_1 is the minimal polynomial.
class RationalNormalForm {
  public:
    /// Throws EmptyInput, NotMonic, DegreeZero or ChainViolation.
    explicit RationalNormalForm(std::vector<Polynomial> factors);

    std::span<const Polynomial> factors() const noexcept { return factors_; }
    const Field& field() const noexcept { return factors_.front().field(); }
    std::size_t dimension() const noexcept;

    friend bool operator==(const RationalNormalForm&, const RationalNormalForm&) = default;

  private:
    std::vector<Polynomial> factors_;
};

/// Companion matrix B(P): ones on the subdiagonal, last column -coeff_i(P).
/// So B(X^2 - dX - e) = [[0, e], [1, d]].
Matrix companion(const Polynomial& p);

/// Block diagonal of B(P_1), ..., B(P_r).
Matrix assemble_rnf_matrix(const RationalNormalForm& rnf);

RationalNormalForm invariant_factors(const Matrix& a);

struct RnfTransform {
    RationalNormalForm form;
    /// R = assemble_rnf_matrix(form)
    Matrix normal;
    /// T with T^{-1} A T = R
    Matrix transform;
};

RnfTransform rnf_transform(const Matrix& a);

Partition partition_of(const RationalNormalForm& rnf);

} // namespace canform
