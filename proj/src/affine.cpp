#include "canform/affine.hpp"

#include <numeric>

namespace canform {

namespace {

void require_monic_factor(const Polynomial& q) {
    if (q.degree() < 1) throw Error(ErrorKind::DegreeZero, "generalized companion factor of degree < 1");
    if (!q.is_monic()) throw Error(ErrorKind::NotMonic, "generalized companion factor " + q.to_string() + " is not monic");
}

} // namespace

Matrix generalized_companion(std::span<const Polynomial> qs) {
    if (qs.empty()) throw Error(ErrorKind::EmptyInput, "generalized companion of no polynomials");
    const Field& field = qs.front().field();
    std::vector<Matrix> blocks;
    for (const Polynomial& q : qs) {
        require_same_field(field, q.field());
        require_monic_factor(q);
        blocks.push_back(companion(q));
    }
    Matrix c = block_diagonal(blocks);
    for (std::size_t i = 0; i + 1 < c.rows(); ++i) c(i + 1, i) = Scalar::one(field);
    return c;
}

Matrix nilpotent_base(const Field& field, std::span<const std::size_t> q) {
    if (q.empty()) throw Error(ErrorKind::EmptyInput, "nilpotent_base of an empty degree list");
    for (std::size_t d : q)
        if (d == 0) throw Error(ErrorKind::DegreeZero, "degree list entries must be >= 1");
    std::size_t m = std::accumulate(q.begin(), q.end(), std::size_t{0});
    Matrix n(field, m, m);
    for (std::size_t i = 0; i + 1 < m; ++i) n(i + 1, i) = Scalar::one(field);
    return n;
}

std::vector<std::pair<std::size_t, std::size_t>> coefficient_positions(std::span<const std::size_t> q) {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    std::size_t offset = 0;
    for (std::size_t d : q) {
        for (std::size_t i = 0; i < d; ++i) out.emplace_back(offset + i, offset + d - 1);
        offset += d;
    }
    return out;
}

JumpData jump_data(const Partition& p) {
    JumpData data;
    auto parts = p.parts();
    for (std::size_t i = 0; i + 1 < parts.size(); ++i) {
        if (parts[i] == parts[i + 1]) continue;
        data.jumps.push_back(i + 1);
        data.qs.push_back(parts[i] - parts[i + 1]);
    }
    data.qs.push_back(parts.back());
    return data;
}

std::size_t free_parameter_count(const Partition& p) {
    auto qs = jump_data(p).qs;
    return std::accumulate(qs.begin(), qs.end(), std::size_t{0});
}

AffineRepresentative::AffineRepresentative(Partition p, std::vector<Polynomial> qs)
    : partition_(std::move(p)), qs_(std::move(qs)) {
    JumpData jd = jump_data(partition_);
    if (qs_.size() != jd.qs.size())
        throw Error(ErrorKind::DegreeMismatch, "partition " + partition_.to_string() + " needs " +
                                                   std::to_string(jd.qs.size()) + " polynomials, got " +
                                                   std::to_string(qs_.size()));
    for (std::size_t i = 0; i < qs_.size(); ++i) {
        require_same_field(qs_.front().field(), qs_[i].field());
        if (qs_[i].degree() != static_cast<int>(jd.qs[i]))
            throw Error(ErrorKind::DegreeMismatch, "Q_" + std::to_string(i + 1) + " = " + qs_[i].to_string() +
                                                       " should have degree " + std::to_string(jd.qs[i]));
        if (!qs_[i].is_monic()) throw Error(ErrorKind::NotMonic, "Q_" + std::to_string(i + 1) + " is not monic");
    }
}

namespace {

// For each 1-based block index i, the 0-based index k-1 of the first Q used by
// D_i, i.e. j_{k-1} < i <= j_k.
std::vector<std::size_t> first_factor_per_block(const Partition& p, const JumpData& jd) {
    std::vector<std::size_t> out;
    std::size_t k = 0;
    for (std::size_t i = 1; i <= p.length(); ++i) {
        while (k < jd.jumps.size() && i > jd.jumps[k]) ++k;
        out.push_back(k);
    }
    return out;
}

} // namespace

Matrix affine_point(const AffineRepresentative& rep) {
    JumpData jd = jump_data(rep.partition());
    auto qs = rep.qs();
    std::vector<Matrix> blocks;
    for (std::size_t k : first_factor_per_block(rep.partition(), jd)) blocks.push_back(generalized_companion(qs.subspan(k)));
    return block_diagonal(blocks);
}

Matrix affine_point(const Partition& p, std::span<const Polynomial> qs) {
    return affine_point(AffineRepresentative(p, std::vector<Polynomial>(qs.begin(), qs.end())));
}

RationalNormalForm to_rnf(const AffineRepresentative& rep) {
    JumpData jd = jump_data(rep.partition());
    auto qs = rep.qs();
    std::vector<Polynomial> factors;
    for (std::size_t k : first_factor_per_block(rep.partition(), jd)) factors.push_back(poly_product(qs.subspan(k)));
    return RationalNormalForm(std::move(factors));
}

AffineRepresentative to_affine(const RationalNormalForm& rnf) {
    Partition p = partition_of(rnf);
    JumpData jd = jump_data(p);
    auto factors = rnf.factors();
    std::vector<Polynomial> qs;
    for (std::size_t j : jd.jumps) {
        DivMod qr = divmod(factors[j - 1], factors[j]);
        if (!qr.remainder.is_zero())
            throw Error(ErrorKind::ChainViolation,
                        factors[j].to_string() + " does not divide " + factors[j - 1].to_string());
        qs.push_back(std::move(qr.quotient));
    }
    qs.push_back(factors.back());
    return AffineRepresentative(std::move(p), std::move(qs));
}

} // namespace canform
