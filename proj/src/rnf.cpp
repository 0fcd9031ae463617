#include "canform/rnf.hpp"

#include <algorithm>
#include <numeric>
#include <optional>

namespace canform {

Partition::Partition(std::vector<std::size_t> parts) : parts_(std::move(parts)) {
    if (parts_.empty()) throw Error(ErrorKind::InvalidPartition, "empty partition");
    if (parts_.back() == 0) throw Error(ErrorKind::InvalidPartition, "parts must be >= 1");
    if (!std::is_sorted(parts_.begin(), parts_.end(), std::greater<>()))
        throw Error(ErrorKind::InvalidPartition, to_string() + " is not weakly decreasing");
}

std::size_t Partition::total() const noexcept { return std::accumulate(parts_.begin(), parts_.end(), std::size_t{0}); }

std::string Partition::to_string() const {
    std::string out = "(";
    for (std::size_t i = 0; i < parts_.size(); ++i) out += (i ? "," : "") + std::to_string(parts_[i]);
    return out + ")";
}

namespace {

void partitions_rec(std::size_t remaining, std::size_t cap, std::vector<std::size_t>& prefix,
                    std::vector<Partition>& out) {
    if (remaining == 0) {
        out.emplace_back(prefix);
        return;
    }
    for (std::size_t part = std::min(remaining, cap); part >= 1; --part) {
        prefix.push_back(part);
        partitions_rec(remaining - part, part, prefix, out);
        prefix.pop_back();
    }
}

} // namespace

std::vector<Partition> partitions_of(std::size_t n) {
    std::vector<Partition> out;
    if (n == 0) return out;
    std::vector<std::size_t> prefix;
    partitions_rec(n, n, prefix, out);
    return out;
}

RationalNormalForm::RationalNormalForm(std::vector<Polynomial> factors) : factors_(std::move(factors)) {
    if (factors_.empty()) throw Error(ErrorKind::EmptyInput, "rational normal form needs at least one factor");
    const Field& field = factors_.front().field();
    for (std::size_t i = 0; i < factors_.size(); ++i) {
        const Polynomial& p = factors_[i];
        require_same_field(field, p.field());
        if (p.degree() < 1) throw Error(ErrorKind::DegreeZero, "factor " + std::to_string(i + 1) + " has degree < 1");
        if (!p.is_monic()) throw Error(ErrorKind::NotMonic, "factor " + p.to_string() + " is not monic");
        if (i > 0 && !divides(p, factors_[i - 1]))
            throw Error(ErrorKind::ChainViolation,
                        p.to_string() + " does not divide " + factors_[i - 1].to_string());
    }
}

std::size_t RationalNormalForm::dimension() const noexcept {
    std::size_t n = 0;
    for (const Polynomial& p : factors_) n += static_cast<std::size_t>(p.degree());
    return n;
}

Matrix companion(const Polynomial& p) {
    if (p.degree() < 1) throw Error(ErrorKind::DegreeZero, "companion of a constant polynomial");
    if (!p.is_monic()) throw Error(ErrorKind::NotMonic, "companion of non-monic " + p.to_string());
    auto d = static_cast<std::size_t>(p.degree());
    Matrix b(p.field(), d, d);
    for (std::size_t i = 0; i + 1 < d; ++i) b(i + 1, i) = Scalar::one(p.field());
    for (std::size_t i = 0; i < d; ++i) b(i, d - 1) = -p.coefficient(i);
    return b;
}

Matrix assemble_rnf_matrix(const RationalNormalForm& rnf) {
    std::vector<Matrix> blocks;
    for (const Polynomial& p : rnf.factors()) blocks.push_back(companion(p));
    return block_diagonal(blocks);
}

namespace {

// Smith reduction of XI - A over k[X]. Row operations are mirrored onto
// generators[i] = image in k^n of column i of U^{-1}; at the end the
// generator of each nontrivial diagonal entry d_i spans a cyclic summand of
// k^n (A acting as X) with annihilator d_i.
class SmithReduction {
  public:
    explicit SmithReduction(const Matrix& a) : a_(a), n_(a.rows()) {
        const Field& f = a.field();
        work_.assign(n_, std::vector<Polynomial>(n_, Polynomial(f)));
        for (std::size_t i = 0; i < n_; ++i) {
            for (std::size_t j = 0; j < n_; ++j) work_[i][j] = Polynomial::constant(-a(i, j));
            work_[i][i] = work_[i][i] + Polynomial::x(f);
            Vector e(n_, Scalar::zero(f));
            e[i] = Scalar::one(f);
            generators_.push_back(std::move(e));
        }
        run();
    }

    const Polynomial& diagonal(std::size_t i) const { return work_[i][i]; }
    const Vector& generator(std::size_t i) const { return generators_[i]; }

  private:
    // row_i += c * row_j
    void add_row(std::size_t i, std::size_t j, const Polynomial& c) {
        for (std::size_t col = 0; col < n_; ++col)
            if (!work_[j][col].is_zero()) work_[i][col] = work_[i][col] + c * work_[j][col];
        Vector shift = apply_polynomial(c, a_, generators_[i]);
        for (std::size_t r = 0; r < n_; ++r) generators_[j][r] -= shift[r];
    }

    // col_i += c * col_j (untracked)
    void add_col(std::size_t i, std::size_t j, const Polynomial& c) {
        for (std::size_t row = 0; row < n_; ++row)
            if (!work_[row][j].is_zero()) work_[row][i] = work_[row][i] + c * work_[row][j];
    }

    void swap_rows(std::size_t i, std::size_t j) {
        if (i == j) return;
        std::swap(work_[i], work_[j]);
        std::swap(generators_[i], generators_[j]);
    }

    void swap_cols(std::size_t i, std::size_t j) {
        if (i == j) return;
        for (auto& row : work_) std::swap(row[i], row[j]);
    }

    void scale_row(std::size_t i, const Scalar& u) {
        for (auto& entry : work_[i]) entry = u * entry;
        Scalar inv = u.inverse();
        for (auto& x : generators_[i]) x *= inv;
    }

    std::optional<std::pair<std::size_t, std::size_t>> min_degree_entry(std::size_t k) const {
        std::optional<std::pair<std::size_t, std::size_t>> best;
        int best_degree = 0;
        for (std::size_t i = k; i < n_; ++i)
            for (std::size_t j = k; j < n_; ++j) {
                const Polynomial& p = work_[i][j];
                if (p.is_zero()) continue;
                if (!best || p.degree() < best_degree) {
                    best = {i, j};
                    best_degree = p.degree();
                }
            }
        return best;
    }

    void run() {
        for (std::size_t k = 0; k < n_; ++k) {
            while (true) {
                auto pivot = min_degree_entry(k);
                if (!pivot) return; // remaining block is zero; impossible for XI - A
                swap_rows(k, pivot->first);
                swap_cols(k, pivot->second);

                bool clean = true;
                for (std::size_t i = k + 1; i < n_; ++i) {
                    if (work_[i][k].is_zero()) continue;
                    DivMod qr = divmod(work_[i][k], work_[k][k]);
                    add_row(i, k, -qr.quotient);
                    if (!qr.remainder.is_zero()) clean = false;
                }
                for (std::size_t j = k + 1; j < n_; ++j) {
                    if (work_[k][j].is_zero()) continue;
                    DivMod qr = divmod(work_[k][j], work_[k][k]);
                    add_col(j, k, -qr.quotient);
                    if (!qr.remainder.is_zero()) clean = false;
                }
                if (!clean) continue;

                std::optional<std::size_t> offending;
                for (std::size_t i = k + 1; i < n_ && !offending; ++i)
                    for (std::size_t j = k + 1; j < n_; ++j)
                        if (!work_[i][j].is_zero() && !divides(work_[k][k], work_[i][j])) {
                            offending = i;
                            break;
                        }
                if (!offending) break;
                add_row(k, *offending, Polynomial::constant(Scalar::one(a_.field())));
            }
            scale_row(k, work_[k][k].leading().inverse());
        }
    }

    const Matrix& a_;
    std::size_t n_;
    std::vector<std::vector<Polynomial>> work_;
    std::vector<Vector> generators_;
};

void require_nonempty_square(const Matrix& a) {
    if (!a.is_square())
        throw Error(ErrorKind::NonSquare, "expected a square matrix, got " + std::to_string(a.rows()) + "x" +
                                              std::to_string(a.cols()));
    if (a.rows() == 0) throw Error(ErrorKind::EmptyInput, "0x0 matrix has no rational normal form");
}

} // namespace

RnfTransform rnf_transform(const Matrix& a) {
    require_nonempty_square(a);
    SmithReduction smith(a);
    const std::size_t n = a.rows();

    // Diagonal is d_0 | d_1 | ... | d_{n-1}; the chain runs largest first.
    std::vector<Polynomial> factors;
    std::vector<Vector> columns;
    for (std::size_t i = n; i-- > 0;) {
        const Polynomial& d = smith.diagonal(i);
        if (d.degree() < 1) break;
        factors.push_back(d);
        Vector v = smith.generator(i);
        for (int j = 0; j < d.degree(); ++j) {
            columns.push_back(v);
            v = a.apply(v);
        }
    }
    RationalNormalForm form(std::move(factors));
    Matrix normal = assemble_rnf_matrix(form);
    Matrix transform = Matrix::from_columns(a.field(), n, columns);
    return {std::move(form), std::move(normal), std::move(transform)};
}

RationalNormalForm invariant_factors(const Matrix& a) { return rnf_transform(a).form; }

Partition partition_of(const RationalNormalForm& rnf) {
    std::vector<std::size_t> parts;
    for (const Polynomial& p : rnf.factors()) parts.push_back(static_cast<std::size_t>(p.degree()));
    return Partition(std::move(parts));
}

} // namespace canform
