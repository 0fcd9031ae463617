#include "canform/pairs.hpp"

#include <algorithm>
#include <set>

namespace canform {

namespace {

void require_2x2(const Matrix& m, const char* which) {
    if (m.rows() != 2 || m.cols() != 2)
        throw Error(ErrorKind::DimensionMismatch, std::string(which) + " must be 2x2, got " +
                                                      std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
}

Matrix scalar_shift(const Matrix& m, const Scalar& lambda) {
    return m - lambda * Matrix::identity(m.field(), m.rows());
}

// Sorted distinct roots of x^2 = value, or nullopt.
std::optional<std::vector<Scalar>> distinct_roots(const Scalar& value) {
    auto roots = sqrt_if_exists(value);
    if (!roots) return std::nullopt;
    std::vector<Scalar> out{roots->first};
    if (!(roots->second == roots->first)) out.push_back(roots->second);
    std::sort(out.begin(), out.end());
    return out;
}

std::size_t leading_index(const Vector& v) {
    for (std::size_t i = 0; i < v.size(); ++i)
        if (!v[i].is_zero()) return i;
    return v.size();
}

bool candidate_before(const Vector& x, const Vector& y) {
    std::size_t lx = leading_index(x);
    std::size_t ly = leading_index(y);
    if (lx != ly) return lx < ly;
    return std::lexicographical_compare(x.begin(), x.end(), y.begin(), y.end());
}

// Scales m so its first nonzero entry in row-major order is 1.
Matrix normalize_generator(const Matrix& m) {
    for (const Scalar& s : m.entries())
        if (!s.is_zero()) return s.inverse() * m;
    return m;
}

Matrix stack(const Matrix& top, const Matrix& bottom) {
    Matrix out(top.field(), top.rows() + bottom.rows(), top.cols());
    for (std::size_t r = 0; r < top.rows(); ++r)
        for (std::size_t c = 0; c < top.cols(); ++c) out(r, c) = top(r, c);
    for (std::size_t r = 0; r < bottom.rows(); ++r)
        for (std::size_t c = 0; c < top.cols(); ++c) out(top.rows() + r, c) = bottom(r, c);
    return out;
}

} // namespace

Sl2Pair::Sl2Pair(Matrix a, Matrix b) : a_(std::move(a)), b_(std::move(b)) {
    require_2x2(a_, "A");
    require_2x2(b_, "B");
    require_same_field(a_.field(), b_.field());
    if (!a_.trace().is_zero()) throw Error(ErrorKind::TraceNonzero, "trace A = " + a_.trace().to_string());
    if (!b_.trace().is_zero()) throw Error(ErrorKind::TraceNonzero, "trace B = " + b_.trace().to_string());
}

Sl2Pair Sl2Pair::conjugated_by(const Matrix& g) const {
    Matrix gi = inverse(g);
    return Sl2Pair(gi * a_ * g, gi * b_ * g);
}

QForm::QForm(Scalar a11, Scalar b11, Scalar b21)
    : a11_(std::move(a11)), b11_(std::move(b11)), b21_(std::move(b21)) {
    const Field& f = a11_.field();
    require_same_field(f, b11_.field());
    require_same_field(f, b21_.field());
    Scalar condition = a11_ * b11_ * b21_ * (Scalar(f, 4) * a11_ * b11_ + b21_);
    if (condition.is_zero())
        throw Error(ErrorKind::NotInQ, "a11 b11 b21 (4 a11 b11 + b21) vanishes at (" + a11_.to_string() + ", " +
                                           b11_.to_string() + ", " + b21_.to_string() + ")");
}

Sl2Pair QForm::realize() const {
    const Field& f = a11_.field();
    Matrix a(f, 2, 2, {a11_, Scalar::one(f), Scalar::zero(f), -a11_});
    Matrix b(f, 2, 2, {b11_, Scalar::zero(f), b21_, -b11_});
    return Sl2Pair(std::move(a), std::move(b));
}

PairPoint::PairPoint(Matrix m1, Matrix m2) : m1_(std::move(m1)), m2_(std::move(m2)) {
    require_same_field(m1_.field(), m2_.field());
    if (!m1_.is_square() || !m2_.is_square()) throw Error(ErrorKind::NonSquare, "pair components must be square");
    if (m1_.rows() != m2_.rows()) throw Error(ErrorKind::DimensionMismatch, "pair components differ in size");
}

PairPoint PairPoint::conjugated_by(const Matrix& g) const {
    Matrix gi = inverse(g);
    return PairPoint(gi * m1_ * g, gi * m2_ * g);
}

PairPoint direct_sum(const PairPoint& x, const PairPoint& y) {
    std::vector<Matrix> first{x.m1(), y.m1()};
    std::vector<Matrix> second{x.m2(), y.m2()};
    return PairPoint(block_diagonal(first), block_diagonal(second));
}

InvariantTriple invariants(const Sl2Pair& pair) {
    return {pair.a().determinant(), (pair.a() * pair.b()).trace(), pair.b().determinant()};
}

Scalar g_value(const InvariantTriple& y) {
    const Field& f = y.x1.field();
    return y.x1 * y.x3 * (y.x2 * y.x2 - Scalar(f, 4) * y.x1 * y.x3);
}

std::vector<QForm> q_points(const InvariantTriple& y) {
    if (g_value(y).is_zero()) throw Error(ErrorKind::NotInY, "g vanishes on the triple");
    auto a_roots = distinct_roots(-y.x1);
    auto b_roots = distinct_roots(-y.x3);
    if (!a_roots) throw Error(ErrorKind::RootsMissingInField, "-x1 = " + (-y.x1).to_string() + " is not a square");
    if (!b_roots) throw Error(ErrorKind::RootsMissingInField, "-x3 = " + (-y.x3).to_string() + " is not a square");
    const Field& f = y.x1.field();
    std::vector<QForm> out;
    for (const Scalar& a : *a_roots)
        for (const Scalar& b : *b_roots) out.emplace_back(a, b, y.x2 - Scalar(f, 2) * b * a);
    return out;
}

std::optional<Vector> common_eigenvector(const Sl2Pair& pair) {
    auto a_roots = distinct_roots(-pair.a().determinant());
    auto b_roots = distinct_roots(-pair.b().determinant());
    if (!a_roots || !b_roots)
        throw Error(ErrorKind::EigenvaluesMissingInField, "eigenvalues of A or B lie outside " +
                                                              pair.field().to_string());
    std::optional<Vector> best;
    for (const Scalar& lambda : *a_roots)
        for (const Scalar& mu : *b_roots) {
            Matrix system = stack(scalar_shift(pair.a(), lambda), scalar_shift(pair.b(), mu));
            for (Vector& v : rank_kernel(system).kernel) {
                v = normalize_leading(std::move(v));
                if (!best || candidate_before(v, *best)) best = v;
            }
        }
    return best;
}

Reduction reduce_to_q(const Sl2Pair& pair) {
    InvariantTriple y = invariants(pair);
    if (g_value(y).is_zero()) throw Error(ErrorKind::NotInY, "g vanishes on the invariants of the pair");
    auto a_root = sqrt_if_exists(-y.x1);
    auto b_root = sqrt_if_exists(-y.x3);
    if (!a_root || !b_root)
        throw Error(ErrorKind::EigenvaluesMissingInField, "eigenvalues of A or B lie outside " +
                                                              pair.field().to_string());
    const Field& f = pair.field();
    const Scalar& a11 = a_root->first;
    const Scalar& b11 = b_root->first;

    // v1: A v1 = a11 v1. w1: B w1 = -b11 w1. Then (A + a11) w1 = x v1.
    Vector v1 = rank_kernel(scalar_shift(pair.a(), a11)).kernel.at(0);
    Vector w1 = rank_kernel(scalar_shift(pair.b(), -b11)).kernel.at(0);
    Vector u = scalar_shift(pair.a(), -a11).apply(w1);
    std::size_t lead = leading_index(v1);
    Scalar x = u[lead] / v1[lead];
    if (x.is_zero()) throw Error(ErrorKind::NotInY, "A and B share an eigenvector");

    Vector xv1 = v1;
    for (Scalar& s : xv1) s *= x;
    std::vector<Vector> columns{xv1, w1};
    Matrix g = Matrix::from_columns(f, 2, columns);
    Sl2Pair reduced = pair.conjugated_by(g);
    QForm q(reduced.a()(0, 0), reduced.b()(0, 0), reduced.b()(1, 0));
    if (!(q.realize() == reduced)) throw Error(ErrorKind::BasisFailure, "reduction did not land in Q");
    return {std::move(g), std::move(q)};
}

std::vector<Matrix> hom_space(const PairPoint& m, const PairPoint& m_prime) {
    require_same_field(m.field(), m_prime.field());
    const Field& field = m.field();
    const std::size_t n = m.size();
    const std::size_t np = m_prime.size();
    // Unknown f(r, c), r < n', c < n, at index r * n + c. Equations: entries of
    // f m_i - m'_i f for i = 1, 2.
    Matrix system(field, 2 * np * n, np * n);
    const Matrix* acts[2] = {&m.m1(), &m.m2()};
    const Matrix* acts_prime[2] = {&m_prime.m1(), &m_prime.m2()};
    for (std::size_t i = 0; i < 2; ++i) {
        const Matrix& mi = *acts[i];
        const Matrix& mpi = *acts_prime[i];
        for (std::size_t r = 0; r < np; ++r)
            for (std::size_t c = 0; c < n; ++c) {
                std::size_t eq = i * np * n + r * n + c;
                for (std::size_t k = 0; k < n; ++k) system(eq, r * n + k) += mi(k, c);
                for (std::size_t k = 0; k < np; ++k) system(eq, k * n + c) -= mpi(r, k);
            }
    }
    std::vector<Matrix> out;
    for (Vector& v : rank_kernel(system).kernel) out.emplace_back(field, np, n, std::move(v));
    return out;
}

std::size_t hom_dimension(const PairPoint& m, const PairPoint& m_prime) { return hom_space(m, m_prime).size(); }

PairPoint simple_pair(const Field& field, std::size_t n) {
    if (n < 3) throw Error(ErrorKind::DimensionMismatch, "simple_pair needs n >= 3, got " + std::to_string(n));
    const std::size_t size = n - 2;
    Matrix s1(field, size, size);
    Matrix s2(field, size, size);
    std::set<Scalar> seen;
    for (std::size_t i = 0; i < size; ++i) {
        Scalar d(field, static_cast<long long>(i + 1));
        if (!seen.insert(d).second)
            throw Error(ErrorKind::DegenerateDiagonal, "diagonal entries 1.." + std::to_string(size) +
                                                           " collide in " + field.to_string());
        s1(i, i) = d;
        s2((i + 1) % size, i) = Scalar::one(field);
    }
    return PairPoint(std::move(s1), std::move(s2));
}

SplitOff split_off_simple(const PairPoint& m) {
    const std::size_t n = m.size();
    PairPoint s = simple_pair(m.field(), n);
    auto fs = hom_space(s, m);
    auto gs = hom_space(m, s);
    if (fs.size() != 1 || gs.size() != 1)
        throw Error(ErrorKind::NotInW, "[S,M] = " + std::to_string(fs.size()) + ", [M,S] = " +
                                           std::to_string(gs.size()) + "; both must be 1");
    Matrix f = normalize_generator(fs.front());
    Matrix g = normalize_generator(gs.front());
    if ((g * f).is_zero()) throw Error(ErrorKind::DegenerateComposite, "g o f = 0");

    auto complement = rank_kernel(g).kernel;
    if (complement.size() != 2)
        throw Error(ErrorKind::BasisFailure, "ker g has dimension " + std::to_string(complement.size()));
    std::vector<Vector> columns;
    for (std::size_t j = 0; j + 2 < n; ++j) columns.push_back(f.column(j));
    columns.push_back(complement[0]);
    columns.push_back(complement[1]);
    Matrix h = Matrix::from_columns(m.field(), n, columns);
    if (h.determinant().is_zero()) throw Error(ErrorKind::BasisFailure, "h = (f e_1, ..., y_1, y_2) is singular");

    PairPoint reduced = m.conjugated_by(h);
    PairPoint t(reduced.m1().block(n - 2, n - 2, 2, 2), reduced.m2().block(n - 2, n - 2, 2, 2));
    if (!(direct_sum(s, t) == reduced)) throw Error(ErrorKind::BasisFailure, "h^{-1} m h is not block diagonal");
    return {std::move(t), std::move(h)};
}

} // namespace canform
