#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <array>

#include "canform/pairs.hpp"
#include "support/oracle.hpp"

using namespace canform;
namespace t = canform::testing;

namespace {

const Field Q = Field::rationals();

ErrorKind kind_of(auto&& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.kind();
    }
    FAIL("expected an exception");
    return ErrorKind::UsageError;
}

InvariantTriple triple(const Field& f, long long x1, long long x2, long long x3) {
    return {Scalar(f, x1), Scalar(f, x2), Scalar(f, x3)};
}

// All trace-zero 2x2 matrices over a small prime field.
std::vector<Matrix> sl2(const Field& f) {
    std::vector<Matrix> out;
    auto p = static_cast<long long>(f.characteristic());
    for (long long a = 0; a < p; ++a)
        for (long long b = 0; b < p; ++b)
            for (long long c = 0; c < p; ++c) out.push_back(Matrix::from_ints(f, {{a, b}, {c, -a}}));
    return out;
}

Sl2Pair random_sl2_pair(const Field& f, std::mt19937_64& rng) {
    auto draw = [&] {
        Matrix m = t::random_matrix(f, 2, 2, rng);
        m(1, 1) = -m(0, 0);
        return m;
    };
    return Sl2Pair(draw(), draw());
}

QForm random_qform(const Field& f, std::mt19937_64& rng) {
    while (true) {
        try {
            return QForm(t::random_scalar(f, rng), t::random_scalar(f, rng), t::random_scalar(f, rng));
        } catch (const Error&) {
        }
    }
}

} // namespace

TEST_CASE("invariants") {
    const Field gf7 = Field::prime(7);
    CHECK(invariants(Sl2Pair(Matrix(Q, 2, 2), Matrix(Q, 2, 2))) == triple(Q, 0, 0, 0));

    // A = [[1,1],[0,-1]], B = [[2,0],[4,-2]]: det A = -1, AB = [[6,-2],[-4,2]], det B = -4.
    Sl2Pair pair = QForm(Scalar(gf7, 1), Scalar(gf7, 2), Scalar(gf7, 4)).realize();
    CHECK(invariants(pair) == triple(gf7, -1, 8, -4));
    CHECK(invariants(pair) == triple(gf7, 6, 1, 3));

    std::mt19937_64 rng(4);
    for (const Field& f : {Q, gf7, Field::prime(2)})
        for (int i = 0; i < 50; ++i) {
            Sl2Pair p = random_sl2_pair(f, rng);
            CHECK(invariants(p.conjugated_by(t::random_invertible(f, 2, rng))) == invariants(p));
        }

    CHECK(kind_of([] { return Sl2Pair(Matrix::identity(Q, 2), Matrix(Q, 2, 2)); }) == ErrorKind::TraceNonzero);
    CHECK(kind_of([] { return Sl2Pair(Matrix(Q, 3, 3), Matrix(Q, 2, 2)); }) == ErrorKind::DimensionMismatch);
}

TEST_CASE("g_value") {
    CHECK(g_value(triple(Q, 0, 5, 7)).is_zero());
    CHECK(g_value(triple(Q, 1, 2, 1)).is_zero());
    CHECK(g_value(triple(Field::prime(7), 6, 1, 3)) == Scalar(Field::prime(7), 3));
}

TEST_CASE("QForm lies in X") {
    std::mt19937_64 rng(6);
    for (const Field& f : {Q, Field::prime(7), Field::prime(2)})
        for (int i = 0; i < 50; ++i) CHECK_FALSE(g_value(invariants(random_qform(f, rng).realize())).is_zero());
    CHECK(kind_of([] { return QForm(Scalar(Q, 1), Scalar(Q, 1), Scalar(Q, -4)); }) == ErrorKind::NotInQ);
    CHECK(kind_of([] { return QForm(Scalar(Q, 0), Scalar(Q, 1), Scalar(Q, 1)); }) == ErrorKind::NotInQ);
}

TEST_CASE("q_points examples") {
    const Field gf7 = Field::prime(7);
    auto fiber = q_points(triple(gf7, 6, 1, 3));
    std::vector<QForm> expected;
    for (auto [a, b, c] : std::vector<std::array<long long, 3>>{{1, 2, 4}, {1, 5, 5}, {6, 2, 5}, {6, 5, 4}})
        expected.emplace_back(Scalar(gf7, a), Scalar(gf7, b), Scalar(gf7, c));
    CHECK(fiber == expected);
    for (const QForm& q : fiber) CHECK(invariants(q.realize()) == triple(gf7, 6, 1, 3));

    const Field gf2 = Field::prime(2);
    auto single = q_points(triple(gf2, 1, 1, 1));
    REQUIRE(single.size() == 1);
    CHECK(single[0] == QForm(Scalar(gf2, 1), Scalar(gf2, 1), Scalar(gf2, 1)));
    CHECK(invariants(single[0].realize()) == triple(gf2, 1, 1, 1));

    // -x1 = 3 is a non-residue mod 7.
    CHECK(kind_of([&] { return q_points(triple(gf7, 4, 1, 3)); }) == ErrorKind::RootsMissingInField);
    CHECK(kind_of([&] { return q_points(triple(gf7, 0, 1, 3)); }) == ErrorKind::NotInY);

    auto rational = q_points(triple(Q, -1, 3, -4));
    CHECK(rational.size() == 4);
    for (const QForm& q : rational) CHECK(invariants(q.realize()) == triple(Q, -1, 3, -4));
}

TEST_CASE("fiber census over small fields") {
    for (std::uint64_t p : {3u, 5u}) {
        const Field f = Field::prime(p);
        auto gl = t::general_linear_group(f, 2);
        auto pp = static_cast<long long>(p);
        int fibers = 0;
        for (long long x1 = 0; x1 < pp; ++x1)
            for (long long x2 = 0; x2 < pp; ++x2)
                for (long long x3 = 0; x3 < pp; ++x3) {
                    InvariantTriple y = triple(f, x1, x2, x3);
                    if (g_value(y).is_zero() || !sqrt_if_exists(-y.x1) || !sqrt_if_exists(-y.x3)) continue;
                    auto fiber = q_points(y);
                    REQUIRE(fiber.size() == 4);
                    ++fibers;
                    for (std::size_t i = 0; i < 4; ++i) {
                        CHECK(invariants(fiber[i].realize()) == y);
                        for (std::size_t j = i + 1; j < 4; ++j) {
                            CHECK_FALSE(fiber[i] == fiber[j]);
                            CHECK(t::brute_force_simultaneously_similar(PairPoint(fiber[i].realize()),
                                                                        PairPoint(fiber[j].realize()), gl));
                        }
                    }
                }
        CHECK(fibers > 0);
    }
}

TEST_CASE("every pair over GF(3) in X reduces into its fiber") {
    const Field f = Field::prime(3);
    auto mats = sl2(f);
    int reduced = 0;
    for (const Matrix& a : mats)
        for (const Matrix& b : mats) {
            Sl2Pair pair(a, b);
            InvariantTriple y = invariants(pair);
            if (g_value(y).is_zero()) continue;
            if (!sqrt_if_exists(-y.x1) || !sqrt_if_exists(-y.x3)) {
                CHECK(kind_of([&] { return reduce_to_q(pair); }) == ErrorKind::EigenvaluesMissingInField);
                continue;
            }
            Reduction r = reduce_to_q(pair);
            CHECK(pair.conjugated_by(r.g) == r.q.realize());
            auto fiber = q_points(y);
            CHECK(std::find(fiber.begin(), fiber.end(), r.q) != fiber.end());
            // Deterministic sheet: first roots of -x1 and -x3.
            CHECK(r.q.a11() == sqrt_if_exists(-y.x1)->first);
            CHECK(r.q.b11() == sqrt_if_exists(-y.x3)->first);
            ++reduced;
        }
    CHECK(reduced > 0);
}

TEST_CASE("reduce_to_q examples") {
    const Field gf7 = Field::prime(7);
    QForm q(Scalar(gf7, 1), Scalar(gf7, 2), Scalar(gf7, 4));
    Reduction self = reduce_to_q(q.realize());
    CHECK(invariants(self.q.realize()) == invariants(q.realize()));
    CHECK(q.realize().conjugated_by(self.g) == self.q.realize());

    std::mt19937_64 rng(31);
    auto fiber = q_points(triple(gf7, 6, 1, 3));
    for (int i = 0; i < 20; ++i) {
        Sl2Pair moved = q.realize().conjugated_by(t::random_invertible(gf7, 2, rng));
        Reduction r = reduce_to_q(moved);
        CHECK(std::find(fiber.begin(), fiber.end(), r.q) != fiber.end());
        CHECK(moved.conjugated_by(r.g) == r.q.realize());
    }

    const Field gf2 = Field::prime(2);
    QForm one(Scalar(gf2, 1), Scalar(gf2, 1), Scalar(gf2, 1));
    auto gl2 = t::general_linear_group(gf2, 2);
    for (const Matrix& g : gl2) CHECK(reduce_to_q(one.realize().conjugated_by(g)).q == one);

    CHECK(kind_of([] { return reduce_to_q(Sl2Pair(Matrix(Q, 2, 2), Matrix(Q, 2, 2))); }) == ErrorKind::NotInY);
    // det A = 1: eigenvalues +-i are not rational.
    Sl2Pair rotation(Matrix::from_ints(Q, {{0, -1}, {1, 0}}), Matrix::from_ints(Q, {{1, 1}, {1, -1}}));
    REQUIRE_FALSE(g_value(invariants(rotation)).is_zero());
    CHECK(kind_of([&] { return reduce_to_q(rotation); }) == ErrorKind::EigenvaluesMissingInField);
}

TEST_CASE("common_eigenvector examples") {
    auto e1 = common_eigenvector(Sl2Pair(Matrix::from_ints(Q, {{1, 0}, {0, -1}}), Matrix::from_ints(Q, {{2, 0}, {0, -2}})));
    REQUIRE(e1);
    CHECK(*e1 == Vector{Scalar(Q, 1), Scalar(Q, 0)});

    const Field gf5 = Field::prime(5);
    auto nil = common_eigenvector(Sl2Pair(Matrix::from_ints(gf5, {{0, 1}, {0, 0}}), Matrix::from_ints(gf5, {{0, 3}, {0, 0}})));
    REQUIRE(nil);
    CHECK(*nil == Vector{Scalar(gf5, 1), Scalar(gf5, 0)});

    CHECK_FALSE(common_eigenvector(QForm(Scalar(Q, 1), Scalar(Q, 2), Scalar(Q, 4)).realize()));

    Sl2Pair rotation(Matrix::from_ints(Q, {{0, -1}, {1, 0}}), Matrix(Q, 2, 2));
    CHECK(kind_of([&] { return common_eigenvector(rotation); }) == ErrorKind::EigenvaluesMissingInField);
}

TEST_CASE("no common eigenvector on X, exhaustively over GF(3)") {
    const Field f = Field::prime(3);
    auto mats = sl2(f);
    for (const Matrix& a : mats)
        for (const Matrix& b : mats) {
            Sl2Pair pair(a, b);
            bool in_y = !g_value(invariants(pair)).is_zero();
            std::optional<Vector> v;
            try {
                v = common_eigenvector(pair);
            } catch (const Error& e) {
                REQUIRE(e.kind() == ErrorKind::EigenvaluesMissingInField);
                // Over the closure, 2x2 matrices share an eigenvector iff det[A,B] = 0.
                if (in_y) CHECK_FALSE((a * b - b * a).determinant().is_zero());
                continue;
            }
            if (in_y) CHECK_FALSE(v);
            if (v) {
                CHECK_FALSE(in_y);
                Vector av = a.apply(*v), bv = b.apply(*v);
                // v is an eigenvector: its span is preserved.
                CHECK((av[0] * (*v)[1] - av[1] * (*v)[0]).is_zero());
                CHECK((bv[0] * (*v)[1] - bv[1] * (*v)[0]).is_zero());
            }
        }
}

TEST_CASE("hom_dimension") {
    PairPoint s = simple_pair(Q, 4);
    CHECK(hom_dimension(s, s) == 1);
    PairPoint zero(Matrix(Q, 1, 1), Matrix(Q, 1, 1));
    CHECK(hom_dimension(zero, zero) == 1);
    PairPoint q(QForm(Scalar(Q, 1), Scalar(Q, 2), Scalar(Q, 4)).realize());
    CHECK(hom_dimension(s, q) == 0);
    CHECK(hom_dimension(q, s) == 0);
    CHECK(hom_dimension(q, q) == 1);

    for (const Matrix& f : hom_space(s, direct_sum(s, q))) {
        PairPoint target = direct_sum(s, q);
        CHECK(f * s.m1() == target.m1() * f);
        CHECK(f * s.m2() == target.m2() * f);
    }
    CHECK(kind_of([&] { return hom_dimension(s, simple_pair(Field::prime(5), 4)); }) == ErrorKind::FieldMismatch);
}

TEST_CASE("hom_dimension is additive over direct sums") {
    std::mt19937_64 rng(12);
    const Field f = Field::prime(3);
    auto draw = [&](std::size_t n) {
        // Low-rank-ish actions make nonzero Homs common.
        Matrix a = t::random_matrix(f, n, n, rng), b = t::random_matrix(f, n, n, rng);
        if (rng() % 2) b = a * a;
        return PairPoint(a, b);
    };
    for (int i = 0; i < 60; ++i) {
        PairPoint m = draw(1 + rng() % 3), m2 = draw(1 + rng() % 3), m3 = draw(1 + rng() % 2);
        CHECK(hom_dimension(m, direct_sum(m2, m3)) == hom_dimension(m, m2) + hom_dimension(m, m3));
        CHECK(hom_dimension(direct_sum(m2, m3), m) == hom_dimension(m2, m) + hom_dimension(m3, m));
    }
}

TEST_CASE("simple_pair") {
    PairPoint s = simple_pair(Q, 4);
    CHECK(s.m1() == Matrix::from_ints(Q, {{1, 0}, {0, 2}}));
    CHECK(s.m2() == Matrix::from_ints(Q, {{0, 1}, {1, 0}}));
    for (std::size_t n = 3; n <= 7; ++n) CHECK(hom_dimension(simple_pair(Q, n), simple_pair(Q, n)) == 1);
    CHECK(simple_pair(Field::prime(2), 4).m1() == Matrix::from_ints(Field::prime(2), {{1, 0}, {0, 0}}));
    CHECK(kind_of([] { return simple_pair(Field::prime(2), 5); }) == ErrorKind::DegenerateDiagonal);
    CHECK(kind_of([] { return simple_pair(Field::prime(5), 8); }) == ErrorKind::DegenerateDiagonal);
    CHECK(kind_of([] { return simple_pair(Q, 2); }) == ErrorKind::DimensionMismatch);
}

TEST_CASE("split_off_simple") {
    const Field f = Field::prime(11);
    PairPoint s = simple_pair(f, 4);
    PairPoint tq(QForm(Scalar(f, 1), Scalar(f, 2), Scalar(f, 4)).realize());

    SplitOff fixed = split_off_simple(direct_sum(s, tq));
    CHECK(direct_sum(s, tq).conjugated_by(fixed.h) == direct_sum(s, fixed.t));
    CHECK(invariants(Sl2Pair(fixed.t.m1(), fixed.t.m2())) == invariants(Sl2Pair(tq.m1(), tq.m2())));

    std::mt19937_64 rng(44);
    for (int i = 0; i < 20; ++i) {
        Matrix g0 = t::random_invertible(f, 4, rng);
        PairPoint m = direct_sum(s, tq).conjugated_by(g0);
        SplitOff out = split_off_simple(m);
        CHECK(m.conjugated_by(out.h) == direct_sum(s, out.t));
        CHECK(hom_dimension(s, out.t) == 0);
        CHECK(hom_dimension(out.t, s) == 0);
        CHECK(invariants(Sl2Pair(out.t.m1(), out.t.m2())) == invariants(Sl2Pair(tq.m1(), tq.m2())));
    }

    CHECK(kind_of([&] { return split_off_simple(direct_sum(s, s)); }) == ErrorKind::NotInW);

    // Nonsplit self-extension of S: [S,M] = [M,S] = 1 but g o f = 0.
    Matrix x1 = Matrix::from_ints(f, {{3, 1}, {4, 1}}), x2 = Matrix::from_ints(f, {{5, 9}, {2, 6}});
    Matrix m1(f, 4, 4), m2(f, 4, 4);
    for (std::size_t r = 0; r < 2; ++r)
        for (std::size_t c = 0; c < 2; ++c) {
            m1(r, c) = s.m1()(r, c);
            m1(r + 2, c + 2) = s.m1()(r, c);
            m1(r, c + 2) = x1(r, c);
            m2(r, c) = s.m2()(r, c);
            m2(r + 2, c + 2) = s.m2()(r, c);
            m2(r, c + 2) = x2(r, c);
        }
    PairPoint extension(m1, m2);
    REQUIRE(hom_dimension(s, extension) == 1);
    REQUIRE(hom_dimension(extension, s) == 1);
    CHECK(kind_of([&] { return split_off_simple(extension); }) == ErrorKind::DegenerateComposite);
}

TEST_CASE("s + t and s + t' are similar iff t and t' are, over GF(3)") {
    const Field f = Field::prime(3);
    PairPoint s = simple_pair(f, 3);
    auto gl2 = t::general_linear_group(f, 2);
    auto gl3 = t::general_linear_group(f, 3);
    std::mt19937_64 rng(9);
    int similar = 0, different = 0;
    for (int i = 0; i < 24; ++i) {
        PairPoint t1(random_sl2_pair(f, rng));
        PairPoint t2 = i % 2 ? t1.conjugated_by(t::random_invertible(f, 2, rng)) : PairPoint(random_sl2_pair(f, rng));
        bool small = t::brute_force_simultaneously_similar(t1, t2, gl2);
        bool big = t::brute_force_simultaneously_similar(direct_sum(s, t1), direct_sum(s, t2), gl3);
        CHECK(small == big);
        (small ? similar : different)++;
    }
    CHECK(similar > 0);
    CHECK(different > 0);
}
