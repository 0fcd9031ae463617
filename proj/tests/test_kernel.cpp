#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "canform/matrix.hpp"
#include "canform/text_format.hpp"
#include "support/oracle.hpp"

using namespace canform;
using canform::testing::random_invertible;
using canform::testing::random_matrix;
using canform::testing::random_scalar;

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

} // namespace

TEST_CASE("scalar arithmetic") {
    const Field gf7 = Field::prime(7);
    CHECK(Scalar::parse(Q, "1/2") + Scalar::parse(Q, "1/3") == Scalar::parse(Q, "5/6"));
    CHECK(Scalar(gf7, 3).inverse() == Scalar(gf7, 5));
    CHECK(Scalar(gf7, -1) == Scalar(gf7, 6));
    CHECK(Scalar::parse(gf7, "1/2") == Scalar(gf7, 4));
    CHECK(Scalar::parse(Q, "6/-4").to_string() == "-3/2");

    CHECK(kind_of([&] { return Scalar(Q, 1) / Scalar(Q, 0); }) == ErrorKind::DivisionByZero);
    CHECK(kind_of([&] { return Scalar(gf7, 0).inverse(); }) == ErrorKind::DivisionByZero);
    CHECK(kind_of([&] { return Scalar(Q, 1) + Scalar(gf7, 1); }) == ErrorKind::FieldMismatch);
    CHECK(kind_of([&] { return Scalar::parse(gf7, "1/7"); }) == ErrorKind::DivisionByZero);
    CHECK(kind_of([&] { return Scalar::parse(Q, "1.5"); }) == ErrorKind::ParseError);
}

TEST_CASE("prime fields are validated") {
    CHECK(kind_of([] { return Field::prime(1); }) == ErrorKind::InvalidField);
    CHECK(kind_of([] { return Field::prime(91); }) == ErrorKind::InvalidField);
    CHECK(Field::prime(2).characteristic() == 2);
    CHECK(Field::rationals().characteristic() == 0);
}

TEST_CASE("rationals stay canonical under arithmetic") {
    std::mt19937_64 rng(11);
    Scalar acc = Scalar::parse(Q, "3/7");
    for (int i = 0; i < 300; ++i) {
        Scalar x = random_scalar(Q, rng, 9);
        switch (i % 4) {
        case 0: acc += x; break;
        case 1: acc -= x * Scalar::parse(Q, "2/3"); break;
        case 2: acc *= x.is_zero() ? Scalar(Q, 5) : x; break;
        default: acc = acc / (x.is_zero() ? Scalar(Q, -2) : x); break;
        }
        const mpq_class& q = acc.rational();
        mpz_class g;
        mpz_gcd(g.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
        REQUIRE(g == 1);
        REQUIRE(q.get_den() > 0);
    }
}

TEST_CASE("sqrt_if_exists") {
    const Field gf7 = Field::prime(7);
    auto r = sqrt_if_exists(Scalar(Q, 4));
    REQUIRE(r);
    CHECK(r->first == Scalar(Q, 2));
    CHECK(r->second == Scalar(Q, -2));
    CHECK(sqrt_if_exists(Scalar::parse(Q, "9/25"))->first == Scalar::parse(Q, "3/5"));
    CHECK_FALSE(sqrt_if_exists(Scalar(Q, 2)));
    CHECK_FALSE(sqrt_if_exists(Scalar(Q, -4)));

    auto s = sqrt_if_exists(Scalar(gf7, 2));
    REQUIRE(s);
    CHECK(s->first == Scalar(gf7, 3));
    CHECK(s->second == Scalar(gf7, 4));
    CHECK_FALSE(sqrt_if_exists(Scalar(gf7, 3)));

    auto t = sqrt_if_exists(Scalar(Field::prime(2), 1));
    REQUIRE(t);
    CHECK(t->first == t->second);
}

TEST_CASE("sqrt_if_exists agrees with exhaustive squaring") {
    for (std::uint64_t p : {2u, 3u, 5u, 7u, 11u, 13u, 17u, 41u, 97u, 113u}) {
        const Field f = Field::prime(p);
        for (std::uint64_t x = 0; x < p; ++x) {
            std::vector<std::uint64_t> roots;
            for (std::uint64_t r = 0; r < p; ++r)
                if (r * r % p == x) roots.push_back(r);
            auto got = sqrt_if_exists(Scalar(f, static_cast<long long>(x)));
            if (roots.empty()) {
                CHECK_FALSE(got);
                continue;
            }
            REQUIRE(got);
            CHECK(got->first.residue() == roots.front());
            CHECK(got->second.residue() == roots.back());
        }
    }
}

TEST_CASE("sqrt of a square contains the root") {
    std::mt19937_64 rng(5);
    for (std::uint64_t p : {7u, 1000003u, 4294967291u}) {
        const Field f = Field::prime(p);
        for (int i = 0; i < 50; ++i) {
            Scalar x = random_scalar(f, rng);
            auto r = sqrt_if_exists(x * x);
            REQUIRE(r);
            CHECK((r->first == x || r->second == x));
            CHECK(r->first * r->first == x * x);
        }
    }
    for (int i = 0; i < 50; ++i) {
        Scalar x = random_scalar(Q, rng, 1000) / Scalar(Q, 1 + static_cast<long long>(rng() % 50));
        auto r = sqrt_if_exists(x * x);
        REQUIRE(r);
        CHECK((r->first == x || r->second == x));
    }
}

TEST_CASE("poly_divmod") {
    auto qr = divmod(Polynomial::from_ints(Q, {-1, 0, 1}), Polynomial::from_ints(Q, {-1, 1}));
    CHECK(qr.quotient == Polynomial::from_ints(Q, {1, 1}));
    CHECK(qr.remainder.is_zero());

    const Field gf2 = Field::prime(2);
    auto qr2 = divmod(Polynomial::from_ints(gf2, {1, 1, 1}), Polynomial::from_ints(gf2, {1, 1}));
    CHECK(qr2.quotient == Polynomial::x(gf2));
    CHECK(qr2.remainder == Polynomial::from_ints(gf2, {1}));

    Polynomial f = Polynomial::from_ints(Q, {3, 0, -2, 7});
    auto self = divmod(f, f);
    CHECK(self.quotient == Polynomial::from_ints(Q, {1}));
    CHECK(self.remainder.is_zero());

    CHECK(kind_of([&] { return divmod(f, Polynomial(Q)); }) == ErrorKind::DivisionByZero);
}

TEST_CASE("poly_divmod identity on random inputs") {
    std::mt19937_64 rng(17);
    for (const Field& field : {Q, Field::prime(5), Field::prime(2)}) {
        for (int i = 0; i < 200; ++i) {
            std::vector<Scalar> fc, gc;
            for (std::size_t k = 0, n = rng() % 9; k < n; ++k) fc.push_back(random_scalar(field, rng));
            for (std::size_t k = 0, n = 1 + rng() % 5; k < n; ++k) gc.push_back(random_scalar(field, rng));
            Polynomial f(field, fc), g(field, gc);
            if (g.is_zero()) continue;
            auto [q, r] = divmod(f, g);
            CHECK(q * g + r == f);
            CHECK(r.degree() < g.degree());
        }
    }
}

TEST_CASE("poly_product") {
    std::vector<Polynomial> two{Polynomial::from_ints(Q, {-1, 1}), Polynomial::from_ints(Q, {1, 1})};
    CHECK(poly_product(two) == Polynomial::from_ints(Q, {-1, 0, 1}));

    std::vector<Polynomial> xs(4, Polynomial::x(Q));
    CHECK(poly_product(xs) == Polynomial::monomial(Scalar::one(Q), 4));

    const Field gf2 = Field::prime(2);
    std::vector<Polynomial> three{Polynomial::from_ints(gf2, {1, 0, 1}), Polynomial::x(gf2),
                                  Polynomial::from_ints(gf2, {1, 1, 1})};
    Polynomial prod = poly_product(three);
    CHECK(prod == Polynomial::from_ints(gf2, {0, 1, 1, 0, 1, 1}));
    CHECK(prod.degree() == 5);
    CHECK(prod.is_monic());
    for (long long at : {0, 1}) {
        Scalar x(gf2, at);
        Scalar expected = Scalar::one(gf2);
        for (const Polynomial& p : three) expected *= p.evaluate(x);
        CHECK(prod.evaluate(x) == expected);
    }
    CHECK(kind_of([] { return poly_product({}); }) == ErrorKind::EmptyInput);
}

TEST_CASE("polynomial printing") {
    CHECK(Polynomial::from_ints(Q, {1, -2, 1}).to_string() == "X^2 - 2*X + 1");
    CHECK(Polynomial::from_ints(Q, {1, -2, 1}).coefficient_list() == "[1, -2, 1]");
    CHECK(Polynomial(Q).to_string() == "0");
    CHECK(Polynomial(Q, {Scalar::parse(Q, "-1/2"), Scalar(Q, 1)}).to_string() == "X - 1/2");
}

TEST_CASE("matrix rank, kernel and inverse") {
    CHECK(inverse(Matrix::identity(Q, 4)) == Matrix::identity(Q, 4));

    auto zero = rank_kernel(Matrix(Q, 3, 3));
    CHECK(zero.rank == 0);
    CHECK(zero.kernel.size() == 3);

    Matrix a = Matrix::from_ints(Q, {{1, 2}, {2, 4}});
    auto rk = rank_kernel(a);
    CHECK(rk.rank == 1);
    REQUIRE(rk.kernel.size() == 1);
    CHECK(rk.kernel[0] == Vector{Scalar(Q, -2), Scalar(Q, 1)});
    CHECK(a.apply(rk.kernel[0]) == Vector(2, Scalar::zero(Q)));

    CHECK(kind_of([&] { return inverse(a); }) == ErrorKind::SingularMatrix);
    CHECK(kind_of([&] { return inverse(Matrix(Q, 2, 3)); }) == ErrorKind::NonSquare);
    CHECK(kind_of([&] { return Matrix(Q, 2, 3) * Matrix(Q, 2, 3); }) == ErrorKind::DimensionMismatch);
    CHECK(Matrix::from_ints(Q, {{2, 1}, {7, 4}}).determinant() == Scalar(Q, 1));
}

TEST_CASE("inverse and kernel properties on random matrices") {
    std::mt19937_64 rng(23);
    for (const Field& field : {Q, Field::prime(7), Field::prime(2)}) {
        for (std::size_t n = 1; n <= 8; ++n) {
            Matrix a = random_invertible(field, n, rng);
            CHECK(inverse(a) * a == Matrix::identity(field, n));
            CHECK(a * inverse(a) == Matrix::identity(field, n));

            std::size_t rows = 1 + rng() % 7;
            Matrix b = random_matrix(field, rows, n, rng);
            // Force some dependence.
            if (rows > 2)
                for (std::size_t c = 0; c < n; ++c) b(rows - 1, c) = b(0, c) + b(1, c);
            auto rk = rank_kernel(b);
            CHECK(rk.rank + rk.kernel.size() == n);
            for (const Vector& v : rk.kernel) CHECK(b.apply(v) == Vector(rows, Scalar::zero(field)));
            if (!rk.kernel.empty()) CHECK(rank_kernel(Matrix::from_columns(field, n, rk.kernel)).rank == rk.kernel.size());
        }
    }
}

TEST_CASE("block_diagonal") {
    Matrix b = Matrix::from_ints(Q, {{1, 2}, {3, 4}});
    std::vector<Matrix> single{b};
    CHECK(block_diagonal(single) == b);

    std::vector<Matrix> ones{Matrix::from_ints(Q, {{1}}), Matrix::from_ints(Q, {{2}})};
    CHECK(block_diagonal(ones) == Matrix::from_ints(Q, {{1, 0}, {0, 2}}));

    // Blocks filled with their index: anchors must land at rows 0, 5, 8, 10.
    std::vector<Matrix> blocks;
    long long tag = 1;
    for (std::size_t size : {5u, 3u, 2u, 2u}) {
        Matrix m(Q, size, size);
        for (std::size_t r = 0; r < size; ++r)
            for (std::size_t c = 0; c < size; ++c) m(r, c) = Scalar(Q, tag);
        blocks.push_back(m);
        ++tag;
    }
    Matrix big = block_diagonal(blocks);
    CHECK(big.rows() == 12);
    std::size_t anchors[] = {0, 5, 8, 10, 12};
    for (std::size_t r = 0; r < 12; ++r)
        for (std::size_t c = 0; c < 12; ++c) {
            long long expected = 0;
            for (std::size_t k = 0; k < 4; ++k)
                if (r >= anchors[k] && r < anchors[k + 1] && c >= anchors[k] && c < anchors[k + 1])
                    expected = static_cast<long long>(k) + 1;
            CHECK(big(r, c) == Scalar(Q, expected));
        }

    std::vector<Matrix> mixed{Matrix::identity(Q, 1), Matrix::identity(Field::prime(3), 1)};
    CHECK(kind_of([&] { return block_diagonal(mixed); }) == ErrorKind::FieldMismatch);
}

TEST_CASE("matrix text format") {
    std::istringstream in("field Q\n2 2\n1 -1/2\n0 3\n# trailing comment\n");
    Matrix m = read_matrix(in);
    CHECK(m == Matrix(Q, 2, 2, {Scalar(Q, 1), Scalar::parse(Q, "-1/2"), Scalar(Q, 0), Scalar(Q, 3)}));

    std::istringstream gf("field GF 5\n1 2\n7 -1\n");
    Matrix g = read_matrix(gf);
    CHECK(g.field() == Field::prime(5));
    CHECK(g(0, 0).residue() == 2);
    CHECK(g(0, 1).residue() == 4);

    std::istringstream headerless("1 1\n4\n");
    CHECK(read_matrix(headerless, Field::prime(3))(0, 0).residue() == 1);

    std::istringstream mismatch("field Q\n1 1\n4\n");
    CHECK(kind_of([&] { return read_matrix(mismatch, Field::prime(3)); }) == ErrorKind::FieldMismatch);
    std::istringstream short_input("field Q\n2 2\n1 2 3\n");
    CHECK(kind_of([&] { return read_matrix(short_input); }) == ErrorKind::ParseError);
    std::istringstream no_header("1 1\n4\n");
    CHECK(kind_of([&] { return read_matrix(no_header); }) == ErrorKind::ParseError);
    std::istringstream bad_field("field GF 4\n1 1\n1\n");
    CHECK(kind_of([&] { return read_matrix(bad_field); }) == ErrorKind::InvalidField);

    std::istringstream pair("field Q\n1 1\n1\nfield Q\n1 1\n2\n");
    CHECK(read_matrices(pair).size() == 2);
}

TEST_CASE("write_matrix output reads back unchanged") {
    std::mt19937_64 rng(3);
    for (const Field& field : {Q, Field::prime(13)}) {
        for (int i = 0; i < 20; ++i) {
            Matrix m = random_matrix(field, 1 + rng() % 4, 1 + rng() % 4, rng);
            if (field.is_rationals()) m(0, 0) = Scalar::parse(Q, "-7/3");
            std::istringstream in(write_matrix(m));
            CHECK(read_matrix(in) == m);
        }
    }
}
