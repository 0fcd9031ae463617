#include "canform/field.hpp"


namespace canform {

std::string_view error_name(ErrorKind kind) noexcept {
    switch (kind) {
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::FieldMismatch: return "FieldMismatch";
    case ErrorKind::InvalidField: return "InvalidField";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::SingularMatrix: return "SingularMatrix";
    case ErrorKind::EmptyInput: return "EmptyInput";
    case ErrorKind::NotMonic: return "NotMonic";
    case ErrorKind::DegreeZero: return "DegreeZero";
    case ErrorKind::NonSquare: return "NonSquare";
    case ErrorKind::ChainViolation: return "ChainViolation";
    case ErrorKind::InvalidPartition: return "InvalidPartition";
    case ErrorKind::DegreeMismatch: return "DegreeMismatch";
    case ErrorKind::TraceNonzero: return "TraceNonzero";
    case ErrorKind::NotInY: return "NotInY";
    case ErrorKind::NotInQ: return "NotInQ";
    case ErrorKind::RootsMissingInField: return "RootsMissingInField";
    case ErrorKind::EigenvaluesMissingInField: return "EigenvaluesMissingInField";
    case ErrorKind::DegenerateDiagonal: return "DegenerateDiagonal";
    case ErrorKind::NotInW: return "NotInW";
    case ErrorKind::DegenerateComposite: return "DegenerateComposite";
    case ErrorKind::BasisFailure: return "BasisFailure";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::UsageError: return "UsageError";
    }
    return "Unknown";
}

namespace {

bool is_prime(std::uint64_t p) {
    if (p < 2) return false;
    for (std::uint64_t d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) { return a * b % p; }

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t p) {
    std::uint64_t result = 1 % p;
    base %= p;
    while (exp > 0) {
        if (exp & 1) result = mul_mod(result, base, p);
        base = mul_mod(base, base, p);
        exp >>= 1;
    }
    return result;
}

// Tonelli-Shanks; p odd prime, a a nonzero quadratic residue.
std::uint64_t tonelli_shanks(std::uint64_t a, std::uint64_t p) {
    std::uint64_t q = p - 1;
    unsigned s = 0;
    while ((q & 1) == 0) {
        q >>= 1;
        ++s;
    }
    std::uint64_t z = 2;
    while (pow_mod(z, (p - 1) / 2, p) != p - 1) ++z;

    std::uint64_t m = s;
    std::uint64_t c = pow_mod(z, q, p);
    std::uint64_t t = pow_mod(a, q, p);
    std::uint64_t r = pow_mod(a, (q + 1) / 2, p);
    while (t != 1) {
        std::uint64_t i = 0;
        std::uint64_t t2 = t;
        while (t2 != 1) {
            t2 = mul_mod(t2, t2, p);
            ++i;
        }
        std::uint64_t b = c;
        for (std::uint64_t j = 0; j + i + 1 < m; ++j) b = mul_mod(b, b, p);
        m = i;
        c = mul_mod(b, b, p);
        t = mul_mod(t, c, p);
        r = mul_mod(r, b, p);
    }
    return r;
}

std::uint64_t reduce_mpz(const mpz_class& z, std::uint64_t p) {
    mpz_class r = z % static_cast<unsigned long>(p);
    if (r < 0) r += static_cast<unsigned long>(p);
    return r.get_ui();
}

} // namespace

Field Field::prime(std::uint64_t p) {
    if (p >= (std::uint64_t{1} << 32))
        throw Error(ErrorKind::InvalidField, "modulus " + std::to_string(p) + " exceeds 2^32");
    if (!is_prime(p)) throw Error(ErrorKind::InvalidField, std::to_string(p) + " is not prime");
    return Field(Kind::PrimeField, p);
}

std::string Field::to_string() const {
    return is_rationals() ? std::string("Q") : "GF(" + std::to_string(modulus_) + ")";
}

void require_same_field(const Field& a, const Field& b) {
    if (!(a == b)) throw Error(ErrorKind::FieldMismatch, a.to_string() + " vs " + b.to_string());
}

Scalar::Scalar(const Field& field, long long value) : field_(field), value_(std::uint64_t{0}) {
    if (field.is_rationals()) {
        value_ = mpq_class(static_cast<signed long>(value));
    } else {
        auto p = static_cast<long long>(field.characteristic());
        long long r = value % p;
        if (r < 0) r += p;
        value_ = static_cast<std::uint64_t>(r);
    }
}

Scalar::Scalar(const Field& field, const mpq_class& value) : field_(field), value_(std::uint64_t{0}) {
    if (field.is_rationals()) {
        mpq_class v = value;
        v.canonicalize();
        value_ = std::move(v);
        return;
    }
    std::uint64_t p = field.characteristic();
    std::uint64_t den = reduce_mpz(value.get_den(), p);
    if (den == 0) throw Error(ErrorKind::DivisionByZero, "denominator vanishes mod " + std::to_string(p));
    value_ = mul_mod(reduce_mpz(value.get_num(), p), pow_mod(den, p - 2, p), p);
}

Scalar Scalar::parse(const Field& field, std::string_view text) {
    auto bad = [&] { return Error(ErrorKind::ParseError, "malformed scalar '" + std::string(text) + "'"); };
    if (text.empty()) throw bad();
    auto is_integer = [](std::string_view s) {
        std::size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
        if (i == s.size()) return false;
        for (; i < s.size(); ++i)
            if (s[i] < '0' || s[i] > '9') return false;
        return true;
    };
    auto to_mpz = [](std::string_view s) {
        if (s[0] == '+') s.remove_prefix(1);
        return mpz_class(std::string(s));
    };
    auto slash = text.find('/');
    std::string_view num = text.substr(0, slash);
    if (!is_integer(num)) throw bad();
    mpz_class den = 1;
    if (slash != std::string_view::npos) {
        std::string_view d = text.substr(slash + 1);
        if (!is_integer(d)) throw bad();
        den = to_mpz(d);
        if (den == 0) throw Error(ErrorKind::DivisionByZero, "zero denominator in '" + std::string(text) + "'");
    }
    return Scalar(field, mpq_class(to_mpz(num), den));
}

bool Scalar::is_zero() const noexcept {
    if (auto r = std::get_if<std::uint64_t>(&value_)) return *r == 0;
    return sgn(std::get<mpq_class>(value_)) == 0;
}

bool Scalar::is_one() const noexcept {
    if (auto r = std::get_if<std::uint64_t>(&value_)) return *r == 1;
    return std::get<mpq_class>(value_) == 1;
}

std::uint64_t Scalar::residue() const {
    if (auto r = std::get_if<std::uint64_t>(&value_)) return *r;
    throw Error(ErrorKind::FieldMismatch, "residue() on a rational scalar");
}

const mpq_class& Scalar::rational() const {
    if (auto q = std::get_if<mpq_class>(&value_)) return *q;
    throw Error(ErrorKind::FieldMismatch, "rational() on a prime-field scalar");
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw Error(ErrorKind::DivisionByZero, "inverse of zero");
    if (field_.is_rationals()) {
        mpq_class r = 1 / std::get<mpq_class>(value_);
        return Scalar(field_, r);
    }
    std::uint64_t p = field_.characteristic();
    return Scalar(field_, pow_mod(std::get<std::uint64_t>(value_), p - 2, p), std::in_place);
}

Scalar Scalar::operator-() const {
    if (field_.is_rationals()) {
        mpq_class r = -std::get<mpq_class>(value_);
        return Scalar(field_, r);
    }
    std::uint64_t p = field_.characteristic();
    std::uint64_t r = std::get<std::uint64_t>(value_);
    return Scalar(field_, r == 0 ? 0 : p - r, std::in_place);
}

Scalar operator+(const Scalar& x, const Scalar& y) {
    require_same_field(x.field_, y.field_);
    if (x.field_.is_rationals()) {
        mpq_class r = std::get<mpq_class>(x.value_) + std::get<mpq_class>(y.value_);
        return Scalar(x.field_, r);
    }
    std::uint64_t p = x.field_.characteristic();
    return Scalar(x.field_, (std::get<std::uint64_t>(x.value_) + std::get<std::uint64_t>(y.value_)) % p,
                  std::in_place);
}

Scalar operator-(const Scalar& x, const Scalar& y) {
    require_same_field(x.field_, y.field_);
    if (x.field_.is_rationals()) {
        mpq_class r = std::get<mpq_class>(x.value_) - std::get<mpq_class>(y.value_);
        return Scalar(x.field_, r);
    }
    std::uint64_t p = x.field_.characteristic();
    return Scalar(x.field_, (std::get<std::uint64_t>(x.value_) + p - std::get<std::uint64_t>(y.value_)) % p,
                  std::in_place);
}

Scalar operator*(const Scalar& x, const Scalar& y) {
    require_same_field(x.field_, y.field_);
    if (x.field_.is_rationals()) {
        mpq_class r = std::get<mpq_class>(x.value_) * std::get<mpq_class>(y.value_);
        return Scalar(x.field_, r);
    }
    return Scalar(x.field_,
                  mul_mod(std::get<std::uint64_t>(x.value_), std::get<std::uint64_t>(y.value_),
                          x.field_.characteristic()),
                  std::in_place);
}

Scalar operator/(const Scalar& x, const Scalar& y) {
    require_same_field(x.field_, y.field_);
    if (y.is_zero()) throw Error(ErrorKind::DivisionByZero, "division by zero");
    return x * y.inverse();
}

bool operator==(const Scalar& x, const Scalar& y) {
    return x.field_ == y.field_ && x.value_ == y.value_;
}

bool operator<(const Scalar& x, const Scalar& y) {
    require_same_field(x.field_, y.field_);
    return x.value_ < y.value_;
}

std::string Scalar::to_string() const {
    if (auto r = std::get_if<std::uint64_t>(&value_)) return std::to_string(*r);
    return std::get<mpq_class>(value_).get_str();
}

std::optional<std::pair<Scalar, Scalar>> sqrt_if_exists(const Scalar& x) {
    const Field& field = x.field();
    if (x.is_zero()) return std::pair{x, x};
    if (field.is_rationals()) {
        const mpq_class& q = x.rational();
        if (sgn(q) < 0) return std::nullopt;
        const mpz_class& num = q.get_num();
        const mpz_class& den = q.get_den();
        if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t())) return std::nullopt;
        mpq_class root(sqrt(num), sqrt(den));
        Scalar r(field, root);
        return std::pair{r, -r};
    }
    std::uint64_t p = field.characteristic();
    if (p == 2) return std::pair{x, x};
    std::uint64_t a = x.residue();
    if (pow_mod(a, (p - 1) / 2, p) != 1) return std::nullopt;
    std::uint64_t r = tonelli_shanks(a, p);
    std::uint64_t lo = std::min(r, p - r);
    Scalar s(field, static_cast<long long>(lo));
    return std::pair{s, -s};
}

} // namespace canform
