#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>

#include <gmpxx.h>

#include "canform/error.hpp"

namespace canform {

/// The ambient field: the rationals or a prime field GF(p).
///
/// Prime moduli are limited to p < 2^32 so that residue products fit in 64
/// bits. Primality is checked on construction.
class Field {
  public:
    enum class Kind { Rationals, PrimeField };

    static Field rationals() noexcept { return Field(Kind::Rationals, 0); }
    static Field prime(std::uint64_t p);

    Kind kind() const noexcept { return kind_; }
    bool is_rationals() const noexcept { return kind_ == Kind::Rationals; }
    bool is_prime_field() const noexcept { return kind_ == Kind::PrimeField; }
    /// 0 for the rationals.
    std::uint64_t characteristic() const noexcept { return modulus_; }

    std::string to_string() const;

    friend bool operator==(const Field&, const Field&) = default;

  private:
    Field(Kind kind, std::uint64_t modulus) noexcept : kind_(kind), modulus_(modulus) {}

    Kind kind_;
    std::uint64_t modulus_;
};

/// An exact element of a Field.
///
/// Rationals are kept as canonical mpq values (lowest terms, positive
/// denominator); prime-field elements as residues in [0, p).
class Scalar {
  public:
    Scalar(const Field& field, long long value);
    Scalar(const Field& field, const mpq_class& value);

    static Scalar zero(const Field& field) { return Scalar(field, 0LL); }
    static Scalar one(const Field& field) { return Scalar(field, 1LL); }
    /// Parses `num` or `num/den`. Over GF(p) the fraction is reduced mod p.
    static Scalar parse(const Field& field, std::string_view text);

    const Field& field() const noexcept { return field_; }
    bool is_zero() const noexcept;
    bool is_one() const noexcept;

    /// Residue in [0, p); throws FieldMismatch over the rationals.
    std::uint64_t residue() const;
    /// Rational value; throws FieldMismatch over a prime field.
    const mpq_class& rational() const;

    Scalar inverse() const;
    Scalar operator-() const;

    friend Scalar operator+(const Scalar& x, const Scalar& y);
    friend Scalar operator-(const Scalar& x, const Scalar& y);
    friend Scalar operator*(const Scalar& x, const Scalar& y);
    friend Scalar operator/(const Scalar& x, const Scalar& y);
    Scalar& operator+=(const Scalar& y) { return *this = *this + y; }
    Scalar& operator-=(const Scalar& y) { return *this = *this - y; }
    Scalar& operator*=(const Scalar& y) { return *this = *this * y; }

    friend bool operator==(const Scalar& x, const Scalar& y);
    /// Canonical order: numeric order over Q, residue order over GF(p).
    friend bool operator<(const Scalar& x, const Scalar& y);

    std::string to_string() const;

  private:
    Scalar(const Field& field, std::uint64_t residue, std::in_place_t) noexcept
        : field_(field), value_(residue) {}

    Field field_;
    std::variant<std::uint64_t, mpq_class> value_;
};

/// Both square roots of x when they exist in the field: the positive root
/// first over Q, the smaller residue first over GF(p). Over GF(2), and for
/// x = 0, both entries coincide.
std::optional<std::pair<Scalar, Scalar>> sqrt_if_exists(const Scalar& x);

/// Throws FieldMismatch unless a and b are the same field.
void require_same_field(const Field& a, const Field& b);

} // namespace canform
