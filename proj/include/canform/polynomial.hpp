#pragma once

#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "canform/field.hpp"

namespace canform {

/// Dense univariate polynomial, coefficients in ascending degree.
///
/// The representation is normalized: the leading coefficient is nonzero
/// unless the polynomial is zero, in which case the coefficient list is empty.
class Polynomial {
  public:
    explicit Polynomial(const Field& field) : field_(field) {}
    Polynomial(const Field& field, std::vector<Scalar> coefficients);

    static Polynomial from_ints(const Field& field, std::initializer_list<long long> ascending);
    static Polynomial from_ints(const Field& field, const std::vector<long long>& ascending);
    static Polynomial constant(const Scalar& c);
    /// c * X^degree
    static Polynomial monomial(const Scalar& c, std::size_t degree);
    static Polynomial x(const Field& field) { return monomial(Scalar::one(field), 1); }
    /// X - c
    static Polynomial linear(const Scalar& c);

    const Field& field() const noexcept { return field_; }
    /// -1 for the zero polynomial.
    int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const noexcept { return coeffs_.empty(); }
    bool is_monic() const noexcept { return !coeffs_.empty() && coeffs_.back().is_one(); }
    const Scalar& leading() const;
    /// Zero beyond the degree.
    Scalar coefficient(std::size_t i) const;
    std::span<const Scalar> coefficients() const noexcept { return coeffs_; }

    Polynomial monic() const;
    Scalar evaluate(const Scalar& at) const;

    friend Polynomial operator+(const Polynomial& f, const Polynomial& g);
    friend Polynomial operator-(const Polynomial& f, const Polynomial& g);
    friend Polynomial operator*(const Polynomial& f, const Polynomial& g);
    friend Polynomial operator*(const Scalar& c, const Polynomial& f);
    Polynomial operator-() const;
    friend bool operator==(const Polynomial& f, const Polynomial& g) = default;

    /// Human-readable form, e.g. "X^2 - 2*X + 1" over Q.
    std::string to_string(const std::string& var = "X") const;
    /// Ascending coefficient list, e.g. "[1, -2, 1]".
    std::string coefficient_list() const;

  private:
    void normalize();

    Field field_;
    std::vector<Scalar> coeffs_;
};

struct DivMod {
    Polynomial quotient;
    Polynomial remainder;
};

/// f = q*g + r with deg r < deg g. Throws DivisionByZero for g = 0.
DivMod divmod(const Polynomial& f, const Polynomial& g);

/// True when g divides f exactly (g nonzero).
bool divides(const Polynomial& g, const Polynomial& f);

/// Product of a nonempty list of polynomials over one field.
Polynomial poly_product(std::span<const Polynomial> factors);

} // namespace canform
