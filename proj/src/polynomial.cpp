#include "canform/polynomial.hpp"

#include <algorithm>

namespace canform {

Polynomial::Polynomial(const Field& field, std::vector<Scalar> coefficients)
    : field_(field), coeffs_(std::move(coefficients)) {
    for (const Scalar& c : coeffs_) require_same_field(field_, c.field());
    normalize();
}

Polynomial Polynomial::from_ints(const Field& field, std::initializer_list<long long> ascending) {
    return from_ints(field, std::vector<long long>(ascending));
}

Polynomial Polynomial::from_ints(const Field& field, const std::vector<long long>& ascending) {
    std::vector<Scalar> c;
    c.reserve(ascending.size());
    for (long long v : ascending) c.emplace_back(field, v);
    return Polynomial(field, std::move(c));
}

Polynomial Polynomial::constant(const Scalar& c) { return Polynomial(c.field(), {c}); }

Polynomial Polynomial::monomial(const Scalar& c, std::size_t degree) {
    std::vector<Scalar> coeffs(degree + 1, Scalar::zero(c.field()));
    coeffs[degree] = c;
    return Polynomial(c.field(), std::move(coeffs));
}

Polynomial Polynomial::linear(const Scalar& c) {
    return Polynomial(c.field(), {-c, Scalar::one(c.field())});
}

void Polynomial::normalize() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

const Scalar& Polynomial::leading() const {
    if (coeffs_.empty()) throw Error(ErrorKind::DegreeZero, "leading coefficient of the zero polynomial");
    return coeffs_.back();
}

Scalar Polynomial::coefficient(std::size_t i) const {
    return i < coeffs_.size() ? coeffs_[i] : Scalar::zero(field_);
}

Polynomial Polynomial::monic() const {
    Scalar inv = leading().inverse();
    return inv * *this;
}

Scalar Polynomial::evaluate(const Scalar& at) const {
    require_same_field(field_, at.field());
    Scalar acc = Scalar::zero(field_);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * at + *it;
    return acc;
}

Polynomial operator+(const Polynomial& f, const Polynomial& g) {
    require_same_field(f.field_, g.field_);
    std::vector<Scalar> c;
    std::size_t n = std::max(f.coeffs_.size(), g.coeffs_.size());
    c.reserve(n);
    for (std::size_t i = 0; i < n; ++i) c.push_back(f.coefficient(i) + g.coefficient(i));
    return Polynomial(f.field_, std::move(c));
}

Polynomial operator-(const Polynomial& f, const Polynomial& g) { return f + (-g); }

Polynomial Polynomial::operator-() const {
    std::vector<Scalar> c;
    c.reserve(coeffs_.size());
    for (const Scalar& x : coeffs_) c.push_back(-x);
    return Polynomial(field_, std::move(c));
}

Polynomial operator*(const Polynomial& f, const Polynomial& g) {
    require_same_field(f.field_, g.field_);
    if (f.is_zero() || g.is_zero()) return Polynomial(f.field_);
    std::vector<Scalar> c(f.coeffs_.size() + g.coeffs_.size() - 1, Scalar::zero(f.field_));
    for (std::size_t i = 0; i < f.coeffs_.size(); ++i) {
        if (f.coeffs_[i].is_zero()) continue;
        for (std::size_t j = 0; j < g.coeffs_.size(); ++j) c[i + j] += f.coeffs_[i] * g.coeffs_[j];
    }
    return Polynomial(f.field_, std::move(c));
}

Polynomial operator*(const Scalar& k, const Polynomial& f) {
    require_same_field(k.field(), f.field_);
    std::vector<Scalar> c;
    c.reserve(f.coeffs_.size());
    for (const Scalar& x : f.coeffs_) c.push_back(k * x);
    return Polynomial(f.field_, std::move(c));
}

std::string Polynomial::to_string(const std::string& var) const {
    if (coeffs_.empty()) return "0";
    std::string out;
    for (int i = degree(); i >= 0; --i) {
        const Scalar& c = coeffs_[static_cast<std::size_t>(i)];
        if (c.is_zero()) continue;
        std::string mag = c.to_string();
        bool negative = field_.is_rationals() && sgn(c.rational()) < 0;
        if (negative) mag.erase(0, 1);
        if (out.empty())
            out += negative ? "-" : "";
        else
            out += negative ? " - " : " + ";
        std::string mono = i == 0 ? "" : (i == 1 ? var : var + "^" + std::to_string(i));
        if (mono.empty())
            out += mag;
        else if (mag == "1")
            out += mono;
        else if (mag.find('/') != std::string::npos)
            out += "(" + mag + ")*" + mono;
        else
            out += mag + "*" + mono;
    }
    return out;
}

std::string Polynomial::coefficient_list() const {
    std::string out = "[";
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (i) out += ", ";
        out += coeffs_[i].to_string();
    }
    return out + "]";
}

DivMod divmod(const Polynomial& f, const Polynomial& g) {
    require_same_field(f.field(), g.field());
    if (g.is_zero()) throw Error(ErrorKind::DivisionByZero, "polynomial division by zero");
    const Field& field = f.field();
    std::vector<Scalar> rem(f.coefficients().begin(), f.coefficients().end());
    int dg = g.degree();
    int df = f.degree();
    if (df < dg) return {Polynomial(field), f};
    std::vector<Scalar> quot(static_cast<std::size_t>(df - dg + 1), Scalar::zero(field));
    Scalar lead_inv = g.leading().inverse();
    auto gc = g.coefficients();
    for (int k = df - dg; k >= 0; --k) {
        Scalar c = rem[static_cast<std::size_t>(k + dg)] * lead_inv;
        quot[static_cast<std::size_t>(k)] = c;
        if (c.is_zero()) continue;
        for (int j = 0; j <= dg; ++j) rem[static_cast<std::size_t>(k + j)] -= c * gc[static_cast<std::size_t>(j)];
    }
    rem.erase(rem.begin() + dg, rem.end());
    return {Polynomial(field, std::move(quot)), Polynomial(field, std::move(rem))};
}

bool divides(const Polynomial& g, const Polynomial& f) { return divmod(f, g).remainder.is_zero(); }

Polynomial poly_product(std::span<const Polynomial> factors) {
    if (factors.empty()) throw Error(ErrorKind::EmptyInput, "product of no polynomials");
    Polynomial acc = factors.front();
    for (const Polynomial& f : factors.subspan(1)) acc = acc * f;
    return acc;
}

} // namespace canform
