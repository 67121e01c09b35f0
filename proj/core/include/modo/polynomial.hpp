#ifndef MODO_POLYNOMIAL_HPP
#define MODO_POLYNOMIAL_HPP

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <vector>

#include "modo/rational.hpp"

namespace modo {

struct PolynomialDivision;

// Univariate polynomial in x over Rational, coefficients stored densely by
// ascending power.  Canonical form: no trailing zero coefficients, so the
// zero polynomial is the empty list and degree() of zero is nullopt rather
// than an integer sentinel.
class Polynomial {
  public:
    Polynomial() = default;  // zero
    Polynomial(const Rational& constant);
    Polynomial(int constant) : Polynomial(Rational(constant)) {}
    explicit Polynomial(std::vector<Rational> coefficients);

    static Polynomial variable();  // x
    static Polynomial monomial(const Rational& coefficient, std::size_t power);

    bool is_zero() const { return coefficients_.empty(); }
    bool is_one() const;
    std::optional<std::size_t> degree() const;
    const std::vector<Rational>& coefficients() const { return coefficients_; }
    // Zero beyond the degree.
    Rational coefficient(std::size_t power) const;
    const Rational& leading_coefficient() const;  // pre: nonzero

    Polynomial operator-() const;
    Polynomial& operator+=(const Polynomial& rhs);
    Polynomial& operator-=(const Polynomial& rhs);
    Polynomial& operator*=(const Polynomial& rhs);
    Polynomial& operator*=(const Rational& scale);

    friend Polynomial operator+(Polynomial lhs, const Polynomial& rhs) { return lhs += rhs; }
    friend Polynomial operator-(Polynomial lhs, const Polynomial& rhs) { return lhs -= rhs; }
    friend Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs);
    friend Polynomial operator*(Polynomial lhs, const Rational& rhs) { return lhs *= rhs; }
    friend Polynomial operator*(const Rational& lhs, Polynomial rhs) { return rhs *= lhs; }

    // Exact division with remainder over the rational coefficient field.
    // Throws DivisionByZeroError when divisor is zero.
    static PolynomialDivision divmod(const Polynomial& dividend, const Polynomial& divisor);

    // Monic greatest common divisor; gcd(0, 0) = 0.
    static Polynomial gcd(const Polynomial& a, const Polynomial& b);

    Polynomial derivative() const;
    Rational evaluate(const Rational& point) const;
    Polynomial monic() const;  // pre: nonzero

    bool operator==(const Polynomial&) const = default;

  private:
    void trim();

    std::vector<Rational> coefficients_;
};

struct PolynomialDivision {
    Polynomial quotient;
    Polynomial remainder;
};

std::ostream& operator<<(std::ostream& os, const Polynomial& p);

}  // namespace modo

#endif  // MODO_POLYNOMIAL_HPP
