#ifndef MODO_RATIONAL_FUNCTION_HPP
#define MODO_RATIONAL_FUNCTION_HPP

#include <iosfwd>

#include "modo/polynomial.hpp"
#include "modo/rational.hpp"

namespace modo {

// Element of the field of rational functions in x.  Canonical form:
// gcd(num, den) = 1 and den monic, so equality is plain structural equality.
// Zero is 0/1.
class RationalFunction {
  public:
    RationalFunction() : num_(), den_(Rational(1)) {}
    RationalFunction(const Rational& constant) : num_(constant), den_(Rational(1)) {}
    RationalFunction(int constant) : RationalFunction(Rational(constant)) {}
    RationalFunction(Polynomial numerator);
    // Throws DivisionByZeroError when denominator is the zero polynomial.
    RationalFunction(Polynomial numerator, Polynomial denominator);

    static RationalFunction variable();  // x

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }
    const Polynomial& num() const { return num_; }
    const Polynomial& den() const { return den_; }

    RationalFunction operator-() const;
    RationalFunction& operator+=(const RationalFunction& rhs);
    RationalFunction& operator-=(const RationalFunction& rhs);
    RationalFunction& operator*=(const RationalFunction& rhs);
    RationalFunction& operator/=(const RationalFunction& rhs);  // throws on rhs == 0

    friend RationalFunction operator+(RationalFunction lhs, const RationalFunction& rhs) {
        return lhs += rhs;
    }
    friend RationalFunction operator-(RationalFunction lhs, const RationalFunction& rhs) {
        return lhs -= rhs;
    }
    friend RationalFunction operator*(RationalFunction lhs, const RationalFunction& rhs) {
        return lhs *= rhs;
    }
    friend RationalFunction operator/(RationalFunction lhs, const RationalFunction& rhs) {
        return lhs /= rhs;
    }

    // Formal derivative by the quotient rule.
    RationalFunction derivative() const;

    // Exact value at a point; throws PoleError when the denominator vanishes.
    Rational evaluate(const Rational& point) const;

    RationalFunction pow(unsigned long exponent) const;

    bool operator==(const RationalFunction&) const = default;

  private:
    void canonicalize();

    Polynomial num_;
    Polynomial den_;
};

std::ostream& operator<<(std::ostream& os, const RationalFunction& f);

}  // namespace modo

#endif  // MODO_RATIONAL_FUNCTION_HPP
