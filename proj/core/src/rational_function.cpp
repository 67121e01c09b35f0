#include "modo/rational_function.hpp"

#include <utility>

#include "modo/errors.hpp"

namespace modo {

RationalFunction::RationalFunction(Polynomial numerator)
    : num_(std::move(numerator)), den_(Rational(1)) {}

RationalFunction::RationalFunction(Polynomial numerator, Polynomial denominator)
    : num_(std::move(numerator)), den_(std::move(denominator)) {
    if (den_.is_zero())
        throw DivisionByZeroError("rational function with zero denominator");
    canonicalize();
}

RationalFunction RationalFunction::variable() {
    return RationalFunction(Polynomial::variable());
}

void RationalFunction::canonicalize() {
    if (num_.is_zero()) {
        den_ = Polynomial(Rational(1));
        return;
    }
    Polynomial g = Polynomial::gcd(num_, den_);
    if (!g.is_one()) {
        num_ = Polynomial::divmod(num_, g).quotient;
        den_ = Polynomial::divmod(den_, g).quotient;
    }
    const Rational& lead = den_.leading_coefficient();
    if (!lead.is_one()) {
        Rational inv = Rational(1) / lead;
        num_ *= inv;
        den_ *= inv;
    }
}

RationalFunction RationalFunction::operator-() const {
    RationalFunction result = *this;
    result.num_ = -result.num_;
    return result;
}

RationalFunction& RationalFunction::operator+=(const RationalFunction& rhs) {
    num_ = num_ * rhs.den_ + rhs.num_ * den_;
    den_ = den_ * rhs.den_;
    canonicalize();
    return *this;
}

RationalFunction& RationalFunction::operator-=(const RationalFunction& rhs) {
    num_ = num_ * rhs.den_ - rhs.num_ * den_;
    den_ = den_ * rhs.den_;
    canonicalize();
    return *this;
}

RationalFunction& RationalFunction::operator*=(const RationalFunction& rhs) {
    num_ = num_ * rhs.num_;
    den_ = den_ * rhs.den_;
    canonicalize();
    return *this;
}

RationalFunction& RationalFunction::operator/=(const RationalFunction& rhs) {
    if (rhs.is_zero()) throw DivisionByZeroError("division of rational function by zero");
    num_ = num_ * rhs.den_;
    den_ = den_ * rhs.num_;
    if (den_.is_zero())
        throw DivisionByZeroError("rational function with zero denominator");
    canonicalize();
    return *this;
}

RationalFunction RationalFunction::derivative() const {
    Polynomial numerator = num_.derivative() * den_ - num_ * den_.derivative();
    return RationalFunction(std::move(numerator), den_ * den_);
}

Rational RationalFunction::evaluate(const Rational& point) const {
    Rational d = den_.evaluate(point);
    if (d.is_zero()) throw PoleError("rational function has a pole at evaluation point");
    return num_.evaluate(point) / d;
}

RationalFunction RationalFunction::pow(unsigned long exponent) const {
    RationalFunction result(1);
    RationalFunction base = *this;
    while (exponent > 0) {
        if (exponent & 1ul) result *= base;
        exponent >>= 1;
        if (exponent > 0) base *= base;
    }
    return result;
}

}  // namespace modo
