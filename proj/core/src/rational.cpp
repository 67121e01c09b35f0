#include "modo/rational.hpp"

#include <ostream>
#include <utility>

#include "modo/errors.hpp"

namespace modo {

Rational::Rational(long numerator, long denominator) {
    if (denominator == 0) throw DivisionByZeroError("rational with zero denominator");
    value_ = mpq_class(numerator, denominator);
    value_.canonicalize();
}

Rational::Rational(mpz_class numerator, mpz_class denominator) {
    if (sgn(denominator) == 0) throw DivisionByZeroError("rational with zero denominator");
    value_ = mpq_class(std::move(numerator), std::move(denominator));
    value_.canonicalize();
}

Rational Rational::from_string(const std::string& text) {
    mpq_class v;
    if (v.set_str(text, 10) != 0)
        throw ParseError("malformed rational literal '" + text + "'", 0);
    if (sgn(v.get_den()) == 0) throw DivisionByZeroError("rational with zero denominator");
    v.canonicalize();
    return Rational(std::move(v));
}

Rational Rational::abs() const {
    return Rational(mpq_class(::abs(value_)));
}

Rational Rational::operator-() const {
    return Rational(mpq_class(-value_));
}

Rational& Rational::operator+=(const Rational& rhs) {
    value_ += rhs.value_;
    return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
    value_ -= rhs.value_;
    return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
    value_ *= rhs.value_;
    return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
    if (rhs.is_zero()) throw DivisionByZeroError("division of rational by zero");
    value_ /= rhs.value_;
    return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.to_string();
}

}  // namespace modo
