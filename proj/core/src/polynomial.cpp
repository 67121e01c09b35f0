#include "modo/polynomial.hpp"

#include <algorithm>
#include <cassert>
#include <utility>

#include "modo/errors.hpp"

namespace modo {

Polynomial::Polynomial(const Rational& constant) {
    if (!constant.is_zero()) coefficients_.push_back(constant);
}

Polynomial::Polynomial(std::vector<Rational> coefficients)
    : coefficients_(std::move(coefficients)) {
    trim();
}

Polynomial Polynomial::variable() {
    return Polynomial(std::vector<Rational>{Rational(0), Rational(1)});
}

Polynomial Polynomial::monomial(const Rational& coefficient, std::size_t power) {
    if (coefficient.is_zero()) return Polynomial();
    std::vector<Rational> coeffs(power + 1, Rational(0));
    coeffs[power] = coefficient;
    return Polynomial(std::move(coeffs));
}

void Polynomial::trim() {
    while (!coefficients_.empty() && coefficients_.back().is_zero())
        coefficients_.pop_back();
}

bool Polynomial::is_one() const {
    return coefficients_.size() == 1 && coefficients_[0].is_one();
}

std::optional<std::size_t> Polynomial::degree() const {
    if (coefficients_.empty()) return std::nullopt;
    return coefficients_.size() - 1;
}

Rational Polynomial::coefficient(std::size_t power) const {
    if (power >= coefficients_.size()) return Rational(0);
    return coefficients_[power];
}

const Rational& Polynomial::leading_coefficient() const {
    assert(!coefficients_.empty());
    return coefficients_.back();
}

Polynomial Polynomial::operator-() const {
    Polynomial result = *this;
    for (Rational& c : result.coefficients_) c = -c;
    return result;
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
    if (coefficients_.size() < rhs.coefficients_.size())
        coefficients_.resize(rhs.coefficients_.size(), Rational(0));
    for (std::size_t i = 0; i < rhs.coefficients_.size(); ++i)
        coefficients_[i] += rhs.coefficients_[i];
    trim();
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) {
    if (coefficients_.size() < rhs.coefficients_.size())
        coefficients_.resize(rhs.coefficients_.size(), Rational(0));
    for (std::size_t i = 0; i < rhs.coefficients_.size(); ++i)
        coefficients_[i] -= rhs.coefficients_[i];
    trim();
    return *this;
}

Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs) {
    if (lhs.is_zero() || rhs.is_zero()) return Polynomial();
    std::vector<Rational> out(lhs.coefficients_.size() + rhs.coefficients_.size() - 1,
                              Rational(0));
    for (std::size_t i = 0; i < lhs.coefficients_.size(); ++i) {
        if (lhs.coefficients_[i].is_zero()) continue;
        for (std::size_t j = 0; j < rhs.coefficients_.size(); ++j)
            out[i + j] += lhs.coefficients_[i] * rhs.coefficients_[j];
    }
    return Polynomial(std::move(out));
}

Polynomial& Polynomial::operator*=(const Polynomial& rhs) {
    *this = *this * rhs;
    return *this;
}

Polynomial& Polynomial::operator*=(const Rational& scale) {
    if (scale.is_zero()) {
        coefficients_.clear();
        return *this;
    }
    for (Rational& c : coefficients_) c *= scale;
    return *this;
}

PolynomialDivision Polynomial::divmod(const Polynomial& dividend, const Polynomial& divisor) {
    if (divisor.is_zero()) throw DivisionByZeroError("polynomial division by zero");
    Polynomial quotient;
    Polynomial remainder = dividend;
    const std::size_t ddeg = *divisor.degree();
    const Rational& dlead = divisor.leading_coefficient();
    while (!remainder.is_zero() && *remainder.degree() >= ddeg) {
        std::size_t shift = *remainder.degree() - ddeg;
        Rational factor = remainder.leading_coefficient() / dlead;
        Polynomial term = monomial(factor, shift);
        quotient += term;
        remainder -= term * divisor;
    }
    return {std::move(quotient), std::move(remainder)};
}

Polynomial Polynomial::gcd(const Polynomial& a, const Polynomial& b) {
    Polynomial u = a;
    Polynomial v = b;
    // Keeping the iterates monic bounds the rational coefficient growth.
    if (!u.is_zero()) u = u.monic();
    if (!v.is_zero()) v = v.monic();
    while (!v.is_zero()) {
        Polynomial r = divmod(u, v).remainder;
        if (!r.is_zero()) r = r.monic();
        u = std::move(v);
        v = std::move(r);
    }
    return u;
}

Polynomial Polynomial::derivative() const {
    if (coefficients_.size() <= 1) return Polynomial();
    std::vector<Rational> out(coefficients_.size() - 1, Rational(0));
    for (std::size_t i = 1; i < coefficients_.size(); ++i)
        out[i - 1] = coefficients_[i] * Rational(static_cast<long>(i));
    return Polynomial(std::move(out));
}

Rational Polynomial::evaluate(const Rational& point) const {
    Rational acc(0);
    for (std::size_t i = coefficients_.size(); i-- > 0;) {
        acc *= point;
        acc += coefficients_[i];
    }
    return acc;
}

Polynomial Polynomial::monic() const {
    assert(!is_zero());
    Polynomial result = *this;
    Rational inv = Rational(1) / leading_coefficient();
    result *= inv;
    return result;
}

}  // namespace modo
