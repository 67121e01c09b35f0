#include <doctest.h>

#include "modo/errors.hpp"
#include "modo/format.hpp"
#include "modo/polynomial.hpp"
#include "support/random_gen.hpp"

using modo::Polynomial;
using modo::Rational;
using modo::testgen::Rng;
using modo::testgen::rand_nonzero_polynomial;
using modo::testgen::rand_polynomial;

namespace {
const Polynomial X = Polynomial::variable();
}

TEST_CASE("zero polynomial has no degree, nonzero degree is length minus one") {
    CHECK(!Polynomial().degree().has_value());
    CHECK(Polynomial(std::vector<Rational>{Rational(0), Rational(0)}) == Polynomial());
    CHECK(Polynomial(5).degree() == 0);
    CHECK((X * X + Polynomial(1)).degree() == 2);
    CHECK((X * X - X * X) == Polynomial());
}

TEST_CASE("polynomial gcd is monic and handles zero operands") {
    CHECK(Polynomial::gcd(X * X, Polynomial()) == X * X);
    CHECK(Polynomial::gcd(Polynomial(), Polynomial()) == Polynomial());
    CHECK(Polynomial::gcd(X, Polynomial(1)) == Polynomial(1));
    // Euclid on (x^2 - 1, x - 1) ends at x - 1.
    CHECK(Polynomial::gcd(X * X - Polynomial(1), X - Polynomial(1)) == X - Polynomial(1));
    // gcd of scaled inputs is still monic.
    CHECK(Polynomial::gcd(Rational(4) * X, Rational(6) * X) == X);
}

TEST_CASE("polynomial division is exact over the rational field") {
    auto division = Polynomial::divmod(X * X - Polynomial(1), X + Polynomial(1));
    CHECK(division.quotient == X - Polynomial(1));
    CHECK(division.remainder == Polynomial());
    auto with_rest = Polynomial::divmod(X * X + Polynomial(1), X);
    CHECK(with_rest.quotient == X);
    CHECK(with_rest.remainder == Polynomial(1));
    CHECK_THROWS_AS(Polynomial::divmod(X, Polynomial()), modo::DivisionByZeroError);
}

TEST_CASE("polynomial derivative and evaluation") {
    CHECK(X.derivative() == Polynomial(1));
    CHECK((X * X * X).derivative() == Rational(3) * (X * X));
    CHECK(Polynomial(7).derivative() == Polynomial());
    CHECK((X * X * X).evaluate(Rational(2)) == Rational(8));
    CHECK((X * X - X).evaluate(Rational(1, 2)) == Rational(-1, 4));
}

TEST_CASE("division identity and gcd divisibility on random polynomials") {
    Rng rng(2);
    for (int trial = 0; trial < 100; ++trial) {
        Polynomial a = rand_polynomial(rng, 4);
        Polynomial b = rand_nonzero_polynomial(rng, 3);
        auto division = Polynomial::divmod(a, b);
        CHECK(division.quotient * b + division.remainder == a);
        if (!division.remainder.is_zero())
            CHECK(*division.remainder.degree() < *b.degree());
        Polynomial g = Polynomial::gcd(a, b);
        CHECK(Polynomial::divmod(b, g).remainder == Polynomial());
        if (!a.is_zero()) {
            CHECK(Polynomial::divmod(a, g).remainder == Polynomial());
            CHECK(g.leading_coefficient().is_one());
        }
    }
}
