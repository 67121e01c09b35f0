#include <doctest.h>

#include <vector>

#include "modo/diff_op.hpp"
#include "modo/errors.hpp"
#include "modo/expr.hpp"
#include "modo/format.hpp"
#include "support/oracles.hpp"
#include "support/random_gen.hpp"

using modo::DiffOp;
using modo::Matrix;
using modo::RationalFunction;
using modo::VectorFunction;
using modo::parse_rational_function;
using modo::testgen::Rng;
using modo::testgen::scalar_operator;

namespace {

Matrix matrix_of(const std::vector<std::vector<const char*>>& rows) {
    std::vector<std::vector<RationalFunction>> lowered;
    for (const auto& row : rows) {
        std::vector<RationalFunction> entries;
        for (const char* e : row) entries.push_back(parse_rational_function(e));
        lowered.push_back(std::move(entries));
    }
    return Matrix::from_rows(lowered);
}

VectorFunction column_of(const char* top, const char* bottom) {
    return matrix_of({{top}, {bottom}});
}

// The M = N = 2 worked example: K, the order-3 operator L with singular
// leading coefficient, and the quotient Q with L = Q K.
DiffOp example_kernel_op() {
    return DiffOp(2, {matrix_of({{"0", "-3/(2*x^2)"}, {"0", "3/x^2"}}),
                      matrix_of({{"-1/x", "3/(2*x)"}, {"0", "-3/x"}}),
                      Matrix::identity(2)});
}

DiffOp example_l() {
    return DiffOp::monomial(matrix_of({{"1", "1"}, {"1", "1"}}), 3);
}

DiffOp example_q() {
    return DiffOp(2, {matrix_of({{"1/x", "3/(2*x)"}, {"1/x", "3/(2*x)"}}),
                      matrix_of({{"1", "1"}, {"1", "1"}})});
}

}  // namespace

TEST_CASE("construction trims trailing zero coefficients") {
    Matrix a = matrix_of({{"x", "1"}, {"0", "1"}});
    DiffOp trimmed(2, {a, Matrix(2, 2)});
    CHECK(trimmed.order() == 0);
    CHECK(trimmed.coefficients().size() == 1);

    DiffOp zero(2, {Matrix(2, 2), Matrix(2, 2)});
    CHECK(zero.is_zero());
    CHECK(!zero.order().has_value());

    DiffOp k = example_kernel_op();
    CHECK(k.order() == 2);
    CHECK(k.is_monic());
}

TEST_CASE("addition combines coefficients of equal powers") {
    DiffOp k = example_kernel_op();
    CHECK(k + DiffOp(2) == k);
    CHECK((k + (-k)).is_zero());
    DiffOp sum = DiffOp::derivative(2, 1) + DiffOp::derivative(2, 2);
    CHECK(sum.coefficients().size() == 3);
    CHECK(sum.coefficient(0).is_zero());
    CHECK(sum.coefficient(1).is_identity());
    CHECK(sum.coefficient(2).is_identity());
    CHECK_THROWS_AS(k + DiffOp::identity(3), modo::DimensionMismatchError);
}

TEST_CASE("multiplication is composition, not coefficient product") {
    // Scalar reading: D x = x D + 1.
    DiffOp d = DiffOp::derivative(1);
    DiffOp x_op = scalar_operator({RationalFunction::variable()});
    DiffOp product = d * x_op;
    CHECK(product == scalar_operator({RationalFunction(1), RationalFunction::variable()}));

    // Order-zero operators multiply like matrices.
    Matrix a = matrix_of({{"x", "1"}, {"0", "2"}});
    Matrix b = matrix_of({{"1", "x"}, {"x", "0"}});
    CHECK(DiffOp::monomial(a, 0) * DiffOp::monomial(b, 0) == DiffOp::monomial(a * b, 0));

    CHECK(example_q() * example_kernel_op() == example_l());
}

TEST_CASE("application sums coefficient-times-derivative terms") {
    VectorFunction phi1 = column_of("x^3", "-x^3");
    CHECK(DiffOp::derivative(2).apply(phi1) == phi1.derivative());
    CHECK(example_kernel_op().apply(phi1).is_zero());
    // The all-ones third-order operator kills phi1 because the row sums of
    // the constant third derivative cancel.
    CHECK(example_l().apply(phi1).is_zero());
    CHECK_THROWS_AS(example_l().apply(matrix_of({{"x"}})), modo::DimensionMismatchError);
}

TEST_CASE("multiplication corresponds to operator composition") {
    Rng rng(11);
    for (int trial = 0; trial < 40; ++trial) {
        std::size_t n = static_cast<std::size_t>(modo::testgen::rand_int(rng, 1, 3));
        DiffOp a = modo::testgen::rand_operator(rng, n, 2);
        DiffOp b = modo::testgen::rand_operator(rng, n, 2);
        VectorFunction f = modo::testgen::rand_polynomial_vector(rng, n, 3);
        CHECK((a * b).apply(f) == a.apply(b.apply(f)));
    }
}

TEST_CASE("operators form a non-commutative ring") {
    Rng rng(12);
    for (int trial = 0; trial < 25; ++trial) {
        std::size_t n = static_cast<std::size_t>(modo::testgen::rand_int(rng, 1, 2));
        DiffOp a = modo::testgen::rand_operator(rng, n, 2);
        DiffOp b = modo::testgen::rand_operator(rng, n, 2);
        DiffOp c = modo::testgen::rand_operator(rng, n, 2);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK((a + b) * c == a * c + b * c);
        DiffOp one = DiffOp::identity(n);
        CHECK(one * a == a);
        CHECK(a * one == a);
    }
}

TEST_CASE("order adds under products with invertible leading coefficients") {
    Rng rng(13);
    int accepted = 0;
    while (accepted < 20) {
        std::size_t n = static_cast<std::size_t>(modo::testgen::rand_int(rng, 1, 3));
        DiffOp a = modo::testgen::rand_operator(rng, n, 2);
        DiffOp b = modo::testgen::rand_operator(rng, n, 2);
        if (a.is_zero() || b.is_zero()) continue;
        if (a.leading_coefficient().determinant().is_zero()) continue;
        if (b.leading_coefficient().determinant().is_zero()) continue;
        CHECK(*(a * b).order() == *a.order() + *b.order());
        ++accepted;
    }
}

TEST_CASE("binomial product rule agrees with iterated derivative composition") {
    Rng rng(14);
    for (int trial = 0; trial < 30; ++trial) {
        std::size_t n = static_cast<std::size_t>(modo::testgen::rand_int(rng, 1, 3));
        DiffOp a = modo::testgen::rand_operator(rng, n, 3);
        DiffOp b = modo::testgen::rand_operator(rng, n, 3);
        CHECK(a * b == modo::oracle::iterated_product(a, b));
    }
}
