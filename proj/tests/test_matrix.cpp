#include <doctest.h>

#include <vector>

#include "modo/errors.hpp"
#include "modo/expr.hpp"
#include "modo/format.hpp"
#include "modo/matrix.hpp"
#include "support/oracles.hpp"
#include "support/random_gen.hpp"

using modo::Matrix;
using modo::Polynomial;
using modo::Rational;
using modo::RationalFunction;
using modo::parse_rational_function;
using modo::testgen::Rng;

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

// Block Wronskian of the cubic/quadratic/linear/constant example.
Matrix example_wronskian() {
    return matrix_of({{"x^3", "x^2", "0", "1"},
                      {"-x^3", "0", "x", "0"},
                      {"3*x^2", "2*x", "0", "0"},
                      {"-3*x^2", "0", "1", "0"}});
}

}  // namespace

TEST_CASE("matrix product with identity and inverse") {
    Matrix a = matrix_of({{"x", "1"}, {"0", "x^2+1"}});
    CHECK(Matrix::identity(2) * a == a);
    CHECK(a * Matrix::identity(2) == a);
    Matrix phi = example_wronskian();
    CHECK(phi * phi.inverse() == Matrix::identity(4));
    CHECK(matrix_of({{"1", "x"}, {"0", "1"}}) * matrix_of({{"1", "-x"}, {"0", "1"}}) ==
          Matrix::identity(2));
}

TEST_CASE("matrix operations check dimensions") {
    Matrix a(2, 3);
    Matrix b(2, 2);
    CHECK_THROWS_AS(a + b, modo::DimensionMismatchError);
    CHECK_THROWS_AS(b * a * b, modo::DimensionMismatchError);
    CHECK_THROWS_AS(a.determinant(), modo::DimensionMismatchError);
    CHECK_THROWS_AS(a.inverse(), modo::DimensionMismatchError);
}

TEST_CASE("determinant of the worked example and its singular cousin") {
    CHECK(Matrix::identity(4).determinant() == RationalFunction(1));
    CHECK(matrix_of({{"1", "x"}, {"1", "x"}}).determinant() == RationalFunction(0));
    Matrix phi = example_wronskian();
    RationalFunction det = phi.determinant();
    CHECK(det == parse_rational_function("-4*x^4"));
    CHECK(det == modo::oracle::cofactor_determinant(phi));
}

TEST_CASE("inverse of diagonal and singular matrices") {
    CHECK(Matrix::identity(3).inverse() == Matrix::identity(3));
    CHECK(matrix_of({{"x", "0"}, {"0", "1"}}).inverse() ==
          matrix_of({{"1/x", "0"}, {"0", "1"}}));
    CHECK_THROWS_AS(matrix_of({{"1", "x"}, {"1", "x"}}).inverse(),
                    modo::SingularMatrixError);
}

TEST_CASE("entrywise derivative") {
    CHECK(matrix_of({{"3", "1/2"}, {"-7", "0"}}).derivative() == Matrix(2, 2));
    CHECK(matrix_of({{"x", "x^2"}, {"0", "1"}}).derivative() ==
          matrix_of({{"1", "2*x"}, {"0", "0"}}));
    CHECK(matrix_of({{"x^3"}, {"-x^3"}}).derivative() ==
          matrix_of({{"3*x^2"}, {"-3*x^2"}}));
}

TEST_CASE("block assembly concatenates and validates shapes") {
    Matrix a = matrix_of({{"x", "1"}, {"0", "x"}});
    CHECK(Matrix::block({{a}}) == a);

    Matrix top = matrix_of({{"x^3", "x^2", "0", "1"}, {"-x^3", "0", "x", "0"}});
    CHECK(Matrix::block({{top}, {top.derivative()}}) == example_wronskian());

    Matrix one = Matrix::identity(1);
    Matrix zero(1, 1);
    Matrix assembled = Matrix::block({{one, zero}, {zero, one}});
    CHECK(assembled == Matrix::identity(2));
    CHECK(assembled(0, 1).is_zero());
    CHECK(assembled(1, 0).is_zero());

    CHECK_THROWS_AS(Matrix::block({{a, one}}), modo::DimensionMismatchError);
    CHECK_THROWS_AS(Matrix::block({{a}, {top}}), modo::DimensionMismatchError);
}

TEST_CASE("determinant is multiplicative on random samples") {
    Rng rng(7);
    for (int trial = 0; trial < 25; ++trial) {
        std::size_t n = static_cast<std::size_t>(modo::testgen::rand_int(rng, 1, 3));
        Matrix a = modo::testgen::rand_matrix(rng, n, n);
        Matrix b = modo::testgen::rand_matrix(rng, n, n);
        CHECK((a * b).determinant() == a.determinant() * b.determinant());
    }
}

TEST_CASE("inverse is two-sided whenever the determinant is nonzero") {
    Rng rng(8);
    int regular = 0;
    while (regular < 20) {
        std::size_t n = static_cast<std::size_t>(modo::testgen::rand_int(rng, 1, 3));
        Matrix a = modo::testgen::rand_matrix(rng, n, n);
        if (a.determinant().is_zero()) continue;
        Matrix inv = a.inverse();
        CHECK(a * inv == Matrix::identity(n));
        CHECK(inv * a == Matrix::identity(n));
        ++regular;
    }
}

TEST_CASE("derivative satisfies the matrix Leibniz rule") {
    Rng rng(9);
    for (int trial = 0; trial < 20; ++trial) {
        Matrix a = modo::testgen::rand_matrix(rng, 2, 3);
        Matrix b = modo::testgen::rand_matrix(rng, 3, 2);
        CHECK((a * b).derivative() == a.derivative() * b + a * b.derivative());
    }
}

TEST_CASE("zero determinant and inversion failure coincide") {
    Rng rng(10);
    int singular_seen = 0;
    for (int trial = 0; trial < 30; ++trial) {
        std::size_t n = static_cast<std::size_t>(modo::testgen::rand_int(rng, 2, 3));
        Matrix a = modo::testgen::rand_matrix(rng, n, n, 1, 0);
        if (trial % 2 == 0) {
            // Force a row dependency so singular cases actually occur.
            RationalFunction scale = modo::testgen::rand_rational_function(rng, 1, 0);
            for (std::size_t j = 0; j < n; ++j) a(n - 1, j) = scale * a(0, j);
        }
        bool zero_det = a.determinant().is_zero();
        if (zero_det) ++singular_seen;
        bool threw = false;
        try {
            (void)a.inverse();
        } catch (const modo::SingularMatrixError&) {
            threw = true;
        }
        CHECK(zero_det == threw);
    }
    CHECK(singular_seen > 0);
}
