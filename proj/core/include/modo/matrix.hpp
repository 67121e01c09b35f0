#ifndef MODO_MATRIX_HPP
#define MODO_MATRIX_HPP

#include <cstddef>
#include <iosfwd>
#include <vector>

#include "modo/rational_function.hpp"

namespace modo {

// Dense matrix over the rational-function field, row-major storage.
// Dimensions are fixed at construction and strictly positive.
class Matrix {
  public:
    Matrix(std::size_t rows, std::size_t cols);  // zero-filled
    Matrix(std::size_t rows, std::size_t cols, std::vector<RationalFunction> entries);
    static Matrix identity(std::size_t n);
    static Matrix from_rows(const std::vector<std::vector<RationalFunction>>& rows);

    // Concatenates a rectangular grid of blocks; throws DimensionMismatchError
    // when block shapes do not line up.
    static Matrix block(const std::vector<std::vector<Matrix>>& grid);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    const RationalFunction& operator()(std::size_t i, std::size_t j) const;
    RationalFunction& operator()(std::size_t i, std::size_t j);

    Matrix operator-() const;
    Matrix& operator+=(const Matrix& rhs);
    Matrix& operator-=(const Matrix& rhs);
    friend Matrix operator+(Matrix lhs, const Matrix& rhs) { return lhs += rhs; }
    friend Matrix operator-(Matrix lhs, const Matrix& rhs) { return lhs -= rhs; }
    friend Matrix operator*(const Matrix& lhs, const Matrix& rhs);
    friend Matrix operator*(const RationalFunction& scale, Matrix m);

    // Entrywise formal derivative.
    Matrix derivative() const;
    Matrix transpose() const;
    Matrix submatrix(std::size_t row0, std::size_t col0, std::size_t rows,
                     std::size_t cols) const;
    Matrix column(std::size_t j) const;

    // Gaussian elimination over the field; the pivot in each column is the
    // nonzero entry of least combined numerator+denominator degree, which
    // keeps intermediate expression swell down.
    RationalFunction determinant() const;
    Matrix inverse() const;  // throws SingularMatrixError

    bool is_zero() const;
    bool is_identity() const;

    bool operator==(const Matrix&) const = default;

  private:
    std::size_t index(std::size_t i, std::size_t j) const { return i * cols_ + j; }

    std::size_t rows_;
    std::size_t cols_;
    std::vector<RationalFunction> entries_;
};

// Solves a·x = b for x; throws SingularMatrixError when a is singular.
Matrix solve(const Matrix& a, const Matrix& b);

// An N-vector of functions is an N-by-1 matrix.
using VectorFunction = Matrix;

std::ostream& operator<<(std::ostream& os, const Matrix& m);

}  // namespace modo

#endif  // MODO_MATRIX_HPP
