#include "modo/matrix.hpp"

#include <optional>
#include <sstream>
#include <utility>

#include "modo/errors.hpp"

namespace modo {

namespace {

std::string shape(const Matrix& m) {
    std::ostringstream os;
    os << m.rows() << "x" << m.cols();
    return os.str();
}

// Pivot preference: total degree of the reduced fraction.
std::size_t complexity(const RationalFunction& f) {
    std::size_t c = 0;
    if (auto d = f.num().degree()) c += *d;
    if (auto d = f.den().degree()) c += *d;
    return c;
}

}  // namespace

Matrix::Matrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols) {
    if (rows == 0 || cols == 0)
        throw DimensionMismatchError("matrix dimensions must be positive");
}

Matrix::Matrix(std::size_t rows, std::size_t cols, std::vector<RationalFunction> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (rows == 0 || cols == 0)
        throw DimensionMismatchError("matrix dimensions must be positive");
    if (entries_.size() != rows * cols)
        throw DimensionMismatchError("matrix entry count does not match dimensions");
}

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = RationalFunction(1);
    return m;
}

Matrix Matrix::from_rows(const std::vector<std::vector<RationalFunction>>& rows) {
    if (rows.empty() || rows.front().empty())
        throw DimensionMismatchError("matrix dimensions must be positive");
    Matrix m(rows.size(), rows.front().size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != m.cols_)
            throw DimensionMismatchError("ragged rows in matrix literal");
        for (std::size_t j = 0; j < m.cols_; ++j) m(i, j) = rows[i][j];
    }
    return m;
}

Matrix Matrix::block(const std::vector<std::vector<Matrix>>& grid) {
    if (grid.empty() || grid.front().empty())
        throw DimensionMismatchError("empty block grid");
    const std::size_t gcols = grid.front().size();
    std::size_t total_rows = 0;
    std::size_t total_cols = 0;
    for (std::size_t j = 0; j < gcols; ++j) total_cols += grid.front()[j].cols();
    for (const auto& brow : grid) {
        if (brow.size() != gcols)
            throw DimensionMismatchError("ragged block grid");
        std::size_t h = brow.front().rows();
        std::size_t w = 0;
        for (std::size_t j = 0; j < gcols; ++j) {
            if (brow[j].rows() != h)
                throw DimensionMismatchError("block heights differ within a grid row");
            if (brow[j].cols() != grid.front()[j].cols())
                throw DimensionMismatchError("block widths differ within a grid column");
            w += brow[j].cols();
        }
        (void)w;
        total_rows += h;
    }
    Matrix out(total_rows, total_cols);
    std::size_t row0 = 0;
    for (const auto& brow : grid) {
        std::size_t col0 = 0;
        for (const Matrix& b : brow) {
            for (std::size_t i = 0; i < b.rows(); ++i)
                for (std::size_t j = 0; j < b.cols(); ++j) out(row0 + i, col0 + j) = b(i, j);
            col0 += b.cols();
        }
        row0 += brow.front().rows();
    }
    return out;
}

const RationalFunction& Matrix::operator()(std::size_t i, std::size_t j) const {
    return entries_.at(index(i, j));
}

RationalFunction& Matrix::operator()(std::size_t i, std::size_t j) {
    return entries_.at(index(i, j));
}

Matrix Matrix::operator-() const {
    Matrix out = *this;
    for (RationalFunction& e : out.entries_) e = -e;
    return out;
}

Matrix& Matrix::operator+=(const Matrix& rhs) {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
        throw DimensionMismatchError("matrix addition of " + shape(*this) + " and " +
                                     shape(rhs));
    for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] += rhs.entries_[k];
    return *this;
}

Matrix& Matrix::operator-=(const Matrix& rhs) {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
        throw DimensionMismatchError("matrix subtraction of " + shape(*this) + " and " +
                                     shape(rhs));
    for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] -= rhs.entries_[k];
    return *this;
}

Matrix operator*(const Matrix& lhs, const Matrix& rhs) {
    if (lhs.cols_ != rhs.rows_)
        throw DimensionMismatchError("matrix product of " + shape(lhs) + " and " +
                                     shape(rhs));
    Matrix out(lhs.rows_, rhs.cols_);
    for (std::size_t i = 0; i < lhs.rows_; ++i)
        for (std::size_t k = 0; k < lhs.cols_; ++k) {
            const RationalFunction& l = lhs(i, k);
            if (l.is_zero()) continue;
            for (std::size_t j = 0; j < rhs.cols_; ++j) {
                if (rhs(k, j).is_zero()) continue;
                out(i, j) += l * rhs(k, j);
            }
        }
    return out;
}

Matrix operator*(const RationalFunction& scale, Matrix m) {
    for (RationalFunction& e : m.entries_) e *= scale;
    return m;
}

Matrix Matrix::derivative() const {
    Matrix out = *this;
    for (RationalFunction& e : out.entries_) e = e.derivative();
    return out;
}

Matrix Matrix::transpose() const {
    Matrix out(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
    return out;
}

Matrix Matrix::submatrix(std::size_t row0, std::size_t col0, std::size_t rows,
                         std::size_t cols) const {
    if (row0 + rows > rows_ || col0 + cols > cols_)
        throw DimensionMismatchError("submatrix out of range");
    Matrix out(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) out(i, j) = (*this)(row0 + i, col0 + j);
    return out;
}

Matrix Matrix::column(std::size_t j) const {
    return submatrix(0, j, rows_, 1);
}

RationalFunction Matrix::determinant() const {
    if (rows_ != cols_)
        throw DimensionMismatchError("determinant of non-square " + shape(*this) + " matrix");
    const std::size_t n = rows_;
    Matrix work = *this;
    bool negate = false;
    RationalFunction det(1);
    for (std::size_t col = 0; col < n; ++col) {
        std::optional<std::size_t> pivot;
        std::size_t best = 0;
        for (std::size_t r = col; r < n; ++r) {
            if (work(r, col).is_zero()) continue;
            std::size_t c = complexity(work(r, col));
            if (!pivot || c < best) {
                pivot = r;
                best = c;
            }
        }
        if (!pivot) return RationalFunction(0);
        if (*pivot != col) {
            for (std::size_t j = col; j < n; ++j)
                std::swap(work(*pivot, j), work(col, j));
            negate = !negate;
        }
        const RationalFunction& p = work(col, col);
        for (std::size_t r = col + 1; r < n; ++r) {
            if (work(r, col).is_zero()) continue;
            RationalFunction factor = work(r, col) / p;
            for (std::size_t j = col; j < n; ++j)
                work(r, j) -= factor * work(col, j);
        }
        det *= p;
    }
    return negate ? -det : det;
}

namespace {

// Gauss-Jordan on [a | b]; returns the transformed right part.
Matrix eliminate(const Matrix& a, const Matrix& b) {
    const std::size_t n = a.rows();
    Matrix left = a;
    Matrix right = b;
    for (std::size_t col = 0; col < n; ++col) {
        std::optional<std::size_t> pivot;
        std::size_t best = 0;
        for (std::size_t r = col; r < n; ++r) {
            if (left(r, col).is_zero()) continue;
            std::size_t c = complexity(left(r, col));
            if (!pivot || c < best) {
                pivot = r;
                best = c;
            }
        }
        if (!pivot) throw SingularMatrixError("matrix is singular");
        if (*pivot != col) {
            for (std::size_t j = 0; j < n; ++j) std::swap(left(*pivot, j), left(col, j));
            for (std::size_t j = 0; j < right.cols(); ++j)
                std::swap(right(*pivot, j), right(col, j));
        }
        RationalFunction inv = RationalFunction(1) / left(col, col);
        for (std::size_t j = 0; j < n; ++j) left(col, j) *= inv;
        for (std::size_t j = 0; j < right.cols(); ++j) right(col, j) *= inv;
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col || left(r, col).is_zero()) continue;
            RationalFunction factor = left(r, col);
            for (std::size_t j = 0; j < n; ++j) left(r, j) -= factor * left(col, j);
            for (std::size_t j = 0; j < right.cols(); ++j)
                right(r, j) -= factor * right(col, j);
        }
    }
    return right;
}

}  // namespace

Matrix Matrix::inverse() const {
    if (rows_ != cols_)
        throw DimensionMismatchError("inverse of non-square " + shape(*this) + " matrix");
    return eliminate(*this, identity(rows_));
}

Matrix solve(const Matrix& a, const Matrix& b) {
    if (a.rows() != a.cols())
        throw DimensionMismatchError("solve requires a square coefficient matrix");
    if (a.rows() != b.rows())
        throw DimensionMismatchError("solve with mismatched right-hand side");
    return eliminate(a, b);
}

bool Matrix::is_zero() const {
    for (const RationalFunction& e : entries_)
        if (!e.is_zero()) return false;
    return true;
}

bool Matrix::is_identity() const {
    if (rows_ != cols_) return false;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) {
            const RationalFunction& e = (*this)(i, j);
            if (i == j ? !e.is_one() : !e.is_zero()) return false;
        }
    return true;
}

}  // namespace modo
