#include "modo/diff_op.hpp"

#include <cassert>
#include <sstream>
#include <utility>

#include "modo/errors.hpp"

namespace modo {

namespace {

Rational binomial(std::size_t n, std::size_t k) {
    mpz_class b;
    mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return Rational(std::move(b));
}

void check_same_dim(const DiffOp& a, const DiffOp& b, const char* what) {
    if (a.dim() != b.dim()) {
        std::ostringstream os;
        os << what << " of operators with dimensions " << a.dim() << " and " << b.dim();
        throw DimensionMismatchError(os.str());
    }
}

}  // namespace

DiffOp::DiffOp(std::size_t dim) : dim_(dim) {
    if (dim == 0) throw DimensionMismatchError("operator dimension must be positive");
}

DiffOp::DiffOp(std::size_t dim, std::vector<Matrix> coefficients)
    : dim_(dim), coefficients_(std::move(coefficients)) {
    if (dim == 0) throw DimensionMismatchError("operator dimension must be positive");
    for (const Matrix& c : coefficients_)
        if (c.rows() != dim_ || c.cols() != dim_)
            throw DimensionMismatchError("operator coefficient is not N-by-N");
    trim();
}

DiffOp DiffOp::identity(std::size_t dim) {
    return DiffOp(dim, {Matrix::identity(dim)});
}

DiffOp DiffOp::monomial(const Matrix& coefficient, std::size_t power) {
    if (coefficient.rows() != coefficient.cols())
        throw DimensionMismatchError("operator coefficient is not N-by-N");
    std::vector<Matrix> coeffs(power + 1, Matrix(coefficient.rows(), coefficient.cols()));
    coeffs[power] = coefficient;
    return DiffOp(coefficient.rows(), std::move(coeffs));
}

DiffOp DiffOp::derivative(std::size_t dim, std::size_t power) {
    return monomial(Matrix::identity(dim), power);
}

void DiffOp::trim() {
    while (!coefficients_.empty() && coefficients_.back().is_zero())
        coefficients_.pop_back();
}

Matrix DiffOp::coefficient(std::size_t power) const {
    if (power >= coefficients_.size()) return Matrix(dim_, dim_);
    return coefficients_[power];
}

std::optional<std::size_t> DiffOp::order() const {
    if (coefficients_.empty()) return std::nullopt;
    return coefficients_.size() - 1;
}

const Matrix& DiffOp::leading_coefficient() const {
    assert(!coefficients_.empty());
    return coefficients_.back();
}

bool DiffOp::is_monic() const {
    return !coefficients_.empty() && coefficients_.back().is_identity();
}

DiffOp DiffOp::operator-() const {
    DiffOp out = *this;
    for (Matrix& c : out.coefficients_) c = -c;
    return out;
}

DiffOp& DiffOp::operator+=(const DiffOp& rhs) {
    check_same_dim(*this, rhs, "sum");
    if (coefficients_.size() < rhs.coefficients_.size())
        coefficients_.resize(rhs.coefficients_.size(), Matrix(dim_, dim_));
    for (std::size_t k = 0; k < rhs.coefficients_.size(); ++k)
        coefficients_[k] += rhs.coefficients_[k];
    trim();
    return *this;
}

DiffOp& DiffOp::operator-=(const DiffOp& rhs) {
    check_same_dim(*this, rhs, "difference");
    if (coefficients_.size() < rhs.coefficients_.size())
        coefficients_.resize(rhs.coefficients_.size(), Matrix(dim_, dim_));
    for (std::size_t k = 0; k < rhs.coefficients_.size(); ++k)
        coefficients_[k] -= rhs.coefficients_[k];
    trim();
    return *this;
}

DiffOp operator*(const DiffOp& lhs, const DiffOp& rhs) {
    check_same_dim(lhs, rhs, "product");
    const std::size_t n = lhs.dim();
    if (lhs.is_zero() || rhs.is_zero()) return DiffOp(n);
    const std::size_t lo = *lhs.order();
    const std::size_t ro = *rhs.order();
    std::vector<Matrix> out(lo + ro + 1, Matrix(n, n));
    for (std::size_t j = 0; j <= ro; ++j) {
        const Matrix& b = rhs.coefficients()[j];
        if (b.is_zero()) continue;
        // Successive derivatives of this coefficient, reused across all
        // powers of the left factor.
        std::vector<Matrix> derivs;
        derivs.reserve(lo + 1);
        derivs.push_back(b);
        for (std::size_t i = 1; i <= lo; ++i) derivs.push_back(derivs.back().derivative());
        for (std::size_t m = 0; m <= lo; ++m) {
            const Matrix& a = lhs.coefficients()[m];
            if (a.is_zero()) continue;
            for (std::size_t i = 0; i <= m; ++i) {
                if (derivs[i].is_zero()) continue;
                Matrix term = a * derivs[i];
                if (i > 0) term = RationalFunction(binomial(m, i)) * std::move(term);
                out[m + j - i] += term;
            }
        }
    }
    return DiffOp(n, std::move(out));
}

VectorFunction DiffOp::apply(const VectorFunction& f) const {
    if (f.cols() != 1 || f.rows() != dim_)
        throw DimensionMismatchError("operator application to a vector of wrong length");
    VectorFunction result(dim_, 1);
    VectorFunction deriv = f;
    for (std::size_t k = 0; k < coefficients_.size(); ++k) {
        if (k > 0) deriv = deriv.derivative();
        if (coefficients_[k].is_zero()) continue;
        result += coefficients_[k] * deriv;
    }
    return result;
}

}  // namespace modo
