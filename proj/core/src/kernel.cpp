#include "modo/kernel.hpp"

#include <cassert>
#include <sstream>
#include <utility>

#include "modo/format.hpp"

namespace modo {

KernelProblem::KernelProblem(std::vector<VectorFunction> functions)
    : functions_(std::move(functions)) {
    if (functions_.empty())
        throw DimensionMismatchError("kernel problem needs at least one function");
    dim_ = functions_.front().rows();
    for (const VectorFunction& f : functions_)
        if (f.cols() != 1 || f.rows() != dim_)
            throw DimensionMismatchError("kernel problem functions must be N-by-1 with equal N");
    if (functions_.size() % dim_ != 0)
        throw DimensionMismatchError("function count must be a multiple of the vector length");
    order_ = functions_.size() / dim_;
}

SingularWronskianError::SingularWronskianError(Matrix wronskian)
    : Error("block Wronskian matrix is singular: " +
            format_matrix(wronskian, Style::Text)),
      wronskian_(std::move(wronskian)) {}

KernelViolationError::KernelViolationError(std::size_t index, VectorFunction image)
    : Error([&] {
          std::ostringstream os;
          os << "operator does not annihilate function " << index << ": image is "
             << format_matrix(image.transpose(), Style::Text) << "^T";
          return os.str();
      }()),
      index_(index),
      image_(std::move(image)) {}

Matrix derivative_block(const KernelProblem& p, std::size_t k) {
    const std::size_t n = p.dim();
    const std::size_t count = p.functions().size();
    Matrix out(n, count);
    for (std::size_t j = 0; j < count; ++j) {
        VectorFunction f = p.functions()[j];
        for (std::size_t i = 0; i < k; ++i) f = f.derivative();
        for (std::size_t i = 0; i < n; ++i) out(i, j) = f(i, 0);
    }
    return out;
}

Matrix block_wronskian(const KernelProblem& p) {
    std::vector<std::vector<Matrix>> grid;
    grid.reserve(p.order());
    Matrix row = derivative_block(p, 0);
    grid.push_back({row});
    for (std::size_t k = 1; k < p.order(); ++k) {
        row = row.derivative();
        grid.push_back({row});
    }
    return Matrix::block(grid);
}

DiffOp kernel_operator(const KernelProblem& p) {
    const std::size_t n = p.dim();
    const std::size_t m = p.order();
    Matrix phi = block_wronskian(p);
    Matrix rhs = derivative_block(p, m);
    // Row block (C_0 ... C_{M-1}) with (C_0 ... C_{M-1}) Phi = rhs, computed
    // as a transposed solve rather than by forming the inverse.
    Matrix blocks(1, 1);
    try {
        blocks = solve(phi.transpose(), rhs.transpose()).transpose();
    } catch (const SingularMatrixError&) {
        throw SingularWronskianError(std::move(phi));
    }
    std::vector<Matrix> coeffs;
    coeffs.reserve(m + 1);
    for (std::size_t k = 0; k < m; ++k)
        coeffs.push_back(-blocks.submatrix(0, k * n, n, n));
    coeffs.push_back(Matrix::identity(n));
    return DiffOp(n, std::move(coeffs));
}

DivisionResult right_divide(const DiffOp& l, const DiffOp& divisor) {
    if (l.dim() != divisor.dim())
        throw DimensionMismatchError("right division of operators with different dimensions");
    if (!divisor.is_monic())
        throw NonMonicDivisorError("right division requires a monic divisor");
    const std::size_t dorder = *divisor.order();
    DiffOp quotient(l.dim());
    DiffOp remainder = l;
    while (!remainder.is_zero() && *remainder.order() >= dorder) {
        std::size_t gap = *remainder.order() - dorder;
        DiffOp term = DiffOp::monomial(remainder.leading_coefficient(), gap);
        quotient += term;
        remainder -= term * divisor;
    }
    return {std::move(quotient), std::move(remainder)};
}

DiffOp factor_through_kernel(const DiffOp& l, const KernelProblem& p) {
    DiffOp k = kernel_operator(p);
    for (std::size_t i = 0; i < p.functions().size(); ++i) {
        VectorFunction image = l.apply(p.functions()[i]);
        if (!image.is_zero()) throw KernelViolationError(i + 1, std::move(image));
    }
    DivisionResult division = right_divide(l, k);
    // With every function annihilated the remainder vanishes identically.
    if (!division.remainder.is_zero())
        throw Error("internal: right division through a kernel operator left a remainder");
    return std::move(division.quotient);
}

RationalFunction scalar_wronskian_ratio(const KernelProblem& p, const RationalFunction& f) {
    if (p.dim() != 1)
        throw DimensionMismatchError("the Wronskian-ratio form applies to scalar problems only");
    const std::size_t m = p.order();
    Matrix wronskian = block_wronskian(p);
    RationalFunction den = wronskian.determinant();
    if (den.is_zero()) throw SingularWronskianError(std::move(wronskian));
    Matrix augmented(m + 1, m + 1);
    for (std::size_t j = 0; j <= m; ++j) {
        RationalFunction g = j < m ? p.functions()[j](0, 0) : f;
        for (std::size_t i = 0; i <= m; ++i) {
            augmented(i, j) = g;
            g = g.derivative();
        }
    }
    return augmented.determinant() / den;
}

}  // namespace modo
