#ifndef MODO_KERNEL_HPP
#define MODO_KERNEL_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "modo/diff_op.hpp"
#include "modo/errors.hpp"
#include "modo/matrix.hpp"

namespace modo {

// A set of M*N vector functions of length N whose joint kernel operator is
// sought.  M is inferred from the function count; a count not divisible by
// N is rejected because the block Wronskian must be square.
class KernelProblem {
  public:
    explicit KernelProblem(std::vector<VectorFunction> functions);

    std::size_t dim() const { return dim_; }     // N
    std::size_t order() const { return order_; }  // M
    const std::vector<VectorFunction>& functions() const { return functions_; }

  private:
    std::size_t dim_;
    std::size_t order_;
    std::vector<VectorFunction> functions_;
};

// Raised when the block Wronskian determinant is zero; carries the offending
// matrix for diagnostics.
class SingularWronskianError : public Error {
  public:
    explicit SingularWronskianError(Matrix wronskian);
    const char* code() const noexcept override { return "SINGULAR_WRONSKIAN"; }
    const Matrix& wronskian() const { return wronskian_; }

  private:
    Matrix wronskian_;
};

// Raised when a function that was claimed to lie in an operator's kernel
// does not; carries the 1-based index of the first offender and its image.
class KernelViolationError : public Error {
  public:
    KernelViolationError(std::size_t index, VectorFunction image);
    const char* code() const noexcept override { return "KERNEL_VIOLATION"; }
    std::size_t index() const { return index_; }
    const VectorFunction& image() const { return image_; }

  private:
    std::size_t index_;
    VectorFunction image_;
};

// The MN-by-MN matrix whose first N rows are the given vector functions as
// columns and in which every further entry is the derivative of the entry
// N rows above it.
Matrix block_wronskian(const KernelProblem& p);

// N-by-MN matrix of k-th derivatives of the functions as columns.
Matrix derivative_block(const KernelProblem& p, std::size_t k);

// The unique monic operator of order M annihilating every function of the
// problem: I D^M minus the row of coefficient blocks obtained by dividing
// the M-th derivative block by the block Wronskian (the Schur-complement
// form of the construction).  Throws SingularWronskianError when det = 0.
DiffOp kernel_operator(const KernelProblem& p);

struct DivisionResult {
    DiffOp quotient;
    DiffOp remainder;  // zero or of order below the divisor's
};

// Right division l = quotient * divisor + remainder.  The divisor must be
// literally monic; callers normalize operators with merely invertible
// leading coefficients themselves.  The result is unique.
DivisionResult right_divide(const DiffOp& l, const DiffOp& divisor);

// Factors l through the kernel operator of p: returns q with
// l = q * kernel_operator(p), checking first that l actually annihilates
// every function.  The division remainder is asserted to vanish.
DiffOp factor_through_kernel(const DiffOp& l, const KernelProblem& p);

// Scalar (N = 1) Wronskian-ratio form of the kernel operator's action:
// the ratio of the Wronskian determinant of (functions..., f) to that of
// (functions...).  Agrees with kernel_operator(p).apply(f).
RationalFunction scalar_wronskian_ratio(const KernelProblem& p, const RationalFunction& f);

}  // namespace modo

#endif  // MODO_KERNEL_HPP
