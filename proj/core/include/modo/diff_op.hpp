#ifndef MODO_DIFF_OP_HPP
#define MODO_DIFF_OP_HPP

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <vector>

#include "modo/matrix.hpp"

namespace modo {

// Matrix-coefficient ordinary differential operator: a polynomial in
// D = d/dx whose coefficients are N-by-N matrices of rational functions.
// coefficients()[k] is the coefficient of D^k.  Canonical form trims
// trailing zero matrices, so the zero operator has an empty coefficient
// list and order() of zero is nullopt.  Order comparisons in the division
// and uniqueness arguments rely on that sentinel never reading as 0.
//
// Multiplication is operator composition: it is non-commutative, and the
// same code path serves the scalar case N = 1.
class DiffOp {
  public:
    explicit DiffOp(std::size_t dim);  // zero operator
    DiffOp(std::size_t dim, std::vector<Matrix> coefficients);

    static DiffOp identity(std::size_t dim);                            // I
    static DiffOp monomial(const Matrix& coefficient, std::size_t power);  // A D^power
    static DiffOp derivative(std::size_t dim, std::size_t power = 1);   // I D^power

    std::size_t dim() const { return dim_; }
    const std::vector<Matrix>& coefficients() const { return coefficients_; }
    // Zero matrix beyond the order.
    Matrix coefficient(std::size_t power) const;
    std::optional<std::size_t> order() const;
    const Matrix& leading_coefficient() const;  // pre: nonzero

    bool is_zero() const { return coefficients_.empty(); }
    // Nonzero with identity leading coefficient.
    bool is_monic() const;

    DiffOp operator-() const;
    DiffOp& operator+=(const DiffOp& rhs);
    DiffOp& operator-=(const DiffOp& rhs);
    friend DiffOp operator+(DiffOp lhs, const DiffOp& rhs) { return lhs += rhs; }
    friend DiffOp operator-(DiffOp lhs, const DiffOp& rhs) { return lhs -= rhs; }

    // Composition product: (A D^m)(B D^n) = sum_i binom(m,i) A B^(i) D^(m+n-i),
    // extended linearly, with matrix products for the coefficients.
    friend DiffOp operator*(const DiffOp& lhs, const DiffOp& rhs);

    // Applies the operator to an N-vector function: sum_k coeff_k f^(k).
    VectorFunction apply(const VectorFunction& f) const;

    bool operator==(const DiffOp&) const = default;

  private:
    void trim();

    std::size_t dim_;
    std::vector<Matrix> coefficients_;
};

std::ostream& operator<<(std::ostream& os, const DiffOp& op);

}  // namespace modo

#endif  // MODO_DIFF_OP_HPP
