#ifndef MODO_EXPR_HPP
#define MODO_EXPR_HPP

#include <gmpxx.h>

#include <memory>
#include <string_view>

#include "modo/rational_function.hpp"

namespace modo {

// Expression tree for the input grammar:
//
//   expr   := ('+'|'-')? term (('+'|'-') term)*
//   term   := factor (('*'|'/') factor)*
//   factor := base ('^' uint)?
//   base   := integer | 'x' | '(' expr ')'
//
// Exponents are non-negative integer literals; negative powers are written
// with division.
struct Expr {
    enum class Kind { Integer, Variable, Add, Subtract, Multiply, Divide, Power, Negate };

    Kind kind;
    std::size_t offset = 0;       // byte offset in the source text
    mpz_class value;              // Integer
    unsigned long exponent = 0;   // Power
    std::unique_ptr<Expr> lhs;    // left operand, or the sole operand
    std::unique_ptr<Expr> rhs;    // right operand of binary nodes
};

// Throws ParseError (with byte offset and expected-token set) on bad syntax.
std::unique_ptr<Expr> parse_expression(std::string_view source);

// Evaluates the tree in the rational-function field.  Throws SemanticError
// on division by the zero rational function.
RationalFunction lower_expression(const Expr& ast);

// parse + lower in one step.
RationalFunction parse_rational_function(std::string_view source);

}  // namespace modo

#endif  // MODO_EXPR_HPP
