#ifndef MODO_FORMAT_HPP
#define MODO_FORMAT_HPP

#include <string>

#include "modo/diff_op.hpp"
#include "modo/matrix.hpp"
#include "modo/polynomial.hpp"
#include "modo/rational_function.hpp"

namespace modo {

enum class Style { Text, Latex };

// Deterministic renderings.  The text style stays inside the expression
// grammar, so format -> parse -> lower is the identity on canonical values;
// fractions are shown with integer-coefficient numerator and denominator
// (e.g. -3/(2*x^2) rather than its monic-denominator internal form).
std::string format_rational(const Rational& r);
std::string format_polynomial(const Polynomial& p);
std::string format_rational_function(const RationalFunction& f, Style style = Style::Text);

// Single-line matrix rendering: [[a, b], [c, d]] or a pmatrix environment.
std::string format_matrix(const Matrix& m, Style style = Style::Text);

// Powers descending, zero coefficient matrices omitted, D (or \partial) for
// the derivative symbol, identity coefficients shortened to I.
std::string format_operator(const DiffOp& op, Style style = Style::Text);

}  // namespace modo

#endif  // MODO_FORMAT_HPP
