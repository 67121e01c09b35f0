#include "modo/format.hpp"

#include <cassert>
#include <ostream>
#include <sstream>
#include <vector>

namespace modo {

namespace {

// Splits a nonzero polynomial into content * primitive, where primitive has
// integer coefficients with gcd 1 and positive leading coefficient.
struct IntegerParts {
    Rational content;
    std::vector<mpz_class> coefficients;  // ascending
};

IntegerParts integer_parts(const Polynomial& p) {
    assert(!p.is_zero());
    mpz_class lcm_den(1);
    for (const Rational& c : p.coefficients())
        if (!c.is_zero()) mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(),
                                  c.denominator().get_mpz_t());
    std::vector<mpz_class> scaled;
    scaled.reserve(p.coefficients().size());
    mpz_class gcd_num(0);
    for (const Rational& c : p.coefficients()) {
        mpz_class z = c.numerator() * (lcm_den / c.denominator());
        mpz_gcd(gcd_num.get_mpz_t(), gcd_num.get_mpz_t(), z.get_mpz_t());
        scaled.push_back(std::move(z));
    }
    if (sgn(scaled.back()) < 0) gcd_num = -gcd_num;
    for (mpz_class& z : scaled) z /= gcd_num;
    return {Rational(std::move(gcd_num), std::move(lcm_den)), std::move(scaled)};
}

std::string integer_poly_string(const std::vector<mpz_class>& coeffs, Style style) {
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = coeffs.size(); k-- > 0;) {
        const mpz_class& c = coeffs[k];
        if (sgn(c) == 0) continue;
        if (first) {
            if (sgn(c) < 0) os << "-";
            first = false;
        } else {
            os << (sgn(c) < 0 ? "-" : "+");
        }
        mpz_class mag = abs(c);
        if (k == 0) {
            os << mag.get_str();
        } else {
            if (mag != 1) os << mag.get_str() << (style == Style::Text ? "*" : "");
            os << "x";
            if (k > 1) {
                if (style == Style::Text)
                    os << "^" << k;
                else
                    os << "^{" << k << "}";
            }
        }
    }
    return os.str();
}

std::size_t term_count(const std::vector<mpz_class>& coeffs) {
    std::size_t n = 0;
    for (const mpz_class& c : coeffs)
        if (sgn(c) != 0) ++n;
    return n;
}

// A denominator can stand unparenthesized after '/' only when it is a bare
// integer or a monic power of x.
bool denominator_is_atom(const std::vector<mpz_class>& coeffs) {
    if (term_count(coeffs) != 1) return false;
    if (coeffs.size() == 1) return true;       // integer
    return coeffs.back() == 1 && term_count(coeffs) == 1;  // x^k
}

}  // namespace

std::string format_rational(const Rational& r) {
    return r.to_string();
}

std::string format_rational_function(const RationalFunction& f, Style style) {
    if (f.is_zero()) return "0";
    IntegerParts num = integer_parts(f.num());
    IntegerParts den = integer_parts(f.den());
    Rational ratio = num.content / den.content;
    for (mpz_class& z : num.coefficients) z *= ratio.numerator();
    for (mpz_class& z : den.coefficients) z *= ratio.denominator();
    const bool trivial_den = den.coefficients.size() == 1 && den.coefficients[0] == 1;
    if (trivial_den) return integer_poly_string(num.coefficients, style);
    if (style == Style::Latex)
        return "\\frac{" + integer_poly_string(num.coefficients, Style::Latex) + "}{" +
               integer_poly_string(den.coefficients, Style::Latex) + "}";
    std::string ntext = integer_poly_string(num.coefficients, Style::Text);
    if (term_count(num.coefficients) > 1) ntext = "(" + ntext + ")";
    std::string dtext = integer_poly_string(den.coefficients, Style::Text);
    if (!denominator_is_atom(den.coefficients)) dtext = "(" + dtext + ")";
    return ntext + "/" + dtext;
}

std::string format_polynomial(const Polynomial& p) {
    return format_rational_function(RationalFunction(p), Style::Text);
}

std::string format_matrix(const Matrix& m, Style style) {
    std::ostringstream os;
    if (style == Style::Latex) {
        os << "\\begin{pmatrix}";
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i > 0) os << " \\\\ ";
            for (std::size_t j = 0; j < m.cols(); ++j) {
                if (j > 0) os << " & ";
                os << format_rational_function(m(i, j), style);
            }
        }
        os << "\\end{pmatrix}";
        return os.str();
    }
    os << "[";
    for (std::size_t i = 0; i < m.rows(); ++i) {
        if (i > 0) os << ", ";
        os << "[";
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (j > 0) os << ", ";
            os << format_rational_function(m(i, j), style);
        }
        os << "]";
    }
    os << "]";
    return os.str();
}

namespace {

bool is_toplevel_sum(const RationalFunction& f) {
    if (!f.den().is_one()) return false;
    std::size_t nonzero = 0;
    for (const Rational& c : f.num().coefficients())
        if (!c.is_zero()) ++nonzero;
    return nonzero > 1;
}

}  // namespace

std::string format_operator(const DiffOp& op, Style style) {
    if (op.is_zero()) return "0";
    const bool scalar = op.dim() == 1;
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = op.coefficients().size(); k-- > 0;) {
        const Matrix& coeff = op.coefficients()[k];
        if (coeff.is_zero()) continue;
        std::string ctext;
        if (scalar) {
            const RationalFunction& value = coeff(0, 0);
            if (k > 0 && value.is_one())
                ctext = "";
            else if (k > 0 && value == RationalFunction(-1))
                ctext = "-";
            else {
                ctext = format_rational_function(value, style);
                if (is_toplevel_sum(value)) ctext = "(" + ctext + ")";
            }
        } else {
            ctext = coeff.is_identity() ? "I" : format_matrix(coeff, style);
        }
        std::string dtext;
        if (k == 1)
            dtext = style == Style::Text ? "D" : "\\partial";
        else if (k > 1) {
            std::ostringstream ds;
            if (style == Style::Text)
                ds << "D^" << k;
            else
                ds << "\\partial^{" << k << "}";
            dtext = ds.str();
        }
        std::string term;
        if (ctext == "-")
            term = "-" + dtext;
        else if (ctext.empty())
            term = dtext;
        else
            term = dtext.empty() ? ctext : ctext + " " + dtext;
        if (first) {
            os << term;
            first = false;
        } else if (term.front() == '-') {
            os << " - " << term.substr(1);
        } else {
            os << " + " << term;
        }
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const Polynomial& p) {
    return os << format_polynomial(p);
}

std::ostream& operator<<(std::ostream& os, const RationalFunction& f) {
    return os << format_rational_function(f);
}

std::ostream& operator<<(std::ostream& os, const Matrix& m) {
    return os << format_matrix(m);
}

std::ostream& operator<<(std::ostream& os, const DiffOp& op) {
    return os << format_operator(op);
}

}  // namespace modo
