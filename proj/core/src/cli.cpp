#include "modo/cli.hpp"

#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "modo/diff_op.hpp"
#include "modo/errors.hpp"
#include "modo/expr.hpp"
#include "modo/format.hpp"
#include "modo/kernel.hpp"
#include "modo/problem.hpp"

namespace modo {

namespace {

using json = nlohmann::ordered_json;

json rational_function_json(const RationalFunction& f) {
    json num = json::array();
    json den = json::array();
    for (const Rational& c : f.num().coefficients()) num.push_back(c.to_string());
    for (const Rational& c : f.den().coefficients()) den.push_back(c.to_string());
    return json{{"num", std::move(num)}, {"den", std::move(den)}};
}

json matrix_json(const Matrix& m) {
    json entries = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j)
            row.push_back(rational_function_json(m(i, j)));
        entries.push_back(std::move(row));
    }
    return json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(entries)}};
}

json operator_json(const DiffOp& op) {
    json coeffs = json::array();
    for (const Matrix& c : op.coefficients()) coeffs.push_back(matrix_json(c));
    json out{{"n", op.dim()}};
    if (op.order())
        out["order"] = *op.order();
    else
        out["order"] = nullptr;
    out["coeffs"] = std::move(coeffs);
    return out;
}

void emit_json(std::ostream& out, const json& doc) {
    out << doc.dump(2) << "\n";
}

void print_matrix_rows(std::ostream& out, const Matrix& m, Style style) {
    for (std::size_t i = 0; i < m.rows(); ++i) {
        out << "  [";
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (j > 0) out << ", ";
            out << format_rational_function(m(i, j), style);
        }
        out << "]\n";
    }
}

Matrix matrix_from(const std::vector<std::vector<std::string>>& rows) {
    Matrix m(rows.size(), rows.front().size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < rows[i].size(); ++j)
            m(i, j) = parse_rational_function(rows[i][j]);
    return m;
}

struct OutputFormat {
    bool as_json = false;
    Style style = Style::Text;
};

void run_wronskian(std::ostream& out, const std::string& file, const OutputFormat& fmt) {
    ProblemFile pf = load_problem_file(file);
    KernelProblem p = to_kernel_problem(pf);
    Matrix phi = block_wronskian(p);
    RationalFunction det = phi.determinant();
    if (fmt.as_json) {
        emit_json(out, json{{"phi", matrix_json(phi)}, {"det", rational_function_json(det)}});
        return;
    }
    if (fmt.style == Style::Latex) {
        out << "\\Phi = " << format_matrix(phi, Style::Latex) << "\n";
        out << "\\det \\Phi = " << format_rational_function(det, Style::Latex) << "\n";
        return;
    }
    out << "Phi =\n";
    print_matrix_rows(out, phi, fmt.style);
    out << "det(Phi) = " << format_rational_function(det, fmt.style) << "\n";
}

void run_kernel(std::ostream& out, const std::string& file, const OutputFormat& fmt) {
    ProblemFile pf = load_problem_file(file);
    DiffOp k = kernel_operator(to_kernel_problem(pf));
    if (fmt.as_json) {
        emit_json(out, json{{"K", operator_json(k)}});
        return;
    }
    out << "K = " << format_operator(k, fmt.style) << "\n";
}

void run_divide(std::ostream& out, const std::string& file, const std::string& num_name,
                const std::string& den_name, const OutputFormat& fmt) {
    ProblemFile pf = load_problem_file(file);
    DiffOp num = to_operator(pf, num_name);
    DiffOp den = to_operator(pf, den_name);
    DivisionResult result = right_divide(num, den);
    if (fmt.as_json) {
        emit_json(out, json{{"Q", operator_json(result.quotient)},
                            {"R", operator_json(result.remainder)}});
        return;
    }
    out << "Q = " << format_operator(result.quotient, fmt.style) << "\n";
    out << "R = " << format_operator(result.remainder, fmt.style) << "\n";
}

void run_factor(std::ostream& out, const std::string& file, const std::string& op_name,
                const OutputFormat& fmt) {
    ProblemFile pf = load_problem_file(file);
    DiffOp q = factor_through_kernel(to_operator(pf, op_name), to_kernel_problem(pf));
    if (fmt.as_json) {
        emit_json(out, json{{"Q", operator_json(q)}});
        return;
    }
    out << "Q = " << format_operator(q, fmt.style) << "\n";
}

// Reports per-function results; any violation makes the whole command fail
// with the KERNEL_VIOLATION code.
int run_verify(std::ostream& out, const std::string& file, const std::string& op_name,
               const OutputFormat& fmt) {
    ProblemFile pf = load_problem_file(file);
    DiffOp op = to_operator(pf, op_name);
    KernelProblem p = to_kernel_problem(pf);
    bool all_ok = true;
    json results = json::array();
    for (std::size_t i = 0; i < p.functions().size(); ++i) {
        VectorFunction image = op.apply(p.functions()[i]);
        bool ok = image.is_zero();
        all_ok = all_ok && ok;
        if (fmt.as_json) {
            results.push_back(json{{"index", i + 1}, {"annihilated", ok}});
        } else if (ok) {
            out << "phi_" << (i + 1) << ": OK\n";
        } else {
            out << "phi_" << (i + 1)
                << ": VIOLATION, image = " << format_matrix(image.transpose(), fmt.style)
                << "^T\n";
        }
    }
    if (fmt.as_json) emit_json(out, json{{"results", std::move(results)}, {"ok", all_ok}});
    if (all_ok) {
        if (!fmt.as_json) out << "all functions annihilated\n";
        return 0;
    }
    out << "KERNEL_VIOLATION\n";
    return 2;
}

// Built-in worked example: N = M = 2 with cubic/quadratic/linear/constant
// vector functions, the kernel operator K, and the factorization of
// L = [[1,1],[1,1]] D^3 through it.  Results are checked against the known
// values before printing, so the output doubles as a self-test.
int run_example(std::ostream& out, const OutputFormat& fmt) {
    RationalFunction x = RationalFunction::variable();
    RationalFunction x2 = x * x;
    RationalFunction x3 = x2 * x;
    auto column = [](const RationalFunction& top, const RationalFunction& bottom) {
        Matrix c(2, 1);
        c(0, 0) = top;
        c(1, 0) = bottom;
        return c;
    };
    KernelProblem p({column(x3, -x3), column(x2, RationalFunction(0)),
                     column(RationalFunction(0), x), column(RationalFunction(1),
                                                            RationalFunction(0))});
    DiffOp k = kernel_operator(p);
    DiffOp l = DiffOp::monomial(matrix_from({{"1", "1"}, {"1", "1"}}), 3);
    DiffOp q = factor_through_kernel(l, p);

    DiffOp expected_k(2, {matrix_from({{"0", "-3/(2*x^2)"}, {"0", "3/x^2"}}),
                          matrix_from({{"-1/x", "3/(2*x)"}, {"0", "-3/x"}}),
                          Matrix::identity(2)});
    DiffOp expected_q(2, {matrix_from({{"1/x", "3/(2*x)"}, {"1/x", "3/(2*x)"}}),
                          matrix_from({{"1", "1"}, {"1", "1"}})});
    if (k != expected_k || q != expected_q || q * k != l) {
        out << "error: built-in example produced unexpected results\n";
        out << "INTERNAL_ERROR\n";
        return 2;
    }
    if (fmt.as_json) {
        emit_json(out, json{{"K", operator_json(k)}, {"Q", operator_json(q)},
                            {"L", operator_json(l)}, {"ok", true}});
        return 0;
    }
    out << "K = " << format_operator(k, fmt.style) << "\n";
    out << "Q = " << format_operator(q, fmt.style) << "\n";
    out << "L = Q K = " << format_operator(l, fmt.style) << "\n";
    out << "OK\n";
    return 0;
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out) {
    CLI::App app{"exact arithmetic for matrix-coefficient ordinary differential operators"};
    app.name("modo");
    app.require_subcommand(1);
    app.fallthrough();

    std::string format = "text";
    app.add_option("--format", format, "output format")
        ->check(CLI::IsMember({"text", "latex", "json"}))
        ->capture_default_str();

    std::string wronskian_file;
    CLI::App* wronskian = app.add_subcommand(
        "wronskian", "print the block Wronskian matrix and its determinant");
    wronskian->add_option("file", wronskian_file, "problem file")->required();

    std::string kernel_file;
    CLI::App* kernel = app.add_subcommand(
        "kernel", "print the monic operator annihilating the problem's functions");
    kernel->add_option("file", kernel_file, "problem file")->required();

    std::string divide_file, divide_num, divide_den;
    CLI::App* divide =
        app.add_subcommand("divide", "right-divide one named operator by another");
    divide->add_option("file", divide_file, "problem file")->required();
    divide->add_option("--num", divide_num, "dividend operator name")->required();
    divide->add_option("--den", divide_den, "divisor operator name")->required();

    std::string factor_file, factor_op;
    CLI::App* factor = app.add_subcommand(
        "factor", "factor a named operator through the kernel operator");
    factor->add_option("file", factor_file, "problem file")->required();
    factor->add_option("--op", factor_op, "operator name")->required();

    std::string verify_file, verify_op;
    CLI::App* verify = app.add_subcommand(
        "verify", "check that a named operator annihilates every function");
    verify->add_option("file", verify_file, "problem file")->required();
    verify->add_option("--op", verify_op, "operator name")->required();

    CLI::App* example =
        app.add_subcommand("example", "run the built-in worked example end to end");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        out << "error: " << e.what() << "\n";
        out << "PARSE_ERROR\n";
        return 1;
    }

    OutputFormat fmt;
    fmt.as_json = format == "json";
    fmt.style = format == "latex" ? Style::Latex : Style::Text;

    try {
        if (*wronskian)
            run_wronskian(out, wronskian_file, fmt);
        else if (*kernel)
            run_kernel(out, kernel_file, fmt);
        else if (*divide)
            run_divide(out, divide_file, divide_num, divide_den, fmt);
        else if (*factor)
            run_factor(out, factor_file, factor_op, fmt);
        else if (*verify)
            return run_verify(out, verify_file, verify_op, fmt);
        else if (*example)
            return run_example(out, fmt);
        return 0;
    } catch (const Error& e) {
        out << "error: " << e.what() << "\n";
        out << e.code() << "\n";
        return e.usage_error() ? 1 : 2;
    }
}

}  // namespace modo
