#ifndef MODO_PROBLEM_HPP
#define MODO_PROBLEM_HPP

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "modo/diff_op.hpp"
#include "modo/kernel.hpp"

namespace modo {

// On-disk description of a kernel problem: the vector dimension n, the list
// of vector functions, and optionally named operators.  Every mathematical
// entry is an expression string; an operator literal is a list of n-by-n
// grids of expression strings indexed by the power of D.
struct ProblemFile {
    // Coefficient grid of one power of D: n rows of n expression strings.
    using CoefficientGrid = std::vector<std::vector<std::string>>;

    std::size_t n = 0;
    std::vector<std::vector<std::string>> functions;
    std::map<std::string, std::vector<CoefficientGrid>> operators;

    bool operator==(const ProblemFile&) const = default;
};

// Parses and validates the JSON problem document; every expression string is
// checked against the grammar.  Throws ParseError or SemanticError.
ProblemFile parse_problem_text(const std::string& text);
ProblemFile load_problem_file(const std::string& path);

// Canonical serialization; parse_problem_text(serialize_problem(p)) == p.
std::string serialize_problem(const ProblemFile& p);
void save_problem_file(const ProblemFile& p, const std::string& path);

// Lowered views of the document.
KernelProblem to_kernel_problem(const ProblemFile& p);
DiffOp to_operator(const ProblemFile& p, const std::string& name);

}  // namespace modo

#endif  // MODO_PROBLEM_HPP
