#include "modo/problem.hpp"

#include <fstream>
#include <sstream>
#include <utility>

#include <json.hpp>

#include "modo/errors.hpp"
#include "modo/expr.hpp"

namespace modo {

namespace {

using json = nlohmann::ordered_json;

[[noreturn]] void fail(const std::string& message) {
    throw ParseError("problem file: " + message, 0);
}

std::size_t require_count(const json& j, const char* key) {
    if (!j.contains(key) || !j[key].is_number_unsigned() || j[key].get<std::size_t>() == 0)
        fail(std::string("'") + key + "' must be a positive integer");
    return j[key].get<std::size_t>();
}

std::string require_expression(const json& j, const std::string& where) {
    if (!j.is_string()) fail(where + " must be an expression string");
    std::string text = j.get<std::string>();
    try {
        parse_rational_function(text);
    } catch (const Error& e) {
        fail(where + ": " + e.what());
    }
    return text;
}

}  // namespace

ProblemFile parse_problem_text(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("problem file: ") + e.what(), e.byte);
    }
    if (!doc.is_object()) fail("top level must be an object");
    ProblemFile out;
    out.n = require_count(doc, "n");
    if (!doc.contains("functions") || !doc["functions"].is_array() || doc["functions"].empty())
        fail("'functions' must be a non-empty list");
    std::size_t fi = 0;
    for (const json& fun : doc["functions"]) {
        std::ostringstream where;
        where << "functions[" << fi << "]";
        if (!fun.is_array() || fun.size() != out.n)
            fail(where.str() + " must list exactly n entries");
        std::vector<std::string> entries;
        for (std::size_t i = 0; i < fun.size(); ++i) {
            std::ostringstream ew;
            ew << where.str() << "[" << i << "]";
            entries.push_back(require_expression(fun[i], ew.str()));
        }
        out.functions.push_back(std::move(entries));
        ++fi;
    }
    if (doc.contains("operators")) {
        if (!doc["operators"].is_object()) fail("'operators' must be an object");
        for (const auto& [name, literal] : doc["operators"].items()) {
            if (!literal.is_array())
                fail("operator '" + name + "' must be a list of coefficient grids");
            std::vector<ProblemFile::CoefficientGrid> grids;
            std::size_t power = 0;
            for (const json& grid : literal) {
                std::ostringstream where;
                where << "operator '" << name << "' coefficient of D^" << power;
                if (!grid.is_array() || grid.size() != out.n)
                    fail(where.str() + " must have n rows");
                ProblemFile::CoefficientGrid rows;
                for (std::size_t i = 0; i < grid.size(); ++i) {
                    if (!grid[i].is_array() || grid[i].size() != out.n)
                        fail(where.str() + " must have n entries per row");
                    std::vector<std::string> row;
                    for (std::size_t j = 0; j < grid[i].size(); ++j) {
                        std::ostringstream ew;
                        ew << where.str() << " entry (" << i << "," << j << ")";
                        row.push_back(require_expression(grid[i][j], ew.str()));
                    }
                    rows.push_back(std::move(row));
                }
                grids.push_back(std::move(rows));
                ++power;
            }
            out.operators.emplace(name, std::move(grids));
        }
    }
    for (const auto& [key, value] : doc.items()) {
        (void)value;
        if (key != "n" && key != "functions" && key != "operators")
            fail("unknown key '" + key + "'");
    }
    return out;
}

ProblemFile load_problem_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open problem file '" + path + "'", 0);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_problem_text(buffer.str());
}

std::string serialize_problem(const ProblemFile& p) {
    json doc;
    doc["n"] = p.n;
    doc["functions"] = p.functions;
    if (!p.operators.empty()) {
        json ops = json::object();
        for (const auto& [name, grids] : p.operators) ops[name] = grids;
        doc["operators"] = std::move(ops);
    }
    return doc.dump(2) + "\n";
}

void save_problem_file(const ProblemFile& p, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw Error("cannot write problem file '" + path + "'");
    out << serialize_problem(p);
}

KernelProblem to_kernel_problem(const ProblemFile& p) {
    std::vector<VectorFunction> functions;
    functions.reserve(p.functions.size());
    for (const auto& entries : p.functions) {
        VectorFunction f(p.n, 1);
        for (std::size_t i = 0; i < p.n; ++i) f(i, 0) = parse_rational_function(entries[i]);
        functions.push_back(std::move(f));
    }
    return KernelProblem(std::move(functions));
}

DiffOp to_operator(const ProblemFile& p, const std::string& name) {
    auto it = p.operators.find(name);
    if (it == p.operators.end())
        throw ParseError("problem file does not define operator '" + name + "'", 0);
    std::vector<Matrix> coefficients;
    coefficients.reserve(it->second.size());
    for (const ProblemFile::CoefficientGrid& grid : it->second) {
        Matrix c(p.n, p.n);
        for (std::size_t i = 0; i < p.n; ++i)
            for (std::size_t j = 0; j < p.n; ++j)
                c(i, j) = parse_rational_function(grid[i][j]);
        coefficients.push_back(std::move(c));
    }
    return DiffOp(p.n, std::move(coefficients));
}

}  // namespace modo
