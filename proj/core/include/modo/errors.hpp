#ifndef MODO_ERRORS_HPP
#define MODO_ERRORS_HPP

#include <cstddef>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace modo {

// Base class for everything thrown by this library.  code() is a stable
// machine-readable identifier (the CLI prints it as its last output line),
// usage_error() marks faults in the input text as opposed to faults in the
// mathematics.
class Error : public std::runtime_error {
  public:
    explicit Error(const std::string& message) : std::runtime_error(message) {}
    virtual const char* code() const noexcept { return "INTERNAL_ERROR"; }
    virtual bool usage_error() const noexcept { return false; }
};

class DimensionMismatchError : public Error {
  public:
    using Error::Error;
    const char* code() const noexcept override { return "DIMENSION_MISMATCH"; }
};

// Exact division by a zero rational, polynomial, or rational function.
class DivisionByZeroError : public Error {
  public:
    using Error::Error;
};

// Evaluation of a rational function at a zero of its denominator.
class PoleError : public Error {
  public:
    using Error::Error;
};

// Inversion of, or solving against, a matrix whose determinant is zero.
class SingularMatrixError : public Error {
  public:
    using Error::Error;
};

class NonMonicDivisorError : public Error {
  public:
    using Error::Error;
    const char* code() const noexcept override { return "NON_MONIC_DIVISOR"; }
};

// Syntax error in an expression or a problem file.  Carries the byte offset
// of the offending token and the set of tokens that would have been accepted.
class ParseError : public Error {
  public:
    ParseError(const std::string& message, std::size_t offset,
               std::vector<std::string> expected = {})
        : Error(compose(message, offset, expected)),
          offset_(offset),
          expected_(std::move(expected)) {}

    const char* code() const noexcept override { return "PARSE_ERROR"; }
    bool usage_error() const noexcept override { return true; }
    std::size_t offset() const noexcept { return offset_; }
    const std::vector<std::string>& expected() const noexcept { return expected_; }

  private:
    static std::string compose(const std::string& message, std::size_t offset,
                               const std::vector<std::string>& expected) {
        std::ostringstream os;
        os << message << " (byte " << offset;
        if (!expected.empty()) {
            os << ", expected ";
            for (std::size_t i = 0; i < expected.size(); ++i) {
                if (i > 0) os << (i + 1 == expected.size() ? " or " : ", ");
                os << expected[i];
            }
        }
        os << ")";
        return os.str();
    }

    std::size_t offset_;
    std::vector<std::string> expected_;
};

// Input that parses but has no mathematical meaning, e.g. an expression
// dividing by the zero rational function.
class SemanticError : public Error {
  public:
    using Error::Error;
    const char* code() const noexcept override { return "PARSE_ERROR"; }
    bool usage_error() const noexcept override { return true; }
};

}  // namespace modo

#endif  // MODO_ERRORS_HPP
