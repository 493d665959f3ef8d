// The line-oriented `.prob` text format.
//
//   # comment
//   vars: x, y, z
//   qff: x^2 + y^2 - 1 = 0, x*y < z
//   qff: 1/2*x - z >= 0
//
// Each constraint is `lhs relop rhs`; both sides are subtracted into one
// polynomial, rational coefficients are cleared by a positive common
// denominator, and the result is sign-normalized with the relation flipped
// as needed.
#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "cadorder/formula.hpp"

namespace cadorder {

struct ProblemSource {
  std::string text;
  std::string origin = "<stdin>";
};

struct Diagnostic {
  std::string origin;
  std::size_t line = 0;    // 1-based
  std::size_t column = 0;  // 1-based
  std::string message;

  [[nodiscard]] std::string to_string() const;
};

/// Thrown by parse_problem with one diagnostic per offending line.
class ParseError : public std::runtime_error {
 public:
  explicit ParseError(std::vector<Diagnostic> diagnostics);

  [[nodiscard]] const std::vector<Diagnostic>& diagnostics() const { return diagnostics_; }

 private:
  std::vector<Diagnostic> diagnostics_;
};

Problem parse_problem(const ProblemSource& src);

/// Reads a file and parses it with the path as origin.
Problem load_problem(const std::string& path);

/// Canonical text; parse_problem(print_problem(p)) == p for valid p.
std::string print_problem(const Problem& p);

}  // namespace cadorder
