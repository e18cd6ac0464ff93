#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "idealfact/curve_ring.hpp"

namespace idealfact::cli {

/// A parsed input file:
///
///   # comment
///   field: 13                       (or 2^3, or 2^3 modulus a^3 + a + 1)
///   curve: y^2 - x^3 - x - 1
///   ideal:
///     x^2 + 1
///     y - x
///
/// Later `ideal:` blocks give the second operand of binary operations.
struct ProblemInput {
  FieldPtr field;
  std::string curve_text;
  MultiPoly curve;
  std::vector<std::vector<MultiPoly>> ideals;
};

/// Throws std::invalid_argument (ParseError for polynomial syntax) with the
/// offending line number.
ProblemInput parse_problem(const std::string& text);

FieldPtr parse_field(const std::string& text);

/// Runs the tool on argv-style arguments (without the program name).
/// Returns the process exit code: 0 success, 1 input error, 2 internal or
/// probabilistic failure.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace idealfact::cli
