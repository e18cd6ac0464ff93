#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "idealfact/poly.hpp"

namespace idealfact {

class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& message, std::size_t column)
      : std::invalid_argument(message + " at column " + std::to_string(column)), column_(column) {}
  /// 1-based.
  std::size_t column() const { return column_; }

 private:
  std::size_t column_;
};

/// Parses a polynomial in x and y over `field`.
///
/// Grammar (whitespace insensitive):
///   expr   := ['+'|'-'] term (('+'|'-') term)*
///   term   := factor ('*' factor)*
///   factor := atom ['^' digits]
///   atom   := digits | 'x' | 'y' | 'a' | '(' expr ')'
/// Integer literals reduce mod p. `a` names the generator of an extension
/// field and is rejected over prime fields. `t` is accepted only when
/// nvars == 3.
MultiPoly parse_poly(std::string_view text, const FieldPtr& field, int nvars = 2,
                     const MonomialOrder& order = MonomialOrder::lex());

/// Canonical text: terms in decreasing order of the polynomial's own order,
/// coefficients as residues (or parenthesized polynomials in `a`), explicit
/// '*' between factors. parse_poly(to_string(f)) == f.
std::string to_string(const MultiPoly& f);
/// Field element in the same notation ("7", "a + 1").
std::string coeff_to_string(const FiniteField& field, Coeff c);

}  // namespace idealfact
