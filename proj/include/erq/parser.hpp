#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "erq/polynomial.hpp"

namespace erq {

/// Polynomial text plus the ordered variable names it is written in. The
/// i-th name is variable i of the resulting polynomial.
struct PolynomialSource {
  std::string text;
  std::vector<std::string> variables;
};

/// x, y, z.
std::vector<std::string> default_variables();

/// Splits "x,y,z" and validates the names (distinct identifiers).
std::vector<std::string> parse_variable_list(std::string_view comma_separated);

/// Grammar (whitespace ignored):
///   expr    := ['+'|'-'] term (('+'|'-') term)*
///   term    := unary (['*'] unary)*        juxtaposition multiplies
///   unary   := '-' unary | power
///   power   := primary ('^' INT)*
///   primary := INT ['/' INT] | variable | '(' expr ')'
/// Juxtaposition only continues a term when the next token is a number, a
/// variable or '('. "1/2x" is (1/2)*x. Throws ParseError with a 1-based
/// column on any malformed input.
Polynomial parse_polynomial(const PolynomialSource& source);
Polynomial parse_polynomial(std::string_view text, std::span<const std::string> variables);

/// Canonical text: terms in descending lex order, e.g.
/// "x^2y^2z+x^2y^2+x^2z+x^2-y^2z-y^2-z-1". Single-letter variable names are
/// juxtaposed; longer names are joined with '*'. parse(format(p)) == p.
std::string format_polynomial(const Polynomial& p, std::span<const std::string> variables);

/// Formats a univariate polynomial in a single named variable.
std::string format_univariate(const Polynomial& p, const std::string& variable);

}  // namespace erq
