#include "erq/parser.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <set>

#include "erq/error.hpp"

namespace erq {

namespace {

bool is_ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool is_ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }
bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }

void validate_variables(std::span<const std::string> variables) {
  if (variables.empty()) throw DomainError("variable list is empty");
  if (variables.size() > Monomial::kMaxArity) {
    throw DomainError("at most " + std::to_string(Monomial::kMaxArity) + " variables are supported");
  }
  std::set<std::string> seen;
  for (const auto& v : variables) {
    if (v.empty() || !is_ident_start(v.front()) || !std::all_of(v.begin(), v.end(), is_ident_char)) {
      throw DomainError("invalid variable name '" + v + "'");
    }
    if (!seen.insert(v).second) throw DomainError("duplicate variable name '" + v + "'");
  }
}

class Parser {
 public:
  Parser(std::string_view text, std::span<const std::string> variables)
      : text_(text), vars_(variables), arity_(variables.size()) {}

  Polynomial run() {
    skip_space();
    if (at_end()) throw ParseError(1, "empty input");
    Polynomial p = expr();
    skip_space();
    if (!at_end()) {
      if (peek() == ')') fail("unmatched ')'");
      fail(std::string("unexpected '") + peek() + "'");
    }
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& message) const { throw ParseError(pos_ + 1, message); }
  [[noreturn]] void fail_at(std::size_t pos, const std::string& message) const {
    throw ParseError(pos + 1, message);
  }

  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }
  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }

  bool starts_factor() {
    skip_space();
    return !at_end() && (is_digit(peek()) || is_ident_start(peek()) || peek() == '(');
  }

  Polynomial expr() {
    skip_space();
    bool negate = false;
    if (!at_end() && (peek() == '+' || peek() == '-')) {
      negate = peek() == '-';
      ++pos_;
    }
    Polynomial acc = term();
    if (negate) acc = -acc;
    for (;;) {
      skip_space();
      if (at_end() || (peek() != '+' && peek() != '-')) break;
      const bool minus = peek() == '-';
      ++pos_;
      Polynomial rhs = term();
      if (minus) {
        acc -= rhs;
      } else {
        acc += rhs;
      }
    }
    return acc;
  }

  Polynomial term() {
    Polynomial acc = unary();
    for (;;) {
      skip_space();
      if (at_end()) break;
      if (peek() == '*') {
        ++pos_;
        acc *= unary();
      } else if (starts_factor()) {
        acc *= unary();
      } else {
        break;
      }
    }
    return acc;
  }

  Polynomial unary() {
    skip_space();
    if (!at_end() && peek() == '-') {
      ++pos_;
      return -unary();
    }
    return power();
  }

  Polynomial power() {
    Polynomial base = primary();
    for (;;) {
      skip_space();
      if (at_end() || peek() != '^') break;
      ++pos_;
      skip_space();
      if (at_end()) fail("missing exponent after '^'");
      if (peek() == '-') fail("negative exponent");
      if (!is_digit(peek())) fail("exponent must be a non-negative integer literal");
      const std::size_t start = pos_;
      Integer e = integer_literal();
      if (!at_end() && (peek() == '/' || peek() == '.')) fail_at(start, "non-integer exponent");
      if (e > 100000 || base.degree() * e > 100000) fail_at(start, "exponent too large");
      base = base.pow(static_cast<unsigned>(e.get_ui()));
    }
    return base;
  }

  Polynomial primary() {
    skip_space();
    if (at_end()) fail("unexpected end of input");
    const char c = peek();
    if (is_digit(c)) return Polynomial(arity_, number());
    if (is_ident_start(c)) return variable();
    if (c == '(') {
      const std::size_t open = pos_;
      ++pos_;
      skip_space();
      if (!at_end() && peek() == ')') fail("empty parentheses");
      Polynomial inner = expr();
      skip_space();
      if (at_end()) fail_at(open, "unbalanced '(': missing ')'");
      if (peek() != ')') fail(std::string("expected ')' but found '") + peek() + "'");
      ++pos_;
      return inner;
    }
    if (c == ')') fail("unmatched ')'");
    fail(std::string("unexpected '") + c + "'");
  }

  Integer integer_literal() {
    const std::size_t start = pos_;
    while (!at_end() && is_digit(peek())) ++pos_;
    return Integer(std::string(text_.substr(start, pos_ - start)), 10);
  }

  Rational number() {
    const std::size_t start = pos_;
    Integer num = integer_literal();
    if (!at_end() && peek() == '.') fail("decimal literals are not supported; write a fraction");
    skip_space();
    if (!at_end() && peek() == '/') {
      ++pos_;
      skip_space();
      if (at_end() || !is_digit(peek())) fail("expected an integer denominator after '/'");
      const std::size_t den_pos = pos_;
      Integer den = integer_literal();
      if (den == 0) fail_at(den_pos, "zero denominator");
      return Rational(num, den);
    }
    (void)start;
    return Rational(num);
  }

  Polynomial variable() {
    // Longest variable name that is a prefix of the remaining text; the rest of
    // an identifier run is handled by juxtaposition on the next iteration.
    const std::size_t start = pos_;
    std::size_t best = 0;
    std::size_t best_len = 0;
    for (std::size_t i = 0; i < vars_.size(); ++i) {
      const auto& name = vars_[i];
      if (name.size() > best_len && text_.substr(pos_, name.size()) == name) {
        best = i;
        best_len = name.size();
      }
    }
    if (best_len == 0) {
      std::size_t end = pos_;
      while (end < text_.size() && is_ident_char(text_[end])) ++end;
      fail_at(start, "unknown identifier '" + std::string(text_.substr(start, end - start)) + "'");
    }
    pos_ += best_len;
    return Polynomial::variable(arity_, best);
  }

  std::string_view text_;
  std::span<const std::string> vars_;
  std::size_t arity_;
  std::size_t pos_ = 0;
};

void append_monomial(std::string& out, const Monomial& m, std::span<const std::string> variables, bool juxtapose) {
  bool first = true;
  for (std::size_t v = 0; v < variables.size(); ++v) {
    if (m[v] == 0) continue;
    if (!first && !juxtapose) out += '*';
    first = false;
    out += variables[v];
    if (m[v] > 1) out += '^' + std::to_string(m[v]);
  }
}

}  // namespace

std::vector<std::string> default_variables() { return {"x", "y", "z"}; }

std::vector<std::string> parse_variable_list(std::string_view comma_separated) {
  std::vector<std::string> out;
  std::size_t start = 0;
  for (;;) {
    const std::size_t comma = comma_separated.find(',', start);
    std::string_view piece = comma_separated.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
    while (!piece.empty() && std::isspace(static_cast<unsigned char>(piece.front()))) piece.remove_prefix(1);
    while (!piece.empty() && std::isspace(static_cast<unsigned char>(piece.back()))) piece.remove_suffix(1);
    out.emplace_back(piece);
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  validate_variables(out);
  return out;
}

Polynomial parse_polynomial(const PolynomialSource& source) {
  return parse_polynomial(source.text, source.variables);
}

Polynomial parse_polynomial(std::string_view text, std::span<const std::string> variables) {
  validate_variables(variables);
  return Parser(text, variables).run();
}

std::string format_polynomial(const Polynomial& p, std::span<const std::string> variables) {
  if (variables.size() != p.arity()) throw ArityError("format_polynomial: need one name per variable");
  if (p.is_zero()) return "0";
  const bool juxtapose =
      std::all_of(variables.begin(), variables.end(), [](const std::string& v) { return v.size() == 1; });
  std::string out;
  bool first = true;
  for (const auto& t : p.terms()) {
    const int sign = t.coefficient.sign();
    if (sign < 0) {
      out += '-';
    } else if (!first) {
      out += '+';
    }
    first = false;
    const Rational magnitude = t.coefficient.abs();
    if (t.monomial.is_one()) {
      out += magnitude.to_string();
      continue;
    }
    if (!magnitude.is_one()) {
      out += magnitude.to_string();
      if (!juxtapose) out += '*';
    }
    append_monomial(out, t.monomial, variables, juxtapose);
  }
  return out;
}

std::string format_univariate(const Polynomial& p, const std::string& variable) {
  const std::vector<std::string> names{variable};
  return format_polynomial(p, names);
}

}  // namespace erq
