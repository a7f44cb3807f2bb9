#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

#include "erq/rational.hpp"

namespace erq {

/// Exponent vector of a single term. The arity is fixed by the owning
/// polynomial; slots past the arity are always zero so whole-array
/// comparison is the lexicographic order x0 > x1 > ... .
class Monomial {
 public:
  static constexpr std::size_t kMaxArity = 8;

  Monomial() = default;
  explicit Monomial(std::size_t arity);
  Monomial(std::initializer_list<std::uint32_t> exponents);

  std::size_t arity() const noexcept { return arity_; }
  std::uint32_t operator[](std::size_t var) const noexcept { return exps_[var]; }
  void set(std::size_t var, std::uint32_t exponent) noexcept { exps_[var] = exponent; }

  std::uint32_t total_degree() const noexcept;
  bool is_one() const noexcept;
  bool divides(const Monomial& other) const noexcept;

  Monomial operator*(const Monomial& other) const noexcept;
  /// Requires divides(other) in reverse: `*this` must be a multiple of `other`.
  Monomial operator/(const Monomial& other) const noexcept;

  friend bool operator==(const Monomial&, const Monomial&) = default;
  friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) noexcept {
    return a.exps_ <=> b.exps_;
  }

 private:
  std::array<std::uint32_t, kMaxArity> exps_{};
  std::uint8_t arity_ = 0;
};

struct Term {
  Monomial monomial;
  Rational coefficient;

  friend bool operator==(const Term&, const Term&) = default;
};

/// Sparse multivariate polynomial over the rationals in canonical form:
/// terms sorted by descending lexicographic monomial order, no zero
/// coefficients, zero polynomial = no terms. Values are immutable in
/// practice; all operations return new polynomials.
class Polynomial {
 public:
  explicit Polynomial(std::size_t arity = 1);
  Polynomial(std::size_t arity, const Rational& constant);

  static Polynomial variable(std::size_t arity, std::size_t var);
  static Polynomial monomial(const Monomial& m, const Rational& coefficient);
  /// Combines like terms and drops zeros; input order is irrelevant.
  static Polynomial from_terms(std::size_t arity, std::vector<Term> terms);
  /// c[0] + c[1] t + c[2] t^2 + ... as an arity-1 polynomial.
  static Polynomial univariate(std::span<const Rational> coefficients);

  std::size_t arity() const noexcept { return arity_; }
  std::span<const Term> terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const noexcept;
  /// Constant term (zero if absent).
  Rational constant_term() const;
  Rational coefficient(const Monomial& m) const;

  /// Total degree; 0 for constants and for the zero polynomial.
  std::uint32_t degree() const noexcept;
  std::uint32_t degree_in(std::size_t var) const noexcept;
  bool depends_on(std::size_t var) const noexcept { return degree_in(var) > 0; }

  /// Requires !is_zero().
  const Term& leading_term() const;
  const Rational& leading_coefficient() const { return leading_term().coefficient; }

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(const Polynomial& other);
  Polynomial& operator*=(const Rational& c);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
  friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }

  Polynomial pow(unsigned exponent) const;

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.arity_ == b.arity_ && a.terms_ == b.terms_;
  }

 private:
  std::size_t arity_;
  std::vector<Term> terms_;
};

/// Exact value at `point` (length must equal the arity).
Rational evaluate(const Polynomial& p, std::span<const Rational> point);

/// Replaces every variable i of `p` by images[i]; all images share one arity,
/// which becomes the arity of the result.
Polynomial substitute(const Polynomial& p, std::span<const Polynomial> images);

/// Replaces variable `var` of `p` by `s` (same arity as `p`).
Polynomial compose(const Polynomial& p, std::size_t var, const Polynomial& s);

/// f(w) for univariate `f`; the result has the arity of `w`.
Polynomial compose_univariate(const Polynomial& f, const Polynomial& w);

/// p(x0 + a0, x1 + a1, ...).
Polynomial shift(const Polynomial& p, std::span<const Rational> offsets);

/// p(t, t, ..., t) as a univariate polynomial.
Polynomial diagonal(const Polynomial& p);

Polynomial partial_derivative(const Polynomial& p, std::size_t var);

/// Univariate `g(t)` re-expressed as g(x_var) in a polynomial of `arity`.
Polynomial embed(const Polynomial& g, std::size_t arity, std::size_t var);

/// Fixes every variable except `var` to the value given in `point`, returning
/// a univariate polynomial in that variable.
Polynomial restrict_to(const Polynomial& p, std::size_t var, std::span<const Rational> point);

/// Univariate view of a polynomial that depends on `var` only. Throws
/// DomainError if another variable occurs.
Polynomial as_univariate(const Polynomial& p, std::size_t var);

/// Dense coefficient vector (index = power) of a univariate polynomial.
std::vector<Rational> dense_coefficients(const Polynomial& univariate);

/// Variables `p` actually depends on, ascending.
std::vector<std::size_t> support_variables(const Polynomial& p);

}  // namespace erq
