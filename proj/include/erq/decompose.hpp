#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "erq/polynomial.hpp"

namespace erq {

// Every result type below holds a decomposition of some input F. The
// factories check that the parts recompose to F exactly: `verify` returns
// nullopt on mismatch (how detectors reject a candidate), `make` throws
// InvariantViolation.

/// F = f(x0 + c1 x1 + c2 x2 + ...), coeffs = (1, c1, c2, ...).
class LinearFormResult {
 public:
  static std::optional<LinearFormResult> verify(const Polynomial& F, Polynomial outer, std::vector<Rational> coeffs);
  static LinearFormResult make(const Polynomial& F, Polynomial outer, std::vector<Rational> coeffs);

  const Polynomial& outer() const noexcept { return outer_; }
  const std::vector<Rational>& coeffs() const noexcept { return coeffs_; }
  std::size_t arity() const noexcept { return coeffs_.size(); }
  /// x0 + c1 x1 + ...
  Polynomial inner() const;
  Polynomial recompose() const;

 private:
  LinearFormResult(Polynomial outer, std::vector<Rational> coeffs)
      : outer_(std::move(outer)), coeffs_(std::move(coeffs)) {}
  Polynomial outer_;
  std::vector<Rational> coeffs_;
};

/// F = f(prod (x_i + shift_i)^exponent_i) with gcd(exponents) = 1.
class PowerProductResult {
 public:
  static std::optional<PowerProductResult> verify(const Polynomial& F, Polynomial outer, std::vector<Rational> shifts,
                                                  std::vector<std::uint32_t> exponents);
  static PowerProductResult make(const Polynomial& F, Polynomial outer, std::vector<Rational> shifts,
                                 std::vector<std::uint32_t> exponents);

  const Polynomial& outer() const noexcept { return outer_; }
  const std::vector<Rational>& shifts() const noexcept { return shifts_; }
  const std::vector<std::uint32_t>& exponents() const noexcept { return exponents_; }
  std::size_t arity() const noexcept { return shifts_.size(); }
  std::uint32_t exponent_sum() const noexcept;
  Polynomial inner() const;
  Polynomial recompose() const;

 private:
  PowerProductResult(Polynomial outer, std::vector<Rational> shifts, std::vector<std::uint32_t> exponents)
      : outer_(std::move(outer)), shifts_(std::move(shifts)), exponents_(std::move(exponents)) {}
  Polynomial outer_;
  std::vector<Rational> shifts_;
  std::vector<std::uint32_t> exponents_;
};

/// Facts about one inner polynomial of an additive decomposition, used for
/// the degree / distinct-root constraints of the rational classification.
struct InnerFlags {
  std::uint32_t degree = 0;
  std::uint32_t distinct_roots = 0;
  bool zero_constant = true;
  bool shifted_pure_power = false;
};

/// F = f(g0(x0) + g1(x1) + ...), every inner with zero constant term and the
/// first inner monic.
class AdditiveFormResult {
 public:
  static std::optional<AdditiveFormResult> verify(const Polynomial& F, Polynomial outer, std::vector<Polynomial> inners);
  static AdditiveFormResult make(const Polynomial& F, Polynomial outer, std::vector<Polynomial> inners);

  const Polynomial& outer() const noexcept { return outer_; }
  /// Univariate inners, inners()[i] is a polynomial in variable i.
  const std::vector<Polynomial>& inners() const noexcept { return inners_; }
  const std::vector<InnerFlags>& flags() const noexcept { return flags_; }
  std::size_t arity() const noexcept { return inners_.size(); }
  Polynomial inner_sum() const;
  Polynomial recompose() const;

 private:
  AdditiveFormResult(Polynomial outer, std::vector<Polynomial> inners);
  Polynomial outer_;
  std::vector<Polynomial> inners_;
  std::vector<InnerFlags> flags_;
};

/// F = f(g0(x0) g1(x1) ...), every inner monic.
class MultiplicativeFormResult {
 public:
  static std::optional<MultiplicativeFormResult> verify(const Polynomial& F, Polynomial outer,
                                                        std::vector<Polynomial> inners);
  static MultiplicativeFormResult make(const Polynomial& F, Polynomial outer, std::vector<Polynomial> inners);

  const Polynomial& outer() const noexcept { return outer_; }
  const std::vector<Polynomial>& inners() const noexcept { return inners_; }
  std::size_t arity() const noexcept { return inners_.size(); }
  Polynomial inner_product() const;
  Polynomial recompose() const;

 private:
  MultiplicativeFormResult(Polynomial outer, std::vector<Polynomial> inners)
      : outer_(std::move(outer)), inners_(std::move(inners)) {}
  Polynomial outer_;
  std::vector<Polynomial> inners_;
};

/// Greedy leading-term peeling: f with f(w) = P, if one exists. Both inputs
/// univariate, deg w >= 1.
std::optional<Polynomial> extract_outer_by_peeling(const Polynomial& P, const Polynomial& w);

/// Monic g of least degree (<= max_degree) with g' * p2 = c * p1 * g for some
/// constant c; returns (g, c).
std::optional<std::pair<Polynomial, Rational>> solve_log_derivative(const Polynomial& p1, const Polynomial& p2,
                                                                    std::uint32_t max_degree);

std::optional<LinearFormResult> detect_linear_form(const Polynomial& F);
std::optional<PowerProductResult> detect_power_product_form(const Polynomial& F);
std::optional<AdditiveFormResult> detect_additive_form(const Polynomial& F);
std::optional<MultiplicativeFormResult> detect_multiplicative_form(const Polynomial& F);

using Certificate = std::variant<LinearFormResult, PowerProductResult, AdditiveFormResult, MultiplicativeFormResult>;

/// "linear", "power_product", "additive" or "multiplicative".
std::string certificate_kind(const Certificate& c);
Polynomial recompose(const Certificate& c);

enum class RationalVerdict { NonExpander, ConditionalCaseII, Expander };
enum class RealVerdict { NonExpander, Expander };

std::string to_string(RationalVerdict v);
std::string to_string(RealVerdict v);

struct ClassificationVerdict {
  /// Indices (into the input's variables) of the variables the input depends
  /// on. Certificates are polynomials in exactly these variables, in order.
  std::vector<std::size_t> variables;
  RationalVerdict over_q = RationalVerdict::Expander;
  /// Present for NonExpander (linear or power-product form) and
  /// ConditionalCaseII (additive form).
  std::optional<Certificate> q_certificate;
  RealVerdict over_r = RealVerdict::Expander;
  std::optional<Certificate> r_certificate;
  std::vector<std::string> diagnostics;
};

/// Runs all four detectors and applies the rational and real classification
/// rules. `names` label variables in diagnostics (defaults to x, y, z).
ClassificationVerdict classify(const Polynomial& F, std::span<const std::string> names = {});

/// True when every inner meets the form (ii) side conditions: degree >= 3, no
/// constant term, and at least two distinct roots in every translate (the
/// inner is not c (x - r)^k + e).
bool satisfies_case_ii_constraints(const AdditiveFormResult& form);

struct HomogeneousVerdict {
  enum class Form { None, LinearPower, MonomialPower };
  Form form = Form::None;
  bool non_expander = false;
  /// F = scale * (x + c1 y + c2 z)^alpha, or scale * (x^e0 y^e1 z^e2)^alpha.
  Rational scale;
  std::vector<Rational> coeffs;
  std::vector<std::uint32_t> exponents;
  std::uint32_t alpha = 0;
};

/// Classifier for homogeneous inputs; throws DomainError otherwise.
HomogeneousVerdict classify_homogeneous(const Polynomial& F);

/// Advisory evidence: missing top-degree monomials, mixed terms, distinct
/// roots of the diagonal. Never used to decide a verdict.
std::vector<std::string> diagnostic_probes(const Polynomial& F, std::span<const std::string> names = {});

/// Keeps only the listed variables (which must cover every variable F depends
/// on) and renumbers them 0..k-1.
Polynomial compress_variables(const Polynomial& F, std::span<const std::size_t> keep);
/// Inverse of compress_variables into a polynomial of `arity`.
Polynomial expand_variables(const Polynomial& G, std::span<const std::size_t> keep, std::size_t arity);

}  // namespace erq
