#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "erq/polynomial.hpp"

namespace erq {

/// Scalar normalization used for gcd results: integer coefficients with
/// content 1 and a positive leading coefficient. Zero stays zero.
Polynomial normalize_primitive(const Polynomial& p);

/// Quotient when `divisor` divides `dividend` exactly, nullopt otherwise.
std::optional<Polynomial> divide_exact(const Polynomial& dividend, const Polynomial& divisor);

/// Pseudo-remainder of `a` by `b` viewed as polynomials in `var`.
Polynomial pseudo_remainder(const Polynomial& a, const Polynomial& b, std::size_t var);

/// Coefficients of `p` as a polynomial in `var` (index = power of `var`);
/// each coefficient is free of `var`.
std::vector<Polynomial> coefficients_in(const Polynomial& p, std::size_t var);

/// Greatest common divisor over Q, normalized with normalize_primitive.
/// gcd(p, 0) = normalize_primitive(p); gcd of two nonzero constants is 1.
Polynomial multivariate_gcd(const Polynomial& p, const Polynomial& q);

struct LeadingCoefficient {
  Polynomial coefficient;
  std::uint32_t degree;  // 0 when p does not depend on var
};

/// Coefficient of the highest power of `var` in `p`, as a polynomial in the
/// remaining variables (same arity as `p`).
LeadingCoefficient leading_coeff_in(const Polynomial& p, std::size_t var);

/// p / gcd(p, p') normalized; its degree is the number of distinct complex
/// roots. Throws DomainError on the zero polynomial or non-univariate input.
Polynomial squarefree_part(const Polynomial& p);
std::uint32_t distinct_root_count(const Polynomial& p);

/// Yun decomposition p = c * prod s_i^i; returns the nonconstant s_i with
/// their multiplicity i.
std::vector<std::pair<Polynomial, std::uint32_t>> squarefree_decomposition(const Polynomial& p);

struct LinearPower {
  Rational scale;
  Rational root;
  std::uint32_t exponent;

  friend bool operator==(const LinearPower&, const LinearPower&) = default;
};

/// Decides p = scale * (x - root)^exponent for univariate nonzero p with
/// exponent >= 1.
std::optional<LinearPower> linear_power_test(const Polynomial& p);

/// True for univariate g = c (x - r)^k + e with k >= 1, i.e. g becomes a pure
/// power after one translation. Decided on g' so the answer does not depend
/// on where the constant term sits.
bool is_shifted_pure_power(const Polynomial& g);

/// Replaces x^2 by a fresh variable in the same slot for each selected
/// variable. Throws NotEvenError when an odd exponent is present.
Polynomial even_reduce(const Polynomial& p, std::span<const std::size_t> vars);

/// Inverse of even_reduce: substitutes x^2 back.
Polynomial even_expand(const Polynomial& p, std::span<const std::size_t> vars);

/// Common total degree of all terms, nullopt when terms disagree or p = 0.
std::optional<std::uint32_t> is_homogeneous(const Polynomial& p);

}  // namespace erq
