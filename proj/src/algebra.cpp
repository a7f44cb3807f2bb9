#include "erq/algebra.hpp"

#include <algorithm>

#include "erq/error.hpp"

namespace erq {

namespace {

Polynomial one_like(const Polynomial& p) { return Polynomial(p.arity(), Rational(1)); }

Polynomial x_power(std::size_t arity, std::size_t var, std::uint32_t e) {
  Monomial m(arity);
  m.set(var, e);
  return Polynomial::monomial(m, Rational(1));
}

std::size_t first_variable(const Polynomial& p, const Polynomial& q) {
  for (std::size_t v = 0; v < p.arity(); ++v) {
    if (p.depends_on(v) || q.depends_on(v)) return v;
  }
  return p.arity();
}

Polynomial gcd_nonzero(const Polynomial& p, const Polynomial& q);

// Content of p with respect to var, normalized. Requires p != 0.
Polynomial content_in(const Polynomial& p, std::size_t var) {
  auto coeffs = coefficients_in(p, var);
  Polynomial g(p.arity());
  for (const auto& c : coeffs) {
    if (c.is_zero()) continue;
    g = g.is_zero() ? normalize_primitive(c) : gcd_nonzero(g, c);
    if (g.is_constant()) return one_like(p);
  }
  return g;
}

Polynomial primitive_part_in(const Polynomial& p, std::size_t var) {
  Polynomial c = content_in(p, var);
  if (c.is_constant()) return normalize_primitive(p);
  auto q = divide_exact(p, c);
  if (!q) throw InvariantViolation("content does not divide its polynomial");
  return normalize_primitive(*q);
}

// Recursive primitive PRS on the lowest variable present. Both inputs nonzero;
// the result is normalized.
Polynomial gcd_nonzero(const Polynomial& p, const Polynomial& q) {
  if (p.is_constant() || q.is_constant()) return one_like(p);
  const std::size_t var = first_variable(p, q);
  if (!p.depends_on(var)) return gcd_nonzero(p, content_in(q, var));
  if (!q.depends_on(var)) return gcd_nonzero(content_in(p, var), q);

  // Cheap exits for the common "one divides the other" case.
  if (auto d = divide_exact(p, q)) return normalize_primitive(q);
  if (auto d = divide_exact(q, p)) return normalize_primitive(p);

  const Polynomial cp = content_in(p, var);
  const Polynomial cq = content_in(q, var);
  const Polynomial content_gcd = (cp.is_constant() || cq.is_constant()) ? one_like(p) : gcd_nonzero(cp, cq);

  Polynomial a = cp.is_constant() ? normalize_primitive(p) : *divide_exact(p, cp);
  Polynomial b = cq.is_constant() ? normalize_primitive(q) : *divide_exact(q, cq);
  if (a.degree_in(var) < b.degree_in(var)) std::swap(a, b);

  Polynomial g(p.arity());
  for (;;) {
    Polynomial r = pseudo_remainder(a, b, var);
    if (r.is_zero()) {
      g = b;
      break;
    }
    if (r.degree_in(var) == 0) {
      g = one_like(p);
      break;
    }
    a = std::move(b);
    b = primitive_part_in(r, var);
  }
  g = primitive_part_in(g, var);
  return normalize_primitive(g * content_gcd);
}

}  // namespace

Polynomial normalize_primitive(const Polynomial& p) {
  if (p.is_zero()) return p;
  Integer den_lcm = 1;
  for (const auto& t : p.terms()) {
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), t.coefficient.value().get_den_mpz_t());
  }
  Polynomial scaled = p * Rational(den_lcm);
  Integer g = 0;
  for (const auto& t : scaled.terms()) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.coefficient.value().get_num_mpz_t());
  Rational factor(Integer(1), g);
  if (scaled.leading_coefficient().sign() < 0) factor = -factor;
  return scaled * factor;
}

std::optional<Polynomial> divide_exact(const Polynomial& dividend, const Polynomial& divisor) {
  if (dividend.arity() != divisor.arity()) throw ArityError("divide_exact: arity mismatch");
  if (divisor.is_zero()) throw DomainError("division by the zero polynomial");
  Polynomial remainder = dividend;
  std::vector<Term> quotient;
  const Term& lead = divisor.leading_term();
  const Rational lead_inverse = lead.coefficient.inverse();
  while (!remainder.is_zero()) {
    const Term& t = remainder.leading_term();
    if (!lead.monomial.divides(t.monomial)) return std::nullopt;
    Term q{t.monomial / lead.monomial, t.coefficient * lead_inverse};
    remainder -= divisor * Polynomial::monomial(q.monomial, q.coefficient);
    quotient.push_back(std::move(q));
  }
  return Polynomial::from_terms(dividend.arity(), std::move(quotient));
}

std::vector<Polynomial> coefficients_in(const Polynomial& p, std::size_t var) {
  if (var >= p.arity()) throw ArityError("coefficients_in: variable index out of range");
  std::vector<std::vector<Term>> buckets(p.degree_in(var) + 1);
  for (const auto& t : p.terms()) {
    Monomial m = t.monomial;
    const std::uint32_t e = m[var];
    m.set(var, 0);
    buckets[e].push_back({m, t.coefficient});
  }
  std::vector<Polynomial> out;
  out.reserve(buckets.size());
  for (auto& b : buckets) out.push_back(Polynomial::from_terms(p.arity(), std::move(b)));
  return out;
}

Polynomial pseudo_remainder(const Polynomial& a, const Polynomial& b, std::size_t var) {
  if (b.is_zero()) throw DomainError("pseudo_remainder by zero");
  const std::uint32_t db = b.degree_in(var);
  const Polynomial lb = leading_coeff_in(b, var).coefficient;
  Polynomial r = a;
  while (!r.is_zero() && r.degree_in(var) >= db) {
    const auto lr = leading_coeff_in(r, var);
    const Polynomial next = lb * r - lr.coefficient * x_power(a.arity(), var, lr.degree - db) * b;
    r = normalize_primitive(next);
  }
  return r;
}

Polynomial multivariate_gcd(const Polynomial& p, const Polynomial& q) {
  if (p.arity() != q.arity()) throw ArityError("gcd: arity mismatch");
  if (p.is_zero()) return normalize_primitive(q);
  if (q.is_zero()) return normalize_primitive(p);
  return gcd_nonzero(p, q);
}

LeadingCoefficient leading_coeff_in(const Polynomial& p, std::size_t var) {
  if (var >= p.arity()) throw ArityError("leading_coeff_in: variable index out of range");
  const std::uint32_t d = p.degree_in(var);
  if (d == 0) return {p, 0};
  std::vector<Term> out;
  for (const auto& t : p.terms()) {
    if (t.monomial[var] != d) continue;
    Monomial m = t.monomial;
    m.set(var, 0);
    out.push_back({m, t.coefficient});
  }
  return {Polynomial::from_terms(p.arity(), std::move(out)), d};
}

Polynomial squarefree_part(const Polynomial& p) {
  if (p.arity() != 1) throw DomainError("squarefree_part expects a univariate polynomial");
  if (p.is_zero()) throw DomainError("squarefree_part of the zero polynomial");
  if (p.is_constant()) return Polynomial(1, Rational(1));
  const Polynomial g = multivariate_gcd(p, partial_derivative(p, 0));
  auto q = divide_exact(p, g);
  if (!q) throw InvariantViolation("gcd(p, p') does not divide p");
  return normalize_primitive(*q);
}

std::uint32_t distinct_root_count(const Polynomial& p) { return squarefree_part(p).degree(); }

std::vector<std::pair<Polynomial, std::uint32_t>> squarefree_decomposition(const Polynomial& p) {
  if (p.arity() != 1) throw DomainError("squarefree_decomposition expects a univariate polynomial");
  if (p.is_zero()) throw DomainError("squarefree_decomposition of the zero polynomial");
  std::vector<std::pair<Polynomial, std::uint32_t>> out;
  if (p.is_constant()) return out;
  // Yun's algorithm.
  Polynomial dp = partial_derivative(p, 0);
  Polynomial a = multivariate_gcd(p, dp);
  Polynomial b = *divide_exact(p, a);
  Polynomial c = *divide_exact(dp, a);
  Polynomial d = c - partial_derivative(b, 0);
  for (std::uint32_t i = 1; !b.is_constant(); ++i) {
    const Polynomial s = multivariate_gcd(b, d);
    if (!s.is_constant()) out.emplace_back(s, i);
    b = *divide_exact(b, s);
    c = *divide_exact(d, s);
    d = c - partial_derivative(b, 0);
  }
  return out;
}

std::optional<LinearPower> linear_power_test(const Polynomial& p) {
  if (p.arity() != 1) throw DomainError("linear_power_test expects a univariate polynomial");
  if (p.is_zero() || p.is_constant()) return std::nullopt;
  const Polynomial s = squarefree_part(p);
  if (s.degree() != 1) return std::nullopt;
  const auto c = dense_coefficients(s);
  LinearPower lp{p.leading_coefficient(), -c[0] / c[1], p.degree()};
  const std::vector<Rational> lin{-lp.root, Rational(1)};
  if (Polynomial::univariate(lin).pow(lp.exponent) * lp.scale != p) return std::nullopt;
  return lp;
}

bool is_shifted_pure_power(const Polynomial& g) {
  if (g.arity() != 1) throw DomainError("is_shifted_pure_power expects a univariate polynomial");
  if (g.degree() == 0) return false;
  if (g.degree() == 1) return true;
  return linear_power_test(partial_derivative(g, 0)).has_value();
}

Polynomial even_reduce(const Polynomial& p, std::span<const std::size_t> vars) {
  std::vector<Term> out;
  out.reserve(p.size());
  for (const auto& t : p.terms()) {
    Monomial m = t.monomial;
    for (std::size_t v : vars) {
      if (v >= p.arity()) throw ArityError("even_reduce: variable index out of range");
      if (m[v] % 2 != 0) throw NotEvenError("polynomial is not even in variable " + std::to_string(v));
      m.set(v, m[v] / 2);
    }
    out.push_back({m, t.coefficient});
  }
  return Polynomial::from_terms(p.arity(), std::move(out));
}

Polynomial even_expand(const Polynomial& p, std::span<const std::size_t> vars) {
  std::vector<Term> out;
  out.reserve(p.size());
  for (const auto& t : p.terms()) {
    Monomial m = t.monomial;
    for (std::size_t v : vars) {
      if (v >= p.arity()) throw ArityError("even_expand: variable index out of range");
      m.set(v, m[v] * 2);
    }
    out.push_back({m, t.coefficient});
  }
  return Polynomial::from_terms(p.arity(), std::move(out));
}

std::optional<std::uint32_t> is_homogeneous(const Polynomial& p) {
  if (p.is_zero()) return std::nullopt;
  const std::uint32_t d = p.terms().front().monomial.total_degree();
  for (const auto& t : p.terms()) {
    if (t.monomial.total_degree() != d) return std::nullopt;
  }
  return d;
}

}  // namespace erq
