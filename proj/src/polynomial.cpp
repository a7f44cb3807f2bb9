#include "erq/polynomial.hpp"

#include <algorithm>
#include <functional>
#include <string>

#include "erq/error.hpp"

namespace erq {

namespace {

void require_arity(std::size_t arity) {
  if (arity == 0 || arity > Monomial::kMaxArity) {
    throw ArityError("arity must be between 1 and " + std::to_string(Monomial::kMaxArity) + ", got " +
                     std::to_string(arity));
  }
}

void require_same_arity(const Polynomial& a, const Polynomial& b) {
  if (a.arity() != b.arity()) {
    throw ArityError("arity mismatch: " + std::to_string(a.arity()) + " vs " + std::to_string(b.arity()));
  }
}

bool descending(const Term& a, const Term& b) { return a.monomial > b.monomial; }

// Sorts descending and merges equal monomials; drops zero sums.
std::vector<Term> canonicalize(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(), descending);
  std::vector<Term> out;
  out.reserve(terms.size());
  for (auto& t : terms) {
    if (!out.empty() && out.back().monomial == t.monomial) {
      out.back().coefficient += t.coefficient;
    } else {
      if (!out.empty() && out.back().coefficient.is_zero()) out.pop_back();
      out.push_back(std::move(t));
    }
  }
  if (!out.empty() && out.back().coefficient.is_zero()) out.pop_back();
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------
// Monomial

Monomial::Monomial(std::size_t arity) : arity_(static_cast<std::uint8_t>(arity)) { require_arity(arity); }

Monomial::Monomial(std::initializer_list<std::uint32_t> exponents)
    : arity_(static_cast<std::uint8_t>(exponents.size())) {
  require_arity(exponents.size());
  std::copy(exponents.begin(), exponents.end(), exps_.begin());
}

std::uint32_t Monomial::total_degree() const noexcept {
  std::uint32_t d = 0;
  for (std::size_t i = 0; i < arity_; ++i) d += exps_[i];
  return d;
}

bool Monomial::is_one() const noexcept {
  return std::all_of(exps_.begin(), exps_.begin() + arity_, [](std::uint32_t e) { return e == 0; });
}

bool Monomial::divides(const Monomial& other) const noexcept {
  for (std::size_t i = 0; i < arity_; ++i) {
    if (exps_[i] > other.exps_[i]) return false;
  }
  return true;
}

Monomial Monomial::operator*(const Monomial& other) const noexcept {
  Monomial m = *this;
  for (std::size_t i = 0; i < arity_; ++i) m.exps_[i] += other.exps_[i];
  return m;
}

Monomial Monomial::operator/(const Monomial& other) const noexcept {
  Monomial m = *this;
  for (std::size_t i = 0; i < arity_; ++i) m.exps_[i] -= other.exps_[i];
  return m;
}

// ---------------------------------------------------------------------------
// Polynomial

Polynomial::Polynomial(std::size_t arity) : arity_(arity) { require_arity(arity); }

Polynomial::Polynomial(std::size_t arity, const Rational& constant) : Polynomial(arity) {
  if (!constant.is_zero()) terms_.push_back({Monomial(arity), constant});
}

Polynomial Polynomial::variable(std::size_t arity, std::size_t var) {
  Polynomial p(arity);
  if (var >= arity) throw ArityError("variable index " + std::to_string(var) + " out of range");
  Monomial m(arity);
  m.set(var, 1);
  p.terms_.push_back({m, Rational(1)});
  return p;
}

Polynomial Polynomial::monomial(const Monomial& m, const Rational& coefficient) {
  Polynomial p(m.arity());
  if (!coefficient.is_zero()) p.terms_.push_back({m, coefficient});
  return p;
}

Polynomial Polynomial::from_terms(std::size_t arity, std::vector<Term> terms) {
  Polynomial p(arity);
  for (const auto& t : terms) {
    if (t.monomial.arity() != arity) throw ArityError("term arity does not match polynomial arity");
  }
  p.terms_ = canonicalize(std::move(terms));
  return p;
}

Polynomial Polynomial::univariate(std::span<const Rational> coefficients) {
  Polynomial p(1);
  for (std::size_t k = coefficients.size(); k-- > 0;) {
    if (coefficients[k].is_zero()) continue;
    Monomial m(1);
    m.set(0, static_cast<std::uint32_t>(k));
    p.terms_.push_back({m, coefficients[k]});
  }
  return p;
}

bool Polynomial::is_constant() const noexcept {
  return terms_.empty() || (terms_.size() == 1 && terms_.front().monomial.is_one());
}

Rational Polynomial::constant_term() const {
  if (!terms_.empty() && terms_.back().monomial.is_one()) return terms_.back().coefficient;
  return Rational(0);
}

Rational Polynomial::coefficient(const Monomial& m) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                             [](const Term& t, const Monomial& key) { return t.monomial > key; });
  if (it != terms_.end() && it->monomial == m) return it->coefficient;
  return Rational(0);
}

std::uint32_t Polynomial::degree() const noexcept {
  std::uint32_t d = 0;
  for (const auto& t : terms_) d = std::max(d, t.monomial.total_degree());
  return d;
}

std::uint32_t Polynomial::degree_in(std::size_t var) const noexcept {
  if (var >= arity_) return 0;
  std::uint32_t d = 0;
  for (const auto& t : terms_) d = std::max(d, t.monomial[var]);
  return d;
}

const Term& Polynomial::leading_term() const {
  if (terms_.empty()) throw DomainError("leading term of the zero polynomial");
  return terms_.front();
}

Polynomial Polynomial::operator-() const {
  Polynomial p = *this;
  for (auto& t : p.terms_) t.coefficient = -t.coefficient;
  return p;
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  require_same_arity(*this, other);
  std::vector<Term> out;
  out.reserve(terms_.size() + other.terms_.size());
  auto a = terms_.begin();
  auto b = other.terms_.begin();
  while (a != terms_.end() || b != other.terms_.end()) {
    if (b == other.terms_.end() || (a != terms_.end() && a->monomial > b->monomial)) {
      out.push_back(std::move(*a++));
    } else if (a == terms_.end() || b->monomial > a->monomial) {
      out.push_back(*b++);
    } else {
      Rational c = a->coefficient + b->coefficient;
      if (!c.is_zero()) out.push_back({a->monomial, std::move(c)});
      ++a;
      ++b;
    }
  }
  terms_ = std::move(out);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) { return *this += -other; }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  require_same_arity(a, b);
  Polynomial p(a.arity_);
  if (a.is_zero() || b.is_zero()) return p;
  std::vector<Term> products;
  products.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& s : a.terms_) {
    for (const auto& t : b.terms_) products.push_back({s.monomial * t.monomial, s.coefficient * t.coefficient});
  }
  p.terms_ = canonicalize(std::move(products));
  return p;
}

Polynomial& Polynomial::operator*=(const Polynomial& other) { return *this = *this * other; }

Polynomial& Polynomial::operator*=(const Rational& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.coefficient *= c;
  return *this;
}

Polynomial Polynomial::pow(unsigned exponent) const {
  Polynomial result(arity_, Rational(1));
  Polynomial base = *this;
  while (exponent > 0) {
    if (exponent & 1U) result *= base;
    exponent >>= 1U;
    if (exponent > 0) base *= base;
  }
  return result;
}

// ---------------------------------------------------------------------------
// Free functions

Rational evaluate(const Polynomial& p, std::span<const Rational> point) {
  if (point.size() != p.arity()) {
    throw ArityError("point has " + std::to_string(point.size()) + " coordinates, polynomial has arity " +
                     std::to_string(p.arity()));
  }
  std::vector<std::vector<Rational>> powers(p.arity());
  for (std::size_t v = 0; v < p.arity(); ++v) {
    const std::uint32_t d = p.degree_in(v);
    powers[v].reserve(d + 1);
    powers[v].emplace_back(1);
    for (std::uint32_t k = 1; k <= d; ++k) powers[v].push_back(powers[v].back() * point[v]);
  }
  mpq_class sum = 0;
  mpq_class term;
  for (const auto& t : p.terms()) {
    term = t.coefficient.value();
    for (std::size_t v = 0; v < p.arity(); ++v) {
      if (t.monomial[v] != 0) term *= powers[v][t.monomial[v]].value();
    }
    sum += term;
  }
  return Rational(sum);
}

Polynomial substitute(const Polynomial& p, std::span<const Polynomial> images) {
  if (images.size() != p.arity()) throw ArityError("substitute needs one image per variable");
  const std::size_t out_arity = images.empty() ? 1 : images.front().arity();
  for (const auto& im : images) {
    if (im.arity() != out_arity) throw ArityError("substitution images disagree on arity");
  }
  std::vector<std::vector<Polynomial>> powers(p.arity());
  for (std::size_t v = 0; v < p.arity(); ++v) {
    const std::uint32_t d = p.degree_in(v);
    powers[v].reserve(d + 1);
    powers[v].emplace_back(out_arity, Rational(1));
    for (std::uint32_t k = 1; k <= d; ++k) powers[v].push_back(powers[v].back() * images[v]);
  }
  Polynomial result(out_arity);
  for (const auto& t : p.terms()) {
    Polynomial term(out_arity, t.coefficient);
    for (std::size_t v = 0; v < p.arity(); ++v) {
      if (t.monomial[v] != 0) term *= powers[v][t.monomial[v]];
    }
    result += term;
  }
  return result;
}

Polynomial compose(const Polynomial& p, std::size_t var, const Polynomial& s) {
  if (var >= p.arity()) throw ArityError("compose: variable index out of range");
  if (s.arity() != p.arity()) throw ArityError("compose: substituted polynomial has the wrong arity");
  std::vector<Polynomial> images;
  images.reserve(p.arity());
  for (std::size_t v = 0; v < p.arity(); ++v) {
    images.push_back(v == var ? s : Polynomial::variable(p.arity(), v));
  }
  return substitute(p, images);
}

Polynomial compose_univariate(const Polynomial& f, const Polynomial& w) {
  if (f.arity() != 1) throw ArityError("compose_univariate: outer polynomial must be univariate");
  // Horner on the dense coefficients keeps the number of products linear.
  const auto c = dense_coefficients(f);
  Polynomial result(w.arity());
  for (std::size_t k = c.size(); k-- > 0;) {
    result = result * w + Polynomial(w.arity(), c[k]);
  }
  return result;
}

Polynomial shift(const Polynomial& p, std::span<const Rational> offsets) {
  if (offsets.size() != p.arity()) throw ArityError("shift needs one offset per variable");
  std::vector<Polynomial> images;
  images.reserve(p.arity());
  for (std::size_t v = 0; v < p.arity(); ++v) {
    images.push_back(Polynomial::variable(p.arity(), v) + Polynomial(p.arity(), offsets[v]));
  }
  return substitute(p, images);
}

Polynomial diagonal(const Polynomial& p) {
  std::vector<Polynomial> images(p.arity(), Polynomial::variable(1, 0));
  return substitute(p, images);
}

Polynomial partial_derivative(const Polynomial& p, std::size_t var) {
  if (var >= p.arity()) throw ArityError("partial_derivative: variable index out of range");
  std::vector<Term> out;
  out.reserve(p.size());
  for (const auto& t : p.terms()) {
    const std::uint32_t e = t.monomial[var];
    if (e == 0) continue;
    Monomial m = t.monomial;
    m.set(var, e - 1);
    out.push_back({m, t.coefficient * Rational(e)});
  }
  return Polynomial::from_terms(p.arity(), std::move(out));
}

Polynomial embed(const Polynomial& g, std::size_t arity, std::size_t var) {
  if (g.arity() != 1) throw ArityError("embed: expected a univariate polynomial");
  if (var >= arity) throw ArityError("embed: variable index out of range");
  std::vector<Term> out;
  out.reserve(g.size());
  for (const auto& t : g.terms()) {
    Monomial m(arity);
    m.set(var, t.monomial[0]);
    out.push_back({m, t.coefficient});
  }
  return Polynomial::from_terms(arity, std::move(out));
}

Polynomial restrict_to(const Polynomial& p, std::size_t var, std::span<const Rational> point) {
  if (point.size() != p.arity()) throw ArityError("restrict_to: point length must equal arity");
  if (var >= p.arity()) throw ArityError("restrict_to: variable index out of range");
  std::vector<Polynomial> images;
  images.reserve(p.arity());
  for (std::size_t v = 0; v < p.arity(); ++v) {
    images.push_back(v == var ? Polynomial::variable(1, 0) : Polynomial(1, point[v]));
  }
  return substitute(p, images);
}

Polynomial as_univariate(const Polynomial& p, std::size_t var) {
  if (var >= p.arity()) throw ArityError("as_univariate: variable index out of range");
  std::vector<Term> out;
  out.reserve(p.size());
  for (const auto& t : p.terms()) {
    for (std::size_t v = 0; v < p.arity(); ++v) {
      if (v != var && t.monomial[v] != 0) throw DomainError("polynomial is not univariate in the requested variable");
    }
    Monomial m(1);
    m.set(0, t.monomial[var]);
    out.push_back({m, t.coefficient});
  }
  return Polynomial::from_terms(1, std::move(out));
}

std::vector<Rational> dense_coefficients(const Polynomial& univariate) {
  if (univariate.arity() != 1) throw ArityError("dense_coefficients: expected a univariate polynomial");
  std::vector<Rational> c(univariate.degree() + 1);
  for (const auto& t : univariate.terms()) c[t.monomial[0]] = t.coefficient;
  return c;
}

std::vector<std::size_t> support_variables(const Polynomial& p) {
  std::vector<std::size_t> vars;
  for (std::size_t v = 0; v < p.arity(); ++v) {
    if (p.depends_on(v)) vars.push_back(v);
  }
  return vars;
}

}  // namespace erq
