#include "erq/decompose.hpp"

#include <algorithm>
#include <numeric>

#include "erq/algebra.hpp"
#include "erq/error.hpp"
#include "erq/parser.hpp"

namespace erq {

namespace {

Polynomial integrate(const Polynomial& univariate) {
  std::vector<Term> out;
  for (const auto& t : univariate.terms()) {
    Monomial m(1);
    const std::uint32_t e = t.monomial[0] + 1;
    m.set(0, e);
    out.push_back({m, t.coefficient / Rational(e)});
  }
  return Polynomial::from_terms(1, std::move(out));
}

std::vector<Rational> zeros(std::size_t n) { return std::vector<Rational>(n); }

bool depends_on_all(const Polynomial& F) { return support_variables(F).size() == F.arity(); }

// True when p involves no variable outside `allowed`.
bool only_involves(const Polynomial& p, std::initializer_list<std::size_t> allowed) {
  for (std::size_t v = 0; v < p.arity(); ++v) {
    if (p.depends_on(v) && std::find(allowed.begin(), allowed.end(), v) == allowed.end()) return false;
  }
  return true;
}

// gcd-reduced F_a / F_b as (numerator, denominator).
std::pair<Polynomial, Polynomial> reduced_ratio(const Polynomial& Fa, const Polynomial& Fb) {
  const Polynomial g = multivariate_gcd(Fa, Fb);
  auto n = divide_exact(Fa, g);
  auto d = divide_exact(Fb, g);
  if (!n || !d) throw InvariantViolation("gcd does not divide its arguments");
  return {std::move(*n), std::move(*d)};
}

// F with every variable other than x_a, x_b fixed to the smallest
// non-negative integer t at which F keeps its degrees in x_a and x_b. For
// f(g + h + ...) and f(g h ...) the ratio F_a / F_b does not involve the
// other variables, so the slice has the same reduced ratio.
std::optional<Polynomial> pair_slice(const Polynomial& F, std::size_t a, std::size_t b) {
  const std::size_t n = F.arity();
  if (n == 2) return F;
  for (long t = 0; t <= static_cast<long>(F.degree()) + 1; ++t) {
    std::vector<Polynomial> images;
    for (std::size_t v = 0; v < n; ++v) {
      images.push_back(v == a || v == b ? Polynomial::variable(n, v) : Polynomial(n, Rational(t)));
    }
    Polynomial S = substitute(F, images);
    if (S.degree_in(a) == F.degree_in(a) && S.degree_in(b) == F.degree_in(b)) return S;
  }
  return std::nullopt;
}

// Splits N(x_a, x_b) = n_a(x_a) * n_b(x_b) when its coefficient matrix has
// rank one. Returns univariate factors.
std::optional<std::pair<Polynomial, Polynomial>> split_rank_one(const Polynomial& N, std::size_t a, std::size_t b) {
  if (!only_involves(N, {a, b}) || N.is_zero()) return std::nullopt;
  const Term& pivot = N.leading_term();
  std::vector<Term> col;
  std::vector<Term> row;
  for (const auto& t : N.terms()) {
    if (t.monomial[b] == pivot.monomial[b]) {
      Monomial m(1);
      m.set(0, t.monomial[a]);
      col.push_back({m, t.coefficient});
    }
    if (t.monomial[a] == pivot.monomial[a]) {
      Monomial m(1);
      m.set(0, t.monomial[b]);
      row.push_back({m, t.coefficient / pivot.coefficient});
    }
  }
  Polynomial na = Polynomial::from_terms(1, std::move(col));
  Polynomial nb = Polynomial::from_terms(1, std::move(row));
  if (embed(na, N.arity(), a) * embed(nb, N.arity(), b) != N) return std::nullopt;
  return std::make_pair(std::move(na), std::move(nb));
}

// Dense Gaussian elimination over Q. Solves A x = rhs; free variables are set
// to zero. nullopt when inconsistent.
std::optional<std::vector<Rational>> solve_linear(std::vector<std::vector<Rational>> A, std::vector<Rational> rhs) {
  const std::size_t rows = A.size();
  const std::size_t cols = rows == 0 ? 0 : A.front().size();
  std::vector<std::size_t> pivot_col;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && A[p][c].is_zero()) ++p;
    if (p == rows) continue;
    std::swap(A[p], A[r]);
    std::swap(rhs[p], rhs[r]);
    const Rational inv = A[r][c].inverse();
    for (std::size_t k = c; k < cols; ++k) A[r][k] *= inv;
    rhs[r] *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || A[i][c].is_zero()) continue;
      const Rational f = A[i][c];
      for (std::size_t k = c; k < cols; ++k) A[i][k] -= f * A[r][k];
      rhs[i] -= f * rhs[r];
    }
    pivot_col.push_back(c);
    ++r;
  }
  for (std::size_t i = r; i < rows; ++i) {
    if (!rhs[i].is_zero()) return std::nullopt;
  }
  std::vector<Rational> x(cols);
  for (std::size_t i = 0; i < r; ++i) x[pivot_col[i]] = rhs[i];
  return x;
}

std::vector<Rational> dense_of(const Polynomial& p, std::size_t length) {
  std::vector<Rational> c(length);
  for (const auto& t : p.terms()) c[t.monomial[0]] = t.coefficient;
  return c;
}

Polynomial t_power(std::uint32_t k) {
  Monomial m(1);
  m.set(0, k);
  return Polynomial::monomial(m, Rational(1));
}

Polynomial linear_inner(std::span<const Rational> coeffs) {
  Polynomial w(coeffs.size());
  for (std::size_t v = 0; v < coeffs.size(); ++v) w += Polynomial::variable(coeffs.size(), v) * coeffs[v];
  return w;
}

std::string name_of(std::span<const std::string> names, std::size_t v) {
  if (v < names.size()) return names[v];
  static const char* const kDefault[] = {"x", "y", "z"};
  return v < 3 ? kDefault[v] : "x" + std::to_string(v);
}

std::vector<std::string> names_for(std::span<const std::string> names, std::size_t arity) {
  std::vector<std::string> out;
  for (std::size_t v = 0; v < arity; ++v) out.push_back(name_of(names, v));
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------
// Result types

std::optional<LinearFormResult> LinearFormResult::verify(const Polynomial& F, Polynomial outer,
                                                         std::vector<Rational> coeffs) {
  if (coeffs.size() != F.arity() || outer.arity() != 1) return std::nullopt;
  LinearFormResult r(std::move(outer), std::move(coeffs));
  if (r.coeffs_.front() != Rational(1) || r.recompose() != F) return std::nullopt;
  return r;
}

LinearFormResult LinearFormResult::make(const Polynomial& F, Polynomial outer, std::vector<Rational> coeffs) {
  auto r = verify(F, std::move(outer), std::move(coeffs));
  if (!r) throw InvariantViolation("linear form does not recompose to its input");
  return *r;
}

Polynomial LinearFormResult::inner() const { return linear_inner(coeffs_); }
Polynomial LinearFormResult::recompose() const { return compose_univariate(outer_, inner()); }

std::optional<PowerProductResult> PowerProductResult::verify(const Polynomial& F, Polynomial outer,
                                                             std::vector<Rational> shifts,
                                                             std::vector<std::uint32_t> exponents) {
  if (shifts.size() != F.arity() || exponents.size() != F.arity() || outer.arity() != 1) return std::nullopt;
  std::uint32_t g = 0;
  for (auto e : exponents) {
    if (e == 0) return std::nullopt;
    g = std::gcd(g, e);
  }
  if (g != 1) return std::nullopt;
  PowerProductResult r(std::move(outer), std::move(shifts), std::move(exponents));
  if (r.recompose() != F) return std::nullopt;
  return r;
}

PowerProductResult PowerProductResult::make(const Polynomial& F, Polynomial outer, std::vector<Rational> shifts,
                                            std::vector<std::uint32_t> exponents) {
  auto r = verify(F, std::move(outer), std::move(shifts), std::move(exponents));
  if (!r) throw InvariantViolation("power-product form does not recompose to its input");
  return *r;
}

std::uint32_t PowerProductResult::exponent_sum() const noexcept {
  return std::accumulate(exponents_.begin(), exponents_.end(), std::uint32_t{0});
}

Polynomial PowerProductResult::inner() const {
  const std::size_t n = shifts_.size();
  Polynomial w(n, Rational(1));
  for (std::size_t v = 0; v < n; ++v) {
    w *= (Polynomial::variable(n, v) + Polynomial(n, shifts_[v])).pow(exponents_[v]);
  }
  return w;
}

Polynomial PowerProductResult::recompose() const { return compose_univariate(outer_, inner()); }

AdditiveFormResult::AdditiveFormResult(Polynomial outer, std::vector<Polynomial> inners)
    : outer_(std::move(outer)), inners_(std::move(inners)) {
  flags_.reserve(inners_.size());
  for (const auto& g : inners_) {
    InnerFlags f;
    f.degree = g.degree();
    f.distinct_roots = g.is_zero() ? 0 : distinct_root_count(g);
    f.zero_constant = g.constant_term().is_zero();
    f.shifted_pure_power = is_shifted_pure_power(g);
    flags_.push_back(f);
  }
}

std::optional<AdditiveFormResult> AdditiveFormResult::verify(const Polynomial& F, Polynomial outer,
                                                             std::vector<Polynomial> inners) {
  if (inners.size() != F.arity() || outer.arity() != 1) return std::nullopt;
  for (const auto& g : inners) {
    if (g.arity() != 1 || g.is_constant() || !g.constant_term().is_zero()) return std::nullopt;
  }
  if (!inners.front().leading_coefficient().is_one()) return std::nullopt;
  AdditiveFormResult r(std::move(outer), std::move(inners));
  if (r.recompose() != F) return std::nullopt;
  return r;
}

AdditiveFormResult AdditiveFormResult::make(const Polynomial& F, Polynomial outer, std::vector<Polynomial> inners) {
  auto r = verify(F, std::move(outer), std::move(inners));
  if (!r) throw InvariantViolation("additive form does not recompose to its input");
  return *r;
}

Polynomial AdditiveFormResult::inner_sum() const {
  const std::size_t n = inners_.size();
  Polynomial w(n);
  for (std::size_t v = 0; v < n; ++v) w += embed(inners_[v], n, v);
  return w;
}

Polynomial AdditiveFormResult::recompose() const { return compose_univariate(outer_, inner_sum()); }

std::optional<MultiplicativeFormResult> MultiplicativeFormResult::verify(const Polynomial& F, Polynomial outer,
                                                                         std::vector<Polynomial> inners) {
  if (inners.size() != F.arity() || outer.arity() != 1) return std::nullopt;
  for (const auto& g : inners) {
    if (g.arity() != 1 || g.is_constant() || !g.leading_coefficient().is_one()) return std::nullopt;
  }
  MultiplicativeFormResult r(std::move(outer), std::move(inners));
  if (r.recompose() != F) return std::nullopt;
  return r;
}

MultiplicativeFormResult MultiplicativeFormResult::make(const Polynomial& F, Polynomial outer,
                                                        std::vector<Polynomial> inners) {
  auto r = verify(F, std::move(outer), std::move(inners));
  if (!r) throw InvariantViolation("multiplicative form does not recompose to its input");
  return *r;
}

Polynomial MultiplicativeFormResult::inner_product() const {
  const std::size_t n = inners_.size();
  Polynomial w(n, Rational(1));
  for (std::size_t v = 0; v < n; ++v) w *= embed(inners_[v], n, v);
  return w;
}

Polynomial MultiplicativeFormResult::recompose() const { return compose_univariate(outer_, inner_product()); }

// ---------------------------------------------------------------------------
// Building blocks

std::optional<Polynomial> extract_outer_by_peeling(const Polynomial& P, const Polynomial& w) {
  if (P.arity() != 1 || w.arity() != 1) throw DomainError("peeling expects univariate polynomials");
  const std::uint32_t dw = w.degree();
  if (dw == 0) throw DomainError("peeling needs deg w >= 1");
  if (P.degree() % dw != 0) return std::nullopt;
  std::vector<Polynomial> powers{Polynomial(1, Rational(1))};
  std::vector<Rational> f(P.degree() / dw + 1);
  Polynomial rem = P;
  while (!rem.is_zero() && rem.degree() >= 1) {
    const std::uint32_t dr = rem.degree();
    if (dr % dw != 0) return std::nullopt;
    const std::uint32_t k = dr / dw;
    while (powers.size() <= k) powers.push_back(powers.back() * w);
    const Rational c = rem.leading_coefficient() / powers[k].leading_coefficient();
    f[k] = c;
    rem -= powers[k] * c;
  }
  f[0] = rem.constant_term();
  return Polynomial::univariate(f);
}

std::optional<std::pair<Polynomial, Rational>> solve_log_derivative(const Polynomial& p1, const Polynomial& p2,
                                                                    std::uint32_t max_degree) {
  if (p1.is_zero() || p2.is_zero()) return std::nullopt;
  if (p2.degree() != p1.degree() + 1) return std::nullopt;
  const Polynomial x = t_power(1);
  for (std::uint32_t d = 1; d <= max_degree; ++d) {
    const Rational c = Rational(d) * p2.leading_coefficient() / p1.leading_coefficient();
    // g = x^d + sum_{i<d} g_i x^i; residual g' p2 - c p1 g is linear in g_i.
    auto column = [&](std::uint32_t i) {
      Polynomial term = t_power(i) * p1 * (-c);
      if (i > 0) term += t_power(i - 1) * p2 * Rational(i);
      return term;
    };
    const std::size_t len = d + p2.degree() + 1;
    std::vector<std::vector<Rational>> A(len, std::vector<Rational>(d));
    for (std::uint32_t i = 0; i < d; ++i) {
      const auto col = dense_of(column(i), len);
      for (std::size_t r = 0; r < len; ++r) A[r][i] = col[r];
    }
    auto rhs = dense_of(column(d), len);
    for (auto& v : rhs) v = -v;
    auto sol = solve_linear(std::move(A), std::move(rhs));
    if (!sol) continue;
    std::vector<Rational> coeffs = *sol;
    coeffs.emplace_back(1);
    Polynomial g = Polynomial::univariate(coeffs);
    if (partial_derivative(g, 0) * p2 == p1 * g * c) return std::make_pair(std::move(g), c);
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Detectors

std::optional<LinearFormResult> detect_linear_form(const Polynomial& F) {
  if (F.is_constant()) throw DomainError("detect_linear_form: input is constant");
  const std::size_t n = F.arity();
  const Polynomial Fx = partial_derivative(F, 0);
  std::vector<Rational> coeffs{Rational(1)};
  for (std::size_t v = 1; v < n; ++v) {
    const Polynomial Fv = partial_derivative(F, v);
    if (Fv.is_zero()) {
      coeffs.emplace_back(0);
      continue;
    }
    if (Fx.is_zero()) return std::nullopt;
    const Term& lead = Fx.leading_term();
    const Rational a = Fv.coefficient(lead.monomial) / lead.coefficient;
    if (Fx * a != Fv) return std::nullopt;
    coeffs.push_back(a);
  }
  Polynomial f = restrict_to(F, 0, zeros(n));
  return LinearFormResult::verify(F, std::move(f), std::move(coeffs));
}

std::optional<PowerProductResult> detect_power_product_form(const Polynomial& F) {
  if (F.is_constant()) throw DomainError("detect_power_product_form: input is constant");
  const std::size_t n = F.arity();
  if (n < 2 || !depends_on_all(F)) return std::nullopt;

  std::vector<Rational> shifts(n);
  for (std::size_t w = 0; w < n; ++w) {
    const std::size_t v = (w == 0) ? 1 : 0;
    Polynomial lc = leading_coeff_in(F, v).coefficient;
    for (std::size_t u = 0; u < n; ++u) {
      if (u != v && u != w) lc = leading_coeff_in(lc, u).coefficient;
    }
    const auto lp = linear_power_test(as_univariate(lc, w));
    if (!lp) return std::nullopt;
    shifts[w] = -lp->root;
  }

  std::vector<Rational> back(n);
  for (std::size_t v = 0; v < n; ++v) back[v] = -shifts[v];
  const Polynomial G = shift(F, back);

  // Nonconstant support must sit on one ray k * direction.
  std::vector<std::uint32_t> direction;
  std::vector<Rational> f_coeffs(1);
  for (const auto& t : G.terms()) {
    if (t.monomial.is_one()) {
      f_coeffs[0] = t.coefficient;
      continue;
    }
    std::uint32_t g = 0;
    for (std::size_t v = 0; v < n; ++v) g = std::gcd(g, t.monomial[v]);
    std::vector<std::uint32_t> dir(n);
    for (std::size_t v = 0; v < n; ++v) dir[v] = t.monomial[v] / g;
    if (direction.empty()) {
      direction = dir;
    } else if (dir != direction) {
      return std::nullopt;
    }
    if (std::find(dir.begin(), dir.end(), 0U) != dir.end()) return std::nullopt;
    if (f_coeffs.size() <= g) f_coeffs.resize(g + 1);
    f_coeffs[g] = t.coefficient;
  }
  if (direction.empty()) return std::nullopt;
  return PowerProductResult::verify(F, Polynomial::univariate(f_coeffs), std::move(shifts), std::move(direction));
}

std::optional<AdditiveFormResult> detect_additive_form(const Polynomial& F) {
  if (F.is_constant()) throw DomainError("detect_additive_form: input is constant");
  const std::size_t n = F.arity();
  if (n < 2 || !depends_on_all(F)) return std::nullopt;

  std::vector<Polynomial> inners;
  Polynomial g_prime(1);
  for (std::size_t v = 1; v < n; ++v) {
    const auto S = pair_slice(F, 0, v);
    if (!S) return std::nullopt;
    auto [N, D] = reduced_ratio(partial_derivative(*S, 0), partial_derivative(*S, v));
    if (!only_involves(N, {0}) || !only_involves(D, {v})) return std::nullopt;
    const Polynomial num = as_univariate(N, 0);
    const Polynomial den = as_univariate(D, v);
    if (v == 1) {
      const Polynomial G = integrate(num);
      const Rational mu = G.leading_coefficient();
      inners.push_back(G * mu.inverse());
      g_prime = num * mu.inverse();
    }
    const Rational lambda = num.leading_coefficient() / g_prime.leading_coefficient();
    if (g_prime * lambda != num) return std::nullopt;
    inners.push_back(integrate(den * lambda.inverse()));
  }

  // Inners vanish at 0, so F(x, 0, ..., 0) = f(g(x)).
  auto f = extract_outer_by_peeling(restrict_to(F, 0, zeros(n)), inners.front());
  if (!f) return std::nullopt;
  return AdditiveFormResult::verify(F, std::move(*f), std::move(inners));
}

std::optional<MultiplicativeFormResult> detect_multiplicative_form(const Polynomial& F) {
  if (F.is_constant()) throw DomainError("detect_multiplicative_form: input is constant");
  const std::size_t n = F.arity();
  if (n < 2 || !depends_on_all(F)) return std::nullopt;

  const std::uint32_t max_degree = std::max<std::uint32_t>(F.degree(), 1);
  std::optional<Polynomial> g0;
  std::vector<Polynomial> minimal_inners;
  std::vector<Rational> ratios;  // c_g / c_v per pair
  for (std::size_t v = 1; v < n; ++v) {
    const auto S = pair_slice(F, 0, v);
    if (!S) return std::nullopt;
    auto [N, D] = reduced_ratio(partial_derivative(*S, 0), partial_derivative(*S, v));
    auto ns = split_rank_one(N, 0, v);
    auto ds = split_rank_one(D, 0, v);
    if (!ns || !ds) return std::nullopt;
    // F_0 / F_v = (g'/g) / (h'/h): g'/g ~ n_0/d_0 and h'/h ~ d_v/n_v.
    auto g_sol = solve_log_derivative(ns->first, ds->first, max_degree);
    auto h_sol = solve_log_derivative(ds->second, ns->second, max_degree);
    if (!g_sol || !h_sol) return std::nullopt;
    if (!g0) {
      g0 = g_sol->first;
    } else if (*g0 != g_sol->first) {
      return std::nullopt;
    }
    const Rational r = g_sol->second / h_sol->second;
    if (r.sign() <= 0) return std::nullopt;
    minimal_inners.push_back(h_sol->first);
    ratios.push_back(r);
  }

  // g = g0^p, h_v = h0_v^(p r_v) with p the least making every power integral.
  Integer p = 1;
  for (const auto& r : ratios) {
    mpz_lcm(p.get_mpz_t(), p.get_mpz_t(), r.value().get_den_mpz_t());
  }
  auto small = [&](const Rational& q) -> std::optional<unsigned> {
    if (!q.is_integer() || q.sign() <= 0 || q > Rational(static_cast<long>(max_degree))) return std::nullopt;
    return static_cast<unsigned>(q.numerator().get_ui());
  };
  const auto pe = small(Rational(p));
  if (!pe) return std::nullopt;
  std::vector<Polynomial> inners{g0->pow(*pe)};
  for (std::size_t i = 0; i < ratios.size(); ++i) {
    const auto q = small(Rational(p) * ratios[i]);
    if (!q) return std::nullopt;
    inners.push_back(minimal_inners[i].pow(*q));
  }

  // Base point: smallest non-negative integers where the other inners are nonzero.
  std::vector<Rational> point(n);
  Rational scale(1);
  for (std::size_t v = 1; v < n; ++v) {
    long t = 0;
    while (evaluate(inners[v], std::vector<Rational>{Rational(t)}).is_zero()) ++t;
    point[v] = Rational(t);
    scale *= evaluate(inners[v], std::vector<Rational>{Rational(t)});
  }
  auto f = extract_outer_by_peeling(restrict_to(F, 0, point), inners.front() * scale);
  if (!f) return std::nullopt;
  return MultiplicativeFormResult::verify(F, std::move(*f), std::move(inners));
}

// ---------------------------------------------------------------------------
// Classification

std::string certificate_kind(const Certificate& c) {
  switch (c.index()) {
    case 0:
      return "linear";
    case 1:
      return "power_product";
    case 2:
      return "additive";
    default:
      return "multiplicative";
  }
}

Polynomial recompose(const Certificate& c) {
  return std::visit([](const auto& r) { return r.recompose(); }, c);
}

std::string to_string(RationalVerdict v) {
  switch (v) {
    case RationalVerdict::NonExpander:
      return "NonExpander";
    case RationalVerdict::ConditionalCaseII:
      return "ConditionalCaseII";
    default:
      return "Expander";
  }
}

std::string to_string(RealVerdict v) { return v == RealVerdict::NonExpander ? "NonExpander" : "Expander"; }

bool satisfies_case_ii_constraints(const AdditiveFormResult& form) {
  return std::all_of(form.flags().begin(), form.flags().end(), [](const InnerFlags& f) {
    return f.degree >= 3 && f.zero_constant && f.distinct_roots >= 2 && !f.shifted_pure_power;
  });
}

Polynomial compress_variables(const Polynomial& F, std::span<const std::size_t> keep) {
  std::vector<Term> out;
  out.reserve(F.size());
  for (const auto& t : F.terms()) {
    Monomial m(keep.size());
    std::uint32_t kept = 0;
    for (std::size_t i = 0; i < keep.size(); ++i) {
      m.set(i, t.monomial[keep[i]]);
      kept += t.monomial[keep[i]];
    }
    if (kept != t.monomial.total_degree()) throw DomainError("compress_variables would drop a used variable");
    out.push_back({m, t.coefficient});
  }
  return Polynomial::from_terms(keep.size(), std::move(out));
}

Polynomial expand_variables(const Polynomial& G, std::span<const std::size_t> keep, std::size_t arity) {
  std::vector<Term> out;
  out.reserve(G.size());
  for (const auto& t : G.terms()) {
    Monomial m(arity);
    for (std::size_t i = 0; i < keep.size(); ++i) m.set(keep[i], t.monomial[i]);
    out.push_back({m, t.coefficient});
  }
  return Polynomial::from_terms(arity, std::move(out));
}

ClassificationVerdict classify(const Polynomial& F, std::span<const std::string> names) {
  if (F.arity() != 2 && F.arity() != 3) {
    throw ArityError("classify expects 2 or 3 variables, got " + std::to_string(F.arity()));
  }
  if (F.is_constant()) throw DomainError("classify: input is constant");

  ClassificationVerdict verdict;
  verdict.variables = support_variables(F);
  const Polynomial G = compress_variables(F, verdict.variables);
  std::vector<std::string> sub_names;
  for (std::size_t v : verdict.variables) sub_names.push_back(name_of(names, v));

  for (std::size_t v = 0; v < F.arity(); ++v) {
    if (!F.depends_on(v)) verdict.diagnostics.push_back("input does not depend on " + name_of(names, v));
  }

  const auto linear = detect_linear_form(G);
  std::optional<PowerProductResult> power;
  std::optional<AdditiveFormResult> additive;
  std::optional<MultiplicativeFormResult> multiplicative;
  if (G.arity() >= 2) {
    power = detect_power_product_form(G);
    additive = detect_additive_form(G);
    multiplicative = detect_multiplicative_form(G);
  }

  if (linear) {
    verdict.over_q = RationalVerdict::NonExpander;
    verdict.q_certificate = *linear;
  } else if (power) {
    verdict.over_q = RationalVerdict::NonExpander;
    verdict.q_certificate = *power;
  } else if (additive && satisfies_case_ii_constraints(*additive)) {
    verdict.over_q = RationalVerdict::ConditionalCaseII;
    verdict.q_certificate = *additive;
    verdict.diagnostics.push_back(
        "additive form (ii) with admissible inners; the rational verdict is open (conjectured impossible)");
  } else {
    verdict.over_q = RationalVerdict::Expander;
    if (G.arity() >= 2) verdict.diagnostics.push_back("no linear-argument form (i) or power-product form (iii)");
  }

  if (additive) {
    for (std::size_t i = 0; i < additive->arity(); ++i) {
      const auto& flag = additive->flags()[i];
      const std::string label = "inner " + format_univariate(additive->inners()[i], sub_names[i]);
      std::vector<std::string> issues;
      if (flag.degree < 3) issues.push_back("degree " + std::to_string(flag.degree) + " < 3");
      if (flag.distinct_roots < 2) {
        issues.push_back(std::to_string(flag.distinct_roots) +
                         " distinct root, violating \"at least two distinct roots\"");
      } else if (flag.shifted_pure_power) {
        issues.push_back("a translate of a pure power (one distinct root after shifting)");
      }
      if (!issues.empty()) {
        std::string msg = label + ": ";
        for (std::size_t k = 0; k < issues.size(); ++k) msg += (k ? "; " : "") + issues[k];
        verdict.diagnostics.push_back(msg);
      }
    }
  }

  if (additive) {
    verdict.over_r = RealVerdict::NonExpander;
    verdict.r_certificate = *additive;
  } else if (multiplicative) {
    verdict.over_r = RealVerdict::NonExpander;
    verdict.r_certificate = *multiplicative;
  } else if (linear) {
    verdict.over_r = RealVerdict::NonExpander;
    verdict.r_certificate = *linear;
  } else if (power) {
    verdict.over_r = RealVerdict::NonExpander;
    verdict.r_certificate = *power;
  }

  for (auto& d : diagnostic_probes(F, names)) verdict.diagnostics.push_back(std::move(d));
  return verdict;
}

HomogeneousVerdict classify_homogeneous(const Polynomial& F) {
  const auto degree = is_homogeneous(F);
  if (!degree || *degree == 0) throw DomainError("classify_homogeneous: input is not a nonconstant homogeneous polynomial");
  HomogeneousVerdict out;
  if (F.depends_on(0)) {
    if (auto lin = detect_linear_form(F)) {
      // Homogeneity forces f = scale * t^alpha.
      out.form = HomogeneousVerdict::Form::LinearPower;
      out.non_expander = true;
      out.alpha = *degree;
      out.scale = lin->outer().leading_coefficient();
      out.coeffs.assign(lin->coeffs().begin() + 1, lin->coeffs().end());
      return out;
    }
  }
  if (auto pp = detect_power_product_form(F)) {
    const bool zero_shift = std::all_of(pp->shifts().begin(), pp->shifts().end(),
                                        [](const Rational& s) { return s.is_zero(); });
    if (zero_shift && pp->outer().size() == 1) {
      out.form = HomogeneousVerdict::Form::MonomialPower;
      out.non_expander = true;
      out.scale = pp->outer().leading_coefficient();
      out.alpha = pp->outer().degree();
      out.exponents = pp->exponents();
      return out;
    }
  }
  return out;
}

std::vector<std::string> diagnostic_probes(const Polynomial& F, std::span<const std::string> names) {
  std::vector<std::string> out;
  if (F.is_zero()) return out;
  const auto all_names = names_for(names, F.arity());
  const auto vars = support_variables(F);

  // (a) top-degree monomials a form-(i) polynomial with nonzero coefficients would carry.
  const std::uint32_t d = F.degree();
  if (d > 0 && vars.size() >= 2) {
    std::vector<Monomial> expected;
    Monomial m(F.arity());
    // Enumerate exponent splits of d over the support variables in lex-descending order.
    auto rec = [&](auto&& self, std::size_t i, std::uint32_t left) -> void {
      if (i + 1 == vars.size()) {
        m.set(vars[i], left);
        expected.push_back(m);
        return;
      }
      for (std::uint32_t e = left + 1; e-- > 0;) {
        m.set(vars[i], e);
        self(self, i + 1, left - e);
      }
    };
    rec(rec, 0, d);
    std::size_t missing = 0;
    std::optional<Monomial> first_missing;
    for (const auto& mono : expected) {
      if (F.coefficient(mono).is_zero()) {
        ++missing;
        if (!first_missing) first_missing = mono;
      }
    }
    if (first_missing) {
      out.push_back("degree-" + std::to_string(d) + " monomial " +
                    format_polynomial(Polynomial::monomial(*first_missing, Rational(1)), all_names) + " absent (" +
                    std::to_string(missing) + " of " + std::to_string(expected.size()) +
                    " top-degree monomials missing)");
    } else {
      out.push_back("all " + std::to_string(expected.size()) + " degree-" + std::to_string(d) +
                    " monomials present");
    }
  }

  // (b) mixed terms.
  const Term* mixed = nullptr;
  for (const auto& t : F.terms()) {
    std::size_t used = 0;
    for (std::size_t v = 0; v < F.arity(); ++v) used += t.monomial[v] != 0;
    if (used >= 2) {
      mixed = &t;
      break;
    }
  }
  if (mixed) {
    out.push_back("mixed terms present (e.g. " +
                  format_polynomial(Polynomial::monomial(mixed->monomial, Rational(1)), all_names) + ")");
  } else {
    out.push_back("no mixed terms");
  }

  // (c) diagonal.
  const Polynomial diag = diagonal(F);
  if (diag.is_constant()) {
    out.push_back("diagonal is constant");
  } else {
    out.push_back("diagonal has " + std::to_string(distinct_root_count(diag)) + " distinct roots");
  }
  return out;
}

}  // namespace erq
