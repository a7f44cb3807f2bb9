#include "erq/diophantine.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <unordered_map>
#include <unordered_set>

#include "erq/algebra.hpp"
#include "erq/error.hpp"

namespace erq {

namespace {

std::optional<Integer> integer_root(const Integer& n, unsigned w) {
  if (n < 0) return std::nullopt;
  Integer r;
  if (mpz_root(r.get_mpz_t(), n.get_mpz_t(), w) == 0) return std::nullopt;
  return r;
}

// Dense Horner evaluation for univariate polynomials.
class UnivariateEvaluator {
 public:
  explicit UnivariateEvaluator(const Polynomial& g) {
    if (g.arity() != 1) throw DomainError("expected a univariate polynomial");
    for (const auto& c : dense_coefficients(g)) coeffs_.push_back(c.value());
  }
  Rational operator()(const Rational& x) const {
    if (coeffs_.empty()) return Rational(0);
    mpq_class acc = coeffs_.back();
    for (std::size_t i = coeffs_.size() - 1; i-- > 0;) acc = acc * x.value() + coeffs_[i];
    return Rational(acc);
  }

 private:
  std::vector<mpq_class> coeffs_;
};

bool is_prime(unsigned long n) {
  if (n < 2) return false;
  for (unsigned long d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

// Trial division of |n| up to the bound; primes appended in increasing order.
void trial_factor(Integer n, std::map<unsigned long, long>& out, long sign_of_exponent) {
  n = abs(n);
  for (unsigned long p = 2; n > 1 && p <= MultGroupSpec::kTrialBound; p += (p == 2 ? 1 : 2)) {
    if (Integer(p) * p > n) {
      if (!n.fits_ulong_p() || n.get_ui() > MultGroupSpec::kTrialBound) break;
      out[n.get_ui()] += sign_of_exponent;
      return;
    }
    while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
      mpz_divexact_ui(n.get_mpz_t(), n.get_mpz_t(), p);
      out[p] += sign_of_exponent;
    }
  }
  if (n > 1) throw DomainError("generator has a prime factor above " + std::to_string(MultGroupSpec::kTrialBound));
}

// Solves A x = b over the integers (A is m x n). Column-style reduction with
// a unimodular transform U so that A U is lower echelon; free coordinates 0.
std::optional<std::vector<Integer>> solve_integer_system(std::vector<std::vector<Integer>> A,
                                                         const std::vector<Integer>& b) {
  const std::size_t m = A.size();
  const std::size_t n = m == 0 ? 0 : A[0].size();
  std::vector<std::vector<Integer>> U(n, std::vector<Integer>(n, 0));
  for (std::size_t i = 0; i < n; ++i) U[i][i] = 1;

  // column op: (col_i, col_j) <- (a col_i + b col_j, c col_i + d col_j)
  auto combine = [&](std::size_t i, std::size_t j, const Integer& a, const Integer& bb, const Integer& c,
                     const Integer& d) {
    auto apply = [&](std::vector<std::vector<Integer>>& M) {
      for (auto& row : M) {
        const Integer x = row[i], y = row[j];
        row[i] = a * x + bb * y;
        row[j] = c * x + d * y;
      }
    };
    apply(A);
    apply(U);
  };

  std::vector<std::pair<std::size_t, std::size_t>> pivots;  // (row, col)
  std::size_t col = 0;
  for (std::size_t r = 0; r < m && col < n; ++r) {
    for (std::size_t j = col + 1; j < n; ++j) {
      if (A[r][j] == 0) continue;
      const Integer x = A[r][col], y = A[r][j];
      Integer g, s, t;
      mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t());
      // [s, -y/g; t, x/g] has determinant 1.
      combine(col, j, s, t, Integer(-y / g), Integer(x / g));
    }
    if (A[r][col] != 0) {
      pivots.emplace_back(r, col);
      ++col;
    }
  }

  std::vector<Integer> y(n, 0);
  std::size_t next_pivot = 0;
  for (std::size_t r = 0; r < m; ++r) {
    Integer acc = 0;
    for (std::size_t c = 0; c < n; ++c) acc += A[r][c] * y[c];
    const Integer rest = b[r] - acc;
    if (next_pivot < pivots.size() && pivots[next_pivot].first == r) {
      const Integer& p = A[r][pivots[next_pivot].second];
      if (!mpz_divisible_p(rest.get_mpz_t(), p.get_mpz_t())) return std::nullopt;
      y[pivots[next_pivot].second] = rest / p;
      ++next_pivot;
    } else if (rest != 0) {
      return std::nullopt;
    }
  }
  std::vector<Integer> x(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) x[i] += U[i][j] * y[j];
  }
  return x;
}

struct RationalHash {
  std::size_t operator()(const Rational& r) const noexcept { return r.hash(); }
};

Progression longest_arithmetic(const std::vector<Rational>& v) {
  Progression best;
  if (v.empty()) return best;
  best.length = 1;
  best.witness = {v.front()};
  const std::unordered_set<Rational, RationalHash> members(v.begin(), v.end());
  for (std::size_t i = 0; i < v.size(); ++i) {
    for (std::size_t j = i + 1; j < v.size(); ++j) {
      const Rational d = v[j] - v[i];
      if (members.count(v[i] - d)) continue;  // not the start of its progression
      std::size_t len = 2;
      Rational cur = v[j] + d;
      while (members.count(cur)) {
        ++len;
        cur += d;
      }
      if (len > best.length) {
        best.length = len;
        best.witness.clear();
        for (std::size_t k = 0; k < len; ++k) best.witness.push_back(v[i] + d * Rational(static_cast<long>(k)));
      }
    }
  }
  return best;
}

Progression longest_geometric(std::vector<Rational> v) {
  v.erase(std::remove_if(v.begin(), v.end(), [](const Rational& r) { return r.is_zero(); }), v.end());
  std::stable_sort(v.begin(), v.end(), [](const Rational& a, const Rational& b) { return a.abs() < b.abs(); });
  Progression best;
  if (v.empty()) return best;
  best.length = 1;
  best.witness = {v.front()};
  const std::unordered_set<Rational, RationalHash> members(v.begin(), v.end());
  for (std::size_t i = 0; i < v.size(); ++i) {
    for (std::size_t j = i + 1; j < v.size(); ++j) {
      if (!(v[i].abs() < v[j].abs())) continue;
      const Rational ratio = v[j] / v[i];
      if (members.count(v[i] / ratio)) continue;
      std::size_t len = 2;
      Rational cur = v[j] * ratio;
      while (members.count(cur)) {
        ++len;
        cur *= ratio;
      }
      if (len > best.length) {
        best.length = len;
        best.witness.clear();
        Rational t = v[i];
        for (std::size_t k = 0; k < len; ++k, t *= ratio) best.witness.push_back(t);
      }
    }
  }
  return best;
}

}  // namespace

std::optional<Rational> rational_wth_root(const Rational& r, unsigned w) {
  if (w < 2) throw DomainError("root exponent must be at least 2");
  const bool negative = r.sign() < 0;
  if (negative && w % 2 == 0) return std::nullopt;
  const auto num = integer_root(abs(r.numerator()), w);
  if (!num) return std::nullopt;
  const auto den = integer_root(r.denominator(), w);
  if (!den) return std::nullopt;
  return Rational(negative ? Integer(-*num) : *num, *den);
}

void for_each_rational_by_height(unsigned long H, const std::function<void(const Rational&)>& fn) {
  if (H < 1) throw DomainError("height bound must be at least 1");
  fn(Rational(0));
  for (unsigned long h = 1; h <= H; ++h) {
    auto emit = [&](unsigned long p, unsigned long q) {
      if (std::gcd(p, q) != 1) return;
      const Rational r{Integer(p), Integer(q)};
      fn(r);
      fn(-r);
    };
    if (h == 1) {
      emit(1, 1);
      continue;
    }
    for (unsigned long p = 1; p < h; ++p) emit(p, h);
    for (unsigned long q = h - 1; q >= 1; --q) emit(h, q);
  }
}

std::vector<Rational> enumerate_rationals_by_height(unsigned long H) {
  std::vector<Rational> out;
  for_each_rational_by_height(H, [&](const Rational& r) { out.push_back(r); });
  return out;
}

std::vector<CurvePoint> curve_points_bounded_height(const CurveSpec& spec, unsigned long H) {
  if (spec.w < 2) throw DomainError("curve exponent w must be at least 2");
  if (spec.c.is_zero()) throw DomainError("twist constant must be nonzero");
  const UnivariateEvaluator g(spec.g);
  const Rational c_inv = spec.c.inverse();
  std::vector<CurvePoint> out;
  for_each_rational_by_height(H, [&](const Rational& x) {
    if (auto y = rational_wth_root(g(x) * c_inv, spec.w)) out.push_back({x, *y});
  });
  return out;
}

GenusChoice choose_exponent_and_genus(const Polynomial& g) {
  if (g.arity() != 1) throw DomainError("genus probe expects a univariate polynomial");
  if (g.is_constant()) throw DomainError("genus probe expects a nonconstant polynomial");
  GenusChoice out;
  out.degree = g.degree();
  for (const auto& [factor, k] : squarefree_decomposition(g)) {
    if (factor.degree() == 0) continue;
    out.v += factor.degree();
    out.multiplicities.push_back(k);
  }
  std::sort(out.multiplicities.begin(), out.multiplicities.end());
  for (unsigned w = std::max<unsigned>(out.degree, 5);; ++w) {
    if (!is_prime(w)) continue;
    if (std::gcd(w, w - out.degree) != 1) continue;
    if (std::any_of(out.multiplicities.begin(), out.multiplicities.end(),
                    [w](std::uint32_t a) { return std::gcd(w, a) != 1; })) {
      continue;
    }
    out.w = w;
    break;
  }
  out.genus = Rational(static_cast<long>(out.v) - 1) * Rational(static_cast<long>(out.w) - 1) / Rational(2);
  out.faltings = out.v > 1;
  return out;
}

MultGroupSpec::MultGroupSpec(std::vector<Rational> generators) : generators_(std::move(generators)) {
  if (generators_.empty()) throw DomainError("group needs at least one generator");
  std::vector<std::map<unsigned long, long>> factored;
  std::map<unsigned long, long> all;
  for (const auto& a : generators_) {
    if (a.is_zero()) throw DomainError("generators must be nonzero");
    std::map<unsigned long, long> f;
    trial_factor(a.numerator(), f, 1);
    trial_factor(a.denominator(), f, -1);
    for (const auto& [p, e] : f) all[p];
    factored.push_back(std::move(f));
  }
  for (const auto& [p, unused] : all) primes_.push_back(p);
  for (std::size_t i = 0; i < generators_.size(); ++i) {
    ExponentVector v;
    v.sign = generators_[i].sign();
    for (unsigned long p : primes_) {
      auto it = factored[i].find(p);
      v.exponents.push_back(it == factored[i].end() ? 0 : it->second);
    }
    vectors_.push_back(std::move(v));
  }
}

std::optional<ExponentVector> MultGroupSpec::factor(const Rational& r) const {
  if (r.is_zero()) return std::nullopt;
  ExponentVector v;
  v.sign = r.sign();
  Integer num = abs(r.numerator());
  Integer den = r.denominator();
  for (unsigned long p : primes_) {
    long e = 0;
    while (mpz_divisible_ui_p(num.get_mpz_t(), p)) {
      mpz_divexact_ui(num.get_mpz_t(), num.get_mpz_t(), p);
      ++e;
    }
    while (mpz_divisible_ui_p(den.get_mpz_t(), p)) {
      mpz_divexact_ui(den.get_mpz_t(), den.get_mpz_t(), p);
      --e;
    }
    v.exponents.push_back(e);
  }
  if (num != 1 || den != 1) return std::nullopt;
  return v;
}

Rational MultGroupSpec::reconstruct(const ExponentVector& v) const {
  Rational out(v.sign);
  for (std::size_t i = 0; i < primes_.size(); ++i) {
    out *= Rational(Integer(primes_[i])).pow(v.exponents[i]);
  }
  return out;
}

std::optional<ExponentVector> group_membership(const Rational& r, const MultGroupSpec& G) {
  const auto target = G.factor(r);
  if (!target) return std::nullopt;
  const std::size_t m = G.primes().size();
  const std::size_t s = G.generators().size();
  // Rows: one per prime, plus sum(beta_i * [a_i < 0]) - 2 lambda = [r < 0].
  std::vector<std::vector<Integer>> A(m + 1, std::vector<Integer>(s + 1, 0));
  std::vector<Integer> b(m + 1, 0);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < s; ++j) A[i][j] = G.generator_vectors()[j].exponents[i];
    b[i] = target->exponents[i];
  }
  for (std::size_t j = 0; j < s; ++j) A[m][j] = G.generator_vectors()[j].sign < 0 ? 1 : 0;
  A[m][s] = -2;
  b[m] = target->sign < 0 ? 1 : 0;
  const auto x = solve_integer_system(std::move(A), b);
  if (!x) return std::nullopt;
  ExponentVector out;
  out.sign = target->sign;
  for (std::size_t j = 0; j < s; ++j) {
    if (!(*x)[j].fits_slong_p()) throw InvariantViolation("membership exponent out of range");
    out.exponents.push_back((*x)[j].get_si());
  }
  return out;
}

IntersectionReport intersection_count(const Polynomial& g, const MultGroupSpec& G, unsigned long H) {
  const UnivariateEvaluator eval(g);
  IntersectionReport out;
  for_each_rational_by_height(H, [&](const Rational& x) {
    ++out.searched;
    const Rational v = eval(x);
    if (v.is_zero()) return;
    auto member = group_membership(v, G);
    if (!member) return;
    ++out.count;
    if (out.witnesses.size() < 20) out.witnesses.emplace_back(x, std::move(*member));
  });
  return out;
}

CongruenceClass popular_congruence_class(const std::vector<std::vector<long>>& vectors, long w) {
  if (vectors.empty()) throw DomainError("pigeonhole needs a nonempty list");
  if (w < 2) throw DomainError("modulus w must be at least 2");
  const std::size_t s = vectors.front().size();
  std::map<std::vector<long>, std::size_t> classes;
  for (const auto& v : vectors) {
    if (v.size() != s) throw DomainError("exponent vectors must have equal length");
    std::vector<long> key;
    for (long e : v) key.push_back(((e % w) + w) % w);
    ++classes[key];
  }
  CongruenceClass best;
  for (const auto& [key, count] : classes) {
    if (count > best.count) best = {key, count};
  }
  return best;
}

Progression find_longest_progression(ProgressionKind kind, std::span<const Rational> values) {
  std::vector<Rational> v(values.begin(), values.end());
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return kind == ProgressionKind::Arithmetic ? longest_arithmetic(v) : longest_geometric(std::move(v));
}

RangeProbeReport range_progression_probe(const Polynomial& g, const RangeDomain& domain, ProgressionKind kind,
                                         const std::optional<Rational>& shift) {
  if (g.arity() != 1) throw DomainError("range probe expects a univariate polynomial");
  if (domain.bound < 1) throw DomainError("domain bound must be at least 1");
  RangeProbeReport out;
  out.probed = g;
  if (shift) {
    const std::vector<Rational> a{*shift};
    out.probed = erq::shift(g, a) - Polynomial(1, evaluate(g, a));
  }
  out.shifted_pure_power = !g.is_constant() && is_shifted_pure_power(g);

  const UnivariateEvaluator eval(out.probed);
  std::unordered_map<Rational, std::vector<Rational>, RationalHash> preimages;
  std::vector<Rational> range;
  auto visit = [&](const Rational& x) {
    ++out.domain_size;
    const Rational y = eval(x);
    auto& pre = preimages[y];
    if (pre.empty()) range.push_back(y);
    pre.push_back(x);
  };
  if (domain.kind == RangeDomain::Kind::Integers) {
    const long N = static_cast<long>(domain.bound);
    for (long x = -N; x <= N; ++x) visit(Rational(x));
  } else {
    for_each_rational_by_height(domain.bound, visit);
  }
  out.range_size = range.size();
  out.progression = find_longest_progression(kind, range);
  for (const auto& y : out.progression.witness) {
    auto pre = preimages[y];
    std::sort(pre.begin(), pre.end());
    out.preimages.push_back(std::move(pre));
  }
  return out;
}

SquaresReport squares_no_4ap_check(unsigned long N) {
  if (N < 4) throw DomainError("squares check needs N >= 4");
  if (N > (1UL << 31)) throw DomainError("squares check bound too large");
  SquaresReport out;
  out.N = N;
  auto square_root = [](std::uint64_t v) -> std::optional<unsigned long> {
    auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<long double>(v)));
    while (r * r > v) --r;
    while ((r + 1) * (r + 1) <= v) ++r;
    if (r * r != v) return std::nullopt;
    return r;
  };
  const std::uint64_t top = static_cast<std::uint64_t>(N) * N;
  // a^2 < b^2 < c^2 with c^2 = 2b^2 - a^2; a fourth term would be 3b^2 - 2a^2.
  for (std::uint64_t a = 1; a <= N; ++a) {
    for (std::uint64_t b = a + 1; b <= N; ++b) {
      const std::uint64_t c2 = 2 * b * b - a * a;
      if (c2 > top) break;
      const auto c = square_root(c2);
      if (!c) continue;
      ++out.three_term_count;
      if (out.example.empty()) out.example = {a, b, *c};
      const std::uint64_t d2 = 3 * b * b - 2 * a * a;
      if (d2 <= top && square_root(d2)) out.four_term_free = false;
    }
  }
  return out;
}

}  // namespace erq
