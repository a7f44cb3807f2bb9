#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "erq/decompose.hpp"
#include "erq/polynomial.hpp"

namespace erq {

struct SetSpec;

struct ApSpec {
  Rational start;
  Rational step;
  std::size_t count = 0;
};

struct GpSpec {
  Rational start;
  Rational ratio;
  std::size_t count = 0;
};

/// Sum of progressions, each factor taken together with 0.
struct GapSpec {
  std::vector<ApSpec> dims;
};

/// Product of progressions, each factor taken together with 1.
struct GgpSpec {
  std::vector<GpSpec> dims;
};

/// {g(b) : b in base} for univariate g.
struct ImageSpec {
  Polynomial g;
  std::string variable = "x";
  std::shared_ptr<const SetSpec> base;
};

struct ExplicitSpec {
  std::vector<Rational> values;
};

/// {sqrt(b) : b in base}. Only usable as an input set for a variable in which
/// the polynomial is even; the harness then works with the base values.
struct EvenSquaresSpec {
  std::shared_ptr<const SetSpec> base;
};

struct SetSpec {
  std::variant<ApSpec, GpSpec, GapSpec, GgpSpec, ImageSpec, ExplicitSpec, EvenSquaresSpec> value;

  static SetSpec ap(Rational start, Rational step, std::size_t count);
  static SetSpec gp(Rational start, Rational ratio, std::size_t count);
  static SetSpec image(Polynomial g, SetSpec base, std::string variable = "x");
  static SetSpec even_squares(SetSpec base);
  static SetSpec explicit_values(std::vector<Rational> values);

  bool is_even_squares() const noexcept { return std::holds_alternative<EvenSquaresSpec>(value); }
  /// Throws DomainError when a field breaks the spec invariants.
  void validate() const;
  /// Copy with every progression count replaced by n (growth-sweep templates).
  SetSpec with_count(std::size_t n) const;
};

/// Sorted, duplicate-free values. EvenSquares specs are rejected (their
/// elements are not rational); see base_values.
std::vector<Rational> gen_set(const SetSpec& spec);
/// gen_set of the base set for EvenSquares, gen_set otherwise.
std::vector<Rational> base_values(const SetSpec& spec);
/// Number of elements the spec denotes (for EvenSquares, the base size).
std::size_t set_size(const SetSpec& spec);

struct ExperimentRecord {
  std::string polynomial;
  std::vector<std::string> variables;
  std::vector<SetSpec> sets;
  std::size_t n = 0;  // largest input set
  std::uint64_t count = 0;
  Rational ratio;  // count / n
  std::string timestamp;
  std::uint64_t seed = 0;
  double runtime_ms = 0;
};

struct ImageOptions {
  /// Worker threads for grid evaluation; the result never depends on it.
  unsigned threads = 1;
  /// Disables the 128-bit fast path (for cross-checking).
  bool exact_only = false;
};

/// Exact |F(A_1, ..., A_k)|. Variables whose set is EvenSquares are
/// even-reduced first (NotEvenError if F is not even in them).
std::uint64_t image_count(const Polynomial& F, const std::vector<SetSpec>& sets, const ImageOptions& options = {});
ExperimentRecord image_size(const Polynomial& F, const std::vector<SetSpec>& sets,
                            std::span<const std::string> names = {}, const ImageOptions& options = {});
/// All distinct values (sorted); rational sets only.
std::vector<Rational> image_values(const Polynomial& F, const std::vector<std::vector<Rational>>& sets);

enum class SetOp { Sum, Product };
std::vector<Rational> pointwise_set_op(SetOp op, std::span<const Rational> A, std::span<const Rational> B);

struct FiberReport {
  std::uint64_t inner_count = 0;  // |g(A) + h(B) (+ u(C))|
  std::uint64_t image_count = 0;  // |F(A, B (, C))|
  std::uint32_t degree = 0;
  bool holds = false;
};

/// |g(A)+h(B)| <= d |F(A,B)| <= d |g(A)+h(B)|. DomainError when F has no
/// additive decomposition.
FiberReport fiber_inequality_check(const Polynomial& F, const std::vector<std::vector<Rational>>& sets);

struct GrowthReport {
  std::vector<std::size_t> ns;
  std::vector<std::uint64_t> counts;
  double slope = 0;
};

/// Image sizes over family.with_count(n) for every n (one template per
/// variable) and the least-squares slope of log count against log n.
GrowthReport growth_sweep(const Polynomial& F, const std::vector<SetSpec>& family, std::span<const std::size_t> ns,
                          const ImageOptions& options = {});

struct WitnessReport {
  std::string form;
  std::vector<SetSpec> sets;
  std::size_t n = 0;
  std::uint64_t bound = 0;
  std::uint64_t measured = 0;
  bool holds = false;
  std::vector<std::string> notes;
};

/// Low-expansion sets for a certificate of F, measured exactly on F.
/// `variables` maps certificate variables to F's (identity when empty);
/// variables F ignores get AP{1,1,n}.
/// Linear form: APs aligned by the coefficients. Power product: shifted powers
/// of two. Multiplicative (over R): powers of two through linear or even
/// quadratic inners, using square roots for the latter. Additive (over R):
/// APs through inners c x or c x^2. `literal_sets`
/// selects sqrt(2^j+1) for the middle set of the three-variable example,
/// which do not give the bound; the discrepancy is noted in the report.
WitnessReport witness_for(const Polynomial& F, const Certificate& certificate, std::size_t n,
                          std::span<const std::size_t> variables = {}, bool literal_sets = false,
                          const ImageOptions& options = {});

/// x^2+y^2 over A = {sqrt(1), ..., sqrt(n)}: exact count and the 2n bound.
WitnessReport chang_check(std::size_t n, const ImageOptions& options = {});

}  // namespace erq
