#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "erq/polynomial.hpp"

namespace erq {

/// s with s^w = r, if rational. Negative r only for odd w.
std::optional<Rational> rational_wth_root(const Rational& r, unsigned w);

/// Calls fn on every reduced p/q with |p| <= H and 1 <= q <= H. Order: 0, then
/// by height, within a height by increasing positive value, each positive
/// value followed by its negative.
void for_each_rational_by_height(unsigned long H, const std::function<void(const Rational&)>& fn);
std::vector<Rational> enumerate_rationals_by_height(unsigned long H);

/// g(x) = c * y^w.
struct CurveSpec {
  Polynomial g{1};
  Rational c{1};
  unsigned w = 2;
};

struct CurvePoint {
  Rational x;
  Rational y;
  friend bool operator==(const CurvePoint&, const CurvePoint&) = default;
};

/// Points with height(x) <= H, in enumeration order.
std::vector<CurvePoint> curve_points_bounded_height(const CurveSpec& spec, unsigned long H);

struct GenusChoice {
  unsigned w = 0;
  Rational genus;
  std::uint32_t v = 0;  // distinct roots of g
  std::uint32_t degree = 0;
  std::vector<std::uint32_t> multiplicities;  // distinct root multiplicities
  bool faltings = false;                      // genus >= 2 regime (v > 1)
};

/// Smallest prime w >= max(deg g, 5) prime to w - deg g and to every root
/// multiplicity; genus (v-1)(w-1)/2.
GenusChoice choose_exponent_and_genus(const Polynomial& g);

struct ExponentVector {
  std::vector<long> exponents;
  int sign = 1;
  friend bool operator==(const ExponentVector&, const ExponentVector&) = default;
};

/// Finitely generated subgroup of Q^*, with generators factored over their
/// primes by trial division.
class MultGroupSpec {
 public:
  static constexpr unsigned long kTrialBound = 1'000'000;

  /// DomainError on a zero generator or a prime factor above kTrialBound.
  explicit MultGroupSpec(std::vector<Rational> generators);

  const std::vector<Rational>& generators() const noexcept { return generators_; }
  const std::vector<unsigned long>& primes() const noexcept { return primes_; }
  /// Exponent vector of each generator over primes().
  const std::vector<ExponentVector>& generator_vectors() const noexcept { return vectors_; }
  /// r over primes(); nullopt if r has another prime factor or is zero.
  std::optional<ExponentVector> factor(const Rational& r) const;
  /// sign * prod p_i^e_i.
  Rational reconstruct(const ExponentVector& v) const;

 private:
  std::vector<Rational> generators_;
  std::vector<unsigned long> primes_;
  std::vector<ExponentVector> vectors_;
};

/// Exponents beta on the generators with prod a_i^beta_i = r, if r is in the
/// group. The returned sign is r's sign.
std::optional<ExponentVector> group_membership(const Rational& r, const MultGroupSpec& G);

struct IntersectionReport {
  std::uint64_t count = 0;
  std::uint64_t searched = 0;
  std::vector<std::pair<Rational, ExponentVector>> witnesses;  // first 20
};

/// x with height(x) <= H, g(x) != 0 and g(x) in G.
IntersectionReport intersection_count(const Polynomial& g, const MultGroupSpec& G, unsigned long H);

struct CongruenceClass {
  std::vector<long> representative;  // entries in [0, w)
  std::size_t count = 0;
};

/// Most populous residue class mod w (lexicographically least on ties).
CongruenceClass popular_congruence_class(const std::vector<std::vector<long>>& vectors, long w);

enum class ProgressionKind { Arithmetic, Geometric };

struct Progression {
  std::size_t length = 0;
  std::vector<Rational> witness;
};

/// Longest progression inside the set (duplicates ignored). Geometric search
/// ignores 0 and ratios 0, 1, -1.
Progression find_longest_progression(ProgressionKind kind, std::span<const Rational> values);

struct RangeDomain {
  enum class Kind { Integers, Height };
  Kind kind = Kind::Integers;
  unsigned long bound = 1;  // [-N, N] or height <= H
};

struct RangeProbeReport {
  Polynomial probed{1};  // g, or g(x+a)-g(a) when shifted
  std::size_t domain_size = 0;
  std::size_t range_size = 0;
  Progression progression;
  std::vector<std::vector<Rational>> preimages;  // per witness value
  bool shifted_pure_power = false;
};

/// Longest progression in g(domain). `shift` applies h_a(x) = g(x+a) - g(a).
RangeProbeReport range_progression_probe(const Polynomial& g, const RangeDomain& domain, ProgressionKind kind,
                                         const std::optional<Rational>& shift = std::nullopt);

struct SquaresReport {
  unsigned long N = 0;
  bool four_term_free = true;
  std::uint64_t three_term_count = 0;
  std::vector<unsigned long> example;  // roots of a 3-term progression of squares
};

/// Exhaustive search for 3- and 4-term progressions in {1^2, ..., N^2}.
SquaresReport squares_no_4ap_check(unsigned long N);

}  // namespace erq
