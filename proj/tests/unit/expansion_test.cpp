#include <gtest/gtest.h>

#include <cmath>

#include "erq/algebra.hpp"
#include "erq/error.hpp"
#include "erq/expansion.hpp"
#include "erq/parser.hpp"
#include "unit/generators.hpp"

using namespace erq;

namespace {

const std::vector<std::string> kXYZ{"x", "y", "z"};

Polynomial P(std::string_view s, std::size_t arity = 3) {
  return parse_polynomial(s, std::span(kXYZ).first(arity));
}

std::vector<Rational> R(std::initializer_list<long> v) { return {v.begin(), v.end()}; }

const char* const kTripleProduct = "x^2y^2z+x^2y^2+x^2z+x^2-y^2z-y^2-z-1";
const char* const kCubicSquare = "x^6+2x^4+2x^3y^3+4x^3+x^2+2xy^3+4x+y^6+4y^3+4";

Polynomial t_plus(long c) { return Polynomial::variable(1, 0) + Polynomial(1, Rational(c)); }

// Triple-product sets: sqrt(2^i+1), sqrt(2^j -/+ 1), 2^k-1.
std::vector<SetSpec> triple_product_sets(std::size_t n, bool literal) {
  const SetSpec pow2 = SetSpec::gp(2, 2, n);
  return {SetSpec::even_squares(SetSpec::image(t_plus(1), pow2)),
          SetSpec::even_squares(SetSpec::image(t_plus(literal ? 1 : -1), pow2)),
          SetSpec::image(t_plus(-1), pow2)};
}

}  // namespace

TEST(GenSet, Examples) {
  EXPECT_EQ(gen_set(SetSpec::ap(1, 1, 5)), R({1, 2, 3, 4, 5}));
  EXPECT_EQ(gen_set(SetSpec{GgpSpec{{GpSpec{2, 2, 3}}}}), R({1, 2, 4, 8}));
  EXPECT_EQ(gen_set(SetSpec{GapSpec{{ApSpec{0, 1, 2}, ApSpec{0, 10, 2}}}}), R({0, 1, 10, 11}));
  EXPECT_EQ(gen_set(SetSpec::gp(Rational(1, 2), -2, 3)), (std::vector<Rational>{-1, Rational(1, 2), 2}));
  EXPECT_EQ(gen_set(SetSpec::image(P("x^2", 1), SetSpec::ap(-2, 1, 5))), R({0, 1, 4}));
  EXPECT_EQ(gen_set(SetSpec::explicit_values(R({3, 1, 3}))), R({1, 3}));
}

TEST(GenSet, RejectsInvalidSpecs) {
  EXPECT_THROW(gen_set(SetSpec::ap(1, 0, 5)), DomainError);
  EXPECT_THROW(gen_set(SetSpec::ap(1, 1, 0)), DomainError);
  EXPECT_THROW(gen_set(SetSpec::gp(1, -1, 3)), DomainError);
  EXPECT_THROW(gen_set(SetSpec::gp(0, 2, 3)), DomainError);
  EXPECT_THROW(gen_set(SetSpec::even_squares(SetSpec::ap(1, 1, 3))), DomainError);
  EXPECT_THROW(base_values(SetSpec::even_squares(SetSpec::ap(-3, 1, 3))), DomainError);
  EXPECT_THROW(gen_set(SetSpec::explicit_values({})), DomainError);
}

TEST(ImageSize, Examples) {
  const SetSpec ap5 = SetSpec::ap(1, 1, 5);
  const auto rec = image_size(P("x+y", 2), {ap5, ap5});
  EXPECT_EQ(rec.count, 9U);
  EXPECT_EQ(rec.n, 5U);
  EXPECT_EQ(rec.ratio, Rational(9, 5));
  EXPECT_EQ(rec.polynomial, "x+y");
  EXPECT_EQ(image_count(P(kTripleProduct), triple_product_sets(5, false)), 13U);
  EXPECT_EQ(image_count(P(kTripleProduct), triple_product_sets(5, true)), 45U);
}

TEST(ImageSize, Errors) {
  const SetSpec ap5 = SetSpec::ap(1, 1, 5);
  EXPECT_THROW(image_count(P("x+y", 2), {ap5}), ArityError);
  EXPECT_THROW(image_count(P("x^3+y", 2), {SetSpec::even_squares(ap5), ap5}), NotEvenError);
}

TEST(ImageSize, RationalAndNegativeSets) {
  const SetSpec a = SetSpec::ap(Rational(-3, 2), Rational(1, 3), 12);
  const SetSpec b = SetSpec::gp(Rational(-2, 5), Rational(-3, 2), 6);
  const Polynomial F = P("1/3x^2y-y^3+x", 2);
  const auto oracle = image_values(F, {gen_set(a), gen_set(b)});
  EXPECT_EQ(image_count(F, {a, b}), oracle.size());
  EXPECT_EQ(image_count(F, {a, b}, {.threads = 1, .exact_only = true}), oracle.size());
}

TEST(ImageSize, LargeValuesUseExactPath) {
  // 2^(i*40) overflows 128 bits; the exact path must still count correctly.
  const SetSpec big = SetSpec::gp(2, 2, 20);
  const Polynomial F = P("x^40+y^40", 2);
  EXPECT_EQ(image_count(F, {big, big}), 20U * 21U / 2U);
}

TEST(SetOps, Examples) {
  EXPECT_EQ(pointwise_set_op(SetOp::Sum, R({1, 2, 3}), R({1, 2, 3})), R({2, 3, 4, 5, 6}));
  EXPECT_EQ(pointwise_set_op(SetOp::Product, R({1, 4, 16}), R({1, 4, 16})), R({1, 4, 16, 64, 256}));
  const auto A = R({-1, 5, 7});
  EXPECT_EQ(pointwise_set_op(SetOp::Sum, R({0}), A), A);
  EXPECT_THROW(pointwise_set_op(SetOp::Sum, {}, A), DomainError);
}

TEST(FiberInequality, Examples) {
  const auto ex2 = fiber_inequality_check(P(kCubicSquare, 2), {R({1, 2, 3}), R({1, 2, 3})});
  EXPECT_EQ(ex2.inner_count, 9U);
  EXPECT_EQ(ex2.image_count, 9U);
  EXPECT_EQ(ex2.degree, 6U);
  EXPECT_TRUE(ex2.holds);
  const auto sum = fiber_inequality_check(P("x+y", 2), {R({1, 2, 3, 4, 5}), R({1, 2, 3, 4, 5})});
  EXPECT_EQ(sum.inner_count, 9U);
  EXPECT_EQ(sum.image_count, 9U);
  EXPECT_EQ(sum.degree, 1U);
  const auto sq = fiber_inequality_check(P("(x+y)^2", 2), {R({0, 1, 2}), R({0, 1, 2})});
  EXPECT_EQ(sq.inner_count, 5U);
  EXPECT_EQ(sq.image_count, 5U);
  EXPECT_EQ(sq.degree, 2U);
  EXPECT_THROW(fiber_inequality_check(P("x^2+xy+y^3", 2), {R({1}), R({1})}), DomainError);
}

TEST(GrowthSweep, Examples) {
  const std::vector<std::size_t> ns{100, 200, 400};
  const auto lin = growth_sweep(P("x+y", 2), {SetSpec::ap(1, 1, 1), SetSpec::ap(1, 1, 1)}, ns);
  EXPECT_EQ(lin.counts, (std::vector<std::uint64_t>{199, 399, 799}));
  EXPECT_GE(lin.slope, 0.99);
  EXPECT_LE(lin.slope, 1.01);
  const auto mul = growth_sweep(P("xy", 2), {SetSpec::gp(2, 2, 1), SetSpec::gp(2, 2, 1)}, ns);
  EXPECT_EQ(mul.counts, (std::vector<std::uint64_t>{199, 399, 799}));
  const std::vector<std::size_t> chang_ns{50, 100, 200};
  const auto sq = growth_sweep(P("x^2+y^2", 2), {SetSpec::ap(1, 1, 1), SetSpec::ap(1, 1, 1)}, chang_ns);
  EXPECT_EQ(sq.counts, (std::vector<std::uint64_t>{998, 3678, 13683}));
  EXPECT_GT(sq.slope, 1.0);
  const std::vector<std::size_t> one{10};
  EXPECT_THROW(growth_sweep(P("x+y", 2), {SetSpec::ap(1, 1, 1), SetSpec::ap(1, 1, 1)}, one), DomainError);
}

TEST(Witness, Examples) {
  const Polynomial lin = P("(x+y)^3", 2);
  const auto a = witness_for(lin, *detect_linear_form(lin), 10);
  EXPECT_EQ(a.bound, 19U);
  EXPECT_LE(a.measured, 19U);

  const Polynomial xy = P("xy", 2);
  const auto b = witness_for(xy, *detect_power_product_form(xy), 10);
  EXPECT_EQ(b.bound, 20U);
  EXPECT_EQ(b.measured, 19U);

  const Polynomial ex1 = P(kTripleProduct);
  const auto c = witness_for(ex1, *detect_multiplicative_form(ex1), 10);
  EXPECT_EQ(c.bound, 30U);
  EXPECT_EQ(c.measured, 28U);
  const auto d = witness_for(ex1, *detect_multiplicative_form(ex1), 5, {}, true);
  EXPECT_EQ(d.measured, 45U);
  EXPECT_FALSE(d.holds);
  EXPECT_FALSE(d.notes.empty());

  EXPECT_THROW(witness_for(xy, *detect_power_product_form(xy), 0), DomainError);
}

TEST(Witness, DegenerateLinearCoefficient) {
  const Polynomial F = P("x^2+x", 2);
  const std::vector<std::size_t> vars{0};
  const auto r = witness_for(F, *detect_linear_form(P("x^2+x", 1)), 7, vars);
  EXPECT_EQ(r.bound, 7U);
  EXPECT_LE(r.measured, 7U);
}

TEST(Chang, Examples) {
  const auto five = chang_check(5);
  EXPECT_EQ(five.measured, 9U);
  EXPECT_EQ(five.bound, 10U);
  const auto one = chang_check(1);
  EXPECT_EQ(one.measured, 1U);
  EXPECT_EQ(one.bound, 2U);
}

// ---------------------------------------------------------------------------
// Properties

TEST(ExpansionProperties, CountMatchesBruteForceAndBounds) {
  gen::Engine rng(501);
  for (int i = 0; i < 60; ++i) {
    const std::size_t k = gen::uniform(rng, 1, 3);
    const auto F = gen::random_polynomial(rng, k, 4, 5);
    std::vector<SetSpec> specs;
    std::vector<std::vector<Rational>> sets;
    std::uint64_t grid = 1;
    for (std::size_t v = 0; v < k; ++v) {
      std::vector<Rational> vals;
      for (long c = gen::uniform(rng, 1, 7); c > 0; --c) vals.push_back(gen::small_rational(rng, 6, 3));
      specs.push_back(SetSpec::explicit_values(vals));
      sets.push_back(gen_set(specs.back()));
      grid *= sets.back().size();
    }
    const auto oracle = image_values(F, sets).size();
    const auto fast = image_count(F, specs);
    ASSERT_EQ(fast, oracle);
    ASSERT_LE(fast, grid);
    ASSERT_EQ(image_count(F, specs, {.threads = 3, .exact_only = false}), fast);
    ASSERT_EQ(image_count(F, specs, {.threads = 2, .exact_only = true}), fast);
  }
}

TEST(ExpansionProperties, SumsetLowerBound) {
  gen::Engine rng(502);
  for (int i = 0; i < 200; ++i) {
    std::vector<Rational> A, B;
    for (long c = gen::uniform(rng, 1, 15); c > 0; --c) A.push_back(gen::small_rational(rng, 9, 4));
    for (long c = gen::uniform(rng, 1, 15); c > 0; --c) B.push_back(gen::small_rational(rng, 9, 4));
    A = gen_set(SetSpec::explicit_values(A));
    B = gen_set(SetSpec::explicit_values(B));
    ASSERT_GE(pointwise_set_op(SetOp::Sum, A, B).size() + 1, A.size() + B.size());
  }
}

TEST(ExpansionProperties, GenSetIsSortedAndDistinct) {
  gen::Engine rng(503);
  for (int i = 0; i < 100; ++i) {
    const auto n = static_cast<std::size_t>(gen::uniform(rng, 1, 6));
    const SetSpec s = (i % 2 == 0) ? SetSpec{GapSpec{{ApSpec{gen::small_rational(rng), gen::nonzero_rational(rng), n},
                                                     ApSpec{gen::small_rational(rng), gen::nonzero_rational(rng), n}}}}
                                   : SetSpec{GgpSpec{{GpSpec{gen::nonzero_rational(rng), 2, n},
                                                      GpSpec{gen::nonzero_rational(rng), Rational(-1, 3), n}}}};
    const auto v = gen_set(s);
    ASSERT_TRUE(std::adjacent_find(v.begin(), v.end(), [](const auto& a, const auto& b) { return !(a < b); }) ==
                v.end());
    ASSERT_EQ(gen_set(s), v);
  }
}

TEST(Witness, AdditiveSquares) {
  const Polynomial F = P("x^2+y^2", 2);
  const auto verdict = classify(F);
  ASSERT_TRUE(verdict.r_certificate);
  for (std::size_t n : {1, 5, 40}) {
    const auto w = witness_for(F, *verdict.r_certificate, n);
    EXPECT_EQ(w.form, "additive");
    EXPECT_EQ(w.measured, 2 * n - 1);
    EXPECT_TRUE(w.holds);
  }
  const auto neg = classify(P("x-3y^2", 2));
  ASSERT_TRUE(neg.r_certificate);
  EXPECT_TRUE(witness_for(P("x-3y^2", 2), *neg.r_certificate, 7).holds);
  const auto cubic = classify(P("x^3+y^3+x", 2));
  ASSERT_TRUE(cubic.r_certificate);
  EXPECT_THROW(witness_for(P("x^3+y^3+x", 2), *cubic.r_certificate, 3), DomainError);
}
