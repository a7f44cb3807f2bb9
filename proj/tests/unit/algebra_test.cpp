#include <gtest/gtest.h>

#include "erq/algebra.hpp"
#include "erq/error.hpp"
#include "erq/parser.hpp"
#include "unit/generators.hpp"

using namespace erq;

namespace {

const std::vector<std::string> kXYZ{"x", "y", "z"};

Polynomial P(std::string_view s, std::size_t arity = 3) {
  return parse_polynomial(s, std::span(kXYZ).first(arity));
}

const char* const kCubicSquare = "x^6+2x^4+2x^3y^3+4x^3+x^2+2xy^3+4x+y^6+4y^3+4";

}  // namespace

TEST(Gcd, Examples) {
  EXPECT_EQ(multivariate_gcd(P("x^2-y^2", 2), P("x-y", 2)), P("x-y", 2));
  const Polynomial F = P(kCubicSquare, 2);
  EXPECT_EQ(multivariate_gcd(partial_derivative(F, 0), partial_derivative(F, 1)), P("x^3+x+y^3+2", 2));
  EXPECT_EQ(multivariate_gcd(P("x+1", 2), P("y+1", 2)), Polynomial(2, Rational(1)));
}

TEST(Gcd, WithZeroIsNormalizedInput) {
  EXPECT_EQ(multivariate_gcd(P("-2/3x+4y", 2), Polynomial(2)), P("x-6y", 2));
  EXPECT_EQ(multivariate_gcd(Polynomial(2), P("3y", 2)), P("y", 2));
}

TEST(Gcd, ThreeVariables) {
  const Polynomial r = P("xz+y^2-1");
  EXPECT_EQ(multivariate_gcd(r * P("x+y+z"), r * P("x-z^3")), r);
}

TEST(GcdProperties, DivisibleByCommonFactor) {
  gen::Engine rng(201);
  for (int i = 0; i < 120; ++i) {
    const std::size_t n = gen::uniform(rng, 1, 3);
    const auto p = gen::random_polynomial(rng, n, 4, 4);
    const auto q = gen::random_polynomial(rng, n, 4, 4);
    const auto r = gen::random_polynomial(rng, n, 3, 3);
    if (r.is_zero()) continue;
    const Polynomial g = multivariate_gcd(p * r, q * r);
    const Polynomial nr = normalize_primitive(r);
    if (g.is_zero()) {
      ASSERT_TRUE(p.is_zero() && q.is_zero());
      continue;
    }
    ASSERT_TRUE(divide_exact(g, nr).has_value()) << format_polynomial(g, std::span(kXYZ).first(n));
    if (!p.is_zero()) ASSERT_TRUE(divide_exact(p * r, g).has_value());
    if (!q.is_zero()) ASSERT_TRUE(divide_exact(q * r, g).has_value());
    ASSERT_EQ(normalize_primitive(g), g);
  }
}

TEST(SquarefreePart, Examples) {
  const Polynomial p = P("(x+1)^2(x-2)", 1);
  EXPECT_EQ(squarefree_part(p), P("(x+1)(x-2)", 1));
  EXPECT_EQ(distinct_root_count(p), 2U);
  EXPECT_EQ(distinct_root_count(P("x^5+x^4-x-1", 1)), 4U);
  EXPECT_EQ(distinct_root_count(P("2x^3+x+2", 1)), 3U);
  EXPECT_THROW(squarefree_part(Polynomial(1)), DomainError);
}

TEST(SquarefreeProperties, SquareKeepsRootCount) {
  gen::Engine rng(202);
  for (int i = 0; i < 150; ++i) {
    const auto p = gen::random_univariate(rng, gen::uniform(rng, 1, 6));
    ASSERT_EQ(distinct_root_count(p * p), distinct_root_count(p));
    const auto parts = squarefree_decomposition(p);
    Polynomial back(1, Rational(1));
    for (const auto& [f, k] : parts) back *= f.pow(k);
    ASSERT_EQ(normalize_primitive(back), normalize_primitive(p));
  }
}

TEST(LeadingCoeffIn, Examples) {
  const Polynomial ex1 = P("x^2y^2z+x^2y^2+x^2z+x^2-y^2z-y^2-z-1");
  const auto lc = leading_coeff_in(ex1, 0);
  EXPECT_EQ(lc.coefficient, P("y^2z+y^2+z+1"));
  EXPECT_EQ(lc.degree, 2U);
  EXPECT_EQ(leading_coeff_in(P("x^2y+xy^2", 2), 0).coefficient, P("y", 2));
  EXPECT_EQ(leading_coeff_in(P(kCubicSquare, 2), 0).coefficient, Polynomial(2, Rational(1)));
  const auto absent = leading_coeff_in(P("y+1", 2), 0);
  EXPECT_EQ(absent.degree, 0U);
  EXPECT_EQ(absent.coefficient, P("y+1", 2));
}

TEST(LinearPowerTest, Examples) {
  EXPECT_EQ(linear_power_test(P("x^2+4x+4", 1)), (LinearPower{Rational(1), Rational(-2), 2}));
  EXPECT_FALSE(linear_power_test(P("x^2+1", 1)));
  EXPECT_EQ(linear_power_test(P("3(x-5)^4", 1)), (LinearPower{Rational(3), Rational(5), 4}));
  EXPECT_EQ(linear_power_test(P("-1/2x+3", 1)), (LinearPower{Rational(-1, 2), Rational(6), 1}));
  EXPECT_FALSE(linear_power_test(P("(x-1)^2(x+1)", 1)));
}

TEST(LinearPowerProperties, RecoversRandomPowers) {
  gen::Engine rng(203);
  for (int i = 0; i < 100; ++i) {
    const Rational c = gen::nonzero_rational(rng);
    const Rational r = gen::small_rational(rng, 9, 5);
    const auto m = static_cast<std::uint32_t>(gen::uniform(rng, 1, 7));
    const Polynomial p = (Polynomial::variable(1, 0) - Polynomial(1, r)).pow(m) * c;
    ASSERT_EQ(linear_power_test(p), (LinearPower{c, r, m}));
  }
}

TEST(ShiftedPurePower, Detects) {
  EXPECT_TRUE(is_shifted_pure_power(P("x^3", 1)));
  EXPECT_TRUE(is_shifted_pure_power(P("(x+1)^3-1", 1)));
  EXPECT_FALSE(is_shifted_pure_power(P("x^3+x", 1)));
  EXPECT_TRUE(is_shifted_pure_power(P("5x", 1)));
}

TEST(EvenReduce, Examples) {
  const std::vector<std::size_t> xy{0, 1};
  EXPECT_EQ(even_reduce(P("x^2+y^2", 2), xy), P("x+y", 2));
  const Polynomial ex1 = P("x^2y^2z+x^2y^2+x^2z+x^2-y^2z-y^2-z-1");
  EXPECT_EQ(even_reduce(ex1, xy), P("(x-1)(y+1)(z+1)"));
  const std::vector<std::size_t> x{0};
  EXPECT_THROW(even_reduce(P("x^3+x", 1), x), NotEvenError);
}

TEST(EvenReduceProperties, RoundTrip) {
  gen::Engine rng(204);
  for (int i = 0; i < 100; ++i) {
    const std::size_t n = gen::uniform(rng, 1, 3);
    const auto p = gen::random_polynomial(rng, n, 4, 5);
    std::vector<std::size_t> vars;
    for (std::size_t v = 0; v < n; ++v) {
      if (gen::uniform(rng, 0, 1)) vars.push_back(v);
    }
    const Polynomial e = even_expand(p, vars);
    ASSERT_EQ(even_reduce(e, vars), p);
  }
}

TEST(IsHomogeneous, Examples) {
  EXPECT_EQ(is_homogeneous(P("xyz")), 3U);
  EXPECT_EQ(is_homogeneous(P("(x+2y)^3", 2)), 3U);
  EXPECT_FALSE(is_homogeneous(P("x^2+y", 2)));
}
