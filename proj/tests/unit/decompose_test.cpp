#include <gtest/gtest.h>

#include "erq/algebra.hpp"
#include "erq/decompose.hpp"
#include "erq/error.hpp"
#include "erq/parser.hpp"
#include "unit/generators.hpp"

using namespace erq;

namespace {

const std::vector<std::string> kXYZ{"x", "y", "z"};
const std::vector<std::string> kT{"t"};

Polynomial P(std::string_view s, std::size_t arity = 3) {
  return parse_polynomial(s, std::span(kXYZ).first(arity));
}
Polynomial T(std::string_view s) { return parse_polynomial(s, kT); }
Polynomial U(std::string_view s, std::string name) {
  const std::vector<std::string> v{std::move(name)};
  return parse_polynomial(s, v);
}

const char* const kTripleProduct = "x^2y^2z+x^2y^2+x^2z+x^2-y^2z-y^2-z-1";
const char* const kCubicSquare = "x^6+2x^4+2x^3y^3+4x^3+x^2+2xy^3+4x+y^6+4y^3+4";

bool has_diagnostic(const ClassificationVerdict& v, std::string_view needle) {
  for (const auto& d : v.diagnostics) {
    if (d.find(needle) != std::string::npos) return true;
  }
  return false;
}

}  // namespace

TEST(DetectLinear, Examples) {
  const auto r = detect_linear_form(P("(x+2y-z)^3+1"));
  ASSERT_TRUE(r);
  EXPECT_EQ(r->outer(), T("t^3+1"));
  EXPECT_EQ(r->coeffs(), (std::vector<Rational>{1, 2, -1}));
  EXPECT_FALSE(detect_linear_form(P("x^2+xy+z")));
  const auto deg = detect_linear_form(P("x^2", 2));
  ASSERT_TRUE(deg);
  EXPECT_EQ(deg->outer(), T("t^2"));
  EXPECT_EQ(deg->coeffs(), (std::vector<Rational>{1, 0}));
  EXPECT_THROW(detect_linear_form(P("5", 2)), DomainError);
}

TEST(DetectPowerProduct, Examples) {
  const auto r = detect_power_product_form(P("((x+1)^2(y-2))^2+3(x+1)^2(y-2)", 2));
  ASSERT_TRUE(r);
  EXPECT_EQ(r->outer(), T("t^2+3t"));
  EXPECT_EQ(r->shifts(), (std::vector<Rational>{1, -2}));
  EXPECT_EQ(r->exponents(), (std::vector<std::uint32_t>{2, 1}));
  EXPECT_FALSE(detect_power_product_form(P(kTripleProduct)));
  const auto xy3 = detect_power_product_form(P("(xy)^3", 2));
  ASSERT_TRUE(xy3);
  EXPECT_EQ(xy3->outer(), T("t^3"));
  EXPECT_EQ(xy3->exponents(), (std::vector<std::uint32_t>{1, 1}));
  EXPECT_FALSE(detect_power_product_form(P("x^2+1", 2)));
}

TEST(DetectAdditive, Examples) {
  const auto r = detect_additive_form(P(kCubicSquare, 2));
  ASSERT_TRUE(r);
  EXPECT_EQ(r->outer(), T("t^2+4t+4"));
  EXPECT_EQ(r->inners()[0], U("x^3+x", "x"));
  EXPECT_EQ(r->inners()[1], U("y^3", "y"));
  EXPECT_EQ(r->flags()[1].distinct_roots, 1U);
  const auto chang = detect_additive_form(P("x^2+y^2", 2));
  ASSERT_TRUE(chang);
  EXPECT_EQ(chang->outer(), T("t"));
  EXPECT_EQ(chang->inners()[0], U("x^2", "x"));
  EXPECT_EQ(chang->inners()[1], U("y^2", "y"));
  EXPECT_FALSE(detect_additive_form(P("x^2+xy+z")));
}

TEST(DetectAdditive, ThreeVariables) {
  const auto r = detect_additive_form(P("(x^3+x+2y^2-1/3z^3)^2-(x^3+x+2y^2-1/3z^3)"));
  ASSERT_TRUE(r);
  EXPECT_EQ(r->outer(), T("t^2-t"));
  EXPECT_EQ(r->inners()[2], U("-1/3z^3", "z"));
}

TEST(DetectMultiplicative, Examples) {
  const auto r = detect_multiplicative_form(P(kTripleProduct));
  ASSERT_TRUE(r);
  EXPECT_EQ(r->outer(), T("t"));
  EXPECT_EQ(r->inners()[0], U("x^2-1", "x"));
  EXPECT_EQ(r->inners()[1], U("y^2+1", "y"));
  EXPECT_EQ(r->inners()[2], U("z+1", "z"));
  const auto s = detect_multiplicative_form(P("((x+1)(y+1))^2+3(x+1)(y+1)", 2));
  ASSERT_TRUE(s);
  EXPECT_EQ(s->outer(), T("t^2+3t"));
  EXPECT_EQ(s->inners()[0], U("x+1", "x"));
  EXPECT_EQ(s->inners()[1], U("y+1", "y"));
  const auto xy = detect_multiplicative_form(P("xy", 2));
  ASSERT_TRUE(xy);
  EXPECT_EQ(xy->outer(), T("t"));
  EXPECT_FALSE(detect_multiplicative_form(P("x+y+xy^2", 2)));
}

TEST(DetectMultiplicative, UnequalInnerPowers) {
  // g = x^2+1, h = y^3 (appears squared in the y exponent pattern)
  const auto r = detect_multiplicative_form(P("(x^2+1)^2y^3+7", 2));
  ASSERT_TRUE(r);
  EXPECT_EQ(r->recompose(), P("(x^2+1)^2y^3+7", 2));
}

TEST(DetectMultiplicative, ThreeVariablesInnersVanishingAtZero) {
  const Polynomial F = P("(x(y^2-y)z^3)^2-5x(y^2-y)z^3");
  const auto r = detect_multiplicative_form(F);
  ASSERT_TRUE(r);
  EXPECT_EQ(r->recompose(), F);
  EXPECT_FALSE(detect_multiplicative_form(P("xyz+x+z")));
  EXPECT_FALSE(detect_additive_form(P("(x+y+z)^2+xz")));
}

TEST(Peeling, Examples) {
  EXPECT_EQ(extract_outer_by_peeling(T("(t^3+t+2)^2"), T("t^3+t")), T("t^2+4t+4"));
  const Polynomial w = T("t^2-3t+1/2");
  EXPECT_EQ(extract_outer_by_peeling(w.pow(3), w), T("t^3"));
  EXPECT_EQ(extract_outer_by_peeling(T("t^4"), T("t^2+1")), T("t^2-2t+1"));
  EXPECT_FALSE(extract_outer_by_peeling(T("t^3"), T("t^2")));
  EXPECT_FALSE(extract_outer_by_peeling(T("t^4+t"), T("t^2")));
}

TEST(LogDerivative, FindsMinimalDegree) {
  // g = x^2-1: g'/g = 2x/(x^2-1)
  const auto r = solve_log_derivative(T("t"), T("t^2-1"), 6);
  ASSERT_TRUE(r);
  EXPECT_EQ(r->first, T("t^2-1"));
  EXPECT_EQ(r->second, Rational(2));
  EXPECT_FALSE(solve_log_derivative(T("t^2"), T("t^2-1"), 6));
}

TEST(Classify, Examples) {
  const auto a = classify(P("x^2+xy+z"));
  EXPECT_EQ(a.over_q, RationalVerdict::Expander);

  const auto ex1 = classify(P(kTripleProduct));
  EXPECT_EQ(ex1.over_q, RationalVerdict::Expander);
  EXPECT_EQ(ex1.over_r, RealVerdict::NonExpander);
  ASSERT_TRUE(ex1.r_certificate);
  EXPECT_EQ(certificate_kind(*ex1.r_certificate), "multiplicative");
  EXPECT_TRUE(has_diagnostic(ex1, "diagonal has 4 distinct roots"));

  const auto ex2 = classify(P(kCubicSquare, 2));
  EXPECT_EQ(ex2.over_q, RationalVerdict::Expander);
  EXPECT_EQ(ex2.over_r, RealVerdict::NonExpander);
  EXPECT_TRUE(has_diagnostic(ex2, "inner y^3"));
  EXPECT_TRUE(has_diagnostic(ex2, "at least two distinct roots"));
  EXPECT_TRUE(has_diagnostic(ex2, "degree-6 monomial x^5y absent"));

  EXPECT_TRUE(has_diagnostic(classify(P("x^2+y^2", 2)), "no mixed terms"));
  EXPECT_THROW(classify(P("x", 1)), ArityError);
  EXPECT_THROW(classify(P("7", 2)), DomainError);
}

TEST(Classify, NonExpanderForms) {
  const auto lin = classify(P("(x+2y-z)^3+1"));
  EXPECT_EQ(lin.over_q, RationalVerdict::NonExpander);
  EXPECT_EQ(certificate_kind(*lin.q_certificate), "linear");
  EXPECT_EQ(lin.over_r, RealVerdict::NonExpander);

  const auto pp = classify(P("(x+1)^2(y-1)z^3", 3));
  EXPECT_EQ(pp.over_q, RationalVerdict::NonExpander);
  EXPECT_EQ(certificate_kind(*pp.q_certificate), "power_product");

  const auto case_ii = classify(P("x^3-x+y^3-y", 2));
  EXPECT_EQ(case_ii.over_q, RationalVerdict::ConditionalCaseII);
  EXPECT_EQ(certificate_kind(*case_ii.q_certificate), "additive");
}

TEST(Classify, DegenerateVariableDependence) {
  const auto v = classify(P("y^3+y"));
  EXPECT_EQ(v.variables, (std::vector<std::size_t>{1}));
  EXPECT_EQ(v.over_q, RationalVerdict::NonExpander);
  EXPECT_EQ(certificate_kind(*v.q_certificate), "linear");
  EXPECT_TRUE(has_diagnostic(v, "does not depend on x"));
}

TEST(ClassifyHomogeneous, Examples) {
  const auto a = classify_homogeneous(P("xyz"));
  EXPECT_EQ(a.form, HomogeneousVerdict::Form::MonomialPower);
  EXPECT_EQ(a.scale, Rational(1));
  EXPECT_EQ(a.alpha, 1U);
  const auto b = classify_homogeneous(P("(x+y+z)^2"));
  EXPECT_EQ(b.form, HomogeneousVerdict::Form::LinearPower);
  EXPECT_EQ(b.alpha, 2U);
  EXPECT_EQ(b.coeffs, (std::vector<Rational>{1, 1}));
  const auto c = classify_homogeneous(P("x^2y+z^3"));
  EXPECT_FALSE(c.non_expander);
  EXPECT_FALSE(detect_linear_form(P("x^2y+z^3")));
  EXPECT_FALSE(detect_power_product_form(P("x^2y+z^3")));
  const auto d = classify_homogeneous(P("-3(x^2yz^3)^2"));
  EXPECT_EQ(d.form, HomogeneousVerdict::Form::MonomialPower);
  EXPECT_EQ(d.scale, Rational(-3));
  EXPECT_EQ(d.exponents, (std::vector<std::uint32_t>{2, 1, 3}));
  EXPECT_EQ(d.alpha, 2U);
  EXPECT_THROW(classify_homogeneous(P("x^2+y")), DomainError);
}

// ---------------------------------------------------------------------------
// Properties

namespace {

using gen::Engine;

Polynomial random_outer(Engine& rng) {
  return gen::random_univariate(rng, gen::uniform(rng, 1, 3));
}

}  // namespace

TEST(DecomposeProperties, LinearCompleteness) {
  Engine rng(401);
  for (int i = 0; i < 200; ++i) {
    const std::size_t n = gen::uniform(rng, 2, 3);
    std::vector<Rational> c{1};
    for (std::size_t v = 1; v < n; ++v) c.push_back(gen::small_rational(rng));
    const Polynomial f = random_outer(rng);
    const Polynomial F = compose_univariate(f, LinearFormResult::make(compose_univariate(f, [&] {
                                                                        Polynomial w(n);
                                                                        for (std::size_t v = 0; v < n; ++v)
                                                                          w += Polynomial::variable(n, v) * c[v];
                                                                        return w;
                                                                      }()),
                                                                      f, c)
                                                       .inner());
    const auto r = detect_linear_form(F);
    ASSERT_TRUE(r);
    ASSERT_EQ(r->recompose(), F);
    ASSERT_EQ(r->coeffs(), c);
  }
}

TEST(DecomposeProperties, PowerProductCompleteness) {
  Engine rng(402);
  for (int i = 0; i < 200; ++i) {
    const std::size_t n = gen::uniform(rng, 2, 3);
    std::vector<Rational> shifts;
    std::vector<std::uint32_t> exps;
    Polynomial w(n, Rational(1));
    for (std::size_t v = 0; v < n; ++v) {
      shifts.push_back(gen::small_rational(rng, 4, 2));
      exps.push_back(static_cast<std::uint32_t>(gen::uniform(rng, 1, 3)));
      w *= (Polynomial::variable(n, v) + Polynomial(n, shifts.back())).pow(exps.back());
    }
    const Polynomial F = compose_univariate(gen::random_univariate(rng, gen::uniform(rng, 1, 2)), w);
    const auto r = detect_power_product_form(F);
    ASSERT_TRUE(r) << format_polynomial(F, std::span(kXYZ).first(n));
    ASSERT_EQ(r->recompose(), F);
    ASSERT_EQ(r->shifts(), shifts);
  }
}

TEST(DecomposeProperties, AdditiveCompleteness) {
  Engine rng(403);
  for (int i = 0; i < 200; ++i) {
    const std::size_t n = gen::uniform(rng, 2, 3);
    Polynomial w(n);
    for (std::size_t v = 0; v < n; ++v) {
      w += embed(gen::random_univariate(rng, gen::uniform(rng, 1, 4), false, true), n, v);
    }
    const Polynomial F = compose_univariate(random_outer(rng), w);
    const auto r = detect_additive_form(F);
    ASSERT_TRUE(r) << format_polynomial(F, std::span(kXYZ).first(n));
    ASSERT_EQ(r->recompose(), F);
  }
}

TEST(DecomposeProperties, MultiplicativeCompleteness) {
  Engine rng(404);
  for (int i = 0; i < 200; ++i) {
    const std::size_t n = gen::uniform(rng, 2, 3);
    Polynomial w(n, Rational(1));
    for (std::size_t v = 0; v < n; ++v) {
      w *= embed(gen::random_univariate(rng, gen::uniform(rng, 1, 3), true), n, v);
    }
    const Polynomial F = compose_univariate(gen::random_univariate(rng, gen::uniform(rng, 1, 2)), w);
    const auto r = detect_multiplicative_form(F);
    ASSERT_TRUE(r) << format_polynomial(F, std::span(kXYZ).first(n));
    ASSERT_EQ(r->recompose(), F);
  }
}

TEST(DecomposeProperties, LinearImpliesAdditiveWithDegreeOneInners) {
  Engine rng(405);
  for (int i = 0; i < 100; ++i) {
    const std::size_t n = gen::uniform(rng, 2, 3);
    Polynomial w = Polynomial::variable(n, 0);
    for (std::size_t v = 1; v < n; ++v) w += Polynomial::variable(n, v) * gen::nonzero_rational(rng);
    const Polynomial F = compose_univariate(random_outer(rng), w);
    ASSERT_TRUE(detect_linear_form(F));
    const auto add = detect_additive_form(F);
    ASSERT_TRUE(add);
    for (const auto& g : add->inners()) ASSERT_EQ(g.degree(), 1U);
    const auto verdict = classify(F);
    ASSERT_EQ(certificate_kind(*verdict.q_certificate), "linear");
  }
}

namespace {

// A mixed bag of inputs covering every verdict category.
std::vector<Polynomial> verdict_corpus(Engine& rng) {
  std::vector<Polynomial> out{P(kTripleProduct), P(kCubicSquare, 2), P("x^2+xy+z"), P("x^2+y^2", 2),
                              P("x^3-x+y^3-y", 2), P("(x+2y-z)^3+1"), P("(x+1)^2(y-1)z^3"),
                              P("x^2y+z^3"), P("xy+x+y^2", 2)};
  for (int i = 0; i < 20; ++i) {
    const auto p = gen::random_polynomial(rng, gen::uniform(rng, 2, 3), 4, 4);
    if (support_variables(p).size() == p.arity()) out.push_back(p);
  }
  return out;
}

}  // namespace

TEST(DecomposeProperties, VerdictInvariantUnderScaling) {
  Engine rng(406);
  for (const auto& F : verdict_corpus(rng)) {
    const auto base = classify(F);
    for (int k = 0; k < 3; ++k) {
      const auto scaled = classify(F * gen::nonzero_rational(rng));
      ASSERT_EQ(scaled.over_q, base.over_q) << format_polynomial(F, std::span(kXYZ).first(F.arity()));
      ASSERT_EQ(scaled.over_r, base.over_r);
    }
  }
}

TEST(DecomposeProperties, VerdictInvariantUnderShift) {
  Engine rng(407);
  for (const auto& F : verdict_corpus(rng)) {
    const auto base = classify(F);
    for (int k = 0; k < 3; ++k) {
      const auto moved = classify(shift(F, gen::random_point(rng, F.arity())));
      ASSERT_EQ(moved.over_q, base.over_q) << format_polynomial(F, std::span(kXYZ).first(F.arity()));
      ASSERT_EQ(moved.over_r, base.over_r);
    }
  }
}

TEST(DecomposeProperties, VariablesCompressRoundTrip) {
  const Polynomial F = P("y^2z-z");
  const std::vector<std::size_t> keep{1, 2};
  const Polynomial G = compress_variables(F, keep);
  EXPECT_EQ(G.arity(), 2U);
  EXPECT_EQ(expand_variables(G, keep, 3), F);
  const std::vector<std::size_t> drop_used{1};
  EXPECT_THROW(compress_variables(F, drop_used), DomainError);
}
