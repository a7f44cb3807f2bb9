#include <gtest/gtest.h>

#include "erq/error.hpp"
#include "erq/parser.hpp"
#include "unit/generators.hpp"

using namespace erq;

namespace {

const std::vector<std::string> kXYZ{"x", "y", "z"};

std::size_t error_column(std::string_view text, std::span<const std::string> vars = kXYZ) {
  try {
    parse_polynomial(text, vars);
  } catch (const ParseError& e) {
    return e.column();
  }
  ADD_FAILURE() << "no parse error for " << text;
  return 0;
}

}  // namespace

TEST(Parser, FixturePolynomials) {
  const std::vector<std::string> xy{"x", "y"};
  const Polynomial chang = parse_polynomial("x^2+y^2", xy);
  EXPECT_EQ(chang, Polynomial::variable(2, 0).pow(2) + Polynomial::variable(2, 1).pow(2));
  const Polynomial ex1 = parse_polynomial("x^2y^2z+x^2y^2+x^2z+x^2-y^2z-y^2-z-1", kXYZ);
  EXPECT_EQ(ex1.size(), 8U);
  const Polynomial x = Polynomial::variable(3, 0), y = Polynomial::variable(3, 1), z = Polynomial::variable(3, 2);
  const Polynomial one(3, Rational(1));
  EXPECT_EQ(ex1, (x.pow(2) - one) * (y.pow(2) + one) * (z + one));
  const std::vector<std::string> just_x{"x"};
  EXPECT_EQ(parse_polynomial("(x+1)^2", just_x), parse_polynomial("x^2+2x+1", just_x));
}

TEST(Parser, Precedence) {
  const std::vector<std::string> xy{"x", "y"};
  EXPECT_EQ(parse_polynomial("2x^3y", xy), parse_polynomial("2*(x^3)*y", xy));
  EXPECT_EQ(parse_polynomial("-x^2", xy), parse_polynomial("-(x^2)", xy));
  EXPECT_EQ(parse_polynomial("1/2x", xy), parse_polynomial("(1/2)*x", xy));
  EXPECT_EQ(parse_polynomial(" x  -  y ", xy), parse_polynomial("x-y", xy));
  EXPECT_EQ(parse_polynomial("(x+y)(x-y)", xy), parse_polynomial("x^2-y^2", xy));
  EXPECT_EQ(parse_polynomial("--x", xy), parse_polynomial("x", xy));
  EXPECT_EQ(parse_polynomial("x^2^3", xy), parse_polynomial("x^6", xy));
}

TEST(Parser, MultiCharacterNames) {
  const std::vector<std::string> vars{"a1", "b"};
  const Polynomial p = parse_polynomial("a1^2*b-3", vars);
  EXPECT_EQ(format_polynomial(p, vars), "a1^2*b-3");
}

TEST(Parser, ErrorsCarryPositions) {
  EXPECT_EQ(error_column("x + w"), 5U);
  EXPECT_EQ(error_column("x^-2"), 3U);
  EXPECT_EQ(error_column("x^(1/2)"), 3U);
  EXPECT_EQ(error_column("(x+y"), 1U);
  EXPECT_EQ(error_column("x+y)"), 4U);
  EXPECT_EQ(error_column(""), 1U);
  EXPECT_EQ(error_column("   "), 1U);
  EXPECT_EQ(error_column("(x+1)^400^400"), 11U);
  EXPECT_EQ(error_column("x^^2"), 3U);
  EXPECT_EQ(error_column("1/0"), 3U);
  EXPECT_EQ(error_column("x+"), 3U);
}

TEST(Parser, VariableList) {
  EXPECT_EQ(parse_variable_list("x,y,z"), kXYZ);
  EXPECT_THROW(parse_variable_list("x,x"), DomainError);
  EXPECT_THROW(parse_variable_list("x,1y"), DomainError);
}

TEST(Formatter, Examples) {
  const std::vector<std::string> xy{"x", "y"};
  EXPECT_EQ(format_polynomial(parse_polynomial("(x+y)(x-y)", xy), xy), "x^2-y^2");
  EXPECT_EQ(format_polynomial(Polynomial(2), xy), "0");
  const Polynomial ex1 = parse_polynomial("(x^2-1)(y^2+1)(z+1)", kXYZ);
  EXPECT_EQ(format_polynomial(ex1, kXYZ), "x^2y^2z+x^2y^2+x^2z+x^2-y^2z-y^2-z-1");
  EXPECT_EQ(format_polynomial(parse_polynomial("-1/2x+3/4", xy), xy), "-1/2x+3/4");
}

TEST(ParserProperties, RoundTrip) {
  gen::Engine rng(301);
  const std::vector<std::string> long_names{"alpha", "beta", "gamma"};
  for (int i = 0; i < 500; ++i) {
    const std::size_t n = gen::uniform(rng, 1, 3);
    const auto& names = (i % 5 == 0) ? long_names : kXYZ;
    const auto vars = std::span(names).first(n);
    const auto p = gen::random_polynomial(rng, n, 7, 8);
    const std::string text = format_polynomial(p, vars);
    ASSERT_EQ(parse_polynomial(text, vars), p) << text;
  }
}

TEST(ParserProperties, GarbageNeverCrashes) {
  gen::Engine rng(302);
  const std::string alphabet = "xyz0123456789+-*/^() .w";
  for (int i = 0; i < 2000; ++i) {
    std::string text;
    const auto len = gen::uniform(rng, 0, 12);
    for (long k = 0; k < len; ++k) text += alphabet[gen::uniform(rng, 0, static_cast<long>(alphabet.size()) - 1)];
    try {
      parse_polynomial(text, kXYZ);
    } catch (const ParseError& e) {
      ASSERT_GE(e.column(), 1U);
      ASSERT_LE(e.column(), text.size() + 1);
    } catch (const Error&) {
      // overflowing exponents etc. surface as library errors
    }
  }
}
