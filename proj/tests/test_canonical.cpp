// Copyright 2026 The Tenzan Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include "tenzan/canonical.hpp"
#include "tenzan/error.hpp"
#include "tenzan/evaluate.hpp"
#include "tenzan/notation.hpp"

namespace tenzan {
namespace {

Expr P(const char* s) { return parse_expr(s); }
Equation Q(const char* s) { return parse_equation(s); }

TEST(Canonical, ExpandsProductsOfGroups) {
  EXPECT_TRUE(semantically_equal(P("(a + b)*(a - b)"), P("a^2 - b^2")));
  EXPECT_TRUE(semantically_equal(P("(a + b)^2"), P("a^2 + 2*a*b + b^2")));
  EXPECT_FALSE(semantically_equal(P("(a + b)^2"), P("a^2 + b^2")));
}

TEST(Canonical, SurdCoefficients) {
  EXPECT_TRUE(semantically_equal(P("sqrt(2)*a*(sqrt(2) - 1)"), P("2*a - sqrt(2)*a")));
  EXPECT_TRUE(semantically_equal(P("(sqrt(2) - 1)*(sqrt(2) + 1)"), P("1")));
  EXPECT_TRUE(semantically_equal(P("sqrt(6)"), P("sqrt(2)*sqrt(3)")));
}

TEST(Canonical, QuotientsCompareByCrossMultiplication) {
  EXPECT_TRUE(semantically_equal(P("sqrt(2)/(sqrt(2) + 1)*a"), P("(2 - sqrt(2))*a")));
  EXPECT_TRUE(semantically_equal(P("a^2/b + 2*a + b"), P("a^2/b + 2*a*b/b + b^2/b")));
  EXPECT_TRUE(semantically_equal(P("1/2 + a"), P("1/2 + 2*a/2")));
  EXPECT_TRUE(semantically_equal(P("(a^2 - b^2)/(a - b)"), P("a + b")));
  EXPECT_FALSE(semantically_equal(P("a/b"), P("b/a")));
}

TEST(Canonical, ZeroDenominator) {
  try {
    canonical_form(P("a/(b - b)"));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::ZeroDenominator);
  }
}

TEST(Canonical, EquationEquivalenceUpToScale) {
  EXPECT_TRUE(equation_equivalent(Q("b - 2*a + sqrt(2)*a == 0"), Q("2*a - sqrt(2)*a == b")));
  EXPECT_FALSE(equation_equivalent(Q("b - 2*a + sqrt(2)*a == 0"), Q("-2*a + sqrt(2)*a == b")));
  EXPECT_TRUE(equation_equivalent(Q("3*a == 6*b"), Q("a == 2*b")));
  EXPECT_TRUE(equation_equivalent(Q("b == sqrt(2)/(sqrt(2) + 1)*a"), Q("b == (2 - sqrt(2))*a")));
  EXPECT_TRUE(equation_equivalent(Q("a == a"), Q("0 == 0")));
  EXPECT_FALSE(equation_equivalent(Q("a == 0"), Q("0 == 0")));
}

TEST(Canonical, NormalizedEquationIsShared) {
  auto corrected = normalized_equation(Q("2*a - sqrt(2)*a == b"));
  auto modern = normalized_equation(Q("b == (2 - sqrt(2))*a"));
  EXPECT_EQ(corrected, modern);
  EXPECT_TRUE(normalized_equation(Q("a == a")).empty());
}

TEST(Canonical, DivideExact) {
  auto num = canonical_form(P("a^2 - b^2")).numerator;
  auto den = canonical_form(P("a + b")).numerator;
  auto q = divide_exact(num, den);
  ASSERT_TRUE(q);
  EXPECT_TRUE(semantically_equal(to_expr(*q), P("a - b")));
  EXPECT_FALSE(divide_exact(num, canonical_form(P("a + 2*b")).numerator));
  auto surd = divide_exact(canonical_form(P("sqrt(2)*b + b")).numerator, canonical_form(P("sqrt(2) + 1")).numerator);
  ASSERT_TRUE(surd);
  EXPECT_EQ(render_modern(to_expr(*surd)), "b");
}

TEST(Canonical, ToExprRoundTrip) {
  for (const char* s : {"a^2 - b^2", "2 - sqrt(2)", "sqrt(2)*a*b + 1/3", "(a + b)/(a - b)", "0"}) {
    Expr e = P(s);
    EXPECT_TRUE(semantically_equal(to_expr(canonical_form(e)), e)) << s;
  }
  EXPECT_EQ(render_modern(to_expr(canonical_form(P("(2 - sqrt(2))*a")))), "2*a - sqrt(2)*a");
}

TEST(Evaluate, StructuralEvaluation) {
  Bindings one{{0, SurdNumber(1)}};
  EXPECT_EQ(evaluate(P("(2 - sqrt(2))*a"), one).to_string(), "2 - sqrt(2)");
  EXPECT_EQ(evaluate(P("sqrt(2)/(sqrt(2) + 1)*a"), one).to_string(), "2 - sqrt(2)");
  Bindings two{{0, SurdNumber(2)}};
  EXPECT_EQ(evaluate(P("(2 - sqrt(2))*a"), two).to_decimal(10), "1.171572875");
  EXPECT_EQ(evaluate(P("0"), {}), SurdNumber());
}

TEST(Evaluate, Errors) {
  try {
    evaluate(P("a + b"), {{0, SurdNumber(1)}});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::UnboundVariable);
  }
  try {
    evaluate(P("1/(a - 1)"), {{0, SurdNumber(1)}});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::ZeroDenominator);
  }
}

TEST(Evaluate, AgreesWithCanonicalPolynomial) {
  Bindings b{{0, SurdNumber(Rational(BigInt(7), BigInt(3)))}, {1, SurdNumber::sqrt_of(3)}, {2, SurdNumber(-2)}};
  for (const char* s : {"(a + b)^3 - c*(sqrt(2) - a)", "a*(b + c)*(a - sqrt(5))", "3*c^2 - 2*a*b"}) {
    Expr e = P(s);
    EXPECT_EQ(evaluate(e, b), evaluate(canonical_form(e).numerator, b)) << s;
  }
}

}  // namespace
}  // namespace tenzan
