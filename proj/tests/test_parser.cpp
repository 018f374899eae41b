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

#include "tenzan/error.hpp"
#include "tenzan/labels.hpp"
#include "tenzan/notation.hpp"

namespace tenzan {
namespace {

ErrorCode code_of(const char* text) {
  try {
    parse_expr(text);
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "expected an error for " << text;
  return ErrorCode::Overflow;
}

TEST(Labels, AllSpellingsAgree) {
  for (int i = 0; i < kLabelCount; ++i) {
    const auto& info = label_info(i);
    EXPECT_EQ(find_label(info.kanji), i);
    EXPECT_EQ(find_label(info.romanized), i);
    EXPECT_EQ(find_label(info.ascii), i);
  }
  EXPECT_EQ(find_label("甲"), 0);
  EXPECT_EQ(find_label("乙"), 1);
  EXPECT_EQ(find_label("方斜"), kDiagonal);
  EXPECT_FALSE(find_label("y"));
}

TEST(Parser, FigureOneExpression) {
  Expr e = parse_expr("a + b/2 - c");
  ASSERT_EQ(e.terms.size(), 3u);
  EXPECT_EQ(e.terms[1].denominator_coefficient, 2);
  EXPECT_EQ(e.terms[2].sign, -1);
}

TEST(Parser, GroupsStayAtoms) {
  Expr e = parse_expr("b*(sqrt(2) + 1) - sqrt(2)*a");
  ASSERT_EQ(e.terms.size(), 2u);
  ASSERT_EQ(e.terms[0].factors.size(), 2u);
  EXPECT_TRUE(std::holds_alternative<Group>(e.terms[0].factors[1].atom));
}

TEST(Parser, KanjiAndRomanizedLabels) {
  EXPECT_EQ(parse_expr("甲 + 乙"), parse_expr("a + b"));
  EXPECT_EQ(parse_expr("ko*otsu"), parse_expr("a*b"));
  EXPECT_EQ(parse_expr("方斜"), parse_expr("x"));
}

TEST(Parser, SqrtNormalization) {
  EXPECT_EQ(render_modern(parse_expr("sqrt(8)")), "2*sqrt(2)");
  EXPECT_EQ(render_modern(parse_expr("sqrt(4)*a")), "2*a");
  EXPECT_EQ(code_of("sqrt(1000003*1000003)"), ErrorCode::NestedRadical);
  EXPECT_EQ(code_of("sqrt(2000000)"), ErrorCode::RadicandTooLarge);
}

TEST(Parser, Errors) {
  EXPECT_EQ(code_of(""), ErrorCode::SyntaxError);
  EXPECT_EQ(code_of("a +"), ErrorCode::SyntaxError);
  EXPECT_EQ(code_of("a/0"), ErrorCode::ZeroDenominator);
  EXPECT_EQ(code_of("y"), ErrorCode::UnknownLabel);
  EXPECT_EQ(code_of("a^0"), ErrorCode::SyntaxError);
  try {
    parse_expr("a + * b");
    FAIL();
  } catch (const SyntaxError& e) {
    EXPECT_EQ(e.line(), 1);
    EXPECT_EQ(e.column(), 5);
  }
}

TEST(Parser, ZeroAnnihilates) {
  EXPECT_TRUE(parse_expr("0").is_zero_literal());
  EXPECT_EQ(parse_expr("a + 0*b"), parse_expr("a"));
}

TEST(Parser, PrefixStopsAtNonOperator) {
  std::string text = "a*(b + c) => e";
  std::size_t offset = 0;
  Expr e = parse_expr_prefix(text, offset);
  EXPECT_EQ(render_modern(e), "a*(b + c)");
  EXPECT_EQ(text.substr(offset), "=> e");
}

TEST(Parser, Equations) {
  Equation q = parse_equation("sqrt(2)*b + a + b == x");
  EXPECT_EQ(q.lhs.terms.size(), 3u);
  EXPECT_EQ(render_modern(q), "sqrt(2)*b + a + b == x");
  EXPECT_THROW(parse_equation("a = b"), Error);
}

TEST(Render, ModernForms) {
  EXPECT_EQ(render_modern(parse_expr("b*(sqrt(2)+1)-sqrt(2)*a")), "b*(sqrt(2) + 1) - sqrt(2)*a");
  EXPECT_EQ(render_modern(parse_expr("0")), "0");
  EXPECT_EQ(render_modern(parse_expr("a^2/b + 2*a + b")), "a^2/b + 2*a + b");
  EXPECT_EQ(render_modern(parse_expr("-a + 1/2")), "-a + 1/2");
  EXPECT_EQ(render_modern(parse_expr("sqrt(2)/(sqrt(2) + 1)*a")), "sqrt(2)*a/(sqrt(2) + 1)");
}

TEST(Render, RoundTripCorpusExpressions) {
  for (const char* s : {"a + b/2 - c", "sqrt(2)*b + a + b - sqrt(2)*a - a",
                        "b*(sqrt(2) + 1) - sqrt(2)*a*(sqrt(2) - 1)*(sqrt(2) + 1)",
                        "sqrt(2)*(sqrt(2) - 1)/(sqrt(2) + 1)/(sqrt(2) - 1)*a", "(a - b)^2 + 4*a*b",
                        "a^2/b + 2*a*b/b + b^2/b", "3*x*(a + b + c) - 6*a*b", "-(a - (b + c))"}) {
    Expr e = parse_expr(s);
    EXPECT_EQ(parse_expr(render_modern(e)), e) << s;
  }
}

}  // namespace
}  // namespace tenzan
