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

#include "tenzan/notation.hpp"

namespace tenzan {
namespace {

std::string kanji(const char* s) { return render_sidewriting(parse_expr(s), GlyphMode::Kanji); }
std::string ascii(const char* s) { return render_sidewriting(parse_expr(s), GlyphMode::Ascii); }

TEST(SideWriting, FigureOneLayout) {
  EXPECT_EQ(kanji("a + b/2 - c"), "|甲  二|乙  |̸丙\n");
  EXPECT_EQ(ascii("a + b/2 - c"), "|a  2|b  X|c\n");
}

TEST(SideWriting, TalliesAndLabels) {
  EXPECT_EQ(kanji("a"), "|甲\n");
  EXPECT_EQ(kanji("2*a"), "||甲\n");
  EXPECT_EQ(ascii("4*b"), "||||b\n");
  EXPECT_EQ(kanji("12*a"), "十二|甲\n");
  EXPECT_EQ(ascii("-12*a"), "X12|a\n");
  EXPECT_EQ(kanji("3"), "|||\n");
}

TEST(SideWriting, DenominatorSitsLeftOfStroke) {
  EXPECT_EQ(kanji("a/b"), "乙|甲\n");
  EXPECT_EQ(ascii("a/b"), "b|a\n");
}

TEST(SideWriting, FactorsStackDownward) {
  EXPECT_EQ(kanji("sqrt(2)*b + a + b"), "|二商  |甲  |乙\n 乙\n");
  EXPECT_EQ(ascii("sqrt(2)*b + a + b"), "|sq2  |a  |b\n b\n");
}

TEST(SideWriting, PowersAndGroups) {
  EXPECT_EQ(kanji("a^2"), "|甲巾\n");
  EXPECT_EQ(kanji("a^3"), "|甲三乘\n");
  EXPECT_EQ(ascii("a^3"), "|a^3\n");
  EXPECT_EQ(kanji("b*(sqrt(2) + 1)"), "|乙\n 「二商加一」\n");
  EXPECT_EQ(kanji("(a - b)"), "|「甲去乙」\n");
  EXPECT_EQ(ascii("b*(sqrt(2) + 1)"), "|b\n (sqrt(2) + 1)\n");
}

TEST(SideWriting, Zero) {
  EXPECT_EQ(kanji("0"), "〇\n");
  EXPECT_EQ(ascii("0"), "0\n");
}

TEST(SideWriting, Deterministic) {
  const char* s = "b*(sqrt(2) + 1) - sqrt(2)*a*(sqrt(2) - 1)*(sqrt(2) + 1)/c";
  EXPECT_EQ(kanji(s), kanji(s));
  EXPECT_EQ(ascii(s), ascii(s));
}

TEST(DisplayWidth, CountsColumns) {
  EXPECT_EQ(display_width("abc"), 3u);
  EXPECT_EQ(display_width("甲乙"), 4u);
  EXPECT_EQ(display_width("|̸"), 1u);
  EXPECT_EQ(display_width("「」"), 4u);
}

}  // namespace
}  // namespace tenzan
