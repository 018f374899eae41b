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
#include "tenzan/numerals.hpp"

namespace tenzan {
namespace {

ErrorCode code_of(void (*f)()) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "expected an error";
  return ErrorCode::Overflow;
}

TEST(KanjiNumerals, PlaceValue) {
  EXPECT_EQ(parse_kanji_numeral("十五"), 15);
  EXPECT_EQ(parse_kanji_numeral("二十"), 20);
  EXPECT_EQ(parse_kanji_numeral("七"), 7);
  EXPECT_EQ(parse_kanji_numeral("千九百九十九"), 1999);
  EXPECT_EQ(parse_kanji_numeral("九千九百九十九"), 9999);
  EXPECT_EQ(to_kanji_numeral(15), "十五");
  EXPECT_EQ(to_kanji_numeral(20), "二十");
  EXPECT_EQ(to_kanji_numeral(105), "百五");
}

TEST(KanjiNumerals, RoundTripAll) {
  for (long n = 1; n <= 9999; ++n) ASSERT_EQ(parse_kanji_numeral(to_kanji_numeral(n)), n) << n;
}

TEST(KanjiNumerals, Malformed) {
  EXPECT_EQ(code_of([] { parse_kanji_numeral("万"); }), ErrorCode::MalformedNumeral);
  EXPECT_EQ(code_of([] { parse_kanji_numeral("十百"); }), ErrorCode::MalformedNumeral);
  EXPECT_EQ(code_of([] { parse_kanji_numeral("五五"); }), ErrorCode::MalformedNumeral);
  EXPECT_EQ(code_of([] { parse_kanji_numeral(""); }), ErrorCode::MalformedNumeral);
  EXPECT_EQ(code_of([] { to_kanji_numeral(10000); }), ErrorCode::MalformedNumeral);
}

TEST(Lengths, ParseTabletAnswer) {
  TraditionalLength l = parse_traditional_length("五分八厘五毛");
  EXPECT_EQ(l, (TraditionalLength{0, 5, 8, 5}));
  EXPECT_EQ(l.value_in_sun(), Rational::parse("0.585"));
  EXPECT_EQ(parse_traditional_length("一寸").value_in_sun(), Rational(1));
  EXPECT_EQ(parse_traditional_length("一寸五分").value_in_sun(), Rational::parse("1.5"));
  EXPECT_EQ(parse_traditional_length("十二寸三毛").value_in_sun(), Rational::parse("12.003"));
}

TEST(Lengths, ParseErrors) {
  EXPECT_EQ(code_of([] { parse_traditional_length("五分五分"); }), ErrorCode::RepeatedUnit);
  EXPECT_EQ(code_of([] { parse_traditional_length("五厘八分"); }), ErrorCode::MalformedLength);
  EXPECT_EQ(code_of([] { parse_traditional_length("分"); }), ErrorCode::MalformedLength);
  EXPECT_EQ(code_of([] { parse_traditional_length("五"); }), ErrorCode::MalformedLength);
  EXPECT_EQ(code_of([] { parse_traditional_length("十分"); }), ErrorCode::MalformedLength);
  EXPECT_EQ(code_of([] { parse_traditional_length(""); }), ErrorCode::MalformedLength);
}

TEST(Lengths, FormatTruncates) {
  SurdNumber answer = SurdNumber(2) - SurdNumber::sqrt_of(2);
  EXPECT_EQ(format_traditional_length(answer), "五分八厘五毛");
  EXPECT_EQ(format_traditional_length(SurdNumber(Rational::parse("0.585"))), "五分八厘五毛");
  EXPECT_EQ(format_traditional_length(SurdNumber(Rational::parse("0.5859999"))), "五分八厘五毛");
  EXPECT_EQ(format_traditional_length(SurdNumber(1)), "一寸");
  EXPECT_EQ(format_traditional_length(SurdNumber()), "零");
  EXPECT_EQ(format_ascii(truncate_to_length(answer)), "5 bu 8 rin 5 mo");
  EXPECT_EQ(format_ascii(truncate_to_length(SurdNumber(1))), "1 sun");
  EXPECT_EQ(format_sun_decimal(truncate_to_length(SurdNumber(1))), "1.0");
  EXPECT_EQ(code_of([] { format_traditional_length(SurdNumber(-1)); }), ErrorCode::NegativeLength);
}

TEST(Lengths, FormatAndParseAreInverse) {
  for (long mo = 0; mo <= 20000; mo += 7) {
    Rational v(BigInt(mo), BigInt(1000));
    std::string text = format_traditional_length(SurdNumber(v));
    if (mo == 0) continue;
    ASSERT_EQ(parse_traditional_length(text).value_in_sun(), v) << text;
  }
}

}  // namespace
}  // namespace tenzan
