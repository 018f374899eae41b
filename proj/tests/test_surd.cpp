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

#include <cmath>

#include <gtest/gtest.h>

#include "tenzan/error.hpp"
#include "tenzan/surd.hpp"

namespace tenzan {
namespace {

SurdNumber root(std::uint64_t n) { return SurdNumber::sqrt_of(n); }

TEST(Rational, KeepsLowestTerms) {
  Rational r(BigInt(6), BigInt(-4));
  EXPECT_EQ(r.numerator(), -3);
  EXPECT_EQ(r.denominator(), 2);
  EXPECT_EQ(r.to_string(), "-3/2");
}

TEST(Rational, ZeroDenominatorThrows) {
  try {
    Rational(BigInt(1), BigInt(0));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::ZeroDenominator);
  }
}

TEST(Rational, ParsesIntegersFractionsAndDecimals) {
  EXPECT_EQ(Rational::parse("7"), Rational(7));
  EXPECT_EQ(Rational::parse("-7/3"), Rational(BigInt(-7), BigInt(3)));
  EXPECT_EQ(Rational::parse("0.585"), Rational(BigInt(117), BigInt(200)));
  EXPECT_EQ(Rational::parse("0.5857864"), Rational(BigInt(5857864), BigInt(10000000)));
  EXPECT_EQ(Rational::parse("010"), Rational(10));
  EXPECT_THROW(Rational::parse("1.2.3"), Error);
  EXPECT_THROW(Rational::parse(""), Error);
}

TEST(Rational, Floor) {
  EXPECT_EQ(Rational(BigInt(-7), BigInt(2)).floor(), -4);
  EXPECT_EQ(Rational(BigInt(7), BigInt(2)).floor(), 3);
}

TEST(Squarefree, SplitsSquareFactor) {
  EXPECT_EQ(squarefree_split(8), std::make_pair(std::uint64_t{2}, std::uint64_t{2}));
  EXPECT_EQ(squarefree_split(72), std::make_pair(std::uint64_t{6}, std::uint64_t{2}));
  EXPECT_EQ(squarefree_split(49), std::make_pair(std::uint64_t{7}, std::uint64_t{1}));
  EXPECT_EQ(squarefree_split(30), std::make_pair(std::uint64_t{1}, std::uint64_t{30}));
  EXPECT_TRUE(is_squarefree(30));
  EXPECT_FALSE(is_squarefree(12));
}

TEST(Surd, SqrtNormalizes) {
  EXPECT_EQ(root(8), SurdNumber(2) * root(2));
  EXPECT_EQ(root(9), SurdNumber(3));
  EXPECT_EQ(root(0), SurdNumber());
  EXPECT_TRUE(root(4).is_rational());
  EXPECT_FALSE(root(2).is_rational());
}

TEST(Surd, ProductFoldsSquares) {
  EXPECT_EQ(root(2) * root(3), root(6));
  EXPECT_EQ(root(6) * root(2), SurdNumber(2) * root(3));
  EXPECT_EQ(root(2) * root(2), SurdNumber(2));
  EXPECT_EQ((root(2) - SurdNumber(1)) * (root(2) + SurdNumber(1)), SurdNumber(1));
  EXPECT_EQ((root(3) - SurdNumber(2)) * (root(3) + SurdNumber(2)), SurdNumber(-1));
}

TEST(Surd, InverseRationalizes) {
  EXPECT_EQ((root(2) + SurdNumber(1)).inverse(), root(2) - SurdNumber(1));
  SurdNumber mixed = root(2) + root(3) + SurdNumber(1);
  EXPECT_EQ(mixed * mixed.inverse(), SurdNumber(1));
  SurdNumber three = root(2) + root(3) + root(5);
  EXPECT_EQ(three * three.inverse(), SurdNumber(1));
  EXPECT_THROW(SurdNumber().inverse(), Error);
}

TEST(Surd, SignOfNearlyCancellingValues) {
  // 1414213562/10^9 is just below sqrt(2).
  SurdNumber below = root(2) - SurdNumber(Rational(BigInt(1414213562), BigInt(1000000000)));
  EXPECT_EQ(below.sign(), 1);
  SurdNumber above = root(2) - SurdNumber(Rational(BigInt(1414213563), BigInt(1000000000)));
  EXPECT_EQ(above.sign(), -1);
  EXPECT_EQ((root(2) + root(3) - root(10)).sign(), -1);  // 3.146... < 3.162...
  EXPECT_EQ(SurdNumber().sign(), 0);
}

TEST(Surd, DecimalRounding) {
  SurdNumber answer = SurdNumber(2) - root(2);
  EXPECT_EQ(answer.to_decimal(9), "0.585786438");
  EXPECT_EQ(answer.to_decimal(6), "0.585786");
  EXPECT_EQ(root(2).to_decimal(9), "1.41421356");
  EXPECT_EQ(SurdNumber(Rational(BigInt(1), BigInt(2))).to_decimal(9), "0.5");
  EXPECT_EQ(SurdNumber().to_decimal(9), "0");
  EXPECT_EQ((-answer).to_decimal(9), "-0.585786438");
  EXPECT_NEAR(answer.to_double(), 2.0 - std::sqrt(2.0), 1e-15);
}

TEST(Surd, FloorScaled) {
  SurdNumber answer = SurdNumber(2) - root(2);
  EXPECT_EQ(answer.floor_scaled(1000), 585);
  EXPECT_EQ(SurdNumber(Rational::parse("0.585")).floor_scaled(1000), 585);
  EXPECT_EQ((-answer).floor_scaled(1000), -586);
}

TEST(Surd, LinearText) {
  EXPECT_EQ((SurdNumber(2) - root(2)).to_string(), "2 - sqrt(2)");
  EXPECT_EQ((SurdNumber(Rational(BigInt(1), BigInt(2))) * root(2)).to_string(), "1/2*sqrt(2)");
  EXPECT_EQ((root(2) - SurdNumber(2)).to_string(), "-2 + sqrt(2)");
  EXPECT_EQ(SurdNumber().to_string(), "0");
  EXPECT_EQ((SurdNumber(3) * root(5)).to_string(), "3*sqrt(5)");
}

}  // namespace
}  // namespace tenzan
