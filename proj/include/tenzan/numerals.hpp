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

#pragma once

#include <string>
#include <string_view>

#include "tenzan/rational.hpp"
#include "tenzan/surd.hpp"

namespace tenzan {

// Kanji place-value numerals 一..九 with 十 百 千, values 1..9999.
long parse_kanji_numeral(std::string_view text);
std::string to_kanji_numeral(long value);

// 1 sun = 10 bu = 100 rin = 1000 mo.
struct TraditionalLength {
  long sun = 0;
  int bu = 0;
  int rin = 0;
  int mo = 0;

  Rational value_in_sun() const;
  friend bool operator==(const TraditionalLength&, const TraditionalLength&) = default;
};

// "五分八厘五毛", "一寸五分". Units strictly decreasing, each at most once.
TraditionalLength parse_traditional_length(std::string_view text);

// Truncates (never rounds) at the mo digit. Throws NegativeLength.
TraditionalLength truncate_to_length(const SurdNumber& value_in_sun);

std::string format_kanji(const TraditionalLength& length);  // 五分八厘五毛
std::string format_ascii(const TraditionalLength& length);  // 5 bu 8 rin 5 mo
std::string format_traditional_length(const SurdNumber& value_in_sun);

// Shortest decimal with at least one fractional digit: "0.585", "1.0".
std::string format_sun_decimal(const TraditionalLength& length);

}  // namespace tenzan
