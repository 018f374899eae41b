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

#include "tenzan/numerals.hpp"

#include <array>
#include <optional>
#include <vector>

#include "tenzan/error.hpp"

namespace tenzan {
namespace {

constexpr std::array<std::string_view, 10> kDigits{"", "一", "二", "三", "四", "五", "六", "七", "八", "九"};

// Splits UTF-8 text into code-point strings.
std::vector<std::string> characters(std::string_view text) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < text.size();) {
    unsigned char c = static_cast<unsigned char>(text[i]);
    std::size_t len = c < 0x80 ? 1 : (c >> 5) == 0x6 ? 2 : (c >> 4) == 0xE ? 3 : 4;
    out.emplace_back(text.substr(i, len));
    i += len;
  }
  return out;
}

std::optional<int> digit_value(std::string_view ch) {
  for (int d = 1; d <= 9; ++d)
    if (ch == kDigits[static_cast<std::size_t>(d)]) return d;
  return std::nullopt;
}

std::optional<long> place_value(std::string_view ch) {
  if (ch == "十") return 10;
  if (ch == "百") return 100;
  if (ch == "千") return 1000;
  return std::nullopt;
}

long parse_numeral_chars(const std::vector<std::string>& chars, std::string_view text) {
  auto bad = [&](const std::string& why) {
    return Error(ErrorCode::MalformedNumeral, "malformed kanji numeral '" + std::string(text) + "': " + why);
  };
  if (chars.empty()) throw bad("empty");
  long total = 0;
  long last_place = 10000;
  std::optional<int> pending;
  for (const auto& ch : chars) {
    if (auto d = digit_value(ch)) {
      if (pending) throw bad("two digits in a row");
      pending = *d;
    } else if (auto p = place_value(ch)) {
      if (*p >= last_place) throw bad("place markers must decrease");
      total += (pending ? *pending : 1) * *p;
      last_place = *p;
      pending.reset();
    } else {
      throw bad("unsupported character '" + ch + "'");
    }
  }
  if (pending) total += *pending;
  return total;
}

}  // namespace

long parse_kanji_numeral(std::string_view text) { return parse_numeral_chars(characters(text), text); }

std::string to_kanji_numeral(long value) {
  if (value < 1 || value > 9999) throw Error(ErrorCode::MalformedNumeral, "kanji numerals cover 1..9999");
  std::string out;
  constexpr std::array<std::pair<long, std::string_view>, 3> places{{{1000, "千"}, {100, "百"}, {10, "十"}}};
  for (const auto& [place, glyph] : places) {
    long d = value / place;
    value %= place;
    if (d == 0) continue;
    if (d > 1) out += kDigits[static_cast<std::size_t>(d)];
    out += glyph;
  }
  if (value > 0) out += kDigits[static_cast<std::size_t>(value)];
  return out;
}

Rational TraditionalLength::value_in_sun() const {
  return Rational(sun) + Rational(bu, 10) + Rational(rin, 100) + Rational(mo, 1000);
}

TraditionalLength parse_traditional_length(std::string_view text) {
  auto chars = characters(text);
  auto bad = [&](const std::string& why) {
    return Error(ErrorCode::MalformedLength, "malformed length '" + std::string(text) + "': " + why);
  };
  if (chars.empty()) throw bad("empty");
  constexpr std::array<std::string_view, 4> kUnits{"寸", "分", "厘", "毛"};
  TraditionalLength out;
  int last_unit = -1;
  std::vector<std::string> pending;
  for (const auto& ch : chars) {
    int unit = -1;
    for (int u = 0; u < 4; ++u)
      if (ch == kUnits[static_cast<std::size_t>(u)]) unit = u;
    if (unit < 0) {
      pending.push_back(ch);
      continue;
    }
    if (unit == last_unit) throw Error(ErrorCode::RepeatedUnit, "unit " + ch + " appears twice in '" + std::string(text) + "'");
    if (unit < last_unit) throw bad("units must be strictly decreasing");
    if (pending.empty()) throw bad("unit " + ch + " has no count");
    long count;
    try {
      count = parse_numeral_chars(pending, text);
    } catch (const Error&) {
      throw bad("bad count before " + ch);
    }
    if (unit == 0) {
      out.sun = count;
    } else {
      if (pending.size() != 1 || count > 9) throw bad("sub-units take a single digit");
      (unit == 1 ? out.bu : unit == 2 ? out.rin : out.mo) = static_cast<int>(count);
    }
    last_unit = unit;
    pending.clear();
  }
  if (!pending.empty()) throw bad("trailing digits without a unit");
  return out;
}

TraditionalLength truncate_to_length(const SurdNumber& value_in_sun) {
  if (value_in_sun.sign() < 0) throw Error(ErrorCode::NegativeLength, "length must be non-negative");
  BigInt mo_total = value_in_sun.floor_scaled(1000);
  if (mo_total > BigInt(9999999)) throw Error(ErrorCode::MalformedLength, "length too large to render in kanji");
  long total = mo_total.get_si();
  return TraditionalLength{total / 1000, static_cast<int>(total / 100 % 10), static_cast<int>(total / 10 % 10),
                           static_cast<int>(total % 10)};
}

std::string format_kanji(const TraditionalLength& l) {
  std::string out;
  if (l.sun > 0) out += to_kanji_numeral(l.sun) + "寸";
  if (l.bu > 0) out += std::string(kDigits[static_cast<std::size_t>(l.bu)]) + "分";
  if (l.rin > 0) out += std::string(kDigits[static_cast<std::size_t>(l.rin)]) + "厘";
  if (l.mo > 0) out += std::string(kDigits[static_cast<std::size_t>(l.mo)]) + "毛";
  return out.empty() ? "零" : out;
}

std::string format_ascii(const TraditionalLength& l) {
  std::string out;
  auto add = [&](long n, const char* unit) {
    if (n == 0) return;
    if (!out.empty()) out += " ";
    out += std::to_string(n) + " " + unit;
  };
  add(l.sun, "sun");
  add(l.bu, "bu");
  add(l.rin, "rin");
  add(l.mo, "mo");
  return out.empty() ? "0 sun" : out;
}

std::string format_traditional_length(const SurdNumber& value_in_sun) {
  return format_kanji(truncate_to_length(value_in_sun));
}

std::string format_sun_decimal(const TraditionalLength& l) {
  std::string frac = std::to_string(l.bu) + std::to_string(l.rin) + std::to_string(l.mo);
  while (frac.size() > 1 && frac.back() == '0') frac.pop_back();
  return std::to_string(l.sun) + "." + frac;
}

}  // namespace tenzan
