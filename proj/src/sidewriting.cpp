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

#include <algorithm>
#include <string>
#include <variant>
#include <vector>

#include "tenzan/labels.hpp"
#include "tenzan/notation.hpp"
#include "tenzan/numerals.hpp"

namespace tenzan {
namespace {

constexpr const char* kCombiningLongSolidus = "̸";

std::string numeral(const BigInt& n, GlyphMode mode) {
  if (mode == GlyphMode::Kanji && n >= 1 && n <= 9999) return to_kanji_numeral(n.get_si());
  return n.get_str();
}

std::string factor_glyph(const Factor& f, GlyphMode mode);

// Inline rendering of a group's contents on one row.
std::string group_glyph(const Expr& inner, GlyphMode mode) {
  if (mode == GlyphMode::Ascii) return "(" + render_modern(inner) + ")";
  std::string out = "「";
  for (std::size_t i = 0; i < inner.terms.size(); ++i) {
    const Term& t = inner.terms[i];
    if (t.sign < 0) out += "去";
    else if (i > 0) out += "加";
    if (t.coefficient != 1 || t.factors.empty()) out += numeral(t.coefficient, mode);
    for (const auto& f : t.factors) out += factor_glyph(f, mode);
    if (t.has_denominator()) {
      out += "除";
      if (t.denominator_coefficient != 1) out += numeral(t.denominator_coefficient, mode);
      for (const auto& f : t.denominator) out += factor_glyph(f, mode);
    }
  }
  if (inner.terms.empty()) out += "〇";
  return out + "」";
}

std::string factor_glyph(const Factor& f, GlyphMode mode) {
  std::string base;
  if (const auto* v = std::get_if<Variable>(&f.atom)) {
    const auto& info = label_info(v->label);
    base = std::string(mode == GlyphMode::Kanji ? info.kanji : info.ascii);
  } else if (const auto* s = std::get_if<SqrtInt>(&f.atom)) {
    base = mode == GlyphMode::Kanji ? numeral(BigInt(s->radicand), mode) + "商" : "sq" + std::to_string(s->radicand);
  } else {
    base = group_glyph(*std::get<Group>(f.atom).inner, mode);
  }
  if (f.power == 1) return base;
  if (mode == GlyphMode::Ascii) return base + "^" + std::to_string(f.power);
  if (f.power == 2) return base + "巾";
  return base + numeral(BigInt(f.power), mode) + "乘";
}

std::string stroke_run(const Term& t, GlyphMode mode) {
  std::string out;
  if (t.coefficient <= 9) {
    out.assign(t.coefficient.get_ui(), '|');
  } else {
    out = numeral(t.coefficient, mode) + "|";
  }
  if (t.sign > 0) return out;
  if (mode == GlyphMode::Ascii) return "X" + out;
  // Overlay the crossing on the first stroke.
  auto bar = out.find('|');
  return out.insert(bar + 1, kCombiningLongSolidus);
}

std::string pad_right(const std::string& s, std::size_t width) {
  return s + std::string(width - std::min(width, display_width(s)), ' ');
}

std::string pad_left(const std::string& s, std::size_t width) {
  return std::string(width - std::min(width, display_width(s)), ' ') + s;
}

// Rows of one term: denominator glyphs left, strokes, numerator glyphs right.
std::vector<std::string> term_rows(const Term& t, GlyphMode mode) {
  std::vector<std::string> left;
  if (t.denominator_coefficient != 1) left.push_back(numeral(t.denominator_coefficient, mode));
  for (const auto& f : t.denominator) left.push_back(factor_glyph(f, mode));
  std::vector<std::string> right;
  for (const auto& f : t.factors) right.push_back(factor_glyph(f, mode));
  std::string strokes = stroke_run(t, mode);

  std::size_t left_width = 0;
  for (const auto& s : left) left_width = std::max(left_width, display_width(s));
  std::size_t stroke_width = display_width(strokes);
  std::size_t height = std::max({left.size(), right.size(), std::size_t{1}});
  std::vector<std::string> rows;
  for (std::size_t r = 0; r < height; ++r) {
    std::string row = pad_left(r < left.size() ? left[r] : "", left_width);
    row += r == 0 ? strokes : std::string(stroke_width, ' ');
    if (r < right.size()) row += right[r];
    rows.push_back(row);
  }
  return rows;
}

std::size_t utf8_length(unsigned char c) { return c < 0x80 ? 1 : (c >> 5) == 0x6 ? 2 : (c >> 4) == 0xE ? 3 : 4; }

std::size_t code_point_width(char32_t cp) {
  if (cp >= 0x300 && cp <= 0x36F) return 0;
  if ((cp >= 0x1100 && cp <= 0x115F) || (cp >= 0x2E80 && cp <= 0xA4CF) || (cp >= 0xAC00 && cp <= 0xD7A3) ||
      (cp >= 0xF900 && cp <= 0xFAFF) || (cp >= 0xFE30 && cp <= 0xFE4F) || (cp >= 0xFF00 && cp <= 0xFF60) ||
      (cp >= 0xFFE0 && cp <= 0xFFE6) || cp >= 0x20000)
    return 2;
  return 1;
}

}  // namespace

std::size_t display_width(std::string_view utf8) {
  std::size_t width = 0;
  for (std::size_t i = 0; i < utf8.size();) {
    auto c = static_cast<unsigned char>(utf8[i]);
    std::size_t len = utf8_length(c);
    char32_t cp = len == 1 ? c : c & (0xFF >> (len + 1));
    for (std::size_t k = 1; k < len && i + k < utf8.size(); ++k)
      cp = (cp << 6) | (static_cast<unsigned char>(utf8[i + k]) & 0x3F);
    width += code_point_width(cp);
    i += len;
  }
  return width;
}

std::string render_sidewriting(const Expr& e, GlyphMode mode) {
  if (e.terms.empty()) return mode == GlyphMode::Kanji ? "〇\n" : "0\n";
  std::vector<std::vector<std::string>> columns;
  std::size_t height = 0;
  for (const auto& t : e.terms) {
    columns.push_back(term_rows(t, mode));
    height = std::max(height, columns.back().size());
  }
  std::string out;
  for (std::size_t r = 0; r < height; ++r) {
    std::string line;
    for (std::size_t c = 0; c < columns.size(); ++c) {
      std::size_t width = 0;
      for (const auto& s : columns[c]) width = std::max(width, display_width(s));
      if (c > 0) line += "  ";
      line += pad_right(r < columns[c].size() ? columns[c][r] : "", width);
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out += line + "\n";
  }
  return out;
}

}  // namespace tenzan
