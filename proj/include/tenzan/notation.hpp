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

#include <cstddef>
#include <string>
#include <string_view>

#include "tenzan/expr.hpp"

namespace tenzan {

// Linear transcription grammar:
//   expr   := ["+"|"-"] term (("+"|"-") term)*
//   term   := factor (("*"|"/") factor)*
//   factor := primary ("^" int)?
//   primary:= int | label | "sqrt" "(" int ")" | "(" expr ")"
// Labels are a..j and x, their kanji, or their romanized readings.
Expr parse_expr(std::string_view text);
Equation parse_equation(std::string_view text);  // "<expr> == <expr>"

// Parses the longest expression prefix of text starting at offset, leaving
// offset at the first unconsumed character. Used by the script parser.
// line/column_base only affect error positions.
Expr parse_expr_prefix(std::string_view text, std::size_t& offset, int line = 1, int column_base = 0);

// Linear modern form, e.g. "b*(sqrt(2) + 1) - sqrt(2)*a". parse_expr of the
// result reproduces the expression structurally.
std::string render_modern(const Expr& e);
std::string render_modern(const Equation& q);

enum class GlyphMode { Kanji, Ascii };

// Column layout of the traditional side-writing notation: one column per
// term, tally strokes on top, factor glyphs below, denominators to the left.
std::string render_sidewriting(const Expr& e, GlyphMode mode);

// Terminal column width of UTF-8 text (CJK wide = 2, combining marks = 0).
std::size_t display_width(std::string_view utf8);

}  // namespace tenzan
