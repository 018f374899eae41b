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
#include <map>
#include <optional>
#include <string_view>
#include <variant>
#include <vector>

#include "tenzan/expr.hpp"

namespace tenzan {

enum class RuleId {
  SelfMultiply,
  PutTogether,
  Split,
  EliminateSurplus,
  AddSameSubtractDifferent,
  Convert,
  SqrtConvert,
  MulDivTogether,
  AddSubTogether,
};

struct RuleInfo {
  RuleId id;
  std::string_view kanji;
  std::string_view romanized;
  std::string_view english;
  std::string_view key;  // script spelling, e.g. "put-together"
};

const std::vector<RuleInfo>& all_rules();
const RuleInfo& rule_info(RuleId id);
// Accepts the script key or the kanji name.
std::optional<RuleId> find_rule(std::string_view name);

enum class Side { Lhs, Rhs, Both };

struct Substitution {
  int label = 0;
  std::optional<Expr> replacement;
};

// Replace term t by k*t - (k-1)*t.
struct SplitSpec {
  std::size_t term = 0;
  long multiplier = 2;
};

struct Selector {
  std::vector<std::size_t> terms;  // empty selects every term
  std::optional<Expr> factor;
  std::optional<Substitution> substitution;
  std::optional<SplitSpec> split;
  Side side = Side::Lhs;  // which side of an equation expression rules act on
};

// Recorded variable definitions, e.g. x := a + b.
using Definitions = std::map<int, Expr>;
using Subject = std::variant<Expr, Equation>;

Expr self_multiply(const Expr& e);
Equation self_multiply(const Equation& q);
Expr put_together(const Expr& e, const Selector& sel);
Expr split(const Expr& e, const Selector& sel, const Definitions& definitions = {});
Equation eliminate_surplus(const Equation& q, const Expr& factor);
Expr add_same_subtract_different(const Expr& e, const Selector& sel);
Expr convert(const Expr& e, const Selector& sel);
Expr sqrt_convert(const Expr& e, const Selector& sel);
Expr mul_div_together(const Expr& e);
Expr add_sub_together(const Expr& e, const Selector& sel);
// Both equations must share one side; the other sides are subtracted.
Equation cancel(const Equation& q1, const Equation& q2);

// Applies a rule to an expression or to the selected side(s) of an equation.
Subject apply_rule(RuleId rule, const Subject& input, const Selector& sel, const Definitions& definitions = {});

}  // namespace tenzan
