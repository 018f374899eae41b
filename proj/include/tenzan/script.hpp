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
#include <vector>

#include "tenzan/rules.hpp"

namespace tenzan {

struct Declaration {
  int label = 0;
  std::string name;  // kanji or reading as written
  std::string description;
};

enum class StepKind { Given, Cancel, Apply, Rearrange };

std::string_view step_kind_name(StepKind kind);

struct Step {
  std::string id;
  StepKind kind = StepKind::Given;
  int line = 0;
  std::vector<std::string> refs;  // cancel: two ids; apply and rearrange: one
  RuleId rule = RuleId::SelfMultiply;
  Selector selector;
  Equation stated;
  std::string source;  // the step line as written, comments removed
};

struct DerivationScript {
  std::string title;
  std::vector<Declaration> declarations;
  Definitions definitions;
  std::vector<Step> steps;
};

// Line-oriented script format:
//   problem "<title>"
//   var <letter> = <name> "<description>"
//   define <letter> := <expr>
//   <id>: given <expr> == <expr>
//   <id>: cancel <id>, <id> => <expr> == <expr>
//   <id>: apply <rule> to <id> [on lhs|rhs|both] [select terms <i>,...]
//         [factor <expr>] [with <letter>[=<expr>]] [split term <i> by <k>]
//         => <expr> == <expr>
//   <id>: rearrange <id> => <expr> == <expr>
// '#' starts a comment outside quotes.
DerivationScript parse_script(std::string_view text);

}  // namespace tenzan
