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

#include <optional>
#include <string>

#include "tenzan/error.hpp"
#include "tenzan/evaluate.hpp"
#include "tenzan/rules.hpp"

namespace tenzan {

struct RuleApplication {
  RuleId rule;
  Selector selector;
  Subject input;
  Subject stated;
};

enum class VerdictKind {
  Ok,            // engine reproduces the stated result
  RuleMismatch,  // stated result is equal in value but not what the rule produces (warning)
  SemanticFail,  // stated result is not equal in value to the input
  Precondition,  // the rule cannot be applied as selected
};

std::string_view verdict_name(VerdictKind kind);

// A binding at which the stated result visibly goes wrong. For expressions
// left/right are the input and stated values; for equations they are the
// stated lhs and rhs at a binding that satisfies the input equation.
struct Witness {
  Bindings binding;
  SurdNumber left;
  SurdNumber right;
};

struct Verdict {
  VerdictKind kind = VerdictKind::Ok;
  std::string message;
  std::optional<Subject> engine_result;
  std::optional<Witness> witness;
  std::optional<ErrorCode> error;
  // Canonical form of the stated result minus the expected one ("... == 0" for equations).
  std::string canonical_difference;
};

// Fixed probe binding a=7/3, b=5/11, c=2/7, ...; defined variables take the
// value of their definition.
Bindings probe_binding(const Definitions& definitions = {});

std::optional<Witness> find_witness(const Subject& expected, const Subject& stated, const Definitions& definitions = {});
std::string canonical_difference(const Subject& expected, const Subject& stated);

// Checks the semantic relation between expected and stated and returns
// SemanticFail with a witness when it does not hold, Ok otherwise.
Verdict check_equivalent(const Subject& expected, const Subject& stated, const Definitions& definitions = {});

Verdict verify_application(const RuleApplication& app, const Definitions& definitions = {});

std::string render_subject(const Subject& s);

}  // namespace tenzan
