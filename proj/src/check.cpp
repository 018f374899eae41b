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

#include "tenzan/check.hpp"

#include <map>

#include "tenzan/canonical.hpp"
#include "tenzan/error.hpp"
#include "tenzan/labels.hpp"

namespace tenzan {
namespace {

Verdict check_cancel(const Equation& q1, const Equation& q2, const Equation& stated) {
  Equation expected;
  try {
    expected = cancel(q1, q2);
  } catch (const Error& err) {
    Verdict v;
    v.kind = VerdictKind::Precondition;
    v.error = err.code();
    v.message = err.what();
    return v;
  }
  Verdict v = check_equivalent(expected, stated);
  if (v.kind != VerdictKind::Ok) return v;
  if (!same_structure(expected, stated)) {
    v.kind = VerdictKind::RuleMismatch;
    v.message = "cancel produces " + render_subject(expected);
  }
  v.engine_result = expected;
  return v;
}

std::optional<int> lone_variable(const Expr& e) {
  if (e.terms.size() != 1) return std::nullopt;
  const Term& t = e.terms.front();
  if (t.sign != 1 || t.coefficient != 1 || t.has_denominator() || t.factors.size() != 1 || t.factors[0].power != 1)
    return std::nullopt;
  if (const auto* v = std::get_if<Variable>(&t.factors[0].atom)) return v->label;
  return std::nullopt;
}

}  // namespace

Severity severity_of(VerdictKind kind) {
  switch (kind) {
    case VerdictKind::Ok: return Severity::Ok;
    case VerdictKind::RuleMismatch: return Severity::Warning;
    default: return Severity::Error;
  }
}

CheckReport check_script(const DerivationScript& script) {
  CheckReport report;
  report.title = script.title;
  std::map<std::string, const Step*> by_id;
  for (const auto& step : script.steps) {
    StepReport sr;
    sr.step = &step;
    switch (step.kind) {
      case StepKind::Given:
        sr.verdict.message = "given";
        break;
      case StepKind::Cancel: {
        const Equation& q1 = by_id.at(step.refs[0])->stated;
        const Equation& q2 = by_id.at(step.refs[1])->stated;
        sr.verdict = check_cancel(q1, q2, step.stated);
        break;
      }
      case StepKind::Apply: {
        const Equation& input = by_id.at(step.refs[0])->stated;
        sr.input = input;
        sr.verdict = verify_application({step.rule, step.selector, input, step.stated}, script.definitions);
        break;
      }
      case StepKind::Rearrange: {
        const Equation& input = by_id.at(step.refs[0])->stated;
        sr.input = input;
        sr.verdict = check_equivalent(input, step.stated, script.definitions);
        break;
      }
    }
    switch (severity_of(sr.verdict.kind)) {
      case Severity::Ok: ++report.ok; break;
      case Severity::Warning: ++report.warnings; break;
      case Severity::Error: ++report.errors; break;
    }
    by_id[step.id] = &step;
    report.steps.push_back(std::move(sr));
  }
  return report;
}

SolvedValue final_value(const DerivationScript& script, const CheckReport& report, const Bindings& bindings) {
  if (!report.passed()) throw Error(ErrorCode::ReportNotPassing, "the derivation does not check");
  if (script.steps.empty()) throw Error(ErrorCode::NotSolvedForm, "the script has no steps");
  const Equation& last = script.steps.back().stated;
  auto solved = [&](const Expr& lone, const Expr& other) -> std::optional<SolvedValue> {
    auto v = lone_variable(lone);
    if (!v || variables(other).count(*v)) return std::nullopt;
    return SolvedValue{*v, evaluate(other, bindings)};
  };
  if (auto s = solved(last.rhs, last.lhs)) return *s;
  if (auto s = solved(last.lhs, last.rhs)) return *s;
  throw Error(ErrorCode::NotSolvedForm, "the final equation does not isolate a variable");
}

}  // namespace tenzan
