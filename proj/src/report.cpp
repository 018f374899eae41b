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

#include <set>
#include <sstream>

#include "nlohmann/json.hpp"
#include "tenzan/check.hpp"
#include "tenzan/labels.hpp"
#include "tenzan/notation.hpp"

namespace tenzan {
namespace {

using nlohmann::json;

std::string plural(int n, const char* word) { return std::to_string(n) + " " + word + (n == 1 ? "" : "s"); }

std::string step_heading(const Step& s, bool ascii) {
  switch (s.kind) {
    case StepKind::Given: return "given";
    case StepKind::Cancel: return "cancel " + s.refs[0] + ", " + s.refs[1];
    case StepKind::Apply: {
      const auto& info = rule_info(s.rule);
      std::string out = "apply " + std::string(info.key);
      if (!ascii) out += " (" + std::string(info.kanji) + ")";
      return out + " to " + s.refs[0];
    }
    case StepKind::Rearrange: return "rearrange " + s.refs[0];
  }
  return "";
}

std::set<int> step_variables(const StepReport& sr) {
  std::set<int> vars = variables(sr.step->stated);
  if (sr.input) {
    auto more = std::holds_alternative<Expr>(*sr.input) ? variables(std::get<Expr>(*sr.input))
                                                        : variables(std::get<Equation>(*sr.input));
    vars.insert(more.begin(), more.end());
  }
  return vars;
}

std::string value_text(const SurdNumber& v, int precision) {
  std::string exact = v.to_string();
  std::string approx = v.to_decimal(precision);
  return exact == approx ? exact : exact + " ≈ " + approx;
}

std::string ascii_safe(std::string s, bool ascii) {
  if (!ascii) return s;
  const std::string approx = "≈";
  for (std::size_t p; (p = s.find(approx)) != std::string::npos;) s.replace(p, approx.size(), "~");
  return s;
}

json value_json(const SurdNumber& v, int precision) {
  return json{{"exact", v.to_string()}, {"decimal", v.to_decimal(precision)}};
}

}  // namespace

std::string format_report_text(const CheckReport& report, bool ascii, int precision) {
  std::ostringstream out;
  if (!report.title.empty()) out << "problem: " << report.title << "\n";
  for (const auto& sr : report.steps) {
    const Step& s = *sr.step;
    const Verdict& v = sr.verdict;
    out << s.id << ": " << verdict_name(v.kind) << "  " << step_heading(s, ascii) << " => " << render_modern(s.stated)
        << "\n";
    if (v.kind == VerdictKind::Ok) continue;
    out << "    " << v.message << "\n";
    if (v.error) out << "    error: " << error_code_name(*v.error) << "\n";
    if (v.kind == VerdictKind::RuleMismatch && v.engine_result)
      out << "    engine result: " << render_subject(*v.engine_result) << "\n";
    if (!v.canonical_difference.empty()) out << "    canonical difference: " << v.canonical_difference << "\n";
    if (v.witness) {
      out << "    witness:";
      auto vars = step_variables(sr);
      bool first = true;
      for (const auto& [label, value] : v.witness->binding) {
        if (!vars.count(label)) continue;
        out << (first ? " " : ", ") << label_info(label).ascii << " = " << ascii_safe(value_text(value, precision), ascii);
        first = false;
      }
      out << "\n";
      out << "    lhs = " << ascii_safe(value_text(v.witness->left, precision), ascii) << ", rhs = "
          << ascii_safe(value_text(v.witness->right, precision), ascii) << "\n";
    }
  }
  int total = static_cast<int>(report.steps.size());
  out << "summary: " << report.ok << "/" << total << " ok, " << plural(report.warnings, "warning") << ", "
      << plural(report.errors, "error") << "\n";
  out << (report.passed() ? "PASS" : "FAIL") << "\n";
  return out.str();
}

std::string format_report_structured(const CheckReport& report, bool ascii, int precision) {
  auto dump = [&](const json& j) { return j.dump(-1, ' ', ascii) + "\n"; };
  std::string out = dump(json{{"record", "script"}, {"title", report.title}, {"steps", report.steps.size()}});
  for (const auto& sr : report.steps) {
    const Step& s = *sr.step;
    const Verdict& v = sr.verdict;
    json j{{"record", "step"},
           {"id", s.id},
           {"line", s.line},
           {"kind", step_kind_name(s.kind)},
           {"refs", s.refs},
           {"stated", render_modern(s.stated)},
           {"verdict", verdict_name(v.kind)}};
    Severity sev = severity_of(v.kind);
    j["severity"] = sev == Severity::Ok ? "ok" : sev == Severity::Warning ? "warning" : "error";
    if (s.kind == StepKind::Apply) {
      j["rule"] = rule_info(s.rule).key;
      j["rule_kanji"] = rule_info(s.rule).kanji;
    }
    if (v.kind != VerdictKind::Ok) j["message"] = v.message;
    if (v.error) j["error_code"] = error_code_name(*v.error);
    if (v.engine_result) j["engine_result"] = render_subject(*v.engine_result);
    if (!v.canonical_difference.empty()) j["canonical_difference"] = v.canonical_difference;
    if (v.witness) {
      json binding = json::object();
      auto vars = step_variables(sr);
      for (const auto& [label, value] : v.witness->binding)
        if (vars.count(label)) binding[std::string(label_info(label).ascii)] = value_json(value, precision);
      j["witness"] = {{"binding", binding},
                      {"left", value_json(v.witness->left, precision)},
                      {"right", value_json(v.witness->right, precision)}};
    }
    out += dump(j);
  }
  out += dump(json{{"record", "summary"},
                   {"total", report.steps.size()},
                   {"ok", report.ok},
                   {"warnings", report.warnings},
                   {"errors", report.errors},
                   {"passed", report.passed()}});
  return out;
}

}  // namespace tenzan
