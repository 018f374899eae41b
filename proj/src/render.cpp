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

#include "tenzan/labels.hpp"
#include "tenzan/notation.hpp"

namespace tenzan {
namespace {

std::string factor_text(const Factor& f) {
  std::string base;
  if (auto* v = std::get_if<Variable>(&f.atom)) base = std::string(label_info(v->label).ascii);
  else if (auto* s = std::get_if<SqrtInt>(&f.atom)) base = "sqrt(" + std::to_string(s->radicand) + ")";
  else base = "(" + render_modern(*std::get<Group>(f.atom).inner) + ")";
  if (f.power != 1) base += "^" + std::to_string(f.power);
  return base;
}

std::string term_body(const Term& t) {
  std::string out;
  if (t.coefficient != 1 || t.factors.empty()) out = t.coefficient.get_str();
  for (const auto& f : t.factors) {
    if (!out.empty()) out += "*";
    out += factor_text(f);
  }
  if (t.denominator_coefficient != 1) out += "/" + t.denominator_coefficient.get_str();
  for (const auto& f : t.denominator) out += "/" + factor_text(f);
  return out;
}

}  // namespace

std::string render_modern(const Expr& e) {
  if (e.terms.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : e.terms) {
    if (first) out = (t.sign < 0 ? "-" : "") + term_body(t);
    else out += (t.sign < 0 ? " - " : " + ") + term_body(t);
    first = false;
  }
  return out;
}

std::string render_modern(const Equation& q) { return render_modern(q.lhs) + " == " + render_modern(q.rhs); }

}  // namespace tenzan
