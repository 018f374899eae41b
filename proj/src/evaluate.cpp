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

#include "tenzan/evaluate.hpp"

#include "tenzan/error.hpp"
#include "tenzan/labels.hpp"

namespace tenzan {
namespace {

SurdNumber power(const SurdNumber& base, int p) {
  SurdNumber r(1);
  for (int i = 0; i < p; ++i) r = r * base;
  return r;
}

SurdNumber lookup(int label, const Bindings& bindings) {
  auto it = bindings.find(label);
  if (it == bindings.end())
    throw Error(ErrorCode::UnboundVariable, "variable '" + std::string(label_info(label).ascii) + "' is not bound");
  return it->second;
}

SurdNumber factor_value(const Factor& f, const Bindings& bindings) {
  SurdNumber base;
  if (auto* v = std::get_if<Variable>(&f.atom)) base = lookup(v->label, bindings);
  else if (auto* s = std::get_if<SqrtInt>(&f.atom)) base = SurdNumber::sqrt_of(s->radicand);
  else base = evaluate(*std::get<Group>(f.atom).inner, bindings);
  return power(base, f.power);
}

}  // namespace

SurdNumber evaluate(const Expr& e, const Bindings& bindings) {
  SurdNumber sum;
  for (const auto& t : e.terms) {
    SurdNumber num(Rational(t.coefficient) * Rational(t.sign));
    for (const auto& f : t.factors) num *= factor_value(f, bindings);
    SurdNumber den(Rational(t.denominator_coefficient));
    for (const auto& f : t.denominator) den *= factor_value(f, bindings);
    if (den.is_zero()) throw Error(ErrorCode::ZeroDenominator, "denominator evaluates to zero");
    sum += num / den;
  }
  return sum;
}

SurdNumber evaluate(const Poly& p, const Bindings& bindings) {
  SurdNumber sum;
  for (const auto& [m, c] : p) {
    SurdNumber term = c;
    for (const auto& [v, pw] : m) term *= power(lookup(v, bindings), pw);
    sum += term;
  }
  return sum;
}

}  // namespace tenzan
