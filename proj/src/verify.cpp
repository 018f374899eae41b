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

#include "tenzan/verify.hpp"

#include <array>

#include "tenzan/canonical.hpp"
#include "tenzan/notation.hpp"

namespace tenzan {
namespace {

constexpr std::array<std::pair<long, long>, kLabelCount> kProbe{
    {{7, 3}, {5, 11}, {2, 7}, {3, 13}, {11, 17}, {13, 19}, {17, 23}, {19, 29}, {23, 31}, {29, 37}, {31, 41}}};
constexpr std::array<std::pair<long, long>, kLabelCount> kFallback{
    {{3, 2}, {13, 7}, {5, 3}, {17, 9}, {7, 4}, {19, 11}, {9, 5}, {23, 13}, {11, 6}, {29, 17}, {37, 19}}};

Bindings make_binding(const std::array<std::pair<long, long>, kLabelCount>& values, const Definitions& definitions) {
  Bindings b;
  for (int i = 0; i < kLabelCount; ++i) {
    const auto& [n, d] = values[static_cast<std::size_t>(i)];
    b[i] = SurdNumber(Rational(n, d));
  }
  for (const auto& [label, def] : definitions) {
    try {
      b[label] = evaluate(def, b);
    } catch (const Error&) {
    }
  }
  return b;
}

Expr side_difference(const Equation& q) { return difference(q.lhs, q.rhs); }

std::optional<Witness> expression_witness(const Expr& expected, const Expr& stated, const Definitions& definitions) {
  for (const auto* values : {&kProbe, &kFallback}) {
    Bindings b = make_binding(*values, definitions);
    try {
      SurdNumber left = evaluate(expected, b);
      SurdNumber right = evaluate(stated, b);
      if (left != right) return Witness{b, left, right};
    } catch (const Error&) {
    }
  }
  return std::nullopt;
}

int degree_in(const Poly& p, int label) {
  int deg = 0;
  for (const auto& [mono, c] : p)
    for (const auto& [l, e] : mono)
      if (l == label) deg = std::max(deg, e);
  return deg;
}

// Binding satisfying expected: solve for a variable of degree one.
std::optional<Witness> equation_witness(const Equation& expected, const Equation& stated, const Definitions& definitions) {
  Poly n;
  try {
    n = canonical_form(side_difference(expected)).numerator;
  } catch (const Error&) {
    return std::nullopt;
  }
  auto attempt = [&](const Bindings& b) -> std::optional<Witness> {
    try {
      SurdNumber left = evaluate(stated.lhs, b);
      SurdNumber right = evaluate(stated.rhs, b);
      evaluate(expected.lhs, b);
      evaluate(expected.rhs, b);
      if (left != right) return Witness{b, left, right};
    } catch (const Error&) {
    }
    return std::nullopt;
  };
  Bindings ones;
  for (int i = 0; i < kLabelCount; ++i) ones[i] = SurdNumber(1);
  std::vector<Bindings> bases{ones, make_binding(kProbe, {}), make_binding(kFallback, {})};
  for (int v = kLabelCount - 1; v >= 0; --v) {
    if (degree_in(n, v) != 1) continue;
    Poly a, rest;
    for (const auto& [mono, c] : n) {
      Monomial m;
      bool has = false;
      for (const auto& term : mono) {
        if (term.first == v) has = true;
        else m.push_back(term);
      }
      (has ? a : rest)[m] = c;
    }
    for (auto b : bases) {
      b.erase(v);
      SurdNumber av = evaluate(a, b);
      if (av.is_zero()) continue;
      b[v] = -evaluate(rest, b) / av;
      if (auto w = attempt(b)) return w;
    }
  }
  if (n.empty())
    for (const auto& b : bases)
      if (auto w = attempt(b)) return w;
  return attempt(make_binding(kProbe, definitions));
}

std::string canonical_text(const Expr& e) {
  try {
    return render_modern(to_expr(canonical_form(e)));
  } catch (const Error& err) {
    return std::string("<") + err.what() + ">";
  }
}

}  // namespace

std::string_view verdict_name(VerdictKind kind) {
  switch (kind) {
    case VerdictKind::Ok: return "ok";
    case VerdictKind::RuleMismatch: return "rule-mismatch";
    case VerdictKind::SemanticFail: return "semantic-fail";
    case VerdictKind::Precondition: return "precondition-failed";
  }
  return "?";
}

std::string render_subject(const Subject& s) {
  if (const auto* e = std::get_if<Expr>(&s)) return render_modern(*e);
  return render_modern(std::get<Equation>(s));
}

Bindings probe_binding(const Definitions& definitions) { return make_binding(kProbe, definitions); }

std::optional<Witness> find_witness(const Subject& expected, const Subject& stated, const Definitions& definitions) {
  if (expected.index() != stated.index()) return std::nullopt;
  if (const auto* e = std::get_if<Expr>(&expected)) return expression_witness(*e, std::get<Expr>(stated), definitions);
  return equation_witness(std::get<Equation>(expected), std::get<Equation>(stated), definitions);
}

std::string canonical_difference(const Subject& expected, const Subject& stated) {
  if (const auto* e = std::get_if<Expr>(&expected)) return canonical_text(difference(std::get<Expr>(stated), *e));
  return "stated " + canonical_text(side_difference(std::get<Equation>(stated))) + " == 0, expected " +
         canonical_text(side_difference(std::get<Equation>(expected))) + " == 0";
}

Verdict check_equivalent(const Subject& expected, const Subject& stated, const Definitions& definitions) {
  Verdict v;
  if (expected.index() != stated.index()) {
    v.kind = VerdictKind::Precondition;
    v.error = ErrorCode::UnsupportedInput;
    v.message = "input and stated result must both be expressions or both be equations";
    return v;
  }
  bool equal;
  try {
    if (const auto* e = std::get_if<Expr>(&expected)) equal = semantically_equal(*e, std::get<Expr>(stated));
    else equal = equation_equivalent(std::get<Equation>(expected), std::get<Equation>(stated));
  } catch (const Error& err) {
    v.kind = VerdictKind::Precondition;
    v.error = err.code();
    v.message = err.what();
    return v;
  }
  if (equal) return v;
  v.kind = VerdictKind::SemanticFail;
  v.message = "stated result is not equal to " + render_subject(expected);
  v.witness = find_witness(expected, stated, definitions);
  v.canonical_difference = canonical_difference(expected, stated);
  return v;
}

Verdict verify_application(const RuleApplication& app, const Definitions& definitions) {
  Subject expected = app.input;
  Subject stated = app.stated;
  if (app.rule == RuleId::SelfMultiply) {
    auto square = [](const Expr& e) { return e.terms.empty() ? e : expr_of(term_of(group_atom(e), 2)); };
    if (auto* e = std::get_if<Expr>(&expected)) *e = square(*e);
    else {
      auto& q = std::get<Equation>(expected);
      q = {square(q.lhs), square(q.rhs)};
    }
  }
  if (app.rule == RuleId::Split && app.selector.substitution) {
    const auto& sub = *app.selector.substitution;
    auto def = definitions.find(sub.label);
    std::optional<Expr> value = def != definitions.end() ? std::optional<Expr>(def->second) : sub.replacement;
    if (value) {
      auto replace = [&](Subject& s) {
        if (auto* e = std::get_if<Expr>(&s)) *e = substitute(*e, sub.label, *value);
        else s = substitute(std::get<Equation>(s), sub.label, *value);
      };
      replace(expected);
      replace(stated);
    }
  }
  // The factor is assumed nonzero, so compare against factor * stated.
  if (app.rule == RuleId::EliminateSurplus && app.selector.factor && std::holds_alternative<Equation>(stated)) {
    auto& q = std::get<Equation>(stated);
    Term f = term_of(group_atom(*app.selector.factor));
    auto scale = [&](const Expr& e) {
      Expr out;
      for (const auto& t : e.terms) out.terms.push_back(multiply(f, t));
      return out;
    };
    q = {scale(q.lhs), scale(q.rhs)};
  }
  Verdict v = check_equivalent(expected, stated, definitions);
  if (v.kind != VerdictKind::Ok) return v;
  Subject engine;
  try {
    engine = apply_rule(app.rule, app.input, app.selector, definitions);
  } catch (const Error& err) {
    v.kind = VerdictKind::Precondition;
    v.error = err.code();
    v.message = std::string(rule_info(app.rule).key) + ": " + err.what();
    return v;
  }
  bool same = engine.index() == app.stated.index() &&
              (std::holds_alternative<Expr>(engine)
                   ? same_structure(std::get<Expr>(engine), std::get<Expr>(app.stated))
                   : same_structure(std::get<Equation>(engine), std::get<Equation>(app.stated)));
  if (!same) {
    v.kind = VerdictKind::RuleMismatch;
    v.message = std::string(rule_info(app.rule).key) + " produces " + render_subject(engine);
  }
  v.engine_result = std::move(engine);
  return v;
}

}  // namespace tenzan
