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

#include <algorithm>
#include <random>
#include <vector>

#include "tenzan/canonical.hpp"
#include "tenzan/evaluate.hpp"
#include "tenzan/expr.hpp"
#include "tenzan/notation.hpp"
#include "tenzan/rules.hpp"
#include "tenzan/surd.hpp"

namespace tenzan::testing {

// Seeded generator of random expressions in parser-normal form: distinct
// atoms per term, square roots to the first power, positive coefficients.
class ExprGen {
 public:
  explicit ExprGen(std::uint64_t seed) : rng_(seed) {}

  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
  bool chance(double p) { return std::bernoulli_distribution(p)(rng_); }
  std::mt19937_64& rng() { return rng_; }

  std::uint64_t radicand() {
    static constexpr std::uint64_t kRadicands[] = {2, 3, 5};
    return kRadicands[uniform(0, 2)];
  }

  Atom simple_atom() {
    if (chance(0.25)) return SqrtInt{radicand()};
    return Variable{uniform(0, 4)};
  }

  // depth > 0 allows group factors.
  Term term(int depth, bool allow_denominator) {
    Term t;
    t.sign = chance(0.35) ? -1 : 1;
    t.coefficient = uniform(1, 6);
    int n = uniform(0, 3);
    for (int i = 0; i < n; ++i) {
      Atom a = depth > 0 && chance(0.2) ? group_atom(expr(depth - 1, 3, false)) : simple_atom();
      bool sqrt = std::holds_alternative<SqrtInt>(a);
      int power = sqrt ? 1 : uniform(1, 2);
      bool present = false;
      for (const auto& f : t.factors) present = present || atom_equivalent(f.atom, a);
      if (!present) t.factors.push_back(Factor{a, power});
    }
    if (allow_denominator && chance(0.2)) {
      if (chance(0.5)) t.denominator_coefficient = uniform(2, 5);
      else t.denominator.push_back(Factor{Variable{uniform(0, 4)}, 1});
    }
    return t;
  }

  Expr expr(int depth, int max_terms, bool allow_denominator) {
    Expr e;
    int n = uniform(1, max_terms);
    for (int i = 0; i < n; ++i) e.terms.push_back(term(depth, allow_denominator));
    return e;
  }

  // Random exact scalar with rational and surd parts.
  SurdNumber surd() {
    static constexpr std::uint64_t kRadicands[] = {2, 3, 5, 6, 7};
    SurdNumber s;
    int parts = uniform(1, 3);
    for (int i = 0; i < parts; ++i) {
      Rational q(BigInt(uniform(-9, 9)), BigInt(uniform(1, 7)));
      std::uint64_t r = chance(0.3) ? 1 : kRadicands[uniform(0, 4)];
      s += SurdNumber(q) * SurdNumber::sqrt_of(r);
    }
    return s;
  }

 private:
  std::mt19937_64 rng_;
};

inline Bindings random_binding(ExprGen& g) {
  Bindings b;
  for (int v = 0; v < kLabelCount; ++v) b[v] = Rational(BigInt(g.uniform(1, 40)), BigInt(g.uniform(1, 13)));
  return b;
}

inline std::vector<std::size_t> random_subset(ExprGen& g, std::size_t n) {
  std::vector<std::size_t> idx;
  for (std::size_t i = 0; i < n; ++i)
    if (g.chance(0.5)) idx.push_back(i);
  if (idx.empty()) idx.push_back(static_cast<std::size_t>(g.uniform(0, static_cast<int>(n) - 1)));
  return idx;
}

inline Expr multiply_expr(const Expr& a, const Term& f) {
  Expr out;
  for (const auto& t : a.terms) out.terms.push_back(multiply(t, f));
  return out;
}

inline constexpr int kCaseKinds = 12;

// One random, well-formed rule application.
struct Case {
  RuleId rule;
  Subject input;
  Selector sel;
  Definitions defs;
};

inline Case make_case(ExprGen& g, int kind) {
  Case c{RuleId::SelfMultiply, Expr{}, {}, {}};
  switch (kind) {
    case 0: {
      c.rule = RuleId::SelfMultiply;
      c.input = g.expr(1, 5, false);
      break;
    }
    case 1: {
      c.rule = RuleId::PutTogether;
      Term f = g.term(0, false);
      f.sign = 1;
      Expr e = g.expr(1, 5, false);
      auto idx = random_subset(g, e.terms.size());
      for (auto i : idx) e.terms[i] = multiply(e.terms[i], f);
      c.input = e;
      c.sel.terms = idx;
      c.sel.factor = expr_of(f);
      break;
    }
    case 2: {
      c.rule = RuleId::PutTogether;
      Expr e = g.expr(1, 5, false);
      c.sel.terms = random_subset(g, e.terms.size());
      c.input = e;
      break;
    }
    case 3: {
      c.rule = RuleId::Split;
      Expr inner = g.expr(0, 3, false);
      Term t = g.term(0, false);
      t.factors.push_back(Factor{group_atom(inner), 1});
      Expr e = g.expr(0, 3, false);
      e.terms.insert(e.terms.begin(), t);
      c.sel.terms = {0};
      c.input = e;
      break;
    }
    case 4: {
      c.rule = RuleId::Split;
      Expr def = g.expr(0, 3, false);
      for (auto& t : def.terms)  // keep the definition free of its own label
        t.factors.erase(std::remove_if(t.factors.begin(), t.factors.end(),
                                       [](const Factor& f) {
                                         auto* v = std::get_if<Variable>(&f.atom);
                                         return v && v->label == 7;
                                       }),
                        t.factors.end());
      c.defs[7] = def;
      Expr e = g.expr(0, 4, false);
      Term x = g.term(0, false);
      merge_factor(x.factors, Factor{Variable{7}, 1});
      e.terms.push_back(x);
      c.sel.substitution = Substitution{7, std::nullopt};
      c.input = e;
      break;
    }
    case 5: {
      c.rule = RuleId::EliminateSurplus;
      Term f = g.chance(0.5) ? term_of(Variable{g.uniform(0, 4)}) : constant_term(Rational(g.uniform(2, 5)));
      Equation q{multiply_expr(g.expr(1, 4, false), f), Expr{}};
      c.sel.factor = expr_of(f);
      c.input = q;
      break;
    }
    case 6: {
      c.rule = RuleId::AddSameSubtractDifferent;
      c.input = g.expr(1, 5, false);
      break;
    }
    case 7: {
      c.rule = RuleId::Convert;
      static const char* kUnits[] = {"(sqrt(2) - 1)*(sqrt(2) + 1)", "(sqrt(5) + 2)*(sqrt(5) - 2)",
                                     "(sqrt(3) + 1)/(sqrt(3) + 1)"};
      Expr e = g.expr(1, 5, false);
      c.sel.terms = random_subset(g, e.terms.size());
      c.sel.factor = parse_expr(kUnits[g.uniform(0, 2)]);
      c.input = e;
      break;
    }
    case 8: {
      c.rule = RuleId::SqrtConvert;
      Expr e = g.expr(1, 4, false);
      bool five = g.chance(0.5);
      std::uint64_t r = five ? 5 : 2;
      Term t = g.term(0, false);
      t.factors.erase(std::remove_if(t.factors.begin(), t.factors.end(),
                                     [](const Factor& f) { return std::holds_alternative<SqrtInt>(f.atom); }),
                      t.factors.end());
      t.factors.push_back(Factor{SqrtInt{r}, 1});
      e.terms.push_back(t);
      std::vector<std::size_t> idx;
      for (std::size_t i = 0; i < e.terms.size(); ++i) {
        auto first = std::find_if(e.terms[i].factors.begin(), e.terms[i].factors.end(),
                                  [](const Factor& f) { return std::holds_alternative<SqrtInt>(f.atom); });
        if (first != e.terms[i].factors.end() && std::get<SqrtInt>(first->atom).radicand == r) idx.push_back(i);
      }
      c.sel.terms = idx;
      if (g.chance(0.5)) {
        c.sel.substitution = Substitution{kDiagonal, five ? constant(2) : constant(1)};
      } else {
        c.sel.factor = parse_expr(five ? "(sqrt(5) - 2)*(sqrt(5) + 2)*sqrt(5)" : "(sqrt(2) + 1)*(sqrt(2) - 1)*sqrt(2)");
      }
      c.input = e;
      break;
    }
    case 9: {
      c.rule = RuleId::MulDivTogether;
      Expr e = g.expr(0, 4, true);
      Term d = g.term(0, false);
      d.denominator.push_back(Factor{Variable{g.uniform(0, 4)}, 1});
      e.terms.push_back(d);
      c.input = e;
      break;
    }
    case 10: {
      c.rule = RuleId::AddSubTogether;
      Expr e = g.expr(1, 5, false);
      c.sel.split = SplitSpec{static_cast<std::size_t>(g.uniform(0, static_cast<int>(e.terms.size()) - 1)),
                              g.uniform(2, 4)};
      c.input = e;
      break;
    }
    default: {
      c.rule = RuleId::SelfMultiply;
      Equation q{g.expr(1, 3, false), g.expr(1, 3, false)};
      c.input = q;
      break;
    }
  }
  return c;
}

inline Expr squared(const Expr& e) { return e.terms.empty() ? e : expr_of(term_of(group_atom(e), 2)); }

inline Expr scaled(const Expr& e, const Term& f) { return multiply_expr(e, f); }

// Each rule's output relates to its input: equal in value, the square for
// self-multiplication, and input == factor * output for eliminate-surplus.
inline bool preserves(const Case& c, const Subject& out) {
  if (auto* e = std::get_if<Expr>(&c.input)) {
    Expr a = c.rule == RuleId::SelfMultiply ? squared(*e) : *e;
    Expr b = std::get<Expr>(out);
    for (const auto& [label, def] : c.defs) {
      a = substitute(a, label, def);
      b = substitute(b, label, def);
    }
    return semantically_equal(a, b);
  }
  Equation qi = std::get<Equation>(c.input);
  Equation qo = std::get<Equation>(out);
  if (c.rule == RuleId::SelfMultiply) qi = {squared(qi.lhs), squared(qi.rhs)};
  if (c.rule == RuleId::EliminateSurplus) {
    Term f = term_of(group_atom(*c.sel.factor));
    qo = {scaled(qo.lhs, f), scaled(qo.rhs, f)};
  }
  return equation_equivalent(qi, qo);
}

}  // namespace tenzan::testing
