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

#include "tenzan/rules.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "tenzan/canonical.hpp"
#include "tenzan/error.hpp"
#include "tenzan/notation.hpp"

namespace tenzan {
namespace {

const std::vector<RuleInfo> kRules{
    {RuleId::SelfMultiply, "自乘", "jijō", "self multiplication", "self-multiply"},
    {RuleId::PutTogether, "括之", "kukuru", "put together", "put-together"},
    {RuleId::Split, "解之", "toku", "splitting", "split"},
    {RuleId::EliminateSurplus, "遍省過乘", "henshō kajō", "eliminate surplus factors", "eliminate-surplus"},
    {RuleId::AddSameSubtractDifferent, "同加異減", "dōka igen", "add same, subtract different",
     "add-same-subtract-different"},
    {RuleId::Convert, "變換", "henkan", "conversion", "convert"},
    {RuleId::SqrtConvert, "開平方商變換", "kaiheihōshō henkan", "square root conversion", "sqrt-convert"},
    {RuleId::MulDivTogether, "乗除括之", "jōjo kukuru", "multiply and divide together", "mul-div-together"},
    {RuleId::AddSubTogether, "加減括之", "kagen kukuru", "add and subtract together", "add-sub-together"},
};

std::vector<std::size_t> selected_indices(const Expr& e, const Selector& sel) {
  std::vector<std::size_t> out;
  if (sel.terms.empty()) {
    for (std::size_t i = 0; i < e.terms.size(); ++i) out.push_back(i);
    return out;
  }
  std::set<std::size_t> seen;
  for (auto i : sel.terms) {
    if (i >= e.terms.size())
      throw Error(ErrorCode::BadSelector, "term index " + std::to_string(i) + " out of range (expression has " +
                                              std::to_string(e.terms.size()) + " terms)");
    if (!seen.insert(i).second) throw Error(ErrorCode::BadSelector, "term index " + std::to_string(i) + " selected twice");
  }
  return {seen.begin(), seen.end()};
}

Expr pick(const Expr& e, const std::vector<std::size_t>& idx) {
  Expr out;
  for (auto i : idx) out.terms.push_back(e.terms[i]);
  return out;
}

// Drops the selected terms and inserts the replacement where the first one was.
Expr replace_selected(const Expr& e, const std::vector<std::size_t>& idx, const std::vector<Term>& replacement) {
  Expr out;
  std::set<std::size_t> chosen(idx.begin(), idx.end());
  for (std::size_t i = 0; i < e.terms.size(); ++i) {
    if (!idx.empty() && i == idx.front()) out.terms.insert(out.terms.end(), replacement.begin(), replacement.end());
    if (!chosen.count(i)) out.terms.push_back(e.terms[i]);
  }
  return out;
}

Rational signed_value(const Term& t) { return t.sign < 0 ? -t.coefficient_value() : t.coefficient_value(); }

// Sums like terms, or nullopt when they cancel.
std::optional<Term> merge_like(const std::vector<Term>& terms) {
  Rational sum;
  for (const auto& t : terms) sum = sum + signed_value(t);
  if (sum.is_zero()) return std::nullopt;
  Term out = terms.front();
  out.sign = sum.sign();
  set_coefficient(out, sum.abs());
  return out;
}

// Merges like terms among the given terms, keeping first-occurrence order.
std::vector<Term> merge_all_like(const std::vector<Term>& terms) {
  std::vector<std::string> keys;
  std::vector<std::vector<Term>> classes;
  for (const auto& t : terms) {
    auto key = like_key(t);
    auto it = std::find(keys.begin(), keys.end(), key);
    if (it == keys.end()) {
      keys.push_back(key);
      classes.push_back({t});
    } else {
      classes[static_cast<std::size_t>(it - keys.begin())].push_back(t);
    }
  }
  std::vector<Term> out;
  for (const auto& c : classes)
    if (auto m = merge_like(c)) out.push_back(*m);
  return out;
}

bool is_constant_one(const Expr& e) {
  try {
    return semantically_equal(e, constant(Rational(1)));
  } catch (const Error&) {
    return false;
  }
}

bool is_constant(const Expr& e) {
  auto c = canonical_form(e);
  return poly_is_constant(c.numerator) && poly_is_constant(c.denominator);
}

Term group_term(const Expr& inner, int power = 1) { return term_of(group_atom(inner), power); }

// Multiplies a term by the factors of another term without merging signs twice.
Term attach(const Term& t, const Expr& multiplier) {
  if (multiplier.terms.size() == 1) return multiply(t, multiplier.terms.front());
  Term out = t;
  merge_factor(out.factors, Factor{group_atom(multiplier), 1});
  return out;
}

// Expands every numerator group (recursively when deep) in a term.
std::vector<Term> distribute(const Term& t, const std::optional<Expr>& only, bool deep) {
  for (std::size_t k = 0; k < t.factors.size(); ++k) {
    const auto* g = std::get_if<Group>(&t.factors[k].atom);
    if (!g) continue;
    if (only && !same_structure(*g->inner, *only)) continue;
    Term rest = t;
    rest.factors.erase(rest.factors.begin() + static_cast<std::ptrdiff_t>(k));
    if (t.factors[k].power > 1) rest.factors.insert(rest.factors.begin() + static_cast<std::ptrdiff_t>(k),
                                                    Factor{t.factors[k].atom, t.factors[k].power - 1});
    std::vector<Term> out;
    for (const auto& u : g->inner->terms) {
      Term p = rest;
      p.sign *= u.sign;
      p.coefficient *= u.coefficient;
      p.denominator_coefficient *= u.denominator_coefficient;
      auto pos = static_cast<std::ptrdiff_t>(std::min(k, p.factors.size()));
      std::vector<Factor> merged(p.factors.begin(), p.factors.begin() + pos);
      for (const auto& f : u.factors) merge_factor(merged, f);
      for (auto it = p.factors.begin() + pos; it != p.factors.end(); ++it) merge_factor(merged, *it);
      p.factors = std::move(merged);
      for (const auto& f : u.denominator) merge_factor(p.denominator, f);
      fold_square_roots(p);
      if (deep || t.factors[k].power > 1) {
        auto more = distribute(p, only, deep);
        out.insert(out.end(), more.begin(), more.end());
      } else {
        out.push_back(std::move(p));
      }
    }
    return out;
  }
  return {t};
}

bool has_group(const Term& t, const std::optional<Expr>& only) {
  for (const auto& f : t.factors)
    if (const auto* g = std::get_if<Group>(&f.atom); g && (!only || same_structure(*g->inner, *only))) return true;
  return false;
}

// Removes one power of the atom from the list, returning whether it was present.
bool remove_atom(std::vector<Factor>& factors, const Atom& atom, int power) {
  for (auto it = factors.begin(); it != factors.end(); ++it) {
    if (!atom_equivalent(it->atom, atom) || it->power < power) continue;
    it->power -= power;
    if (it->power == 0) factors.erase(it);
    return true;
  }
  return false;
}

std::optional<Term> divide_structurally(const Term& t, const Expr& factor) {
  if (factor.terms.size() > 1) {
    Term out = t;
    if (remove_atom(out.factors, group_atom(factor), 1)) return out;
    return std::nullopt;
  }
  const Term& f = factor.terms.front();
  if (f.has_denominator() || t.coefficient % f.coefficient != 0) return std::nullopt;
  Term out = t;
  out.sign *= f.sign;
  out.coefficient /= f.coefficient;
  for (const auto& x : f.factors)
    if (!remove_atom(out.factors, x.atom, x.power)) return std::nullopt;
  return out;
}

std::optional<Expr> divide_semantically(const Expr& a, const Expr& b) {
  auto ca = canonical_form(a);
  auto cb = canonical_form(b);
  auto q = divide_exact(poly_mul(ca.numerator, cb.denominator), poly_mul(ca.denominator, cb.numerator));
  if (!q) return std::nullopt;
  return to_expr(*q);
}

std::string factor_text(const Expr& e) { return "(" + render_modern(e) + ")"; }

}  // namespace

const std::vector<RuleInfo>& all_rules() { return kRules; }

const RuleInfo& rule_info(RuleId id) { return kRules[static_cast<std::size_t>(id)]; }

std::optional<RuleId> find_rule(std::string_view name) {
  for (const auto& r : kRules)
    if (name == r.key || name == r.kanji) return r.id;
  return std::nullopt;
}

Expr self_multiply(const Expr& e) {
  for (const auto& t : e.terms)
    if (t.has_denominator()) throw Error(ErrorCode::UnsupportedInput, "self-multiply applies to expressions without fractions");
  Expr out;
  for (std::size_t i = 0; i < e.terms.size(); ++i) {
    out.terms.push_back(multiply(e.terms[i], e.terms[i]));
    for (std::size_t j = i + 1; j < e.terms.size(); ++j) {
      Term cross = multiply(e.terms[i], e.terms[j]);
      cross.coefficient *= 2;
      out.terms.push_back(std::move(cross));
    }
  }
  return out;
}

Equation self_multiply(const Equation& q) { return {self_multiply(q.lhs), self_multiply(q.rhs)}; }

Expr put_together(const Expr& e, const Selector& sel) {
  auto idx = selected_indices(e, sel);
  if (idx.empty()) return e;
  Expr chosen = pick(e, idx);
  if (!sel.factor) {
    auto key = like_key(chosen.terms.front());
    bool like = std::all_of(chosen.terms.begin(), chosen.terms.end(), [&](const Term& t) { return like_key(t) == key; });
    if (like) {
      auto merged = merge_like(chosen.terms);
      return replace_selected(e, idx, merged ? std::vector<Term>{*merged} : std::vector<Term>{});
    }
    if (chosen.terms.size() == 1) return e;
    return replace_selected(e, idx, {group_term(chosen)});
  }
  Expr factor = unwrap_group(*sel.factor);
  if (factor.terms.empty() || canonical_form(factor).numerator.empty())
    throw Error(ErrorCode::NoCommonFactor, "factor " + factor_text(factor) + " is zero");
  auto cofactor = divide_semantically(chosen, factor);
  if (!cofactor)
    throw Error(ErrorCode::NoCommonFactor, factor_text(factor) + " does not divide the selected terms");
  if (cofactor->terms.empty()) return replace_selected(e, idx, {});
  Term combined;
  bool factor_multi = factor.terms.size() > 1;
  bool cofactor_multi = cofactor->terms.size() > 1;
  if (factor_multi && cofactor_multi && semantically_equal(*cofactor, factor)) {
    combined = group_term(factor, 2);
  } else if (!factor_multi) {
    combined = attach(factor.terms.front(), *cofactor);
  } else if (!cofactor_multi) {
    combined = attach(cofactor->terms.front(), factor);
  } else {
    combined = group_term(factor);
    merge_factor(combined.factors, Factor{group_atom(*cofactor), 1});
  }
  return replace_selected(e, idx, {combined});
}

Expr split(const Expr& e, const Selector& sel, const Definitions& definitions) {
  auto idx = selected_indices(e, sel);
  std::set<std::size_t> chosen(idx.begin(), idx.end());
  if (sel.substitution) {
    int label = sel.substitution->label;
    auto def = definitions.find(label);
    if (def == definitions.end())
      throw Error(ErrorCode::UndefinedSubstitution, "no definition recorded for the substituted variable");
    if (sel.substitution->replacement && !semantically_equal(*sel.substitution->replacement, def->second))
      throw Error(ErrorCode::PatternMismatch, "replacement does not match the recorded definition");
    const Expr& replacement = sel.substitution->replacement ? *sel.substitution->replacement : def->second;
    Expr out;
    bool changed = false;
    for (std::size_t i = 0; i < e.terms.size(); ++i) {
      const Term& t = e.terms[i];
      if (!chosen.count(i) || !contains_variable(t, label)) {
        out.terms.push_back(t);
        continue;
      }
      changed = true;
      auto part = substitute(expr_of(t), label, replacement);
      out.terms.insert(out.terms.end(), part.terms.begin(), part.terms.end());
    }
    if (!changed) throw Error(ErrorCode::NothingToSplit, "the substituted variable does not occur in the selected terms");
    return out;
  }
  std::optional<Expr> only;
  if (sel.factor) only = unwrap_group(*sel.factor);
  Expr out;
  bool changed = false;
  for (std::size_t i = 0; i < e.terms.size(); ++i) {
    const Term& t = e.terms[i];
    if (!chosen.count(i) || !has_group(t, only)) {
      out.terms.push_back(t);
      continue;
    }
    changed = true;
    auto parts = merge_all_like(distribute(t, only, !only));
    out.terms.insert(out.terms.end(), parts.begin(), parts.end());
  }
  if (!changed) throw Error(ErrorCode::NothingToSplit, "no parenthesized factor to split in the selected terms");
  return out;
}

Equation eliminate_surplus(const Equation& q, const Expr& factor_in) {
  if (!q.rhs.terms.empty()) throw Error(ErrorCode::NonZeroRhs, "eliminate-surplus needs an equation of the form ... == 0");
  Expr factor = unwrap_group(factor_in);
  if (factor.terms.empty() || canonical_form(factor).numerator.empty())
    throw Error(ErrorCode::ZeroFactor, "cannot eliminate a zero factor");
  Equation out;
  for (const auto& t : q.lhs.terms) {
    if (auto d = divide_structurally(t, factor)) {
      out.lhs.terms.push_back(*d);
      continue;
    }
    auto d = divide_semantically(expr_of(t), factor);
    if (!d) throw Error(ErrorCode::NotCommonFactor, factor_text(factor) + " does not divide " + render_modern(expr_of(t)));
    out.lhs.terms.insert(out.lhs.terms.end(), d->terms.begin(), d->terms.end());
  }
  return out;
}

Expr add_same_subtract_different(const Expr& e, const Selector& sel) {
  if (sel.terms.empty()) return Expr{merge_all_like(e.terms)};
  auto idx = selected_indices(e, sel);
  Expr chosen = pick(e, idx);
  auto key = like_key(chosen.terms.front());
  for (const auto& t : chosen.terms)
    if (like_key(t) != key) throw Error(ErrorCode::NotLikeTerms, "selected terms are not like terms");
  auto merged = merge_like(chosen.terms);
  return replace_selected(e, idx, merged ? std::vector<Term>{*merged} : std::vector<Term>{});
}

Expr convert(const Expr& e, const Selector& sel) {
  if (!sel.factor) throw Error(ErrorCode::BadSelector, "convert needs a factor naming the identity");
  auto idx = selected_indices(e, sel);
  const Expr& pattern = *sel.factor;
  if (is_constant_one(pattern)) {
    Expr out = e;
    for (auto i : idx) out.terms[i] = attach(e.terms[i], pattern);
    return out;
  }
  if (semantically_equal(pick(e, idx), pattern)) return replace_selected(e, idx, pattern.terms);
  if (is_constant(pattern))
    throw Error(ErrorCode::NotAnIdentity, "unit factor " + factor_text(pattern) + " is not exactly 1");
  throw Error(ErrorCode::PatternMismatch, factor_text(pattern) + " is not equal to the selected terms");
}

Expr sqrt_convert(const Expr& e, const Selector& sel) {
  bool offset_mode = sel.substitution && sel.substitution->replacement;
  if (!offset_mode && !sel.factor) throw Error(ErrorCode::BadSelector, "sqrt-convert needs a target form or an offset");
  auto idx = selected_indices(e, sel);
  Expr out = e;
  bool changed = false;
  for (auto i : idx) {
    Term& t = out.terms[i];
    auto it = std::find_if(t.factors.begin(), t.factors.end(), [](const Factor& f) {
      return std::holds_alternative<SqrtInt>(f.atom) && f.power == 1;
    });
    if (it == t.factors.end()) {
      if (sel.terms.empty()) continue;
      throw Error(ErrorCode::PatternMismatch, "selected term has no square root");
    }
    std::uint64_t r = std::get<SqrtInt>(it->atom).radicand;
    Expr root = sqrt_int(r);
    if (offset_mode) {
      const Expr& x = *sel.substitution->replacement;
      Expr plus = concat(root, x);
      Expr minus = concat(root, negate(x));
      Expr product = expr_of(multiply(group_term(plus), group_term(minus)));
      if (!is_constant_one(product))
        throw Error(ErrorCode::NotUnitPair, "(" + render_modern(plus) + ")(" + render_modern(minus) + ") is not 1");
      auto pos = it - t.factors.begin() + 1;
      t.factors.insert(t.factors.begin() + pos, {Factor{group_atom(plus), 1}, Factor{group_atom(minus), 1}});
    } else {
      const Expr& target = *sel.factor;
      if (!semantically_equal(target, root))
        throw Error(ErrorCode::PatternMismatch, factor_text(target) + " is not equal to sqrt(" + std::to_string(r) + ")");
      t.factors.erase(it);
      t = attach(t, unwrap_group(target));
    }
    changed = true;
  }
  if (!changed) throw Error(ErrorCode::PatternMismatch, "no square root in the selected terms");
  return out;
}

Expr mul_div_together(const Expr& e) {
  std::vector<const Term*> fractions;
  for (const auto& t : e.terms)
    if (t.has_denominator()) fractions.push_back(&t);
  if (fractions.empty()) throw Error(ErrorCode::NoFractionPresent, "no fraction to put over a common denominator");
  // Common denominator: product of the distinct denominators.
  Term common;
  std::set<std::string> seen;
  for (const Term* t : fractions) {
    Term den;
    den.denominator_coefficient = t->denominator_coefficient;
    den.denominator = t->denominator;
    if (!seen.insert(structure_key(den)).second) continue;
    common.denominator_coefficient *= t->denominator_coefficient;
    for (const auto& f : t->denominator) merge_factor(common.denominator, f);
  }
  Expr out;
  for (const auto& t : e.terms) {
    std::vector<Factor> missing = common.denominator;
    for (const auto& f : t.denominator) remove_atom(missing, f.atom, f.power);
    Term r = t;
    r.coefficient *= common.denominator_coefficient / t.denominator_coefficient;
    for (const auto& f : missing) merge_factor(r.factors, f);
    r.denominator_coefficient = common.denominator_coefficient;
    r.denominator = common.denominator;
    out.terms.push_back(std::move(r));
  }
  return out;
}

Expr add_sub_together(const Expr& e, const Selector& sel) {
  if (!sel.split) throw Error(ErrorCode::BadSplitSpec, "add-sub-together needs 'split term <i> by <k>'");
  const auto& spec = *sel.split;
  if (spec.term >= e.terms.size()) throw Error(ErrorCode::BadSplitSpec, "split term index out of range");
  if (spec.multiplier < 2) throw Error(ErrorCode::BadSplitSpec, "split multiplier must be at least 2");
  const Term& t = e.terms[spec.term];
  Term up = t;
  up.coefficient *= spec.multiplier;
  Term down = negate(t);
  down.coefficient *= spec.multiplier - 1;
  return replace_selected(e, {spec.term}, {up, down});
}

Equation cancel(const Equation& q1, const Equation& q2) {
  const Expr* a;
  const Expr* b;
  if (same_structure(q1.rhs, q2.rhs)) {
    a = &q1.lhs;
    b = &q2.lhs;
  } else if (same_structure(q1.lhs, q2.lhs)) {
    a = &q1.rhs;
    b = &q2.rhs;
  } else {
    throw Error(ErrorCode::RhsMismatch, "the two equations share no common side");
  }
  if (same_structure(*a, *b)) return {};
  return {difference(*a, *b), Expr{}};
}

Subject apply_rule(RuleId rule, const Subject& input, const Selector& sel, const Definitions& definitions) {
  auto on_expr = [&](const Expr& e) -> Expr {
    switch (rule) {
      case RuleId::SelfMultiply: return self_multiply(e);
      case RuleId::PutTogether: return put_together(e, sel);
      case RuleId::Split: return split(e, sel, definitions);
      case RuleId::AddSameSubtractDifferent: return add_same_subtract_different(e, sel);
      case RuleId::Convert: return convert(e, sel);
      case RuleId::SqrtConvert: return sqrt_convert(e, sel);
      case RuleId::MulDivTogether: return mul_div_together(e);
      case RuleId::AddSubTogether: return add_sub_together(e, sel);
      case RuleId::EliminateSurplus: break;
    }
    throw Error(ErrorCode::UnsupportedInput, "eliminate-surplus applies to equations");
  };
  if (const auto* e = std::get_if<Expr>(&input)) return on_expr(*e);
  const auto& q = std::get<Equation>(input);
  if (rule == RuleId::SelfMultiply) return self_multiply(q);
  if (rule == RuleId::EliminateSurplus) {
    if (!sel.factor) throw Error(ErrorCode::BadSelector, "eliminate-surplus needs a factor");
    return eliminate_surplus(q, *sel.factor);
  }
  Equation out = q;
  if (sel.side != Side::Rhs) out.lhs = on_expr(q.lhs);
  if (sel.side != Side::Lhs) out.rhs = on_expr(q.rhs);
  return out;
}

}  // namespace tenzan
