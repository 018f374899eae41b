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

#include "tenzan/expr.hpp"

#include <algorithm>

#include "tenzan/error.hpp"

namespace tenzan {
namespace {

std::string atom_key(const Atom& a) {
  if (auto* v = std::get_if<Variable>(&a)) return "v" + std::to_string(v->label);
  if (auto* s = std::get_if<SqrtInt>(&a)) return "s" + std::to_string(s->radicand);
  return "g{" + structure_key(*std::get<Group>(a).inner) + "}";
}

std::string factors_key(const std::vector<Factor>& factors) {
  std::vector<std::string> keys;
  keys.reserve(factors.size());
  for (const auto& f : factors) keys.push_back(atom_key(f.atom) + "^" + std::to_string(f.power));
  std::sort(keys.begin(), keys.end());
  std::string out;
  for (const auto& k : keys) out += k + ",";
  return out;
}

void fold_list(std::vector<Factor>& factors, BigInt& coefficient) {
  for (auto it = factors.begin(); it != factors.end();) {
    if (auto* s = std::get_if<SqrtInt>(&it->atom); s && it->power >= 2) {
      BigInt r(static_cast<unsigned long>(s->radicand));
      BigInt scale;
      mpz_pow_ui(scale.get_mpz_t(), r.get_mpz_t(), static_cast<unsigned long>(it->power / 2));
      coefficient *= scale;
      it->power %= 2;
      if (it->power == 0) {
        it = factors.erase(it);
        continue;
      }
    }
    ++it;
  }
}

bool mentions(const std::vector<Factor>& factors, int label) {
  for (const auto& f : factors) {
    if (auto* v = std::get_if<Variable>(&f.atom); v && v->label == label) return true;
    if (auto* g = std::get_if<Group>(&f.atom)) {
      for (const auto& t : g->inner->terms)
        if (contains_variable(t, label)) return true;
    }
  }
  return false;
}

std::vector<Factor> substitute_factors(const std::vector<Factor>& factors, int label, const Expr& replacement) {
  std::vector<Factor> out;
  for (const auto& f : factors) {
    Factor g = f;
    if (auto* v = std::get_if<Variable>(&f.atom); v && v->label == label) {
      g.atom = group_atom(replacement);
    } else if (auto* grp = std::get_if<Group>(&f.atom)) {
      g.atom = group_atom(substitute(*grp->inner, label, replacement));
    }
    merge_factor(out, g);
  }
  return out;
}

}  // namespace

bool atom_equivalent(const Atom& a, const Atom& b) {
  if (a.index() != b.index()) return false;
  if (auto* v = std::get_if<Variable>(&a)) return v->label == std::get<Variable>(b).label;
  if (auto* s = std::get_if<SqrtInt>(&a)) return s->radicand == std::get<SqrtInt>(b).radicand;
  return same_structure(*std::get<Group>(a).inner, *std::get<Group>(b).inner);
}

Rational Term::coefficient_value() const { return Rational(coefficient, denominator_coefficient); }

bool operator==(const Atom& a, const Atom& b) {
  if (a.index() != b.index()) return false;
  if (auto* v = std::get_if<Variable>(&a)) return v->label == std::get<Variable>(b).label;
  if (auto* s = std::get_if<SqrtInt>(&a)) return s->radicand == std::get<SqrtInt>(b).radicand;
  return *std::get<Group>(a).inner == *std::get<Group>(b).inner;
}

bool operator==(const Factor& a, const Factor& b) { return a.power == b.power && a.atom == b.atom; }

bool operator==(const Term& a, const Term& b) {
  return a.sign == b.sign && a.coefficient == b.coefficient && a.factors == b.factors &&
         a.denominator_coefficient == b.denominator_coefficient && a.denominator == b.denominator;
}

bool operator==(const Expr& a, const Expr& b) { return a.terms == b.terms; }
bool operator==(const Equation& a, const Equation& b) { return a.lhs == b.lhs && a.rhs == b.rhs; }

Expr variable(int label) { return expr_of(term_of(Variable{label})); }

Expr constant(const Rational& value) {
  if (value.is_zero()) return {};
  return expr_of(constant_term(value));
}

Expr sqrt_int(std::uint64_t radicand) { return expr_of(term_of(SqrtInt{radicand})); }

Atom group_atom(const Expr& inner) { return Group{std::make_shared<const Expr>(inner)}; }

Term term_of(const Atom& atom, int power) {
  Term t;
  t.factors.push_back(Factor{atom, power});
  return t;
}

Term constant_term(const Rational& value) {
  Term t;
  t.sign = value.sign() < 0 ? -1 : 1;
  set_coefficient(t, value.abs());
  return t;
}

Expr expr_of(Term term) {
  Expr e;
  e.terms.push_back(std::move(term));
  return e;
}

void merge_factor(std::vector<Factor>& factors, const Factor& f) {
  for (auto& existing : factors) {
    if (atom_equivalent(existing.atom, f.atom)) {
      existing.power += f.power;
      return;
    }
  }
  factors.push_back(f);
}

void fold_square_roots(Term& t) {
  fold_list(t.factors, t.coefficient);
  fold_list(t.denominator, t.denominator_coefficient);
}

Term multiply(const Term& a, const Term& b) {
  Term r = a;
  r.sign = a.sign * b.sign;
  r.coefficient = a.coefficient * b.coefficient;
  r.denominator_coefficient = a.denominator_coefficient * b.denominator_coefficient;
  for (const auto& f : b.factors) merge_factor(r.factors, f);
  for (const auto& f : b.denominator) merge_factor(r.denominator, f);
  fold_square_roots(r);
  return r;
}

Term negate(Term t) {
  t.sign = -t.sign;
  return t;
}

Expr negate(const Expr& e) {
  Expr r;
  for (const auto& t : e.terms) r.terms.push_back(negate(t));
  return r;
}

Expr concat(const Expr& a, const Expr& b) {
  Expr r = a;
  r.terms.insert(r.terms.end(), b.terms.begin(), b.terms.end());
  return r;
}

Expr difference(const Expr& a, const Expr& b) { return concat(a, negate(b)); }

void set_coefficient(Term& t, const Rational& value) {
  t.coefficient = value.numerator();
  t.denominator_coefficient = value.denominator();
}

Expr unwrap_group(const Expr& e) {
  if (e.terms.size() != 1) return e;
  const Term& t = e.terms.front();
  if (t.sign != 1 || t.coefficient != 1 || t.has_denominator() || t.factors.size() != 1) return e;
  const Factor& f = t.factors.front();
  if (f.power != 1) return e;
  if (auto* g = std::get_if<Group>(&f.atom)) return *g->inner;
  return e;
}

std::string structure_key(const Term& t) {
  return std::string(t.sign < 0 ? "-" : "+") + t.coefficient.get_str() + "*" + factors_key(t.factors) + "/" +
         t.denominator_coefficient.get_str() + "*" + factors_key(t.denominator);
}

std::string structure_key(const Expr& e) {
  std::vector<std::string> keys;
  for (const auto& t : e.terms) keys.push_back(structure_key(t));
  std::sort(keys.begin(), keys.end());
  std::string out;
  for (const auto& k : keys) out += k + ";";
  return out;
}

std::string like_key(const Term& t) { return factors_key(t.factors) + "/" + factors_key(t.denominator); }

bool same_structure(const Expr& a, const Expr& b) { return structure_key(a) == structure_key(b); }

bool same_structure(const Equation& a, const Equation& b) {
  return same_structure(a.lhs, b.lhs) && same_structure(a.rhs, b.rhs);
}

namespace {
void collect(const std::vector<Factor>& factors, std::set<int>& out);
void collect(const Expr& e, std::set<int>& out) {
  for (const auto& t : e.terms) {
    collect(t.factors, out);
    collect(t.denominator, out);
  }
}
void collect(const std::vector<Factor>& factors, std::set<int>& out) {
  for (const auto& f : factors) {
    if (auto* v = std::get_if<Variable>(&f.atom)) out.insert(v->label);
    else if (auto* g = std::get_if<Group>(&f.atom)) collect(*g->inner, out);
  }
}
}  // namespace

std::set<int> variables(const Expr& e) {
  std::set<int> out;
  collect(e, out);
  return out;
}

std::set<int> variables(const Equation& q) {
  std::set<int> out = variables(q.lhs);
  std::set<int> r = variables(q.rhs);
  out.insert(r.begin(), r.end());
  return out;
}

bool contains_variable(const Term& t, int label) { return mentions(t.factors, label) || mentions(t.denominator, label); }

Expr substitute(const Expr& e, int label, const Expr& replacement) {
  Expr out;
  for (const auto& t : e.terms) {
    bool bare = t.coefficient == 1 && !t.has_denominator() && t.factors.size() == 1 && t.factors[0].power == 1;
    if (bare) {
      if (auto* v = std::get_if<Variable>(&t.factors[0].atom); v && v->label == label) {
        for (const auto& r : replacement.terms) out.terms.push_back(t.sign < 0 ? negate(r) : r);
        continue;
      }
    }
    Term s = t;
    s.factors = substitute_factors(t.factors, label, replacement);
    s.denominator = substitute_factors(t.denominator, label, replacement);
    out.terms.push_back(std::move(s));
  }
  return out;
}

Equation substitute(const Equation& q, int label, const Expr& replacement) {
  return {substitute(q.lhs, label, replacement), substitute(q.rhs, label, replacement)};
}

}  // namespace tenzan
