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

#include "tenzan/canonical.hpp"

#include <array>

#include "tenzan/error.hpp"

namespace tenzan {
namespace {

struct Fraction {
  Poly num;
  Poly den;
};

Monomial monomial_mul(const Monomial& a, const Monomial& b) {
  std::map<int, int> powers;
  for (const auto& [v, p] : a) powers[v] += p;
  for (const auto& [v, p] : b) powers[v] += p;
  return {powers.begin(), powers.end()};
}

using Exponents = std::array<int, kLabelCount>;

Exponents exponents(const Monomial& m) {
  Exponents e{};
  for (const auto& [v, p] : m) e[static_cast<std::size_t>(v)] = p;
  return e;
}

// Pure lexicographic order with a > b > ... > x, a genuine monomial order.
const Monomial& leading(const Poly& p) {
  const Monomial* best = nullptr;
  Exponents best_e{};
  for (const auto& [m, c] : p) {
    Exponents e = exponents(m);
    if (!best || e > best_e) {
      best = &m;
      best_e = e;
    }
  }
  return *best;
}

std::optional<Monomial> monomial_div(const Monomial& a, const Monomial& b) {
  Exponents ea = exponents(a);
  Exponents eb = exponents(b);
  Monomial out;
  for (int v = 0; v < kLabelCount; ++v) {
    int d = ea[static_cast<std::size_t>(v)] - eb[static_cast<std::size_t>(v)];
    if (d < 0) return std::nullopt;
    if (d > 0) out.emplace_back(v, d);
  }
  return out;
}

Poly one() { return poly_constant(SurdNumber(1)); }

Poly poly_pow(const Poly& p, int power) {
  Poly r = one();
  for (int i = 0; i < power; ++i) r = poly_mul(r, p);
  return r;
}

Fraction fraction_of(const Expr& e);

Fraction factor_fraction(const Factor& f) {
  Fraction base;
  if (auto* v = std::get_if<Variable>(&f.atom)) {
    base.num = {{Monomial{{v->label, 1}}, SurdNumber(1)}};
    base.den = one();
  } else if (auto* s = std::get_if<SqrtInt>(&f.atom)) {
    base.num = poly_constant(SurdNumber::sqrt_of(s->radicand));
    base.den = one();
  } else {
    base = fraction_of(*std::get<Group>(f.atom).inner);
  }
  return {poly_pow(base.num, f.power), poly_pow(base.den, f.power)};
}

Fraction term_fraction(const Term& t) {
  Fraction r{poly_constant(SurdNumber(Rational(t.coefficient) * Rational(t.sign))),
             poly_constant(SurdNumber(Rational(t.denominator_coefficient)))};
  for (const auto& f : t.factors) {
    Fraction ff = factor_fraction(f);
    r.num = poly_mul(r.num, ff.num);
    r.den = poly_mul(r.den, ff.den);
  }
  for (const auto& f : t.denominator) {
    Fraction ff = factor_fraction(f);
    r.num = poly_mul(r.num, ff.den);
    r.den = poly_mul(r.den, ff.num);
  }
  return r;
}

void normalize(Fraction& f) {
  if (f.den.empty()) throw Error(ErrorCode::ZeroDenominator, "denominator expands to zero");
  if (poly_is_constant(f.den)) {
    SurdNumber c = f.den.begin()->second;
    f.num = poly_scale(f.num, c.inverse());
    f.den = one();
  }
}

Fraction fraction_of(const Expr& e) {
  Fraction sum{Poly{}, one()};
  for (const auto& t : e.terms) {
    Fraction tf = term_fraction(t);
    normalize(tf);
    if (tf.den == sum.den) {
      sum.num = poly_add(sum.num, tf.num);
    } else {
      sum.num = poly_add(poly_mul(sum.num, tf.den), poly_mul(tf.num, sum.den));
      sum.den = poly_mul(sum.den, tf.den);
    }
  }
  normalize(sum);
  return sum;
}

void add_into(Poly& p, const Monomial& m, const SurdNumber& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = p.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) p.erase(it);
  }
}

}  // namespace

Poly poly_constant(const SurdNumber& c) {
  Poly p;
  if (!c.is_zero()) p.emplace(Monomial{}, c);
  return p;
}

Poly poly_add(const Poly& a, const Poly& b) {
  Poly r = a;
  for (const auto& [m, c] : b) add_into(r, m, c);
  return r;
}

Poly poly_sub(const Poly& a, const Poly& b) { return poly_add(a, poly_scale(b, SurdNumber(-1))); }

Poly poly_mul(const Poly& a, const Poly& b) {
  Poly r;
  for (const auto& [ma, ca] : a)
    for (const auto& [mb, cb] : b) add_into(r, monomial_mul(ma, mb), ca * cb);
  return r;
}

Poly poly_scale(const Poly& a, const SurdNumber& c) {
  Poly r;
  if (c.is_zero()) return r;
  for (const auto& [m, v] : a) r.emplace(m, v * c);
  return r;
}

bool poly_is_constant(const Poly& p) { return p.empty() || (p.size() == 1 && p.begin()->first.empty()); }

std::optional<Poly> divide_exact(const Poly& a, const Poly& b) {
  if (b.empty()) throw Error(ErrorCode::ZeroDenominator, "division by the zero polynomial");
  const Monomial& lb = leading(b);
  SurdNumber lb_inv = b.at(lb).inverse();
  Poly remainder = a;
  Poly quotient;
  while (!remainder.empty()) {
    const Monomial& lr = leading(remainder);
    auto m = monomial_div(lr, lb);
    if (!m) return std::nullopt;
    Poly step{{*m, remainder.at(lr) * lb_inv}};
    quotient = poly_add(quotient, step);
    remainder = poly_sub(remainder, poly_mul(step, b));
  }
  return quotient;
}

CanonicalPoly canonical_form(const Expr& e) {
  Fraction f = fraction_of(e);
  return {std::move(f.num), std::move(f.den)};
}

bool semantically_equal(const Expr& a, const Expr& b) {
  CanonicalPoly ca = canonical_form(a);
  CanonicalPoly cb = canonical_form(b);
  return poly_sub(poly_mul(ca.numerator, cb.denominator), poly_mul(cb.numerator, ca.denominator)).empty();
}

bool equation_equivalent(const Equation& a, const Equation& b) {
  CanonicalPoly ca = canonical_form(difference(a.lhs, a.rhs));
  CanonicalPoly cb = canonical_form(difference(b.lhs, b.rhs));
  Poly x = poly_mul(ca.numerator, cb.denominator);
  Poly y = poly_mul(cb.numerator, ca.denominator);
  if (x.empty() || y.empty()) return x.empty() && y.empty();
  const auto& [m, cy] = *y.begin();
  auto it = x.find(m);
  if (it == x.end()) return false;
  SurdNumber ratio = it->second / cy;
  return poly_sub(x, poly_scale(y, ratio)).empty();
}

Poly normalized_equation(const Equation& q) {
  Poly n = canonical_form(difference(q.lhs, q.rhs)).numerator;
  if (n.empty()) return n;
  return poly_scale(n, n.begin()->second.inverse());
}

Expr to_expr(const Poly& p) {
  Expr e;
  for (const auto& [m, c] : p) {
    for (const auto& [rad, q] : c.components()) {
      Term t = constant_term(q);
      if (rad != 1) t.factors.push_back(Factor{SqrtInt{rad}, 1});
      for (const auto& [v, pw] : m) t.factors.push_back(Factor{Variable{v}, pw});
      e.terms.push_back(std::move(t));
    }
  }
  return e;
}

Expr to_expr(const CanonicalPoly& c) {
  Expr num = to_expr(c.numerator);
  if (c.denominator == one()) return num;
  if (num.terms.empty()) return num;
  Term t;
  t.factors.push_back(Factor{group_atom(num), 1});
  t.denominator.push_back(Factor{group_atom(to_expr(c.denominator)), 1});
  return expr_of(std::move(t));
}

}  // namespace tenzan
