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

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "tenzan/expr.hpp"
#include "tenzan/surd.hpp"

namespace tenzan {

// Sorted (label, power) pairs with power >= 1. The empty monomial is 1.
using Monomial = std::vector<std::pair<int, int>>;
// Fully expanded polynomial over the surd field; no zero coefficients stored.
using Poly = std::map<Monomial, SurdNumber>;

struct CanonicalPoly {
  Poly numerator;
  Poly denominator;  // {1: 1} when the denominator is constant

  friend bool operator==(const CanonicalPoly&, const CanonicalPoly&) = default;
};

Poly poly_constant(const SurdNumber& c);
Poly poly_add(const Poly& a, const Poly& b);
Poly poly_sub(const Poly& a, const Poly& b);
Poly poly_mul(const Poly& a, const Poly& b);
Poly poly_scale(const Poly& a, const SurdNumber& c);
bool poly_is_constant(const Poly& p);
// Exact quotient a / b, or nullopt if b does not divide a.
std::optional<Poly> divide_exact(const Poly& a, const Poly& b);

// Throws ZeroDenominator when the expanded denominator is the zero polynomial.
CanonicalPoly canonical_form(const Expr& e);
bool semantically_equal(const Expr& a, const Expr& b);
bool equation_equivalent(const Equation& a, const Equation& b);

// Numerator of lhs - rhs scaled so its first coefficient is exactly 1 (empty
// when the equation is an identity). Equivalent equations give equal results.
Poly normalized_equation(const Equation& q);

// Re-embeds a canonical polynomial as an expression: one term per monomial
// and radicand, rational part first, sqrt factor before the variables.
Expr to_expr(const Poly& p);
Expr to_expr(const CanonicalPoly& c);

}  // namespace tenzan
