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

#include <cstdint>
#include <memory>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "tenzan/rational.hpp"

namespace tenzan {

// Label indices 0..9 are the calendar stems a..j; 10 is the diagonal x.
inline constexpr int kStemCount = 10;
inline constexpr int kDiagonal = 10;
inline constexpr int kLabelCount = 11;

struct Expr;

struct Variable {
  int label = 0;
};

struct SqrtInt {
  std::uint64_t radicand = 2;  // square-free, >= 2
};

// A parenthesized subexpression kept as a single factor.
struct Group {
  std::shared_ptr<const Expr> inner;
};

using Atom = std::variant<Variable, SqrtInt, Group>;

struct Factor {
  Atom atom;
  int power = 1;
};

// sign * (coefficient * factors) / (denominator_coefficient * denominator).
// Both coefficients are positive; negativity lives in sign only.
struct Term {
  int sign = 1;
  BigInt coefficient = 1;
  std::vector<Factor> factors;
  BigInt denominator_coefficient = 1;
  std::vector<Factor> denominator;

  Rational coefficient_value() const;
  bool has_denominator() const { return denominator_coefficient != 1 || !denominator.empty(); }
};

// A signed sum of terms; no terms means zero.
struct Expr {
  std::vector<Term> terms;

  bool is_zero_literal() const { return terms.empty(); }
};

struct Equation {
  Expr lhs;
  Expr rhs;
};

bool operator==(const Atom& a, const Atom& b);
bool operator==(const Factor& a, const Factor& b);
bool operator==(const Term& a, const Term& b);
bool operator==(const Expr& a, const Expr& b);
bool operator==(const Equation& a, const Equation& b);

// Constructors.
Expr variable(int label);
Expr constant(const Rational& value);
Expr sqrt_int(std::uint64_t radicand);  // radicand must be square-free >= 2
Atom group_atom(const Expr& inner);
Term term_of(const Atom& atom, int power = 1);
Term constant_term(const Rational& value);  // value != 0
Expr expr_of(Term term);

// Equal atoms, comparing group contents up to commutative reordering.
bool atom_equivalent(const Atom& a, const Atom& b);

// Structural helpers. None of these simplify beyond what is stated.
void merge_factor(std::vector<Factor>& factors, const Factor& f);
// sqrt(r)^k with k >= 2 folds r^(k/2) into the coefficient.
void fold_square_roots(Term& t);
Term multiply(const Term& a, const Term& b);
Term negate(Term t);
Expr negate(const Expr& e);
Expr concat(const Expr& a, const Expr& b);
Expr difference(const Expr& a, const Expr& b);
void set_coefficient(Term& t, const Rational& value);  // value > 0; keeps factor lists

// If e is exactly one term "+1 * (inner)", returns inner; otherwise e.
Expr unwrap_group(const Expr& e);

// Order-insensitive structural key: commutative reorderings of terms and
// factors (recursively inside groups) map to the same key.
std::string structure_key(const Expr& e);
std::string structure_key(const Term& t);
// Key of the factor lists only, ignoring sign and coefficients.
std::string like_key(const Term& t);
bool same_structure(const Expr& a, const Expr& b);
bool same_structure(const Equation& a, const Equation& b);

std::set<int> variables(const Expr& e);
std::set<int> variables(const Equation& q);
bool contains_variable(const Term& t, int label);

// Replaces every occurrence of the variable by a group of the replacement.
// A term that is exactly +/-1 * variable is spliced into the sum instead.
Expr substitute(const Expr& e, int label, const Expr& replacement);
Equation substitute(const Equation& q, int label, const Expr& replacement);

}  // namespace tenzan
