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
#include <map>
#include <string>
#include <utility>

#include "tenzan/rational.hpp"

namespace tenzan {

// Largest radicand accepted from user input for square-free screening.
inline constexpr std::uint64_t kMaxRadicand = 1'000'000;

// n = square * radicand with radicand square-free. Returns {sqrt(square), radicand}.
std::pair<std::uint64_t, std::uint64_t> squarefree_split(std::uint64_t n);
bool is_squarefree(std::uint64_t n);

// An element of Q(sqrt(2), sqrt(3), sqrt(5), ...): a finite sum of
// rational multiples of square roots of square-free integers. Radicand 1 is
// the rational part. Zero coefficients are never stored.
class SurdNumber {
 public:
  using Components = std::map<std::uint64_t, Rational>;

  SurdNumber() = default;
  SurdNumber(const Rational& q);  // NOLINT
  SurdNumber(long v) : SurdNumber(Rational(v)) {}  // NOLINT

  // sqrt(n) for n >= 0, normalized to c*sqrt(m) with m square-free.
  static SurdNumber sqrt_of(std::uint64_t n);
  static SurdNumber from_components(Components components);

  const Components& components() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_rational() const { return coeffs_.empty() || (coeffs_.size() == 1 && coeffs_.begin()->first == 1); }
  Rational rational_part() const;
  // Coefficient of sqrt(radicand), zero when absent.
  Rational coefficient(std::uint64_t radicand) const;

  SurdNumber inverse() const;
  // -1, 0 or +1, decided exactly for zero and by refined approximation otherwise.
  int sign() const;
  // floor(value * scale) for scale > 0.
  BigInt floor_scaled(const BigInt& scale) const;

  double to_double() const;
  // Decimal rendering rounded to the given number of significant digits.
  std::string to_decimal(int significant_digits = 9) const;
  // Exact linear form, e.g. "2 - sqrt(2)" or "1/2*sqrt(6)"; parseable as an expression.
  std::string to_string() const;

  friend SurdNumber operator+(const SurdNumber& a, const SurdNumber& b);
  friend SurdNumber operator-(const SurdNumber& a, const SurdNumber& b);
  friend SurdNumber operator*(const SurdNumber& a, const SurdNumber& b);
  friend SurdNumber operator/(const SurdNumber& a, const SurdNumber& b);
  friend SurdNumber operator-(const SurdNumber& a);
  SurdNumber& operator+=(const SurdNumber& o) { return *this = *this + o; }
  SurdNumber& operator-=(const SurdNumber& o) { return *this = *this - o; }
  SurdNumber& operator*=(const SurdNumber& o) { return *this = *this * o; }

  friend bool operator==(const SurdNumber& a, const SurdNumber& b) { return a.coeffs_ == b.coeffs_; }
  friend bool operator!=(const SurdNumber& a, const SurdNumber& b) { return !(a == b); }

 private:
  void add_component(std::uint64_t radicand, const Rational& c);
  mpf_class approximate(unsigned long bits, mpf_class* error_bound) const;

  Components coeffs_;
};

SurdNumber surd_mul(const SurdNumber& x, const SurdNumber& y);

}  // namespace tenzan
