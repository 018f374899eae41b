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

#include "tenzan/surd.hpp"

#include <algorithm>
#include <numeric>
#include <vector>

#include "tenzan/error.hpp"

namespace tenzan {
namespace {

std::uint64_t smallest_prime_factor(std::uint64_t n) {
  if (n % 2 == 0) return 2;
  for (std::uint64_t p = 3; p * p <= n; p += 2)
    if (n % p == 0) return p;
  return n;
}

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw Error(ErrorCode::Overflow, "radicand product overflows 64 bits");
  return r;
}

}  // namespace

std::pair<std::uint64_t, std::uint64_t> squarefree_split(std::uint64_t n) {
  if (n == 0) return {0, 1};
  std::uint64_t outside = 1;
  std::uint64_t inside = 1;
  std::uint64_t rest = n;
  for (std::uint64_t p = 2; p * p <= rest; ++p) {
    int k = 0;
    while (rest % p == 0) {
      rest /= p;
      ++k;
    }
    for (int i = 0; i < k / 2; ++i) outside *= p;
    if (k % 2 == 1) inside *= p;
  }
  inside *= rest;
  return {outside, inside};
}

bool is_squarefree(std::uint64_t n) { return n >= 1 && squarefree_split(n).first == 1; }

SurdNumber::SurdNumber(const Rational& q) {
  if (!q.is_zero()) coeffs_.emplace(1, q);
}

SurdNumber SurdNumber::sqrt_of(std::uint64_t n) {
  auto [outside, inside] = squarefree_split(n);
  SurdNumber r;
  if (n == 0) return r;
  r.coeffs_.emplace(inside, Rational(static_cast<long>(outside)));
  return r;
}

SurdNumber SurdNumber::from_components(Components components) {
  SurdNumber r;
  for (auto& [radicand, c] : components) {
    if (!is_squarefree(radicand)) throw Error(ErrorCode::NonSquarefreeRadicand, "radicand " + std::to_string(radicand) + " is not square-free");
    r.add_component(radicand, c);
  }
  return r;
}

void SurdNumber::add_component(std::uint64_t radicand, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = coeffs_.emplace(radicand, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) coeffs_.erase(it);
  }
}

Rational SurdNumber::rational_part() const { return coefficient(1); }

Rational SurdNumber::coefficient(std::uint64_t radicand) const {
  auto it = coeffs_.find(radicand);
  return it == coeffs_.end() ? Rational() : it->second;
}

SurdNumber operator+(const SurdNumber& a, const SurdNumber& b) {
  SurdNumber r = a;
  for (const auto& [rad, c] : b.coeffs_) r.add_component(rad, c);
  return r;
}

SurdNumber operator-(const SurdNumber& a) {
  SurdNumber r;
  for (const auto& [rad, c] : a.coeffs_) r.coeffs_.emplace(rad, -c);
  return r;
}

SurdNumber operator-(const SurdNumber& a, const SurdNumber& b) { return a + (-b); }

SurdNumber operator*(const SurdNumber& a, const SurdNumber& b) {
  SurdNumber r;
  for (const auto& [m, cm] : a.coeffs_) {
    for (const auto& [n, cn] : b.coeffs_) {
      // sqrt(m) sqrt(n) = g sqrt((m/g)(n/g)), g = gcd(m, n), both square-free.
      std::uint64_t g = std::gcd(m, n);
      std::uint64_t rad = checked_mul(m / g, n / g);
      r.add_component(rad, cm * cn * Rational(BigInt(static_cast<unsigned long>(g))));
    }
  }
  return r;
}

SurdNumber surd_mul(const SurdNumber& x, const SurdNumber& y) { return x * y; }

SurdNumber SurdNumber::inverse() const {
  if (is_zero()) throw Error(ErrorCode::ZeroDenominator, "inverse of zero");
  if (is_rational()) return SurdNumber(rational_part().inverse());
  // Eliminate one prime p at a time: x = u + v sqrt(p), x (u - v sqrt(p)) = u^2 - p v^2.
  std::uint64_t largest = coeffs_.rbegin()->first;
  std::uint64_t p = smallest_prime_factor(largest);
  SurdNumber u;
  SurdNumber v;
  for (const auto& [rad, c] : coeffs_) {
    if (rad % p == 0) v.add_component(rad / p, c);
    else u.add_component(rad, c);
  }
  SurdNumber conjugate = u - v * SurdNumber::sqrt_of(p);
  SurdNumber norm = u * u - v * v * SurdNumber(Rational(static_cast<long>(p)));
  return conjugate * norm.inverse();
}

SurdNumber operator/(const SurdNumber& a, const SurdNumber& b) { return a * b.inverse(); }

mpf_class SurdNumber::approximate(unsigned long bits, mpf_class* error_bound) const {
  mpf_class sum(0, bits);
  mpf_class magnitude(0, bits);
  for (const auto& [rad, c] : coeffs_) {
    mpf_class root(static_cast<double>(0), bits);
    mpf_class r(0, bits);
    r = BigInt(static_cast<unsigned long>(rad));
    mpf_sqrt(root.get_mpf_t(), r.get_mpf_t());
    mpf_class coeff(0, bits);
    coeff = c.raw();
    mpf_class term(0, bits);
    term = coeff * root;
    sum += term;
    magnitude += abs(term);
  }
  if (error_bound) {
    mpf_class bound(0, bits);
    mpf_div_2exp(bound.get_mpf_t(), magnitude.get_mpf_t(), bits - 8);
    *error_bound = bound;
  }
  return sum;
}

int SurdNumber::sign() const {
  if (is_zero()) return 0;
  if (is_rational()) return rational_part().sign();
  for (unsigned long bits = 128;; bits *= 2) {
    mpf_class err;
    mpf_class v = approximate(bits, &err);
    if (abs(v) > err) return sgn(v);
    if (bits > (1ul << 20)) throw Error(ErrorCode::Overflow, "sign determination did not converge");
  }
}

BigInt SurdNumber::floor_scaled(const BigInt& scale) const {
  if (is_rational()) return (rational_part() * Rational(scale)).floor();
  for (unsigned long bits = 256;; bits *= 2) {
    mpf_class err;
    mpf_class v = approximate(bits, &err);
    mpf_class s(0, bits);
    s = scale;
    mpf_class scaled(0, bits);
    scaled = v * s;
    mpf_class scaled_err(0, bits);
    scaled_err = err * s;
    mpf_class f(0, bits);
    mpf_floor(f.get_mpf_t(), scaled.get_mpf_t());
    // Irrational values never sit exactly on an integer; refine until separated.
    if (scaled - f > scaled_err && f + 1 - scaled > scaled_err) {
      BigInt out;
      mpz_set_f(out.get_mpz_t(), f.get_mpf_t());
      return out;
    }
    if (bits > (1ul << 20)) throw Error(ErrorCode::Overflow, "floor did not converge");
  }
}

double SurdNumber::to_double() const {
  mpf_class v = approximate(128, nullptr);
  return v.get_d();
}

std::string SurdNumber::to_decimal(int significant_digits) const {
  if (is_zero()) return "0";
  significant_digits = std::max(significant_digits, 1);
  unsigned long bits = static_cast<unsigned long>(significant_digits) * 4 + 128;
  mpf_class v = approximate(bits, nullptr);
  bool negative = sgn(v) < 0;
  if (negative) v = -v;
  mp_exp_t exp = 0;
  char* raw = mpf_get_str(nullptr, &exp, 10, significant_digits + 4, v.get_mpf_t());
  std::string digits(raw);
  void (*freefunc)(void*, size_t);
  mp_get_memory_functions(nullptr, nullptr, &freefunc);
  freefunc(raw, digits.size() + 1);
  digits.resize(significant_digits + 4, '0');
  // Round half up at the requested digit.
  bool round_up = digits[significant_digits] >= '5';
  digits.resize(significant_digits);
  if (round_up) {
    int i = significant_digits - 1;
    while (i >= 0 && digits[i] == '9') digits[i--] = '0';
    if (i < 0) {
      digits.insert(digits.begin(), '1');
      digits.pop_back();
      ++exp;
    } else {
      ++digits[i];
    }
  }
  std::string out;
  if (exp <= 0) {
    out = "0." + std::string(static_cast<std::size_t>(-exp), '0') + digits;
  } else if (static_cast<std::size_t>(exp) >= digits.size()) {
    out = digits + std::string(static_cast<std::size_t>(exp) - digits.size(), '0');
  } else {
    out = digits.substr(0, exp) + "." + digits.substr(exp);
  }
  if (out.find('.') != std::string::npos) {
    while (out.back() == '0') out.pop_back();
    if (out.back() == '.') out.pop_back();
  }
  return negative ? "-" + out : out;
}

std::string SurdNumber::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [rad, c] : coeffs_) {
    bool negative = c.sign() < 0;
    Rational mag = c.abs();
    std::string body;
    if (rad == 1) {
      body = mag.to_string();
    } else {
      std::string root = "sqrt(" + std::to_string(rad) + ")";
      body = mag == Rational(1) ? root : mag.to_string() + "*" + root;
    }
    if (first) out = negative ? "-" + body : body;
    else out += (negative ? " - " : " + ") + body;
    first = false;
  }
  return out;
}

}  // namespace tenzan
