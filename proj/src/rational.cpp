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

#include "tenzan/rational.hpp"

#include <cctype>

#include "tenzan/error.hpp"

namespace tenzan {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::ZeroDenominator: return "ZeroDenominator";
    case ErrorCode::UnboundVariable: return "UnboundVariable";
    case ErrorCode::RadicandTooLarge: return "RadicandTooLarge";
    case ErrorCode::NestedRadical: return "NestedRadical";
    case ErrorCode::Overflow: return "Overflow";
    case ErrorCode::UnsupportedInput: return "UnsupportedInput";
    case ErrorCode::NoCommonFactor: return "NoCommonFactor";
    case ErrorCode::BadSelector: return "BadSelector";
    case ErrorCode::NothingToSplit: return "NothingToSplit";
    case ErrorCode::UndefinedSubstitution: return "UndefinedSubstitution";
    case ErrorCode::NotCommonFactor: return "NotCommonFactor";
    case ErrorCode::ZeroFactor: return "ZeroFactor";
    case ErrorCode::NonZeroRhs: return "NonZeroRhs";
    case ErrorCode::NotLikeTerms: return "NotLikeTerms";
    case ErrorCode::NotAnIdentity: return "NotAnIdentity";
    case ErrorCode::PatternMismatch: return "PatternMismatch";
    case ErrorCode::NotUnitPair: return "NotUnitPair";
    case ErrorCode::NoFractionPresent: return "NoFractionPresent";
    case ErrorCode::BadSplitSpec: return "BadSplitSpec";
    case ErrorCode::RhsMismatch: return "RhsMismatch";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::UnknownLabel: return "UnknownLabel";
    case ErrorCode::NonSquarefreeRadicand: return "NonSquarefreeRadicand";
    case ErrorCode::MalformedNumeral: return "MalformedNumeral";
    case ErrorCode::MalformedLength: return "MalformedLength";
    case ErrorCode::RepeatedUnit: return "RepeatedUnit";
    case ErrorCode::NegativeLength: return "NegativeLength";
    case ErrorCode::DanglingReference: return "DanglingReference";
    case ErrorCode::DuplicateStepId: return "DuplicateStepId";
    case ErrorCode::UndeclaredVariable: return "UndeclaredVariable";
    case ErrorCode::NotSolvedForm: return "NotSolvedForm";
    case ErrorCode::ReportNotPassing: return "ReportNotPassing";
  }
  return "Unknown";
}

Rational::Rational(const BigInt& numerator, const BigInt& denominator) {
  if (denominator == 0) throw Error(ErrorCode::ZeroDenominator, "rational with zero denominator");
  value_ = mpq_class(numerator, denominator);
  value_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  std::string s(text);
  auto bad = [&] { return Error(ErrorCode::SyntaxError, "not a rational number: '" + s + "'"); };
  if (s.empty()) throw bad();
  std::size_t i = 0;
  bool negative = false;
  if (s[0] == '-' || s[0] == '+') {
    negative = s[0] == '-';
    i = 1;
  }
  auto digits = [&](std::size_t from, std::size_t to) {
    if (from >= to) return false;
    for (std::size_t k = from; k < to; ++k)
      if (!std::isdigit(static_cast<unsigned char>(s[k]))) return false;
    return true;
  };
  Rational result;
  if (auto slash = s.find('/'); slash != std::string::npos) {
    if (!digits(i, slash) || !digits(slash + 1, s.size())) throw bad();
    result = Rational(BigInt(s.substr(i, slash - i), 10), BigInt(s.substr(slash + 1), 10));
  } else if (auto dot = s.find('.'); dot != std::string::npos) {
    if (!digits(i, dot) || !digits(dot + 1, s.size())) throw bad();
    std::string frac = s.substr(dot + 1);
    BigInt scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac.size());
    result = Rational(BigInt(s.substr(i, dot - i) + frac, 10), scale);
  } else {
    if (!digits(i, s.size())) throw bad();
    result = Rational(BigInt(s.substr(i), 10));
  }
  return negative ? -result : result;
}

Rational Rational::abs() const { return sign() < 0 ? -*this : *this; }

Rational Rational::inverse() const {
  if (is_zero()) throw Error(ErrorCode::ZeroDenominator, "inverse of zero");
  return Rational(denominator(), numerator());
}

BigInt Rational::floor() const {
  BigInt q;
  mpz_fdiv_q(q.get_mpz_t(), value_.get_num_mpz_t(), value_.get_den_mpz_t());
  return q;
}

std::string Rational::to_string() const {
  if (is_integer()) return value_.get_num().get_str();
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Rational operator+(const Rational& a, const Rational& b) { return Rational(mpq_class(a.value_ + b.value_)); }
Rational operator-(const Rational& a, const Rational& b) { return Rational(mpq_class(a.value_ - b.value_)); }
Rational operator*(const Rational& a, const Rational& b) { return Rational(mpq_class(a.value_ * b.value_)); }
Rational operator/(const Rational& a, const Rational& b) {
  if (b.is_zero()) throw Error(ErrorCode::ZeroDenominator, "division by zero");
  return Rational(mpq_class(a.value_ / b.value_));
}
Rational operator-(const Rational& a) { return Rational(mpq_class(-a.value_)); }

}  // namespace tenzan
