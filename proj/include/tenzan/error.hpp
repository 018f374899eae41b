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

#include <stdexcept>
#include <string>
#include <string_view>

namespace tenzan {

enum class ErrorCode {
  // expr-core
  ZeroDenominator,
  UnboundVariable,
  RadicandTooLarge,
  NestedRadical,
  Overflow,
  // rules
  UnsupportedInput,
  NoCommonFactor,
  BadSelector,
  NothingToSplit,
  UndefinedSubstitution,
  NotCommonFactor,
  ZeroFactor,
  NonZeroRhs,
  NotLikeTerms,
  NotAnIdentity,
  PatternMismatch,
  NotUnitPair,
  NoFractionPresent,
  BadSplitSpec,
  RhsMismatch,
  // notation
  SyntaxError,
  UnknownLabel,
  NonSquarefreeRadicand,
  MalformedNumeral,
  MalformedLength,
  RepeatedUnit,
  NegativeLength,
  // derivation
  DanglingReference,
  DuplicateStepId,
  UndeclaredVariable,
  NotSolvedForm,
  ReportNotPassing,
};

std::string_view error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

// Parse failure with a 1-based source position.
class SyntaxError : public Error {
 public:
  SyntaxError(ErrorCode code, const std::string& message, int line, int column)
      : Error(code, message), line_(line), column_(column) {}

  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

}  // namespace tenzan
