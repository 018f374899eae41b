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

#include <string>
#include <vector>

#include "tenzan/evaluate.hpp"
#include "tenzan/script.hpp"
#include "tenzan/verify.hpp"

namespace tenzan {

struct StepReport {
  const Step* step = nullptr;  // points into the checked script
  Verdict verdict;
  std::optional<Subject> input;  // the equation the step was checked against
};

enum class Severity { Ok, Warning, Error };
Severity severity_of(VerdictKind kind);

struct CheckReport {
  std::string title;
  std::vector<StepReport> steps;
  int ok = 0;
  int warnings = 0;
  int errors = 0;

  bool passed() const { return errors == 0; }
};

// Checks every step against its stated predecessor(s); later steps build on
// stated results even after a failure. The script must outlive the report.
CheckReport check_script(const DerivationScript& script);

struct SolvedValue {
  int label;
  SurdNumber value;
};

// Value of the lone variable of the final equation under the bindings.
SolvedValue final_value(const DerivationScript& script, const CheckReport& report, const Bindings& bindings);

std::string format_report_text(const CheckReport& report, bool ascii, int precision = 9);
// One JSON object per line: a script record, one per step, then a summary.
std::string format_report_structured(const CheckReport& report, bool ascii, int precision = 9);

}  // namespace tenzan
