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

#include "tenzan/identities.hpp"

#include <algorithm>

#include <nlohmann/json.hpp>

#include "tenzan/evaluate.hpp"
#include "tenzan/notation.hpp"

namespace tenzan {

std::string_view identity_status_name(IdentityStatus status) {
  switch (status) {
    case IdentityStatus::Exact: return "exact";
    case IdentityStatus::UpToSign: return "up to sign";
    case IdentityStatus::Disagrees: return "disagrees";
  }
  return "?";
}

const std::vector<IdentityEntry>& identity_table() {
  static const std::vector<IdentityEntry> table{
      {"1", "(sqrt(2) - 1)*(sqrt(2) + 1)", false},
      {"1", "(sqrt(2) - 1)^2*(sqrt(2) + 1)^2", false},
      {"1", "(sqrt(3) - 2)*(sqrt(3) + 2)", false},
      {"1", "(sqrt(5) - 2)*(sqrt(5) + 2)", false},
      {"2", "(sqrt(2) - 1)^2*(sqrt(2) + 2)^2", false},
      {"2", "(sqrt(3) - 1)*(sqrt(3) + 1)", false},
      {"sqrt(2)", "(sqrt(2) - 1)*(sqrt(2) + 2)", false},
      {"sqrt(2)", "(sqrt(2) - 2)^2*(sqrt(2) + 1)^2", false},
      {"4", "(sqrt(5) - 1)*(sqrt(5) + 1)", false},
      {"2", "(sqrt(2) - 2)*(sqrt(2) + 2)", true},
      {"2", "(sqrt(3) - 2)*(sqrt(3) + 1)^2", true},
      {"sqrt(2)", "(sqrt(2) - 2)*(sqrt(2) + 1)", true},
  };
  return table;
}

std::vector<IdentityResult> audit_identities() {
  std::vector<IdentityResult> out;
  for (const auto& entry : identity_table()) {
    SurdNumber claimed = evaluate(parse_expr(entry.claimed), {});
    SurdNumber value = evaluate(parse_expr(entry.product), {});
    IdentityStatus status = IdentityStatus::Disagrees;
    if (value == claimed) status = IdentityStatus::Exact;
    else if (entry.sign_caveat && value == -claimed) status = IdentityStatus::UpToSign;
    out.push_back({entry, claimed, value, status});
  }
  return out;
}

std::string format_identities_text(const std::vector<IdentityResult>& results, int precision) {
  std::vector<std::string> lefts;
  std::size_t width = 0;
  for (const auto& r : results) {
    lefts.push_back(std::string(r.entry.claimed) + " = " + std::string(r.entry.product) +
                    (r.entry.sign_caveat ? " [negated]" : ""));
    width = std::max(width, lefts.back().size());
  }
  std::string out;
  int counts[3] = {0, 0, 0};
  for (std::size_t i = 0; i < results.size(); ++i) {
    const auto& r = results[i];
    ++counts[static_cast<int>(r.status)];
    std::string line = lefts[i] + std::string(width - lefts[i].size() + 2, ' ');
    line += "value " + r.value.to_string();
    if (!r.value.is_rational()) line += " (" + r.value.to_decimal(precision) + ")";
    line += ": ";
    if (r.status == IdentityStatus::Disagrees)
      line += "DISAGREES with source text (computed " + r.value.to_string() + ", claimed " + r.claimed.to_string() + ")";
    else
      line += identity_status_name(r.status);
    out += line + "\n";
  }
  out += "summary: " + std::to_string(results.size()) + " products, " + std::to_string(counts[0]) + " exact, " +
         std::to_string(counts[1]) + " up to sign, " + std::to_string(counts[2]) + " disagree\n";
  return out;
}

std::string format_identities_structured(const std::vector<IdentityResult>& results, bool ascii, int precision) {
  std::string out;
  for (const auto& r : results) {
    nlohmann::json j{{"record", "identity"},
                     {"claimed", r.entry.claimed},
                     {"product", r.entry.product},
                     {"sign_caveat", r.entry.sign_caveat},
                     {"value", r.value.to_string()},
                     {"decimal", r.value.to_decimal(precision)},
                     {"status", identity_status_name(r.status)}};
    out += j.dump(-1, ' ', ascii) + "\n";
  }
  return out;
}

}  // namespace tenzan
