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
#include <string_view>
#include <vector>

#include "tenzan/surd.hpp"

namespace tenzan {

// A conversion identity "claimed = product" from the traditional tables.
// sign_caveat marks entries the source says hold only for the negated values.
struct IdentityEntry {
  std::string_view claimed;
  std::string_view product;
  bool sign_caveat;
};

enum class IdentityStatus { Exact, UpToSign, Disagrees };

std::string_view identity_status_name(IdentityStatus status);

struct IdentityResult {
  IdentityEntry entry;
  SurdNumber claimed;
  SurdNumber value;  // exact value of the product
  IdentityStatus status;
};

const std::vector<IdentityEntry>& identity_table();
std::vector<IdentityResult> audit_identities();

std::string format_identities_text(const std::vector<IdentityResult>& results, int precision = 9);
std::string format_identities_structured(const std::vector<IdentityResult>& results, bool ascii, int precision = 9);

}  // namespace tenzan
