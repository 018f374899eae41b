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

#include <optional>
#include <string>
#include <string_view>

namespace tenzan {

// Bijection between label indices, calendar-stem kanji, romanized readings
// and ASCII letters. Index 10 is the diagonal (方斜, x).
struct LabelInfo {
  int index;
  std::string_view kanji;
  std::string_view romanized;
  std::string_view ascii;
};

const LabelInfo& label_info(int index);
// Accepts any of the three spellings.
std::optional<int> find_label(std::string_view spelling);

}  // namespace tenzan
