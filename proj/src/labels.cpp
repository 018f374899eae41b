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

#include "tenzan/labels.hpp"

#include <array>
#include <stdexcept>

namespace tenzan {
namespace {

// 庚 and 癸 share readings with 甲 and 己; the doubled vowel keeps them distinct.
constexpr std::array<LabelInfo, 11> kLabels{{
    {0, "甲", "ko", "a"},
    {1, "乙", "otsu", "b"},
    {2, "丙", "hei", "c"},
    {3, "丁", "tei", "d"},
    {4, "戊", "bo", "e"},
    {5, "己", "ki", "f"},
    {6, "庚", "kou", "g"},
    {7, "辛", "shin", "h"},
    {8, "壬", "jun", "i"},
    {9, "癸", "kii", "j"},
    {10, "方斜", "hosha", "x"},
}};

}  // namespace

const LabelInfo& label_info(int index) {
  if (index < 0 || index >= static_cast<int>(kLabels.size())) throw std::out_of_range("label index");
  return kLabels[static_cast<std::size_t>(index)];
}

std::optional<int> find_label(std::string_view spelling) {
  for (const auto& l : kLabels)
    if (spelling == l.kanji || spelling == l.romanized || spelling == l.ascii) return l.index;
  return std::nullopt;
}

}  // namespace tenzan
