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

#include "tenzan/corpus.hpp"

#include <string>

namespace tenzan {
namespace {

constexpr std::string_view kHeader = R"(problem "Katayamahiko: diameter of circle otsu in a square with diagonals"
var a = 甲 "diameter of circle ko"
var b = 乙 "diameter of circle otsu"
var x = 方斜 "diagonal of the square"

# The diagonal measured two ways.
s1: given sqrt(2)*b + a + b == x
s2: given sqrt(2)*a + a == x
# Move left and cancel.
s3: cancel s1, s2 => sqrt(2)*b + a + b - sqrt(2)*a - a == 0
# Different terms put together; the +a and -a pair is absorbed.
s4: apply put-together to s3 select terms 0,1,2,4 factor (sqrt(2) + 1) => b*(sqrt(2) + 1) - sqrt(2)*a == 0
s5: apply convert to s4 select terms 1 factor (sqrt(2) - 1)*(sqrt(2) + 1) => b*(sqrt(2) + 1) - sqrt(2)*a*(sqrt(2) - 1)*(sqrt(2) + 1) == 0
s6: apply eliminate-surplus to s5 factor (sqrt(2) + 1) => b - sqrt(2)*a*(sqrt(2) - 1) == 0
s7: apply split to s6 select terms 1 => b - 2*a + sqrt(2)*a == 0
)";

constexpr std::string_view kOhara = R"(# Final rearrangement as written on the source page.
s8: rearrange s7 => -2*a + sqrt(2)*a == b
)";

constexpr std::string_view kCorrected = R"(# Final rearrangement with the signs carried correctly.
s8: rearrange s7 => 2*a - sqrt(2)*a == b
)";

constexpr std::string_view kModern = R"(problem "Katayamahiko: modern solution through a fraction"
var a = 甲 "twice the radius of the large circle"
var b = 乙 "twice the radius of the small circle"

m1: given a + sqrt(2)*a == b*(sqrt(2) + 1) + a
m2: rearrange m1 => b == sqrt(2)/(sqrt(2) + 1)*a
# Rationalize the denominator.
m3: apply convert to m2 on rhs select terms 0 factor (sqrt(2) - 1)/(sqrt(2) - 1) => b == sqrt(2)*(sqrt(2) - 1)/(sqrt(2) + 1)/(sqrt(2) - 1)*a
m4: rearrange m3 => b == sqrt(2)*(sqrt(2) - 1)*a
m5: apply split to m4 on rhs select terms 0 => b == 2*a - sqrt(2)*a
m6: apply put-together to m5 on rhs select terms 0,1 factor a => b == (2 - sqrt(2))*a
)";

constexpr std::string_view kRuleExamples = R"(problem "One worked example per rule"
var a = 甲 "first quantity"
var b = 乙 "second quantity"
var c = 丙 "third quantity"
var d = 丁 "fourth quantity"
var e = 戊 "named result"
var x = 方斜 "quantity defined as a + b"
define x := a + b

# self-multiply
r1: given e == 2*a
r2: apply self-multiply to r1 => e^2 == 4*a^2
r3: given e == a + b
r4: apply self-multiply to r3 => e^2 == a^2 + 2*a*b + b^2

# put-together
r5: given sqrt(2)*b + b - sqrt(2)*a == 0
r6: apply put-together to r5 select terms 0,1 factor (sqrt(2) + 1) => b*(sqrt(2) + 1) - sqrt(2)*a == 0

# split, by distribution and by substitution
r7: given a*(b + c) == e
r8: apply split to r7 => a*b + a*c == e
r9: given d + c == x
r10: apply split to r9 on rhs with x => d + c == a + b

# eliminate-surplus
r11: given 3*x*(a + b + c) - 6*a*b == 0
r12: apply eliminate-surplus to r11 factor 3 => x*(a + b + c) - 2*a*b == 0

# add-same-subtract-different
r13: given e == 2*a*b + 2*a*b
r14: apply add-same-subtract-different to r13 on rhs select terms 0,1 => e == 4*a*b
r15: given e == -2*a*b - 2*a*b
r16: apply add-same-subtract-different to r15 on rhs select terms 0,1 => e == -4*a*b
r17: given e == a^2 - a^2 + b
r18: apply add-same-subtract-different to r17 on rhs select terms 0,1 => e == b

# convert
r19: given e == a^2 - b^2
r20: apply convert to r19 on rhs factor (a + b)*(a - b) => e == (a + b)*(a - b)

# sqrt-convert
r21: given e == sqrt(2)*a
r22: apply sqrt-convert to r21 on rhs with x=1 => e == sqrt(2)*(sqrt(2) + 1)*(sqrt(2) - 1)*a

# mul-div-together
r23: given e == a^2/b + 2*a + b
r24: apply mul-div-together to r23 on rhs => e == a^2/b + 2*a*b/b + b^2/b

# add-sub-together, then put-together into a completed square
r25: given e == a^2 + a*b + b^2
r26: apply add-sub-together to r25 on rhs split term 1 by 2 => e == a^2 + 2*a*b - a*b + b^2
r27: apply put-together to r26 on rhs select terms 0,1,3 factor (a + b) => e == (a + b)^2 - a*b
r28: given e == a^2 + 2*a*b + b^2
r29: apply add-sub-together to r28 on rhs split term 1 by 2 => e == a^2 + 4*a*b - 2*a*b + b^2
r30: apply put-together to r29 on rhs select terms 0,2,3 factor (a - b) => e == (a - b)^2 + 4*a*b
)";

std::string join(std::string_view a, std::string_view b) { return std::string(a) + std::string(b); }

const std::string kOharaText = join(kHeader, kOhara);
const std::string kCorrectedText = join(kHeader, kCorrected);

}  // namespace

const std::vector<CorpusEntry>& corpus() {
  static const std::vector<CorpusEntry> entries{
      {"katayamahiko-ohara", "Ohara's traditional derivation as written, including its final sign error", kOharaText},
      {"katayamahiko-corrected", "the same derivation with the final rearrangement corrected", kCorrectedText},
      {"katayamahiko-modern", "the modern route through a fraction and rationalization", kModern},
      {"rule-examples", "one worked example for each of the nine rules", kRuleExamples},
  };
  return entries;
}

const CorpusEntry* find_corpus(std::string_view name) {
  for (const auto& e : corpus())
    if (e.name == name) return &e;
  return nullptr;
}

}  // namespace tenzan
