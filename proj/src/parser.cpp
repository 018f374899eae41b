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

#include <cctype>
#include <optional>

#include "tenzan/error.hpp"
#include "tenzan/labels.hpp"
#include "tenzan/notation.hpp"
#include "tenzan/surd.hpp"

namespace tenzan {
namespace {

// A parsed primary: a numeric multiplier and at most one atom.
struct Piece {
  BigInt multiplier = 1;
  std::optional<Factor> factor;
};

class ExprParser {
 public:
  ExprParser(std::string_view text, std::size_t offset, int line, int column_base)
      : text_(text), pos_(offset), line_(line), column_base_(column_base) {}

  std::size_t position() const { return pos_; }

  Expr parse_sum() {
    skip_space();
    Expr e;
    int sign = 1;
    if (peek() == '-' || peek() == '+') {
      sign = peek() == '-' ? -1 : 1;
      ++pos_;
    }
    for (;;) {
      if (auto t = parse_term()) {
        t->sign *= sign;
        e.terms.push_back(std::move(*t));
      }
      skip_space();
      if (peek() == '+' || peek() == '-') {
        sign = peek() == '-' ? -1 : 1;
        ++pos_;
        continue;
      }
      return e;
    }
  }

  [[noreturn]] void fail(const std::string& message, ErrorCode code = ErrorCode::SyntaxError) const {
    throw SyntaxError(code, message, line_, column_base_ + static_cast<int>(pos_) + 1);
  }

 private:
  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

  void skip_space() {
    while (pos_ < text_.size() && (text_[pos_] == ' ' || text_[pos_] == '\t')) ++pos_;
  }

  // Returns nullopt when a literal zero annihilates the term.
  std::optional<Term> parse_term() {
    Term t;
    bool zero = false;
    bool divide = false;
    for (;;) {
      Piece p = parse_factor();
      if (!divide) {
        if (p.multiplier == 0) zero = true;
        t.coefficient *= p.multiplier;
        if (p.factor) merge_factor(t.factors, *p.factor);
      } else {
        if (p.multiplier == 0) fail("division by zero", ErrorCode::ZeroDenominator);
        t.denominator_coefficient *= p.multiplier;
        if (p.factor) merge_factor(t.denominator, *p.factor);
      }
      skip_space();
      if (peek() == '*' || peek() == '/') {
        divide = peek() == '/';
        ++pos_;
        continue;
      }
      break;
    }
    if (zero) return std::nullopt;
    return t;
  }

  BigInt parse_int() {
    skip_space();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected an integer");
    return BigInt(std::string(text_.substr(start, pos_ - start)), 10);
  }

  Piece parse_factor() {
    Piece p = parse_primary();
    skip_space();
    if (peek() == '^') {
      ++pos_;
      BigInt n = parse_int();
      if (n < 1 || n > 64) fail("exponent must be an integer between 1 and 64");
      int k = static_cast<int>(n.get_si());
      BigInt m;
      mpz_pow_ui(m.get_mpz_t(), p.multiplier.get_mpz_t(), static_cast<unsigned long>(k));
      p.multiplier = m;
      if (p.factor) p.factor->power *= k;
    }
    return p;
  }

  Piece parse_primary() {
    skip_space();
    char c = peek();
    if (c == '\0') fail("unexpected end of expression");
    if (std::isdigit(static_cast<unsigned char>(c))) return Piece{parse_int(), std::nullopt};
    if (c == '(') {
      ++pos_;
      skip_space();
      if (peek() == ')') fail("empty parentheses");
      Expr inner = parse_sum();
      skip_space();
      if (peek() != ')') fail("expected ')'");
      ++pos_;
      if (inner.terms.empty()) return Piece{0, std::nullopt};
      return Piece{1, Factor{group_atom(inner), 1}};
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      std::string_view word = text_.substr(start, pos_ - start);
      if (word == "sqrt") return parse_sqrt();
      if (auto label = find_label(word)) return Piece{1, Factor{Variable{*label}, 1}};
      pos_ = start;
      fail("unknown label '" + std::string(word) + "'", ErrorCode::UnknownLabel);
    }
    if (static_cast<unsigned char>(c) >= 0x80) {
      // Longest kanji label match; 方斜 is two characters.
      for (std::size_t len : {6u, 3u}) {
        if (pos_ + len <= text_.size()) {
          if (auto label = find_label(text_.substr(pos_, len))) {
            pos_ += len;
            return Piece{1, Factor{Variable{*label}, 1}};
          }
        }
      }
      fail("unknown label", ErrorCode::UnknownLabel);
    }
    fail(std::string("unexpected character '") + c + "'");
  }

  Piece parse_sqrt() {
    skip_space();
    if (peek() != '(') fail("expected '(' after sqrt");
    ++pos_;
    skip_space();
    if (!std::isdigit(static_cast<unsigned char>(peek())))
      fail("sqrt accepts only an integer literal; nested radicals are not supported", ErrorCode::NestedRadical);
    BigInt n = parse_int();
    skip_space();
    if (peek() != ')') fail("sqrt accepts only an integer literal; nested radicals are not supported", ErrorCode::NestedRadical);
    ++pos_;
    if (n > BigInt(static_cast<unsigned long>(kMaxRadicand)))
      fail("radicand exceeds " + std::to_string(kMaxRadicand), ErrorCode::RadicandTooLarge);
    auto [outside, inside] = squarefree_split(n.get_ui());
    if (n == 0) return Piece{0, std::nullopt};
    if (!is_squarefree(inside)) fail("radicand is not square-free after normalization", ErrorCode::NonSquarefreeRadicand);
    Piece p{BigInt(static_cast<unsigned long>(outside)), std::nullopt};
    if (inside != 1) p.factor = Factor{SqrtInt{inside}, 1};
    return p;
  }

  std::string_view text_;
  std::size_t pos_;
  int line_;
  int column_base_;
};

}  // namespace

Expr parse_expr_prefix(std::string_view text, std::size_t& offset, int line, int column_base) {
  ExprParser p(text, offset, line, column_base);
  Expr e = p.parse_sum();
  offset = p.position();
  return e;
}

Expr parse_expr(std::string_view text) {
  std::size_t offset = 0;
  Expr e = parse_expr_prefix(text, offset);
  while (offset < text.size() && (text[offset] == ' ' || text[offset] == '\t')) ++offset;
  if (offset != text.size())
    throw SyntaxError(ErrorCode::SyntaxError, "unexpected trailing input", 1, static_cast<int>(offset) + 1);
  return e;
}

Equation parse_equation(std::string_view text) {
  std::size_t offset = 0;
  Expr lhs = parse_expr_prefix(text, offset);
  while (offset < text.size() && text[offset] == ' ') ++offset;
  if (text.substr(offset, 2) != "==")
    throw SyntaxError(ErrorCode::SyntaxError, "expected '=='", 1, static_cast<int>(offset) + 1);
  offset += 2;
  Expr rhs = parse_expr_prefix(text, offset);
  while (offset < text.size() && text[offset] == ' ') ++offset;
  if (offset != text.size())
    throw SyntaxError(ErrorCode::SyntaxError, "unexpected trailing input", 1, static_cast<int>(offset) + 1);
  return {std::move(lhs), std::move(rhs)};
}

}  // namespace tenzan
