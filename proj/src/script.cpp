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

#include "tenzan/script.hpp"

#include <cctype>
#include <map>
#include <set>

#include "tenzan/error.hpp"
#include "tenzan/labels.hpp"
#include "tenzan/notation.hpp"

namespace tenzan {
namespace {

std::string strip_comment(std::string_view line) {
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    if (line[i] == '"') quoted = !quoted;
    if (line[i] == '#' && !quoted) return std::string(line.substr(0, i));
  }
  return std::string(line);
}

class LineReader {
 public:
  LineReader(std::string_view text, int line) : text_(text), line_(line) {}

  [[noreturn]] void fail(const std::string& message) const {
    throw SyntaxError(ErrorCode::SyntaxError, message, line_, static_cast<int>(pos_) + 1);
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool at_end() {
    skip_ws();
    return pos_ == text_.size();
  }

  bool peek(std::string_view s) {
    skip_ws();
    return text_.substr(pos_, s.size()) == s;
  }

  // Matches a whole word (not a prefix of a longer identifier).
  bool accept_word(std::string_view word) {
    skip_ws();
    if (text_.substr(pos_, word.size()) != word) return false;
    std::size_t end = pos_ + word.size();
    if (end < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[end])) || text_[end] == '_' || text_[end] == '-'))
      return false;
    pos_ = end;
    return true;
  }

  bool accept(std::string_view s) {
    if (!peek(s)) return false;
    pos_ += s.size();
    return true;
  }

  void expect(std::string_view s) {
    if (!accept(s)) fail("expected '" + std::string(s) + "'");
  }

  void expect_word(std::string_view word) {
    if (!accept_word(word)) fail("expected '" + std::string(word) + "'");
  }

  std::string identifier() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_' || text_[pos_] == '-'))
      ++pos_;
    if (start == pos_) fail("expected an identifier");
    return std::string(text_.substr(start, pos_ - start));
  }

  // Any run of non-space characters, used for rule names and label spellings.
  std::string word() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < text_.size() && !std::isspace(static_cast<unsigned char>(text_[pos_])) && text_[pos_] != '"' &&
           text_[pos_] != '=' && text_[pos_] != ',')
      ++pos_;
    if (start == pos_) fail("expected a name");
    return std::string(text_.substr(start, pos_ - start));
  }

  std::string quoted() {
    skip_ws();
    if (pos_ >= text_.size() || text_[pos_] != '"') fail("expected a quoted string");
    auto end = text_.find('"', pos_ + 1);
    if (end == std::string_view::npos) fail("unterminated string");
    std::string out(text_.substr(pos_ + 1, end - pos_ - 1));
    pos_ = end + 1;
    return out;
  }

  long integer() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_ || pos_ - start > 9) fail("expected a small non-negative integer");
    return std::stol(std::string(text_.substr(start, pos_ - start)));
  }

  int label() {
    skip_ws();
    std::size_t start = pos_;
    std::string name = word();
    auto l = find_label(name);
    if (!l) {
      pos_ = start;
      fail("unknown label '" + name + "'");
    }
    return *l;
  }

  Expr expr() {
    skip_ws();
    return parse_expr_prefix(text_, pos_, line_, 0);
  }

  Equation equation() {
    Expr lhs = expr();
    expect("==");
    Expr rhs = expr();
    if (!at_end()) fail("unexpected trailing input");
    return {std::move(lhs), std::move(rhs)};
  }

  int line() const { return line_; }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
  int line_;
};

Side parse_side(LineReader& r) {
  if (r.accept_word("lhs")) return Side::Lhs;
  if (r.accept_word("rhs")) return Side::Rhs;
  if (r.accept_word("both")) return Side::Both;
  r.fail("expected lhs, rhs or both");
}

void parse_apply(LineReader& r, Step& step) {
  std::string name = r.word();
  auto rule = find_rule(name);
  if (!rule) r.fail("unknown rule '" + name + "'");
  step.rule = *rule;
  r.expect_word("to");
  step.refs.push_back(r.identifier());
  Selector& sel = step.selector;
  while (!r.accept("=>")) {
    if (r.at_end()) r.fail("expected '=>'");
    if (r.accept_word("on")) {
      sel.side = parse_side(r);
    } else if (r.accept_word("select")) {
      r.expect_word("terms");
      do {
        sel.terms.push_back(static_cast<std::size_t>(r.integer()));
      } while (r.accept(","));
    } else if (r.accept_word("factor")) {
      sel.factor = r.expr();
    } else if (r.accept_word("with")) {
      Substitution sub;
      sub.label = r.label();
      if (!r.peek("=>") && r.accept("=")) sub.replacement = r.expr();
      sel.substitution = std::move(sub);
    } else if (r.accept_word("split")) {
      r.expect_word("term");
      SplitSpec spec;
      spec.term = static_cast<std::size_t>(r.integer());
      r.expect_word("by");
      spec.multiplier = r.integer();
      sel.split = spec;
    } else {
      r.fail("unexpected clause");
    }
  }
}

void require_declared(const std::set<int>& used, const std::set<int>& declared, int line) {
  for (int v : used)
    if (!declared.count(v))
      throw SyntaxError(ErrorCode::UndeclaredVariable,
                        "variable '" + std::string(label_info(v).ascii) + "' is not declared", line, 1);
}

}  // namespace

std::string_view step_kind_name(StepKind kind) {
  switch (kind) {
    case StepKind::Given: return "given";
    case StepKind::Cancel: return "cancel";
    case StepKind::Apply: return "apply";
    case StepKind::Rearrange: return "rearrange";
  }
  return "?";
}

DerivationScript parse_script(std::string_view text) {
  DerivationScript script;
  std::set<int> declared;
  std::map<std::string, std::size_t> ids;
  int line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    ++line_no;
    std::string line = strip_comment(text.substr(start, end - start));
    start = end + 1;
    while (!line.empty() && std::isspace(static_cast<unsigned char>(line.back()))) line.pop_back();
    LineReader r(line, line_no);
    if (r.at_end()) continue;

    if (r.accept_word("problem")) {
      script.title = r.quoted();
      if (!r.at_end()) r.fail("unexpected trailing input");
      continue;
    }
    if (r.accept_word("var")) {
      Declaration d;
      d.label = r.label();
      r.expect("=");
      d.name = r.word();
      d.description = r.quoted();
      if (!r.at_end()) r.fail("unexpected trailing input");
      declared.insert(d.label);
      script.declarations.push_back(std::move(d));
      continue;
    }
    if (r.accept_word("define")) {
      int label = r.label();
      r.expect(":=");
      Expr e = r.expr();
      if (!r.at_end()) r.fail("unexpected trailing input");
      require_declared(variables(e), declared, line_no);
      declared.insert(label);
      script.definitions[label] = std::move(e);
      continue;
    }

    Step step;
    step.line = line_no;
    step.source = line;
    step.id = r.identifier();
    r.expect(":");
    if (r.accept_word("given")) {
      step.kind = StepKind::Given;
    } else if (r.accept_word("cancel")) {
      step.kind = StepKind::Cancel;
      step.refs.push_back(r.identifier());
      r.expect(",");
      step.refs.push_back(r.identifier());
      r.expect("=>");
    } else if (r.accept_word("apply")) {
      step.kind = StepKind::Apply;
      parse_apply(r, step);
    } else if (r.accept_word("rearrange")) {
      step.kind = StepKind::Rearrange;
      step.refs.push_back(r.identifier());
      r.expect("=>");
    } else {
      r.fail("expected given, cancel, apply or rearrange");
    }
    step.stated = r.equation();

    if (ids.count(step.id))
      throw SyntaxError(ErrorCode::DuplicateStepId, "step id '" + step.id + "' is used twice", line_no, 1);
    for (const auto& ref : step.refs)
      if (!ids.count(ref))
        throw SyntaxError(ErrorCode::DanglingReference, "step '" + ref + "' is not defined before use", line_no, 1);
    require_declared(variables(step.stated), declared, line_no);
    if (step.selector.factor) require_declared(variables(*step.selector.factor), declared, line_no);
    if (step.selector.substitution && step.selector.substitution->replacement)
      require_declared(variables(*step.selector.substitution->replacement), declared, line_no);
    ids[step.id] = script.steps.size();
    script.steps.push_back(std::move(step));
  }
  return script;
}

}  // namespace tenzan
