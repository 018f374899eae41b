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

#include "tenzan/cli.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "tenzan/check.hpp"
#include "tenzan/corpus.hpp"
#include "tenzan/error.hpp"
#include "tenzan/identities.hpp"
#include "tenzan/labels.hpp"
#include "tenzan/notation.hpp"
#include "tenzan/numerals.hpp"

namespace tenzan {
namespace {

using nlohmann::json;

struct Options {
  std::string format = "text";
  bool ascii = false;
  int precision = 9;

  bool structured() const { return format == "structured"; }
  std::string dump(const json& j) const { return j.dump(-1, ' ', ascii) + "\n"; }
};

std::string describe(const Error& e) {
  if (const auto* s = dynamic_cast<const SyntaxError*>(&e))
    return std::to_string(s->line()) + ":" + std::to_string(s->column()) + ": " + e.what();
  return e.what();
}

std::optional<std::string> read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return std::nullopt;
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

int cmd_check(const Options& opt, const std::string& source, std::ostream& out, std::ostream& err) {
  std::string text;
  if (source.rfind("corpus:", 0) == 0) {
    const auto* entry = find_corpus(source.substr(7));
    if (!entry) {
      err << "unknown corpus script '" << source.substr(7) << "'\n";
      return 2;
    }
    text = entry->text;
  } else if (auto contents = read_file(source)) {
    text = *contents;
  } else {
    err << "cannot read '" << source << "'\n";
    return 2;
  }
  DerivationScript script;
  try {
    script = parse_script(text);
  } catch (const Error& e) {
    err << source << ":" << describe(e) << "\n";
    return 2;
  }
  CheckReport report = check_script(script);
  out << (opt.structured() ? format_report_structured(report, opt.ascii, opt.precision)
                           : format_report_text(report, opt.ascii, opt.precision));
  return report.passed() ? 0 : 1;
}

int cmd_identities(const Options& opt, std::ostream& out) {
  auto results = audit_identities();
  out << (opt.structured() ? format_identities_structured(results, opt.ascii, opt.precision)
                           : format_identities_text(results, opt.precision));
  return 0;
}

std::vector<std::string> lines_of(const std::string& block) {
  std::vector<std::string> out;
  std::istringstream in(block);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

std::string sidewriting(const std::variant<Expr, Equation>& s, GlyphMode mode) {
  if (const auto* e = std::get_if<Expr>(&s)) return render_sidewriting(*e, mode);
  const auto& q = std::get<Equation>(s);
  return render_sidewriting(q.lhs, mode) + "=\n" + render_sidewriting(q.rhs, mode);
}

// Places text blocks side by side, separated by four spaces.
std::string side_by_side(const std::vector<std::string>& blocks) {
  std::vector<std::vector<std::string>> cols;
  std::size_t height = 0;
  for (const auto& b : blocks) {
    cols.push_back(lines_of(b));
    height = std::max(height, cols.back().size());
  }
  std::string out;
  for (std::size_t r = 0; r < height; ++r) {
    std::string line;
    for (std::size_t c = 0; c < cols.size(); ++c) {
      std::size_t width = 0;
      for (const auto& l : cols[c]) width = std::max(width, display_width(l));
      std::string cell = r < cols[c].size() ? cols[c][r] : "";
      if (c > 0) line += "    ";
      line += cell + std::string(width - display_width(cell), ' ');
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out += line + "\n";
  }
  return out;
}

int cmd_render(const Options& opt, const std::string& input, const std::string& style, std::ostream& out) {
  std::variant<Expr, Equation> subject;
  if (input.find("==") != std::string::npos) subject = parse_equation(input);
  else subject = parse_expr(input);
  std::string modern = std::holds_alternative<Expr>(subject) ? render_modern(std::get<Expr>(subject))
                                                             : render_modern(std::get<Equation>(subject));
  GlyphMode glyphs = opt.ascii ? GlyphMode::Ascii : GlyphMode::Kanji;
  if (opt.structured()) {
    json j{{"record", "render"}, {"modern", modern}, {"sidewriting", sidewriting(subject, glyphs)}};
    if (!opt.ascii) j["transcription"] = sidewriting(subject, GlyphMode::Ascii);
    out << opt.dump(j);
    return 0;
  }
  if (style == "modern") {
    out << modern << "\n";
  } else if (style == "sidewriting") {
    out << sidewriting(subject, glyphs);
  } else {
    std::vector<std::string> blocks;
    if (!opt.ascii) blocks.push_back("original\n\n" + sidewriting(subject, GlyphMode::Kanji));
    blocks.push_back("transcription\n\n" + sidewriting(subject, GlyphMode::Ascii));
    blocks.push_back("translation\n\n" + modern + "\n");
    out << side_by_side(blocks);
  }
  return 0;
}

std::string value_line(const SurdNumber& v, int precision) {
  std::string exact = v.to_string();
  std::string decimal = v.to_decimal(precision);
  return exact == decimal ? exact : exact + " = " + decimal;
}

int cmd_eval(const Options& opt, const std::string& input, const std::vector<std::string>& assignments, bool technique,
             std::ostream& out, std::ostream& err) {
  Expr e;
  Bindings bindings;
  try {
    e = parse_expr(input);
    for (const auto& a : assignments) {
      auto eq = a.find('=');
      if (eq == std::string::npos) {
        err << "binding '" << a << "' must look like a=1\n";
        return 2;
      }
      auto label = find_label(a.substr(0, eq));
      if (!label) {
        err << "unknown variable '" << a.substr(0, eq) << "'\n";
        return 2;
      }
      bindings[*label] = evaluate(parse_expr(a.substr(eq + 1)), {});
    }
  } catch (const Error& e) {
    err << describe(e) << "\n";
    return 2;
  }
  SurdNumber value;
  try {
    value = evaluate(e, bindings);
  } catch (const Error& e) {
    err << e.what() << "\n";
    return 1;
  }
  if (opt.structured()) {
    out << opt.dump(json{{"record", "eval"},
                         {"input", input},
                         {"exact", value.to_string()},
                         {"decimal", value.to_decimal(opt.precision)}});
  } else {
    out << value_line(value, opt.precision) << "\n";
  }
  if (technique) {
    // "Put 2 and take the square root, subtract 2, multiply by the diameter of ko."
    SurdNumber a = bindings.count(0) ? bindings[0] : SurdNumber(1);
    SurdNumber literal = (SurdNumber::sqrt_of(2) - SurdNumber(2)) * a;
    SurdNumber magnitude = literal.sign() < 0 ? -literal : literal;
    if (opt.structured()) {
      out << opt.dump(json{{"record", "technique"},
                           {"literal", literal.to_string()},
                           {"magnitude", magnitude.to_string()},
                           {"decimal", magnitude.to_decimal(opt.precision)}});
    } else {
      out << "technique read literally, (sqrt(2) - 2)*a: " << value_line(literal, opt.precision) << "\n";
      out << "technique as a magnitude, |sqrt(2) - 2|*a: " << value_line(magnitude, opt.precision) << "\n";
    }
  }
  return 0;
}

bool looks_decimal(const std::string& s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)) || c == '.' || c == '/'; });
}

bool is_ascii(const std::string& s) {
  return std::all_of(s.begin(), s.end(), [](char c) { return static_cast<unsigned char>(c) < 0x80; });
}

int cmd_units(const Options& opt, const std::string& input, std::ostream& out, std::ostream& err) {
  try {
    if (!is_ascii(input)) {
      TraditionalLength length = parse_traditional_length(input);
      std::string sun = format_sun_decimal(length) + " sun";
      if (opt.structured()) {
        out << opt.dump(json{{"record", "units"}, {"input", input}, {"sun", format_sun_decimal(length)},
                             {"units", format_ascii(length)}});
      } else {
        out << sun << "\n";
      }
      return 0;
    }
    SurdNumber value = looks_decimal(input) ? SurdNumber(Rational::parse(input)) : evaluate(parse_expr(input), {});
    TraditionalLength length = truncate_to_length(value);
    if (opt.structured()) {
      json j{{"record", "units"}, {"input", input}, {"sun", format_sun_decimal(length)}, {"units", format_ascii(length)}};
      if (!opt.ascii) j["kanji"] = format_kanji(length);
      out << opt.dump(j);
    } else {
      out << (opt.ascii ? format_ascii(length) : format_kanji(length)) << "\n";
    }
    return 0;
  } catch (const Error& e) {
    err << describe(e) << "\n";
    return 2;
  }
}

int cmd_export(const std::string& dir, std::ostream& out, std::ostream& err) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  for (const auto& entry : corpus()) {
    auto path = std::filesystem::path(dir) / (std::string(entry.name) + ".tzn");
    std::ofstream file(path, std::ios::binary);
    if (!file) {
      err << "cannot write " << path.string() << "\n";
      return 2;
    }
    file << entry.text;
    out << "wrote " << path.string() << "\n";
  }
  return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Checker and renderer for tenzan jutsu derivations", "tenzan"};
  app.fallthrough();
  app.require_subcommand(1);
  Options opt;
  app.add_option("--format", opt.format, "Output format")->check(CLI::IsMember({"text", "structured"}));
  app.add_flag("--ascii", opt.ascii, "ASCII-only output");
  app.add_option("--precision", opt.precision, "Significant digits for decimals")->check(CLI::Range(1, 200));

  std::string source;
  auto* check = app.add_subcommand("check", "Check a derivation script (path or corpus:<name>)");
  check->add_option("script", source, "Script path or corpus:<name>")->required();

  auto* identities = app.add_subcommand("identities", "Audit the conversion identity tables");

  std::string render_input;
  std::string style = "modern";
  auto* render = app.add_subcommand("render", "Render an expression or equation");
  render->add_option("expr", render_input, "Expression or equation")->required();
  render->add_option("--style", style, "modern, sidewriting or all")
      ->check(CLI::IsMember({"modern", "sidewriting", "all"}));

  std::string eval_input;
  std::vector<std::string> assignments;
  bool technique = false;
  auto* eval = app.add_subcommand("eval", "Evaluate an expression exactly");
  eval->add_option("expr", eval_input, "Expression")->required();
  eval->add_option("bindings", assignments, "Variable bindings such as a=1");
  eval->add_flag("--technique", technique, "Also evaluate both readings of the tablet's technique");

  std::string units_input;
  auto* units = app.add_subcommand("units", "Convert between decimal sun and traditional length units");
  units->add_option("value", units_input, "Kanji length, decimal, or constant expression")->required();

  std::string export_dir = ".";
  auto* export_corpus = app.add_subcommand("export-corpus", "Write the embedded scripts to a directory");
  export_corpus->add_option("dir", export_dir, "Output directory");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (check->parsed()) return cmd_check(opt, source, out, err);
    if (identities->parsed()) return cmd_identities(opt, out);
    if (render->parsed()) return cmd_render(opt, render_input, style, out);
    if (eval->parsed()) return cmd_eval(opt, eval_input, assignments, technique, out, err);
    if (units->parsed()) return cmd_units(opt, units_input, out, err);
    if (export_corpus->parsed()) return cmd_export(export_dir, out, err);
  } catch (const Error& e) {
    err << describe(e) << "\n";
    return 2;
  }
  return 2;
}

}  // namespace tenzan
