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

#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "tenzan/cli.hpp"

namespace tenzan {
namespace {

struct GoldenCase {
  std::string name;
  std::vector<std::string> args;
  int exit_code;
};

// Set TENZAN_UPDATE_GOLDEN=1 to rewrite the files from current output.
const std::vector<GoldenCase>& cases() {
  static const std::vector<GoldenCase> kCases{
      {"check_ohara", {"check", "corpus:katayamahiko-ohara"}, 1},
      {"check_ohara_ascii", {"--ascii", "check", "corpus:katayamahiko-ohara"}, 1},
      {"check_ohara_structured", {"--format", "structured", "check", "corpus:katayamahiko-ohara"}, 1},
      {"check_corrected", {"check", "corpus:katayamahiko-corrected"}, 0},
      {"check_corrected_structured", {"--format", "structured", "check", "corpus:katayamahiko-corrected"}, 0},
      {"check_modern", {"check", "corpus:katayamahiko-modern"}, 0},
      {"check_rule_examples", {"check", "corpus:rule-examples"}, 0},
      {"identities", {"identities"}, 0},
      {"identities_structured", {"--format", "structured", "identities"}, 0},
      {"render_sidewriting", {"render", "--style", "sidewriting", "a + 2*b - c"}, 0},
      {"render_all", {"render", "--style", "all", "b == (2 - sqrt(2))*a"}, 0},
      {"render_all_ascii", {"--ascii", "render", "--style", "all", "sqrt(2)*a + b*c"}, 0},
      {"eval_diameter", {"eval", "(2 - sqrt(2))*a", "a=1"}, 0},
      {"eval_precision", {"--precision", "20", "eval", "sqrt(2)"}, 0},
      {"units_to_length", {"units", "0.5857864"}, 0},
      {"units_from_length", {"units", "五分八厘五毛"}, 0},
      {"units_ascii", {"--ascii", "units", "2 - sqrt(2)"}, 0},
  };
  return kCases;
}

std::string read_file(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

class Golden : public ::testing::TestWithParam<GoldenCase> {};

TEST_P(Golden, MatchesRecordedOutput) {
  const auto& c = GetParam();
  std::ostringstream out, err;
  int code = run_cli(c.args, out, err);
  EXPECT_EQ(code, c.exit_code) << err.str();
  EXPECT_EQ(err.str(), "");
  auto path = std::filesystem::path(TENZAN_GOLDEN_DIR) / (c.name + ".txt");
  if (const char* update = std::getenv("TENZAN_UPDATE_GOLDEN"); update && std::string(update) == "1") {
    std::ofstream(path, std::ios::binary) << out.str();
    return;
  }
  ASSERT_TRUE(std::filesystem::exists(path)) << path;
  EXPECT_EQ(out.str(), read_file(path));
}

INSTANTIATE_TEST_SUITE_P(Cli, Golden, ::testing::ValuesIn(cases()),
                         [](const auto& info) { return info.param.name; });

TEST(CliExit, MissingFileIsUsageError) {
  std::ostringstream out, err;
  EXPECT_EQ(run_cli({"check", "/nonexistent/script.tzn"}, out, err), 2);
  EXPECT_NE(err.str(), "");
}

TEST(CliExit, UnknownSubcommand) {
  std::ostringstream out, err;
  EXPECT_EQ(run_cli({"frobnicate"}, out, err), 2);
}

TEST(CliExit, BadExpression) {
  std::ostringstream out, err;
  EXPECT_EQ(run_cli({"eval", "2 +* a"}, out, err), 2);
}

TEST(CliExit, UnboundVariable) {
  std::ostringstream out, err;
  EXPECT_NE(run_cli({"eval", "a + b", "a=1"}, out, err), 0);
  EXPECT_NE(err.str().find("'b'"), std::string::npos);
}

TEST(CliExit, ExportCorpusWritesScripts) {
  auto dir = std::filesystem::temp_directory_path() / "tenzan_export_test";
  std::filesystem::remove_all(dir);
  std::ostringstream out, err;
  ASSERT_EQ(run_cli({"export-corpus", dir.string()}, out, err), 0) << err.str();
  EXPECT_TRUE(std::filesystem::exists(dir / "katayamahiko-ohara.tzn"));
  std::ostringstream out2, err2;
  EXPECT_EQ(run_cli({"check", (dir / "katayamahiko-corrected.tzn").string()}, out2, err2), 0);
  std::filesystem::remove_all(dir);
}

}  // namespace
}  // namespace tenzan
