// Copyright 2026 The lpstab Authors. All Rights Reserved.
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

#include <string>

#include <gtest/gtest.h>

#include "nlohmann/json.hpp"
#include "support/process.hpp"

namespace {

const std::string kCli = LPSTAB_CLI_PATH;
const std::string kData = LPSTAB_TEST_DATA;

testproc::Result cli(const std::string& args, const std::string& env = "") {
  return testproc::run(env + (env.empty() ? "" : " ") + testproc::quote(kCli) + " " + args +
                       " 2>/dev/null");
}

std::string data(const std::string& name) { return testproc::quote(kData + "/" + name); }

struct Case {
  const char* label;
  std::string args;
  int expected;
};

TEST(CliExitCodes, Matrix) {
  const Case cases[] = {
      {"fixtures", "fixtures", 0},
      {"holder json", "holder --p 2 --input " + data("pair.json"), 0},
      {"holder csv", "holder --p 3 --input " + data("pair.csv"), 0},
      {"holder table", "holder --p 3 --format table --input " + data("pair.json"), 0},
      {"general exponent", "holder --p 4 --r 2 --input " + data("pair.json"), 0},
      {"young scalars", "young --p 1.5 --u 2 --v 0.5", 0},
      {"interp", "interp --r 1 --s 3 --input " + data("probability.json"), 0},
      {"interp2", "interp2 --p0 1 --p1 5 --input " + data("pair.json"), 0},
      {"minkowski", "minkowski --p 3 --input " + data("pair.json"), 0},
      {"cancel complex p2", "cancel --p 2 --t 0.9 --input " + data("complex_pair.json"), 0},
      {"convexity", "convexity --p 2 --eps 0.5 --restarts 2 --iterations 100", 0},
      {"modified violated", "holder --p 1.3333333333333333 --c-lo 0.5 --input " + data("modified_example.json"), 1},
      {"modified upper violated", "holder --p 1.3333333333333333 --c-hi 0.5 --f g --g f --input " + data("modified_example.json"), 1},
      {"complex p<2", "cancel --p 1.5 --input " + data("complex_pair.json"), 2},
      {"negative weight", "holder --p 2 --input " + data("bad_weight.csv"), 2},
      {"malformed json", "holder --p 2 --input " + data("malformed.json"), 2},
      {"missing file", "holder --p 2 --input " + data("absent.json"), 2},
      {"zero for log chain", "holder --p 2 --drago --input " + data("with_zero.json"), 2},
      {"p out of range", "holder --p 0.5 --input " + data("pair.json"), 2},
      {"eps out of range", "convexity --p 2 --eps 3", 2},
      {"missing required", "holder --input " + data("pair.json"), 2},
      {"unknown format", "fixtures --format xml", 2},
      {"unknown subcommand", "frobnicate", 2},
      {"verify without seed", "verify", 2},
      {"missing function", "minkowski --p 2 --f nope --input " + data("pair.json"), 2},
  };
  for (const auto& c : cases) {
    EXPECT_EQ(cli(c.args).exit_code, c.expected) << c.label;
  }
}

TEST(CliOutput, JsonIsParseableAndCarriesViolations) {
  const auto ok = cli("holder --p 2 --input " + data("pair.json"));
  const auto j = nlohmann::json::parse(ok.out);
  EXPECT_EQ(j["operation"], "holder");
  EXPECT_TRUE(j["violations"].empty());
  const auto bad = cli("holder --p 1.3333333333333333 --c-lo 0.5 --input " + data("modified_example.json"));
  EXPECT_FALSE(nlohmann::json::parse(bad.out)["violations"].empty());
}

TEST(CliOutput, StdinMatchesFile) {
  const auto a = cli("minkowski --p 3 --input " + data("pair.json"));
  const auto b = testproc::run("cat " + data("pair.json") + " | " + testproc::quote(kCli) + " minkowski --p 3");
  EXPECT_EQ(a.exit_code, 0);
  EXPECT_EQ(a.out, b.out);
}

TEST(CliOutput, CsvAndJsonAgree) {
  auto a = nlohmann::json::parse(cli("holder --p 3 --input " + data("pair.json")).out);
  auto b = nlohmann::json::parse(cli("holder --p 3 --input " + data("pair.csv")).out);
  EXPECT_EQ(a["payload"], b["payload"]);
}

TEST(CliVerify, SameSeedSameBytesAndVerdicts) {
  const auto a = cli("verify --seed 42 --cases 200");
  const auto b = cli("verify --seed 42 --cases 200");
  const auto c = cli("verify --seed 43 --cases 200");
  EXPECT_EQ(a.exit_code, 0);
  EXPECT_EQ(a.out, b.out);
  EXPECT_NE(a.out, c.out);
  EXPECT_EQ(a.exit_code, c.exit_code);
  EXPECT_EQ(nlohmann::json::parse(a.out)["violations"], nlohmann::json::parse(c.out)["violations"]);
}

TEST(CliTolerance, FlagOverridesEnvironment) {
  const std::string args = "holder --p 1.3333333333333333 --c-lo 0.5 --input " + data("modified_example.json");
  EXPECT_EQ(cli(args).exit_code, 1);
  EXPECT_EQ(cli(args, "LPSTAB_REL_TOL=0.5").exit_code, 0);
  EXPECT_EQ(cli(args + " --rel-tol 1e-12", "LPSTAB_REL_TOL=0.5").exit_code, 1);
  EXPECT_EQ(cli(args, "LPSTAB_REL_TOL=bogus").exit_code, 2);
}

TEST(CliVersion, PrintsVersion) {
  const auto v = cli("--version");
  EXPECT_EQ(v.exit_code, 0);
  EXPECT_NE(v.out.find("0.1.0"), std::string::npos);
}

}  // namespace
