// Copyright 2026 The ewlpd Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "ewlpd/cli.hpp"

namespace {

struct Result {
  int code;
  std::string out, err;
  nlohmann::json json() const { return nlohmann::json::parse(out); }
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = ewlpd::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

TEST(CliTest, Normalize) {
  const auto r = run({"normalize", "--T", "5", "--R", "3", "--P", "1", "--S", "0"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.json(), (nlohmann::json{{"r", "3/5"}, {"p", "1/5"}}));
}

TEST(CliTest, EquilibriaOfD1) {
  const auto r = run({"ne", "--class", "D1", "--p", "1/5", "--r", "3/5", "--t", "1/2"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.json()["equilibria"], nlohmann::json::parse("[[2,2]]"));
  EXPECT_EQ(r.json()["payoffs"], nlohmann::json::parse(R"([["1/5","1/5"]])"));
}

TEST(CliTest, DecimalFlagsAreExact) {
  const auto a = run({"ne", "--class", "A1", "--p", "0.2", "--r", "0.6", "--a", "0.5"});
  const auto b = run({"ne", "--class", "A1", "--p", "1/5", "--r", "3/5", "--a", "1/2"});
  ASSERT_EQ(a.code, 0) << a.err;
  EXPECT_EQ(a.out, b.out);
}

TEST(CliTest, ClassicScale) {
  const auto r = run({"ne", "--class", "B", "--scale", "classic"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.json()["equilibria"].size(), 8u);
  for (const auto& pay : r.json()["payoffs"]) EXPECT_EQ(pay, nlohmann::json::parse(R"(["9/4","9/4"])"));
}

TEST(CliTest, SweepDefaults) {
  const auto r = run({"sweep", "--class", "A1"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.json()["mismatches"], 0);
  EXPECT_EQ(r.json()["points"], 4158);
  EXPECT_EQ(r.json()["class"], "A1");
}

TEST(CliTest, CsvAndJsonCarryTheSameNumbers) {
  const auto j = run({"ne", "--class", "A1", "--a", "1"});
  const auto c = run({"ne", "--class", "A1", "--a", "1", "--format", "csv"});
  ASSERT_EQ(c.code, 0);
  std::istringstream lines(c.out);
  std::string line;
  std::getline(lines, line);
  EXPECT_EQ(line, "profile,payoff1,payoff2");
  std::size_t k = 0;
  const auto json = j.json();
  while (std::getline(lines, line)) {
    const auto& eq = json["equilibria"][k];
    const auto& pay = json["payoffs"][k];
    const std::string want = "\"(" + std::to_string(eq[0].get<int>()) + "," + std::to_string(eq[1].get<int>()) +
                             ")\"," + pay[0].get<std::string>() + "," + pay[1].get<std::string>();
    EXPECT_EQ(line, want);
    ++k;
  }
  EXPECT_EQ(k, json["equilibria"].size());
}

TEST(CliTest, EmittedRationalsRoundTrip) {
  const auto r = run({"build", "--class", "C", "--t", "3/7", "--p", "2/9", "--r", "5/7"});
  ASSERT_EQ(r.code, 0) << r.err;
  for (const auto& row : r.json()["game"]["entries"])
    for (const auto& cell : row)
      for (const auto& v : cell) EXPECT_EQ(ewlpd::Rational::parse(v.get<std::string>()).str(), v.get<std::string>());
}

TEST(CliTest, ValidationErrorsExitWithTwoAndNameTheFlag) {
  struct Case {
    std::vector<std::string> args;
    std::string flag;
  };
  const std::vector<Case> cases = {
      {{"ne", "--class", "Z"}, "--class"},
      {{"ne", "--class", "C", "--t", "1"}, "--t"},
      {{"ne", "--class", "C", "--t", "0"}, "--t"},
      {{"ne", "--class", "A1", "--a", "3/2"}, "--a"},
      {{"ne", "--class", "A1", "--a", "x"}, "--a"},
      {{"ne", "--class", "A1"}, "--a"},
      {{"ne", "--class", "B", "--t", "1/2"}, "--t"},
      {{"ne", "--p", "1/5/"}, "--p"},
      {{"ne", "--p", "1/5", "--r", "1/2"}, "--p/--r"},
      {{"normalize", "--T", "3", "--R", "3", "--P", "1", "--S", "0"}, "T > R"},
      {{"region", "--class", "A1", "--a", "1", "--profile", "5,1"}, "--profile"},
      {{"figure-data", "--class", "B"}, "--class"},
      {{"figure-data", "--class", "A1", "--axis", "XY"}, "--axis"},
      {{"ne", "--format", "xml"}, "--format"},
      {{"sweep", "--class", "A1", "--grid-step", "0"}, "--grid-step"},
  };
  for (const auto& c : cases) {
    const auto r = run(c.args);
    EXPECT_EQ(r.code, 2) << c.args[0] << " " << r.out;
    EXPECT_NE(r.err.find(c.flag), std::string::npos) << r.err;
  }
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"nonsense"}).code, 2);
}

TEST(CliTest, RegionVerdicts) {
  const auto r = run({"region", "--class", "A1", "--a", "1/2", "--profile", "2,3"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto v = r.json()["verdicts"][0];
  EXPECT_EQ(v["is_ne"], true);
  EXPECT_EQ(v["profile"], nlohmann::json::parse("[2,3]"));
  const auto all = run({"region", "--class", "E1", "--t", "1/2"});
  EXPECT_EQ(all.json()["equilibria"], nlohmann::json::parse("[[4,4]]"));
}

TEST(CliTest, ExtremalAndFigureData) {
  const auto e = run({"extremal", "--class", "C", "--profile", "2,3", "--scale", "classic"});
  ASSERT_EQ(e.code, 0) << e.err;
  EXPECT_EQ(e.json()[0]["payoff"], "5/2");
  EXPECT_EQ(e.json()[0]["is_supremum_only"], true);
  const auto f = run({"figure-data", "--class", "A1", "--scale", "classic", "--format", "csv"});
  ASSERT_EQ(f.code, 0) << f.err;
  EXPECT_EQ(f.out.substr(0, f.out.find('\n')), "profile,x,payoff1,payoff2");
  EXPECT_NE(f.out.find("\"(2,2)\",1,1,1\n"), std::string::npos);
}

TEST(CliTest, WritesToOutFile) {
  const std::string path = testing::TempDir() + "ewlpd_cli_out.json";
  const auto r = run({"normalize", "--out", path});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(r.out.empty());
  std::ifstream in(path);
  EXPECT_EQ(nlohmann::json::parse(in)["r"], "3/5");
  std::remove(path.c_str());
  EXPECT_EQ(run({"normalize", "--out", "/nonexistent-dir/x.json"}).code, 2);
}

}  // namespace
