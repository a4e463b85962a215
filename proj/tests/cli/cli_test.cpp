// Copyright 2026 The ppc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <initializer_list>
#include <sstream>
#include <string>
#include <vector>

#include "commands.hpp"
#include "config.hpp"
#include "ppc/errors.hpp"

namespace ppc::cli {
namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result invoke(std::initializer_list<std::string> args) {
  std::vector<std::string> owned{"ppc"};
  owned.insert(owned.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : owned) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string config(const std::string& name) {
  return std::string(PPC_CONFIG_DIR) + "/" + name;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

std::string golden(const std::string& name) {
  return slurp(std::string(PPC_GOLDEN_DIR) + "/" + name);
}

std::string temp_json(const std::string& body) {
  static int counter = 0;
  const auto path = std::filesystem::temp_directory_path() /
                    ("ppc_cli_test_" + std::to_string(counter++) + ".json");
  std::ofstream(path) << body;
  return path.string();
}

TEST(CliRateTable, MatchesGolden) {
  const Result r = invoke({"rate-table"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_EQ(r.out, golden("rate_table_n5_k2_g2.csv"));
}

TEST(CliRateTable, LimitRows) {
  const Result r = invoke({"rate-table", "--n", "5", "--F", "2"});
  ASSERT_EQ(r.code, kExitOk);
  EXPECT_NE(r.out.find("general-limit,5,2,2,,inf,4/15,0.266666667,,"), std::string::npos);
  EXPECT_NE(r.out.find("systematic-limit,5,2,2,,inf,2/5,0.400000000,,"), std::string::npos);
}

TEST(CliSimulate, GeneralN4MatchesGolden) {
  const Result r = invoke({"simulate", "--config", config("general_n4.json")});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_EQ(r.out, golden("general_n4_simulate.txt"));
  EXPECT_NE(r.out.find(",8/21,0.380952381,336,128"), std::string::npos);
}

TEST(CliSimulate, SystematicN4MatchesGolden) {
  const Result r = invoke({"simulate", "--config", config("systematic_n4.json")});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_EQ(r.out, golden("systematic_n4_simulate.txt"));
  EXPECT_NE(r.out.find(",9/20,0.450000000,120,54"), std::string::npos);
}

TEST(CliSimulate, SameSeedIsByteIdenticalAndSeedMatters) {
  const auto a = invoke({"simulate", "--config", config("general_n4.json"), "--seed", "9"});
  const auto b = invoke({"simulate", "--config", config("general_n4.json"), "--seed", "9"});
  const auto c = invoke({"simulate", "--config", config("general_n4.json"), "--seed", "10"});
  EXPECT_EQ(a.out, b.out);
  EXPECT_NE(a.out, c.out);
}

TEST(CliSimulate, CustomCandidates) {
  const Result r = invoke({"simulate", "--config", config("custom_candidates.json")});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_NE(r.out.find("3=3*x1^2 + x1*x2"), std::string::npos) << r.out.substr(0, 300);
  EXPECT_NE(r.out.find("# recovery exact, audit pass"), std::string::npos);
}

TEST(CliSimulate, WritesOutputFile) {
  const auto path = (std::filesystem::temp_directory_path() / "ppc_cli_out.txt").string();
  const Result r = invoke({"simulate", "--config", config("systematic_n4.json"), "--v", "2",
                           "--out", path});
  ASSERT_EQ(r.code, kExitOk);
  EXPECT_TRUE(r.out.empty());
  EXPECT_NE(slurp(path).find("v=2"), std::string::npos);
  std::filesystem::remove(path);
}

TEST(CliVerify, ReferenceConfigsPass) {
  for (const char* name : {"general_n4.json", "systematic_n4.json"}) {
    const Result r = invoke({"verify", "--config", config(name), "--seeds", "200"});
    EXPECT_EQ(r.code, kExitOk) << r.out << r.err;
    EXPECT_EQ(r.out.find("FAIL"), std::string::npos);
  }
}

TEST(CliExitCodes, RecoveryFailureIsThree) {
  const Result r = invoke({"simulate", "--config", config("general_n4.json"), "--v", "1",
                           "--fault", "corrupt-answer"});
  EXPECT_EQ(r.code, kExitRecovery);
}

TEST(CliExitCodes, AuditFailureIsFour) {
  const Result r = invoke({"verify", "--config", config("general_n4.json"), "--seeds", "20",
                           "--fault", "extra-query"});
  EXPECT_EQ(r.code, kExitAudit);
  EXPECT_NE(r.out.find("structural FAIL"), std::string::npos);
}

TEST(CliExitCodes, ConfigErrorsAreTwo) {
  const std::vector<std::vector<std::string>> cases = {
      {"simulate", "--n", "3", "--k", "2", "--g", "3"},   // g(k-1)+1 > n
      {"simulate", "--k", "5"},                            // k > n
      {"simulate", "--q", "6"},                            // not prime
      {"simulate", "--q", "3"},                            // not above n
      {"simulate", "--f", "1", "--g", "1", "--mu", "1000"},  // too many candidates
      {"simulate", "--mu", "1"},                           // mu < f
      {"simulate", "--v", "4"},                            // v outside 1..mu
      {"simulate", "--v", "0"},
      {"simulate", "--scheme", "mds"},
      {"simulate", "--fault", "sometimes"},
      {"simulate", "--config", "/nonexistent/ppc.json"},
      {"simulate", "--n", "-3"},
      {"frobnicate"},
      {},
  };
  for (const auto& args : cases) {
    std::vector<std::string> owned{"ppc"};
    owned.insert(owned.end(), args.begin(), args.end());
    std::vector<const char*> argv;
    for (const auto& a : owned) argv.push_back(a.c_str());
    std::ostringstream out, err;
    EXPECT_EQ(run(static_cast<int>(argv.size()), argv.data(), out, err), kExitConfig)
        << owned.size() << " args, first " << (args.empty() ? "" : args.front());
  }
}

TEST(CliConfig, RejectsMalformedFiles) {
  const std::vector<std::string> bodies = {
      R"({"n": 4, "colour": "red"})",
      R"({"n": -4})",
      R"({"scheme": 3})",
      R"([1, 2])",
      R"({"n": 4,)",
      R"({"candidates": "x1"})",
      R"({"candidates": [[{"exponents": [1, 0], "weight": 2}]]})",
      R"({"candidates": ["x1", "x2", "x1 + 1"]})",
      R"({"candidates": ["x1", "x3", "x1*x2"]})",
      R"({"mu": 2, "candidates": ["x1", "x2", "x1*x2"]})",
  };
  for (const auto& body : bodies) {
    const auto path = temp_json(body);
    const Result r = invoke({"simulate", "--config", path});
    EXPECT_EQ(r.code, kExitConfig) << body;
    std::filesystem::remove(path);
  }
}

TEST(CliConfig, OverridesTakePrecedence) {
  ConfigOverrides o;
  o.config_path = config("general_n4.json");
  o.scheme = "systematic";
  o.v = "2";
  const ExperimentConfig cfg = load_config(o);
  EXPECT_EQ(cfg.scheme, Scheme::kSystematic);
  ASSERT_TRUE(cfg.v.has_value());
  EXPECT_EQ(*cfg.v, 1u);
  EXPECT_EQ(cfg.seed, 1u);
}

TEST(CliConfig, ParsesCandidateText) {
  const PrimeField field(7);
  const Candidate c = parse_candidate("2*x1^2 + x1*x2 + 3*x2^2 + x1^2", field, 2);
  EXPECT_EQ(c.to_string(), parse_candidate("x1*x2 + 3*x1^2 + 3*x2^2", field, 2).to_string());
  EXPECT_THROW(parse_candidate("x1 + 5", field, 2), ConfigError);
  EXPECT_THROW(parse_candidate("x1 + + x2", field, 2), ConfigError);
  EXPECT_THROW(parse_candidate("", field, 2), ConfigError);
}

}  // namespace
}  // namespace ppc::cli
