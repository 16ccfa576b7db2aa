// Copyright 2026 The tdbound Authors.
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


#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "commands.hpp"
#include "json.hpp"

namespace tdb::cli {
namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "tdbound");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out;
  std::ostringstream err;
  const int code =
      run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string golden(const std::string& name) {
  std::ifstream in(std::string(TDBOUND_GOLDEN_DIR) + "/" + name,
                   std::ios::binary);
  EXPECT_TRUE(in.good()) << name;
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

void expect_golden(const std::vector<std::string>& args,
                   const std::string& name) {
  const auto r = invoke(args);
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out, golden(name));
}

TEST(Golden, LambdaSet) {
  expect_golden({"lambda-set", "--d", "4", "--t", "2"}, "lambda_set_d4_t2.csv");
  expect_golden({"lambda-set", "--d", "2", "--t", "3", "--format", "json"},
                "lambda_set_d2_t3.json");
}

TEST(Golden, BoundsCurve) {
  expect_golden({"bounds-curve", "--d", "2", "--t", "2", "--size", "30",
                 "--delta-grid", "0.1:0.9:5"},
                "bounds_curve_d2_t2.csv");
}

TEST(Golden, MinSize) {
  expect_golden({"min-size", "--d", "2", "--t", "3", "--delta", "0.5",
                 "--prob", "0.99", "--method", "bernstein-plain"},
                "min_size_d2_t3.csv");
}

TEST(Golden, Clifford) {
  expect_golden({"clifford", "--max-qubits", "3"}, "clifford_3.csv");
}

TEST(Golden, Objective) {
  expect_golden({"objective", "--lambda", "1,-1", "--size", "30", "--delta",
                 "0.5", "--theta-grid", "1:4:4"},
                "objective_small.csv");
}

TEST(Golden, McVerify) {
  expect_golden({"mc-verify", "--d", "2", "--t", "1", "--size", "3",
                 "--trials", "5", "--seed", "7"},
                "mc_verify_small.csv");
}

std::vector<std::vector<std::string>> parse_csv(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    std::vector<std::string> row;
    std::string cell;
    bool quoted = false;
    for (char c : line) {
      if (c == '"') {
        quoted = !quoted;
      } else if (c == ',' && !quoted) {
        row.push_back(cell);
        cell.clear();
      } else {
        cell += c;
      }
    }
    row.push_back(cell);
    rows.push_back(row);
  }
  return rows;
}

TEST(Formats, CsvAndJsonCarrySameValues) {
  const std::vector<std::vector<std::string>> commands = {
      {"lambda-set", "--d", "3", "--t", "3"},
      {"bounds-curve", "--d", "2", "--t", "3", "--size", "40", "--delta-grid",
       "0.2,0.6"},
      {"clifford", "--max-qubits", "4"},
      {"min-size", "--d", "3", "--t", "2", "--method", "master-symmetric"}};
  for (auto args : commands) {
    const auto csv = invoke(args);
    args.push_back("--format");
    args.push_back("json");
    const auto json = invoke(args);
    ASSERT_EQ(csv.code, 0) << csv.err;
    ASSERT_EQ(json.code, 0) << json.err;
    const auto rows = parse_csv(csv.out);
    const auto doc = nlohmann::ordered_json::parse(json.out);
    ASSERT_EQ(doc.size() + 1, rows.size());
    for (std::size_t r = 0; r < doc.size(); ++r) {
      std::size_t c = 0;
      for (const auto& [key, value] : doc[r].items()) {
        EXPECT_EQ(key, rows[0][c]);
        const auto& cell = rows[r + 1][c];
        if (value.is_number_float()) {
          EXPECT_EQ(value.get<double>(), std::stod(cell)) << key;
        } else if (value.is_number_integer()) {
          EXPECT_EQ(value.get<long long>(), std::stoll(cell)) << key;
        } else if (value.is_string()) {
          EXPECT_EQ(value.get<std::string>(), cell) << key;
        } else if (value.is_null()) {
          EXPECT_EQ(cell, "") << key;
        }
        ++c;
      }
    }
  }
}

TEST(Formats, RepeatedRunsAreByteIdentical) {
  const std::vector<std::string> args = {"mc-verify", "--d", "2", "--t", "2",
                                         "--size", "4", "--trials", "6",
                                         "--seed", "3"};
  EXPECT_EQ(invoke(args).out, invoke(args).out);
}

TEST(ExitCodes, UsageErrors) {
  EXPECT_EQ(invoke({}).code, 2);
  EXPECT_EQ(invoke({"lambda-set", "--d", "1", "--t", "2"}).code, 2);
  EXPECT_EQ(invoke({"lambda-set", "--d", "x", "--t", "2"}).code, 2);
  EXPECT_EQ(invoke({"min-size", "--d", "2", "--t", "2", "--delta", "1.5"}).code,
            2);
  EXPECT_EQ(invoke({"bounds-curve", "--d", "2", "--t", "2", "--size", "10",
                    "--methods", "nope"})
                .code,
            2);
  EXPECT_EQ(invoke({"mc-verify", "--kind", "beamsplitter"}).code, 2);
  EXPECT_EQ(invoke({"no-such-command"}).code, 2);
  EXPECT_EQ(invoke({"--help"}).code, 0);
}

TEST(ExitCodes, ComputationError) {
  // Full profiles need S_d sums, which the default cap refuses at d = 9.
  EXPECT_EQ(invoke({"min-size", "--d", "9", "--t", "2", "--method",
                    "master-symmetric"})
                .code,
            1);
}

TEST(McVerify, ZeroDeltaEdge) {
  const auto r = invoke({"mc-verify", "--d", "2", "--t", "1", "--size", "2",
                         "--delta", "0", "--trials", "4", "--format", "json"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto doc = nlohmann::json::parse(r.out);
  for (const auto& row : doc) {
    EXPECT_EQ(row["tail_fraction"].get<double>(), 1.0);
    EXPECT_EQ(row["bound_clipped"].get<double>(), 1.0);
    EXPECT_EQ(row["verdict"], "PASS");
  }
}

TEST(Table, SmallGridCell) {
  const auto r = invoke({"min-size", "--d", "4", "--t", "2", "--method",
                         "master-plain", "--closed-form"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto rows = parse_csv(r.out);
  ASSERT_EQ(rows.size(), 2u);
  EXPECT_EQ(rows[1][5], "82");
}

}  // namespace
}  // namespace tdb::cli
