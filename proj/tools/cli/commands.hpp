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


// Subcommands of the tdbound CLI. Each builds a Table from validated
// arguments; run() wires them to CLI11 and maps failures to exit codes
// (0 success, 1 computation error, 2 usage error).

#ifndef TDBOUND_TOOLS_CLI_COMMANDS_HPP_
#define TDBOUND_TOOLS_CLI_COMMANDS_HPP_

#include <cstdint>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "output.hpp"

namespace tdb::cli {

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct LambdaSetArgs {
  int d = 2;
  int t = 2;
};
Table lambda_set_table(const LambdaSetArgs& args);

struct CurveArgs {
  int d = 2;
  int t = 2;
  // Independent draws; symmetric methods use 2 x size unless overridden.
  long size = 50;
  std::optional<long> symmetric_size;
  std::string kind = "all";  // plain, symmetric or all
  std::string methods;       // comma list; empty = every method of `kind`
  std::string delta_grid = "0.05:0.95:19";
};
Table bounds_curve_table(const CurveArgs& args);

struct MinSizeArgs {
  int d = 2;
  int t = 2;
  double delta = 0.5;
  double prob = 0.99;
  std::string method = "master-plain";
  bool closed_form = false;
};
Table min_size_table(const MinSizeArgs& args);

struct TableArgs {
  bool table2 = false;
  std::string ds;
  std::string ts;
  std::string methods =
      "master-plain,master-symmetric,bernstein-plain,bernstein-symmetric";
  double delta = 0.5;
  double prob = 0.99;
};
Table table_table(const TableArgs& args);

struct CliffordArgs {
  int max_qubits = 50;
};
Table clifford_table(const CliffordArgs& args);

struct McVerifyArgs {
  int d = 2;
  int t = 2;
  long size = 10;
  std::string kind = "plain";
  double delta = 0.9;
  int trials = 200;
  std::uint64_t seed = 1;
  std::string trace;  // JSON-lines path for per-trial records
};
Table mc_verify_table(const McVerifyArgs& args);

struct ObjectiveArgs {
  std::string lambda = "1,-1";
  long size = 30;
  double delta = 0.5;
  std::string theta_grid = "0.5:60:120";
};
Table objective_table(const ObjectiveArgs& args);

// "a:b:n" (n evenly spaced points, endpoints included) or "x,y,z".
std::vector<double> parse_grid(const std::string& text);
std::vector<int> parse_int_list(const std::string& text);
std::vector<std::string> split_list(const std::string& text);

int run(int argc, const char* const* argv, std::ostream& out,
        std::ostream& err);

}  // namespace tdb::cli

#endif  // TDBOUND_TOOLS_CLI_COMMANDS_HPP_
