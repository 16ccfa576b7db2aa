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


// Tabular output shared by every subcommand: CSV with 17 significant digits
// and LF endings, or a JSON array of objects with the same keys in the same
// order.

#ifndef TDBOUND_TOOLS_CLI_OUTPUT_HPP_
#define TDBOUND_TOOLS_CLI_OUTPUT_HPP_

#include <cstdint>
#include <ostream>
#include <string>
#include <variant>
#include <vector>

namespace tdb::cli {

enum class Format { Csv, Json };

Format parse_format(const std::string& text);

struct Null {};
using Cell = std::variant<Null, std::int64_t, double, std::string, bool>;

class Table {
 public:
  explicit Table(std::vector<std::string> columns);

  void add_row(std::vector<Cell> row);
  const std::vector<std::string>& columns() const { return columns_; }
  const std::vector<std::vector<Cell>>& rows() const { return rows_; }

  void write(std::ostream& out, Format format) const;

 private:
  std::vector<std::string> columns_;
  std::vector<std::vector<Cell>> rows_;
};

// %.17g; "inf", "-inf", "nan" for non-finite values.
std::string format_double(double value);

}  // namespace tdb::cli

#endif  // TDBOUND_TOOLS_CLI_OUTPUT_HPP_
