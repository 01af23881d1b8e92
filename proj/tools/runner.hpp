// Copyright 2026 The Envelope Authors
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

#pragma once

#include <iosfwd>
#include <string>
#include <variant>
#include <vector>

#include "config.hpp"

namespace envelope::cli {

// Empty cells are written as an empty CSV field and as JSON null.
using Cell = std::variant<std::monostate, long long, double, std::string>;

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
  // 0 success, 2 some rows without a bound state, 1 some rows failed.
  int exit_code = 0;
};

// Runs `task` over every requested state (and scan point). Throws
// ValidationError when the configuration does not fit the task.
Table compute(const RunConfig& config, Task task);

// CSV: header row, LF line endings, reals with 17 significant digits.
// JSON lines: one object per row, keys in column order.
void write_table(const Table& table, OutputFormat format, std::ostream& out);

// compute + write_table to config.output ("-" means `fallback`). Returns the exit code.
int run(const RunConfig& config, Task task, std::ostream& fallback);

}  // namespace envelope::cli
