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

#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"

#include "config.hpp"
#include "runner.hpp"

namespace {

struct Overrides {
  std::string config_path;
  std::optional<std::string> output;
  std::optional<std::string> format;
  std::optional<double> tolerance;
  std::optional<int> scan_grid;
};

void add_common_options(CLI::App& sub, Overrides& o) {
  sub.add_option("--config", o.config_path, "Configuration file")->required()->check(CLI::ExistingFile);
  sub.add_option("--output", o.output, "Output path, '-' for stdout");
  sub.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"csv", "jsonl"}));
  sub.add_option("--tolerance", o.tolerance, "Relative tolerance on r0")->check(CLI::PositiveNumber);
  sub.add_option("--scan-grid", o.scan_grid, "Points in the stationary-point scan")->check(CLI::Range(2, 1000000));
}

}  // namespace

int main(int argc, char** argv) {
  using namespace envelope::cli;

  CLI::App app{"Envelope-theory eigenvalues for N identical particles with K-body forces"};
  app.require_subcommand(1);
  Overrides overrides;
  const std::pair<const char*, const char*> commands[] = {
      {"solve", "Approximate energy of each requested state"},
      {"spectrum", "Energies over a range of global quantum numbers"},
      {"critical", "Critical coupling constant of an attractive many-body well"},
      {"scan", "Energies while sweeping one system parameter"},
      {"simplex-check", "Compare the regular-simplex picture with explicit coordinates"},
  };
  for (const auto& [name, description] : commands) add_common_options(*app.add_subcommand(name, description), overrides);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    const CLI::App* sub = app.get_subcommands().front();
    const Task task = *parse_task(sub->get_name());
    RunConfig config = load_config(overrides.config_path);
    if (overrides.output) config.output = *overrides.output;
    if (overrides.format) config.format = *parse_format(*overrides.format);
    if (overrides.tolerance) config.tolerance = *overrides.tolerance;
    if (overrides.scan_grid) config.scan_grid = *overrides.scan_grid;
    validate(config);
    return run(config, task, std::cout);
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
  } catch (const ValidationError& e) {
    std::cerr << "validation error: " << e.what() << '\n';
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
  }
  return 1;
}
