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

#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "envelope/model.hpp"

namespace envelope::cli {

// Syntax or field error while reading a configuration file.
class ConfigError : public std::runtime_error {
 public:
  ConfigError(const std::string& what, std::string source, int line = 0)
      : std::runtime_error(what), source_(std::move(source)), line_(line) {}

  const std::string& source() const noexcept { return source_; }
  // 0 when the error is not tied to a line.
  int line() const noexcept { return line_; }

 private:
  std::string source_;
  int line_;
};

// The configuration parses but describes an invalid physical system.
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Task { Solve, Spectrum, Critical, Scan, SimplexCheck };
enum class OutputFormat { Csv, JsonLines };

std::string to_string(Task task);
std::optional<Task> parse_task(std::string_view name);
std::string to_string(OutputFormat format);
std::optional<OutputFormat> parse_format(std::string_view name);

struct KineticConfig {
  double coefficient = 0.5;
  double exponent = 2.0;

  friend bool operator==(const KineticConfig&, const KineticConfig&) = default;
};

struct PowerParams {
  double strength = 1.0;
  double exponent = 2.0;

  friend bool operator==(const PowerParams&, const PowerParams&) = default;
};

struct ExponentialParams {
  double strength = 1.0;
  double decay = 1.0;
  double power = 1.0;

  friend bool operator==(const ExponentialParams&, const ExponentialParams&) = default;
};

struct WellParams {
  double coupling = 1.0;
  std::string shape = "exponential";
  double range = 1.0;

  friend bool operator==(const WellParams&, const WellParams&) = default;
};

using LawConfig = std::variant<PowerParams, ExponentialParams, WellParams>;

// One [potential.<name>] section. body == 1 is the one-body term.
struct PotentialConfig {
  std::string name;
  int body = 2;
  LawConfig law;

  friend bool operator==(const PotentialConfig&, const PotentialConfig&) = default;
};

struct SystemConfig {
  int particles = 2;
  int dimension = 3;
  KineticConfig kinetic;
  std::vector<PotentialConfig> potentials;

  friend bool operator==(const SystemConfig&, const SystemConfig&) = default;
};

struct QRange {
  double min = 0.0;
  double max = 0.0;
  double step = 1.0;

  friend bool operator==(const QRange&, const QRange&) = default;
};

// Exactly one of the three forms may be given; none means the ground state.
struct StatesConfig {
  std::vector<std::vector<Mode>> explicit_states;
  std::optional<QRange> q_range;
  std::optional<int> levels;

  friend bool operator==(const StatesConfig&, const StatesConfig&) = default;
};

struct ScanConfig {
  std::string parameter;
  double start = 0.0;
  double stop = 0.0;
  int points = 2;
  bool logarithmic = false;

  friend bool operator==(const ScanConfig&, const ScanConfig&) = default;
};

struct RunConfig {
  SystemConfig system;
  StatesConfig states;
  std::optional<Task> task;
  std::optional<ScanConfig> scan;
  std::string output = "-";
  OutputFormat format = OutputFormat::Csv;
  double tolerance = 1e-12;
  int scan_grid = 400;

  friend bool operator==(const RunConfig&, const RunConfig&) = default;
};

// Reads and validates a configuration. Throws ConfigError on syntax and
// field errors and ValidationError when a physical invariant is violated.
RunConfig load_config(const std::filesystem::path& path);
RunConfig parse_config(std::string_view text, const std::string& source = "<string>");

// Writes a configuration that parse_config reads back to an equal RunConfig.
std::string serialize(const RunConfig& config);

// Throws ValidationError.
void validate(const RunConfig& config);

SystemSpec build_system(const SystemConfig& config);

// Global quantum numbers requested by the [states] section, in order.
std::vector<double> state_q_values(const RunConfig& config, Task task);

// Copy of the system with one parameter replaced. Names have the form
// kinetic.<field> or potential.<name>.<field>. Throws ValidationError for
// unknown names.
SystemConfig with_parameter(const SystemConfig& system, const std::string& parameter, double value);

}  // namespace envelope::cli
