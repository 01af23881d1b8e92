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

#include <gtest/gtest.h>

#include <fstream>
#include <sstream>
#include <string>

#include "config.hpp"
#include "runner.hpp"

namespace envelope::cli {
namespace {

const char* kMinimal = R"(
[system]
particles = 3
dimension = 3

[kinetic]
coefficient = 0.5
exponent = 2

[potential.pair]
type = power
strength = 1
exponent = 2
)";

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

std::string render(const RunConfig& config, Task task, OutputFormat format = OutputFormat::Csv) {
  std::ostringstream out;
  write_table(compute(config, task), format, out);
  return out.str();
}

TEST(Config, MinimalDefaults) {
  const auto c = parse_config(kMinimal);
  EXPECT_EQ(c.system.particles, 3);
  ASSERT_EQ(c.system.potentials.size(), 1u);
  EXPECT_EQ(c.system.potentials[0].body, 2);
  EXPECT_FALSE(c.task.has_value());
  EXPECT_EQ(c.format, OutputFormat::Csv);
  const auto q = state_q_values(c, Task::Solve);
  ASSERT_EQ(q.size(), 1u);
  EXPECT_DOUBLE_EQ(q[0], 3.0);
}

TEST(Config, SpectrumDefaultsToThreeLevels) {
  const auto q = state_q_values(parse_config(kMinimal), Task::Spectrum);
  ASSERT_EQ(q.size(), 3u);
  EXPECT_DOUBLE_EQ(q[1], 4.0);
  EXPECT_DOUBLE_EQ(q[2], 5.0);
}

TEST(Config, ExplicitModes) {
  const auto c = parse_config(std::string(kMinimal) + "\n[states]\nmodes = 0:0 0:0 | 1:0 0:1\n");
  const auto q = state_q_values(c, Task::Solve);
  ASSERT_EQ(q.size(), 2u);
  EXPECT_DOUBLE_EQ(q[1], 6.0);
}

TEST(Config, BodyCountAboveParticlesIsRejected) {
  std::string text = kMinimal;
  text.replace(text.find("type = power"), 12, "type = power\nbody = 4");
  EXPECT_THROW(parse_config(text), ValidationError);
}

TEST(Config, SyntaxErrorReportsLine) {
  try {
    parse_config("[system]\nparticles = 2\n[broken\n", "bad.ini");
    FAIL() << "expected ConfigError";
  } catch (const ConfigError& e) {
    EXPECT_EQ(e.source(), "bad.ini");
    EXPECT_EQ(e.line(), 3);
  }
}

TEST(Config, UnknownKeyIsRejected) {
  EXPECT_THROW(parse_config(std::string(kMinimal) + "\n[task]\ncolour = blue\n"), ConfigError);
}

TEST(Config, RoundTrip) {
  for (const char* name : {"coulomb", "harmonic_spectrum", "exponential_critical", "coupling_scan"}) {
    const auto c = load_config(std::string(ENVELOPE_CONFIG_DIR) + "/" + name + ".ini");
    EXPECT_EQ(parse_config(serialize(c)), c) << name;
  }
}

TEST(Config, WithParameter) {
  const auto c = load_config(std::string(ENVELOPE_CONFIG_DIR) + "/coupling_scan.ini");
  const auto s = with_parameter(c.system, "potential.well.coupling", 7.0);
  EXPECT_EQ(std::get<WellParams>(s.potentials[0].law).coupling, 7.0);
  EXPECT_THROW(with_parameter(c.system, "potential.nope.coupling", 1.0), ValidationError);
}

TEST(Runner, CsvShape) {
  const std::string csv = render(parse_config(kMinimal), Task::Solve);
  EXPECT_EQ(csv.find('\r'), std::string::npos);
  EXPECT_EQ(csv.rfind("N,K,D,Q,r0,p0,E,character,residual,status\n", 0), 0u);
  EXPECT_EQ(csv.back(), '\n');
}

TEST(Runner, JsonLines) {
  const std::string json = render(parse_config(kMinimal), Task::Solve, OutputFormat::JsonLines);
  EXPECT_EQ(json.rfind("{\"N\":3,", 0), 0u);
  EXPECT_NE(json.find("\"status\":\"ok\""), std::string::npos);
}

TEST(Runner, ScanReportsUnboundRows) {
  const auto c = load_config(std::string(ENVELOPE_CONFIG_DIR) + "/coupling_scan.ini");
  const auto table = compute(c, Task::Scan);
  EXPECT_EQ(table.rows.size(), 14u);
  EXPECT_EQ(table.exit_code, 2);
}

TEST(Runner, CriticalNeedsWell) {
  EXPECT_THROW(compute(parse_config(kMinimal), Task::Critical), ValidationError);
}

TEST(Runner, SimplexCheckPasses) {
  const auto table = compute(parse_config(kMinimal), Task::SimplexCheck);
  ASSERT_EQ(table.rows.size(), 1u);
  EXPECT_EQ(std::get<std::string>(table.rows[0].back()), "pass");
  EXPECT_EQ(table.exit_code, 0);
}

class Golden : public ::testing::TestWithParam<std::pair<const char*, Task>> {};

TEST_P(Golden, MatchesFile) {
  const auto [name, task] = GetParam();
  const auto c = load_config(std::string(ENVELOPE_CONFIG_DIR) + "/" + name + ".ini");
  const std::string first = render(c, task);
  EXPECT_EQ(first, render(c, task));
  EXPECT_EQ(first, read_file(std::string(ENVELOPE_GOLDEN_DIR) + "/" + name + ".csv"));
}

INSTANTIATE_TEST_SUITE_P(Configs, Golden,
                         ::testing::Values(std::make_pair("coulomb", Task::Solve),
                                           std::make_pair("harmonic_spectrum", Task::Spectrum),
                                           std::make_pair("exponential_critical", Task::Critical)));

}  // namespace
}  // namespace envelope::cli
