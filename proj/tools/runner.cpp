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

#include "runner.hpp"

#include <cmath>
#include <fstream>
#include <ostream>

#include <fmt/format.h>
#include "json.hpp"

#include "envelope/critical.hpp"
#include "envelope/errors.hpp"
#include "envelope/et_solver.hpp"
#include "envelope/simplex.hpp"

namespace envelope::cli {
namespace {

enum class Outcome { Ok, Unbound, Failed };

struct Row {
  std::vector<Cell> cells;
  Outcome outcome = Outcome::Ok;
};

const std::vector<std::string> kSolveColumns = {"N", "K", "D", "Q", "r0", "p0", "E", "character", "residual", "status"};

std::string body_label(const SystemConfig& system) {
  std::string label;
  for (const auto& p : system.potentials) {
    if (!label.empty()) label += '+';
    label += std::to_string(p.body);
  }
  return label;
}

bool all_terms_vanish(const SystemSpec& spec) {
  if (spec.one_body() && !vanishes_at_infinity(*spec.one_body())) return false;
  for (const auto& term : spec.many_body()) {
    if (!vanishes_at_infinity(term.law)) return false;
  }
  return true;
}

SolveOptions solve_options(const RunConfig& config) {
  SolveOptions options;
  options.relative_tolerance = config.tolerance;
  options.scan_points = static_cast<std::size_t>(config.scan_grid);
  return options;
}

Row solve_row(const SystemConfig& system, double q, const SolveOptions& options) {
  Row row;
  row.cells = {static_cast<long long>(system.particles), body_label(system),
               static_cast<long long>(system.dimension), q};
  std::optional<SystemSpec> spec;
  try {
    spec = build_system(system);
  } catch (const ValidationError& e) {
    row.cells.insert(row.cells.end(), {std::monostate{}, std::monostate{}, std::monostate{}, std::monostate{},
                                       std::monostate{}, std::string("invalid_system")});
    row.outcome = Outcome::Failed;
    return row;
  }
  const std::string character = to_string(classify_bound_character(*spec, options.classifier));
  try {
    const EtSolution s = solve(*spec, q, options);
    const bool unbound = all_terms_vanish(*spec) && !(s.energy < 0.0);
    row.cells.insert(row.cells.end(), {s.r0, s.p0, s.energy, character, s.diagnostics.relative_residual,
                                       std::string(unbound ? "no_bound_state" : "ok")});
    row.outcome = unbound ? Outcome::Unbound : Outcome::Ok;
  } catch (const NoStationaryPoint&) {
    row.cells.insert(row.cells.end(), {std::monostate{}, std::monostate{}, std::monostate{}, character,
                                       std::monostate{}, std::string("no_stationary_point")});
    row.outcome = Outcome::Unbound;
  } catch (const NonConvergence&) {
    row.cells.insert(row.cells.end(), {std::monostate{}, std::monostate{}, std::monostate{}, character,
                                       std::monostate{}, std::string("non_convergence")});
    row.outcome = Outcome::Failed;
  } catch (const std::domain_error&) {
    row.cells.insert(row.cells.end(), {std::monostate{}, std::monostate{}, std::monostate{}, character,
                                       std::monostate{}, std::string("domain_error")});
    row.outcome = Outcome::Failed;
  }
  return row;
}

std::vector<double> scan_values(const ScanConfig& scan) {
  std::vector<double> values;
  if (scan.points == 1) return {scan.start};
  for (int i = 0; i < scan.points; ++i) {
    const double t = static_cast<double>(i) / (scan.points - 1);
    values.push_back(scan.logarithmic ? std::exp(std::log(scan.start) + t * (std::log(scan.stop) - std::log(scan.start)))
                                      : scan.start + t * (scan.stop - scan.start));
  }
  values.back() = scan.stop;
  return values;
}

const WellParams& single_well(const SystemConfig& system, int& body) {
  if (system.potentials.size() != 1) {
    throw ValidationError("critical task needs exactly one potential, a many-body well");
  }
  const auto& p = system.potentials.front();
  const auto* well = std::get_if<WellParams>(&p.law);
  if (!well || p.body < 2) throw ValidationError("critical task needs a many-body potential of type 'well'");
  body = p.body;
  return *well;
}

WellShape shape_of(const WellParams& well) {
  if (well.shape == "exponential") return exponential_shape(well.range);
  if (well.shape == "gaussian") return gaussian_shape(well.range);
  return yukawa_shape(well.range);
}

void append(Table& table, std::vector<Row>&& rows) {
  bool unbound = false;
  bool failed = false;
  for (auto& r : rows) {
    unbound = unbound || r.outcome == Outcome::Unbound;
    failed = failed || r.outcome == Outcome::Failed;
    table.rows.push_back(std::move(r.cells));
  }
  if (failed) {
    table.exit_code = 1;
  } else if (unbound && table.exit_code == 0) {
    table.exit_code = 2;
  }
}

Table solve_table(const RunConfig& config, Task task) {
  Table table;
  table.columns = kSolveColumns;
  const SolveOptions options = solve_options(config);
  std::vector<Row> rows;
  for (double q : state_q_values(config, task)) rows.push_back(solve_row(config.system, q, options));
  append(table, std::move(rows));
  return table;
}

Table scan_table(const RunConfig& config) {
  if (!config.scan) throw ValidationError("scan task needs scan_parameter, scan_start, scan_stop, scan_points in [task]");
  Table table;
  table.columns = {config.scan->parameter};
  table.columns.insert(table.columns.end(), kSolveColumns.begin(), kSolveColumns.end());
  const SolveOptions options = solve_options(config);
  const std::vector<double> qs = state_q_values(config, Task::Scan);
  std::vector<Row> rows;
  for (double value : scan_values(*config.scan)) {
    const SystemConfig system = with_parameter(config.system, config.scan->parameter, value);
    for (double q : qs) {
      Row row = solve_row(system, q, options);
      row.cells.insert(row.cells.begin(), value);
      rows.push_back(std::move(row));
    }
  }
  append(table, std::move(rows));
  return table;
}

Table critical_table(const RunConfig& config) {
  int body = 0;
  const WellParams& well = single_well(config.system, body);
  const WellShape shape = shape_of(well);
  Table table;
  table.columns = {"N", "K", "D", "Q", "x0", "g_c", "character", "candidates", "status"};
  std::vector<Row> rows;
  for (double q : state_q_values(config, Task::Critical)) {
    Row row;
    row.cells = {static_cast<long long>(config.system.particles), static_cast<long long>(body),
                 static_cast<long long>(config.system.dimension), q};
    try {
      const CriticalResult r = critical_coupling(config.system.particles, body, config.system.kinetic.coefficient,
                                                 config.system.kinetic.exponent, shape, q);
      row.cells.insert(row.cells.end(),
                       {r.x0, r.g_c, to_string(r.character), static_cast<long long>(r.candidates.size()),
                        std::string(r.multiple_critical_points ? "multiple_critical_points" : "ok")});
    } catch (const NoCriticalPoint&) {
      row.cells.insert(row.cells.end(), {std::monostate{}, std::monostate{}, std::monostate{}, 0LL,
                                         std::string("no_critical_point")});
      row.outcome = Outcome::Failed;
    }
    rows.push_back(std::move(row));
  }
  append(table, std::move(rows));
  return table;
}

Table simplex_table(const RunConfig& config) {
  constexpr double kTolerance = 1e-12;
  const SystemSpec spec = build_system(config.system);
  const double q = state_q_values(config, Task::SimplexCheck).front();
  Table table;
  table.columns = {"N", "K", "Q", "r0", "edge", "subset_radius", "cos_alpha", "radial_force",
                   "force_identity", "max_deviation", "max_tangential", "status"};
  std::vector<Row> rows;
  std::optional<EtSolution> solution;
  try {
    solution = solve(spec, q, solve_options(config));
  } catch (const std::exception&) {
    Row row;
    row.cells = {static_cast<long long>(spec.n_particles()), body_label(config.system), q};
    row.cells.resize(table.columns.size() - 1);
    row.cells.push_back(std::string("no_stationary_point"));
    row.outcome = Outcome::Unbound;
    rows.push_back(std::move(row));
    append(table, std::move(rows));
    return table;
  }
  const int n = spec.n_particles();
  const double r0 = solution->r0;
  // r0 (U'(r0/N) + sum of radial forces) must equal the potential side of the stationarity condition.
  double radial_sum = spec.one_body() ? derivative(*spec.one_body(), r0 / n) : 0.0;
  for (double f : total_radial_force(spec, r0)) radial_sum += f;
  const double potential_side = n * solution->p0 * derivative(spec.kinetic(), solution->p0) - stationarity_residual(spec, q, r0);
  const double identity = std::abs(r0 * radial_sum - potential_side) / std::max(std::abs(potential_side), 1e-300);

  for (const auto& term : spec.many_body()) {
    const SimplexCheck c = check_simplex(n, term.k_body, term.law, r0);
    Row row;
    const bool enumerated = n <= kMaxEnumeratedParticles;
    const double worst = c.worst_relative();
    const bool pass = worst <= kTolerance && identity <= kTolerance;
    row.cells = {static_cast<long long>(n), static_cast<long long>(term.k_body), q, r0, c.edge, c.subset_radius,
                 c.projection_cosine, c.radial_force, identity, worst, c.max_tangential_force,
                 std::string(!enumerated ? "analytic_only" : (pass ? "pass" : "fail"))};
    row.outcome = enumerated && !pass ? Outcome::Failed : Outcome::Ok;
    rows.push_back(std::move(row));
  }
  append(table, std::move(rows));
  return table;
}

std::string format_cell_csv(const Cell& cell) {
  return std::visit(
      [](const auto& v) -> std::string {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, std::monostate>) {
          return {};
        } else if constexpr (std::is_same_v<T, long long>) {
          return std::to_string(v);
        } else if constexpr (std::is_same_v<T, double>) {
          return fmt::format("{:.17g}", v);
        } else {
          return v;
        }
      },
      cell);
}

}  // namespace

Table compute(const RunConfig& config, Task task) {
  switch (task) {
    case Task::Solve:
    case Task::Spectrum:
      return solve_table(config, task);
    case Task::Scan:
      return scan_table(config);
    case Task::Critical:
      return critical_table(config);
    case Task::SimplexCheck:
      return simplex_table(config);
  }
  throw ValidationError("unknown task");
}

void write_table(const Table& table, OutputFormat format, std::ostream& out) {
  if (format == OutputFormat::Csv) {
    for (std::size_t i = 0; i < table.columns.size(); ++i) out << (i ? "," : "") << table.columns[i];
    out << '\n';
    for (const auto& row : table.rows) {
      for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << format_cell_csv(row[i]);
      out << '\n';
    }
    return;
  }
  for (const auto& row : table.rows) {
    nlohmann::ordered_json obj;
    for (std::size_t i = 0; i < row.size() && i < table.columns.size(); ++i) {
      const std::string& key = table.columns[i];
      std::visit(
          [&](const auto& v) {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, std::monostate>) {
              obj[key] = nullptr;
            } else {
              obj[key] = v;
            }
          },
          row[i]);
    }
    out << obj.dump() << '\n';
  }
}

int run(const RunConfig& config, Task task, std::ostream& fallback) {
  const Table table = compute(config, task);
  if (config.output == "-" || config.output.empty()) {
    write_table(table, config.format, fallback);
  } else {
    std::ofstream file(config.output, std::ios::binary);
    if (!file) throw ConfigError("cannot open output file '" + config.output + "'", config.output);
    write_table(table, config.format, file);
  }
  return table.exit_code;
}

}  // namespace envelope::cli
