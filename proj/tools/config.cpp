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

#include "config.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include <boost/property_tree/ini_parser.hpp>
#include <boost/property_tree/ptree.hpp>
#include <fmt/format.h>

#include "envelope/errors.hpp"

namespace envelope::cli {
namespace {

namespace pt = boost::property_tree;

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

constexpr std::string_view kPotentialPrefix = "potential.";

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return std::string(s.substr(first, last - first + 1));
}

std::string format_real(double v) { return fmt::format("{:.17g}", v); }

class SectionReader {
 public:
  SectionReader(const pt::ptree& tree, std::string section, std::string source)
      : tree_(tree), section_(std::move(section)), source_(std::move(source)) {
    for (const auto& [key, child] : tree_) {
      if (!child.empty()) fail("nested entry '" + key + "' is not allowed");
    }
  }

  bool has(const std::string& key) const { return tree_.find(key) != tree_.not_found(); }

  std::string text(const std::string& key) {
    used_.push_back(key);
    const auto it = tree_.find(key);
    if (it == tree_.not_found()) fail("missing required key '" + key + "'");
    return trim(it->second.data());
  }

  std::optional<std::string> optional_text(const std::string& key) {
    if (!has(key)) return std::nullopt;
    return text(key);
  }

  double real(const std::string& key) { return to_real(key, text(key)); }

  std::optional<double> optional_real(const std::string& key) {
    if (!has(key)) return std::nullopt;
    return real(key);
  }

  int integer(const std::string& key) {
    const std::string value = text(key);
    int out = 0;
    const auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), out);
    if (ec != std::errc() || ptr != value.data() + value.size()) {
      fail("key '" + key + "': expected an integer, got '" + value + "'");
    }
    return out;
  }

  std::optional<int> optional_integer(const std::string& key) {
    if (!has(key)) return std::nullopt;
    return integer(key);
  }

  // Rejects keys that no reader asked for.
  void finish() const {
    for (const auto& [key, child] : tree_) {
      if (std::find(used_.begin(), used_.end(), key) == used_.end()) fail("unknown key '" + key + "'");
    }
  }

  [[noreturn]] void fail(const std::string& message) const {
    throw ConfigError(source_ + ": [" + section_ + "] " + message, source_);
  }

  double to_real(const std::string& key, const std::string& value) const {
    double out = 0.0;
    const auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), out);
    if (ec != std::errc() || ptr != value.data() + value.size() || !std::isfinite(out)) {
      fail("key '" + key + "': expected a finite number, got '" + value + "'");
    }
    return out;
  }

 private:
  const pt::ptree& tree_;
  std::string section_;
  std::string source_;
  std::vector<std::string> used_;
};

std::vector<Mode> parse_modes(const std::string& text, SectionReader& reader) {
  std::vector<Mode> modes;
  std::istringstream in(text);
  std::string token;
  while (in >> token) {
    const auto colon = token.find(':');
    if (colon == std::string::npos) reader.fail("mode '" + token + "' must have the form n:l");
    Mode m;
    const auto* begin = token.data();
    const auto* mid = begin + colon;
    const auto* end = begin + token.size();
    const auto r1 = std::from_chars(begin, mid, m.n);
    const auto r2 = std::from_chars(mid + 1, end, m.l);
    if (r1.ec != std::errc() || r1.ptr != mid || r2.ec != std::errc() || r2.ptr != end) {
      reader.fail("mode '" + token + "' must have the form n:l with integers");
    }
    modes.push_back(m);
  }
  if (modes.empty()) reader.fail("empty state in 'modes'");
  return modes;
}

void read_system(SectionReader& r, RunConfig& c) {
  c.system.particles = r.integer("particles");
  c.system.dimension = r.integer("dimension");
}

void read_kinetic(SectionReader& r, RunConfig& c) {
  if (const auto type = r.optional_text("type"); type && *type != "power") {
    r.fail("kinetic type must be 'power', got '" + *type + "'");
  }
  c.system.kinetic.coefficient = r.real("coefficient");
  c.system.kinetic.exponent = r.real("exponent");
}

void read_potential(SectionReader& r, const std::string& name, RunConfig& c) {
  if (name.empty() || name.find_first_not_of("abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ0123456789_-") !=
                          std::string::npos) {
    r.fail("potential name must be non-empty and use only letters, digits, '_' and '-'");
  }
  PotentialConfig p;
  p.name = name;
  p.body = r.optional_integer("body").value_or(2);
  const std::string type = r.text("type");
  if (type == "power") {
    p.law = PowerParams{r.real("strength"), r.real("exponent")};
  } else if (type == "exponential") {
    p.law = ExponentialParams{r.real("strength"), r.real("decay"), r.real("power")};
  } else if (type == "well") {
    WellParams w;
    w.coupling = r.real("coupling");
    w.shape = r.text("shape");
    w.range = r.optional_real("range").value_or(1.0);
    p.law = w;
  } else {
    r.fail("unknown potential type '" + type + "' (expected power, exponential or well)");
  }
  c.system.potentials.push_back(std::move(p));
}

void read_states(SectionReader& r, RunConfig& c) {
  if (const auto modes = r.optional_text("modes")) {
    std::string_view rest = *modes;
    while (true) {
      const auto bar = rest.find('|');
      c.states.explicit_states.push_back(parse_modes(trim(rest.substr(0, bar)), r));
      if (bar == std::string_view::npos) break;
      rest = rest.substr(bar + 1);
    }
  }
  if (r.has("q_min") || r.has("q_max") || r.has("q_step")) {
    c.states.q_range = QRange{r.real("q_min"), r.real("q_max"), r.real("q_step")};
  }
  c.states.levels = r.optional_integer("levels");
}

void read_task(SectionReader& r, RunConfig& c) {
  if (const auto type = r.optional_text("type")) {
    c.task = parse_task(*type);
    if (!c.task) r.fail("unknown task '" + *type + "'");
  }
  if (const auto output = r.optional_text("output")) c.output = *output;
  if (const auto format = r.optional_text("format")) {
    const auto f = parse_format(*format);
    if (!f) r.fail("unknown format '" + *format + "' (expected csv or jsonl)");
    c.format = *f;
  }
  if (const auto tol = r.optional_real("tolerance")) c.tolerance = *tol;
  if (const auto grid = r.optional_integer("scan_grid")) c.scan_grid = *grid;
  if (r.has("scan_parameter")) {
    ScanConfig s;
    s.parameter = r.text("scan_parameter");
    s.start = r.real("scan_start");
    s.stop = r.real("scan_stop");
    s.points = r.integer("scan_points");
    const std::string spacing = r.optional_text("scan_spacing").value_or("linear");
    if (spacing != "linear" && spacing != "log") r.fail("scan_spacing must be 'linear' or 'log'");
    s.logarithmic = spacing == "log";
    c.scan = s;
  }
}

WellShape make_shape(const WellParams& w) {
  if (w.shape == "exponential") return exponential_shape(w.range);
  if (w.shape == "gaussian") return gaussian_shape(w.range);
  if (w.shape == "yukawa") return yukawa_shape(w.range);
  throw ValidationError("unknown well shape '" + w.shape + "' (expected exponential, gaussian or yukawa)");
}

PotentialLaw make_law(const LawConfig& law) {
  return std::visit(Overloaded{
                        [](const PowerParams& p) -> PotentialLaw { return PowerLaw{p.strength, p.exponent}; },
                        [](const ExponentialParams& p) -> PotentialLaw {
                          return Exponential{p.strength, p.decay, p.power};
                        },
                        [](const WellParams& p) -> PotentialLaw {
                          if (!(p.range > 0.0)) throw ValidationError("well range must be positive");
                          return AttractiveWell{p.coupling, make_shape(p)};
                        },
                    },
                    law);
}

}  // namespace

std::string to_string(Task task) {
  switch (task) {
    case Task::Solve:
      return "solve";
    case Task::Spectrum:
      return "spectrum";
    case Task::Critical:
      return "critical";
    case Task::Scan:
      return "scan";
    case Task::SimplexCheck:
      return "simplex-check";
  }
  return "solve";
}

std::optional<Task> parse_task(std::string_view name) {
  for (Task t : {Task::Solve, Task::Spectrum, Task::Critical, Task::Scan, Task::SimplexCheck}) {
    if (name == to_string(t)) return t;
  }
  return std::nullopt;
}

std::string to_string(OutputFormat format) { return format == OutputFormat::Csv ? "csv" : "jsonl"; }

std::optional<OutputFormat> parse_format(std::string_view name) {
  if (name == "csv") return OutputFormat::Csv;
  if (name == "jsonl") return OutputFormat::JsonLines;
  return std::nullopt;
}

RunConfig parse_config(std::string_view text, const std::string& source) {
  pt::ptree tree;
  std::istringstream in{std::string(text)};
  try {
    pt::read_ini(in, tree);
  } catch (const pt::ini_parser_error& e) {
    throw ConfigError(source + ":" + std::to_string(e.line()) + ": " + e.message(), source,
                      static_cast<int>(e.line()));
  }

  RunConfig config;
  bool saw_system = false;
  for (const auto& [name, section] : tree) {
    if (section.empty() && !section.data().empty()) {
      throw ConfigError(source + ": key '" + name + "' appears outside of any section", source);
    }
    SectionReader reader(section, name, source);
    if (name == "system") {
      read_system(reader, config);
      saw_system = true;
    } else if (name == "kinetic") {
      read_kinetic(reader, config);
    } else if (name.rfind(kPotentialPrefix, 0) == 0) {
      read_potential(reader, name.substr(kPotentialPrefix.size()), config);
    } else if (name == "states") {
      read_states(reader, config);
    } else if (name == "task") {
      read_task(reader, config);
    } else {
      throw ConfigError(source + ": unknown section [" + name + "]", source);
    }
    reader.finish();
  }
  if (!saw_system) throw ConfigError(source + ": missing [system] section", source);
  validate(config);
  return config;
}

RunConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot open config file '" + path.string() + "'", path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_config(buffer.str(), path.string());
}

std::string serialize(const RunConfig& c) {
  std::string out;
  out += "[system]\n";
  out += fmt::format("particles = {}\ndimension = {}\n\n", c.system.particles, c.system.dimension);
  out += "[kinetic]\ntype = power\n";
  out += fmt::format("coefficient = {}\nexponent = {}\n", format_real(c.system.kinetic.coefficient),
                     format_real(c.system.kinetic.exponent));
  for (const auto& p : c.system.potentials) {
    out += fmt::format("\n[potential.{}]\nbody = {}\n", p.name, p.body);
    std::visit(Overloaded{
                   [&](const PowerParams& v) {
                     out += fmt::format("type = power\nstrength = {}\nexponent = {}\n", format_real(v.strength),
                                        format_real(v.exponent));
                   },
                   [&](const ExponentialParams& v) {
                     out += fmt::format("type = exponential\nstrength = {}\ndecay = {}\npower = {}\n",
                                        format_real(v.strength), format_real(v.decay), format_real(v.power));
                   },
                   [&](const WellParams& v) {
                     out += fmt::format("type = well\ncoupling = {}\nshape = {}\nrange = {}\n",
                                        format_real(v.coupling), v.shape, format_real(v.range));
                   },
               },
               p.law);
  }
  const StatesConfig& s = c.states;
  if (!s.explicit_states.empty() || s.q_range || s.levels) {
    out += "\n[states]\n";
    if (!s.explicit_states.empty()) {
      std::string modes;
      for (std::size_t i = 0; i < s.explicit_states.size(); ++i) {
        if (i > 0) modes += " | ";
        for (std::size_t j = 0; j < s.explicit_states[i].size(); ++j) {
          if (j > 0) modes += ' ';
          modes += fmt::format("{}:{}", s.explicit_states[i][j].n, s.explicit_states[i][j].l);
        }
      }
      out += "modes = " + modes + "\n";
    }
    if (s.q_range) {
      out += fmt::format("q_min = {}\nq_max = {}\nq_step = {}\n", format_real(s.q_range->min),
                         format_real(s.q_range->max), format_real(s.q_range->step));
    }
    if (s.levels) out += fmt::format("levels = {}\n", *s.levels);
  }
  out += "\n[task]\n";
  if (c.task) out += "type = " + to_string(*c.task) + "\n";
  out += fmt::format("output = {}\nformat = {}\ntolerance = {}\nscan_grid = {}\n", c.output, to_string(c.format),
                     format_real(c.tolerance), c.scan_grid);
  if (c.scan) {
    out += fmt::format("scan_parameter = {}\nscan_start = {}\nscan_stop = {}\nscan_points = {}\nscan_spacing = {}\n",
                       c.scan->parameter, format_real(c.scan->start), format_real(c.scan->stop), c.scan->points,
                       c.scan->logarithmic ? "log" : "linear");
  }
  return out;
}

SystemSpec build_system(const SystemConfig& config) {
  if (!(config.kinetic.coefficient > 0.0) || !(config.kinetic.exponent > 0.0)) {
    throw ValidationError("kinetic coefficient and exponent must be > 0");
  }
  std::optional<PotentialLaw> one_body;
  std::vector<ManyBodyTerm> many_body;
  for (const auto& p : config.potentials) {
    if (p.body == 1) {
      if (one_body) throw ValidationError("at most one one-body potential (body = 1) is allowed");
      one_body = make_law(p.law);
    } else {
      if (p.body < 2 || p.body > config.particles) {
        throw ValidationError("potential '" + p.name + "': body count K must satisfy 2 <= K <= N (K=" +
                              std::to_string(p.body) + ", N=" + std::to_string(config.particles) + ")");
      }
      many_body.push_back({p.body, make_law(p.law)});
    }
  }
  try {
    return SystemSpec(config.particles, config.dimension, PowerKinetic{config.kinetic.coefficient, config.kinetic.exponent},
                      std::move(one_body), std::move(many_body));
  } catch (const InvalidSystem& e) {
    throw ValidationError(e.what());
  }
}

void validate(const RunConfig& c) {
  (void)build_system(c.system);
  for (std::size_t i = 0; i < c.system.potentials.size(); ++i) {
    for (std::size_t j = i + 1; j < c.system.potentials.size(); ++j) {
      if (c.system.potentials[i].name == c.system.potentials[j].name) {
        throw ValidationError("duplicate potential name '" + c.system.potentials[i].name + "'");
      }
    }
  }
  const StatesConfig& s = c.states;
  const int forms = (!s.explicit_states.empty() ? 1 : 0) + (s.q_range ? 1 : 0) + (s.levels ? 1 : 0);
  if (forms > 1) throw ValidationError("[states] accepts only one of modes, q_min/q_max/q_step, levels");
  for (const auto& state : s.explicit_states) {
    if (state.size() != static_cast<std::size_t>(c.system.particles - 1)) {
      throw ValidationError("each state needs N-1 = " + std::to_string(c.system.particles - 1) + " modes, got " +
                            std::to_string(state.size()));
    }
    for (const Mode& m : state) {
      if (m.n < 0 || m.l < 0) throw ValidationError("quantum numbers n and l must be >= 0");
    }
  }
  if (s.q_range) {
    if (!(s.q_range->min > 0.0)) throw ValidationError("q_min must be > 0");
    if (!(s.q_range->step > 0.0)) throw ValidationError("q_step must be > 0");
    if (s.q_range->max < s.q_range->min) throw ValidationError("q_max must be >= q_min");
  }
  if (s.levels && *s.levels < 1) throw ValidationError("levels must be >= 1");
  if (!(c.tolerance > 0.0 && c.tolerance < 1.0)) throw ValidationError("tolerance must lie in (0, 1)");
  if (c.scan_grid < 2) throw ValidationError("scan_grid must be >= 2");
  if (c.scan) {
    (void)with_parameter(c.system, c.scan->parameter, c.scan->start);
    if (c.scan->points < 1) throw ValidationError("scan_points must be >= 1");
    if (c.scan->logarithmic && !(c.scan->start > 0.0 && c.scan->stop > 0.0)) {
      throw ValidationError("logarithmic scan needs positive start and stop");
    }
  }
}

std::vector<double> state_q_values(const RunConfig& config, Task task) {
  const StatesConfig& s = config.states;
  const int n = config.system.particles;
  const int d = config.system.dimension;
  std::vector<double> qs;
  if (!s.explicit_states.empty()) {
    for (const auto& modes : s.explicit_states) qs.push_back(global_quantum_number(QuantumState(modes, d)));
  } else if (s.q_range) {
    const double tol = 1e-9 * s.q_range->step;
    for (int i = 0;; ++i) {
      const double q = s.q_range->min + i * s.q_range->step;
      if (q > s.q_range->max + tol) break;
      qs.push_back(q);
    }
  } else {
    const int levels = s.levels.value_or(task == Task::Spectrum ? 3 : 1);
    for (int i = 0; i < levels; ++i) qs.push_back(ground_state_q(n, d) + i);
  }
  return qs;
}

SystemConfig with_parameter(const SystemConfig& system, const std::string& parameter, double value) {
  SystemConfig out = system;
  if (parameter == "kinetic.coefficient") {
    out.kinetic.coefficient = value;
    return out;
  }
  if (parameter == "kinetic.exponent") {
    out.kinetic.exponent = value;
    return out;
  }
  if (parameter.rfind(kPotentialPrefix, 0) == 0) {
    const std::string rest = parameter.substr(kPotentialPrefix.size());
    const auto dot = rest.find('.');
    if (dot != std::string::npos) {
      const std::string name = rest.substr(0, dot);
      const std::string field = rest.substr(dot + 1);
      for (auto& p : out.potentials) {
        if (p.name != name) continue;
        double* slot = std::visit(Overloaded{
                                      [&](PowerParams& v) -> double* {
                                        if (field == "strength") return &v.strength;
                                        if (field == "exponent") return &v.exponent;
                                        return nullptr;
                                      },
                                      [&](ExponentialParams& v) -> double* {
                                        if (field == "strength") return &v.strength;
                                        if (field == "decay") return &v.decay;
                                        if (field == "power") return &v.power;
                                        return nullptr;
                                      },
                                      [&](WellParams& v) -> double* {
                                        if (field == "coupling") return &v.coupling;
                                        if (field == "range") return &v.range;
                                        return nullptr;
                                      },
                                  },
                                  p.law);
        if (slot) {
          *slot = value;
          return out;
        }
      }
    }
  }
  throw ValidationError("scan parameter '" + parameter + "' does not exist in the system definition");
}

}  // namespace envelope::cli
