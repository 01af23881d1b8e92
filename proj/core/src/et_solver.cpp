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

#include "envelope/et_solver.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "envelope/errors.hpp"
#include "envelope/roots.hpp"

namespace envelope {
namespace {

void require_positive(double q, double r0) {
  if (!(q > 0.0)) throw DomainError("Q must be positive");
  if (!(r0 > 0.0)) throw DomainError("r0 must be positive");
}

struct ResidualParts {
  double kinetic = 0.0;
  double potential = 0.0;
  double magnitude = 0.0;
};

ResidualParts residual_parts(const SystemSpec& spec, double q, double r0) {
  require_positive(q, r0);
  const int n = spec.n_particles();
  const double p0 = q / r0;
  ResidualParts parts;
  parts.kinetic = n * p0 * derivative(spec.kinetic(), p0);
  parts.magnitude = std::abs(parts.kinetic);
  if (spec.one_body()) {
    const double t = r0 * derivative(*spec.one_body(), r0 / n);
    parts.potential += t;
    parts.magnitude += std::abs(t);
  }
  for (const auto& term : spec.many_body()) {
    const double c = subset_radius_ratio(n, term.k_body);
    const double t = binomial_real(n, term.k_body) * c * r0 * derivative(term.law, c * r0);
    parts.potential += t;
    parts.magnitude += std::abs(t);
  }
  return parts;
}

}  // namespace

double energy_at(const SystemSpec& spec, double q, double r0) {
  require_positive(q, r0);
  const int n = spec.n_particles();
  double e = n * evaluate(spec.kinetic(), q / r0);
  if (spec.one_body()) e += n * evaluate(*spec.one_body(), r0 / n);
  for (const auto& term : spec.many_body()) {
    const double c = subset_radius_ratio(n, term.k_body);
    e += binomial_real(n, term.k_body) * evaluate(term.law, c * r0);
  }
  return e;
}

double stationarity_residual(const SystemSpec& spec, double q, double r0) {
  const ResidualParts parts = residual_parts(spec, q, r0);
  return parts.kinetic - parts.potential;
}

double relative_stationarity_residual(const SystemSpec& spec, double q, double r0) {
  const ResidualParts parts = residual_parts(spec, q, r0);
  if (parts.magnitude == 0.0) return 0.0;
  return std::abs(parts.kinetic - parts.potential) / parts.magnitude;
}

namespace {

// r0 at which the kinetic and one power-law term balance on their own:
// N alpha D Q^alpha r^-alpha = weight |b| a (scale r)^b.
std::optional<double> power_balance(const KineticLaw& kinetic, const PotentialLaw& law, int n, double weight,
                                    double scale, double q) {
  const auto* t = std::get_if<PowerKinetic>(&kinetic);
  const auto* v = std::get_if<PowerLaw>(&law);
  if (!t || !v || !(t->exponent + v->exponent > 0.0)) return std::nullopt;
  const double log_r = (std::log(n * t->exponent * t->coefficient / (weight * std::abs(v->exponent) * v->strength)) +
                        t->exponent * std::log(q) - v->exponent * std::log(scale)) /
                       (t->exponent + v->exponent);
  return std::exp(log_r);
}

}  // namespace

double characteristic_length(const SystemSpec& spec, double q) {
  const int n = spec.n_particles();
  double length = 0.0;
  if (spec.one_body()) {
    const auto balance = power_balance(spec.kinetic(), *spec.one_body(), n, 1.0, 1.0 / n, q);
    // U acts on r0/N, so its natural r0 scale is N times its own length.
    length = std::max(length, balance.value_or(n * characteristic_length(*spec.one_body(), spec.kinetic(), q)));
  }
  for (const auto& term : spec.many_body()) {
    const double c = subset_radius_ratio(n, term.k_body);
    const auto balance = power_balance(spec.kinetic(), term.law, n, binomial_real(n, term.k_body) * c, c, q);
    length = std::max(length, balance.value_or(characteristic_length(term.law, spec.kinetic(), q) / c));
  }
  if (!std::isfinite(length) || !(length > 0.0)) length = 1.0;
  return length;
}

EtSolution solve(const SystemSpec& spec, double q, const SolveOptions& options) {
  if (!(q > 0.0)) throw DomainError("solve: Q must be positive");
  const double scale = options.length_scale.value_or(characteristic_length(spec, q));
  const double lo = options.window_lo * scale;
  const double hi = options.window_hi * scale;

  const RealFunction residual = [&](double r0) { return stationarity_residual(spec, q, r0); };
  const std::vector<SignChange> changes = scan_sign_changes(residual, lo, hi, options.scan_points);
  if (changes.empty()) {
    throw NoStationaryPoint("no sign change of the stationarity residual in [" + std::to_string(lo) + ", " +
                                std::to_string(hi) + "]",
                            lo, hi);
  }

  EtSolution solution;
  solution.q = q;
  solution.diagnostics.scan_lo = lo;
  solution.diagnostics.scan_hi = hi;
  std::optional<std::size_t> best;
  std::vector<RootResult> roots;
  for (const SignChange& change : changes) {
    const RootResult root = refine_root(residual, change, options.relative_tolerance, options.max_iterations);
    StationaryPoint point;
    point.r0 = root.root;
    point.energy = energy_at(spec, q, root.root);
    // dE/dr0 = -residual / r0: residual going from + to - is a minimum of E.
    point.local_minimum = change.sign_lo > 0 && change.sign_hi < 0;
    solution.stationary_points.push_back(point);
    roots.push_back(root);
    if (point.local_minimum &&
        (!best || point.energy < solution.stationary_points[*best].energy)) {
      best = solution.stationary_points.size() - 1;
    }
  }
  if (!best) {
    throw NoStationaryPoint("stationary points found but none is a local minimum of E(r0)", lo, hi);
  }

  const StationaryPoint& chosen = solution.stationary_points[*best];
  solution.r0 = chosen.r0;
  solution.p0 = q / chosen.r0;
  solution.energy = chosen.energy;
  solution.character = classify_bound_character(spec, options.classifier);
  solution.diagnostics.bracket_lo = roots[*best].lo;
  solution.diagnostics.bracket_hi = roots[*best].hi;
  solution.diagnostics.iterations = roots[*best].iterations;
  solution.diagnostics.residual = stationarity_residual(spec, q, chosen.r0);
  solution.diagnostics.relative_residual = relative_stationarity_residual(spec, q, chosen.r0);
  return solution;
}

EtSolution solve(const SystemSpec& spec, const QuantumState& state, const SolveOptions& options) {
  if (state.modes().size() != static_cast<std::size_t>(spec.n_particles() - 1)) {
    throw InvalidSystem("quantum state must have N-1 = " + std::to_string(spec.n_particles() - 1) + " modes");
  }
  if (state.dimension() != spec.dimension()) {
    throw InvalidSystem("quantum state dimension does not match the system");
  }
  return solve(spec, global_quantum_number(state), options);
}

}  // namespace envelope
