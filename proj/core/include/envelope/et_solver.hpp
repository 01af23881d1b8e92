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

#include <cstddef>
#include <optional>
#include <vector>

#include "envelope/bound_character.hpp"
#include "envelope/model.hpp"

namespace envelope {

struct SolveOptions {
  std::size_t scan_points = 400;
  // Scan window is [window_lo, window_hi] * L, L from length_scale or estimated.
  double window_lo = 1e-8;
  double window_hi = 1e8;
  std::optional<double> length_scale;
  double relative_tolerance = 1e-12;
  int max_iterations = 200;
  ClassifierOptions classifier;
};

struct StationaryPoint {
  double r0 = 0.0;
  double energy = 0.0;
  bool local_minimum = false;
};

struct SolveDiagnostics {
  double scan_lo = 0.0;
  double scan_hi = 0.0;
  double bracket_lo = 0.0;
  double bracket_hi = 0.0;
  int iterations = 0;
  double residual = 0.0;
  // |residual| divided by the sum of magnitudes of its kinetic and potential parts.
  double relative_residual = 0.0;
};

struct EtSolution {
  double q = 0.0;
  double r0 = 0.0;
  double p0 = 0.0;
  double energy = 0.0;
  BoundCharacter character = BoundCharacter::Indeterminate;
  std::vector<StationaryPoint> stationary_points;
  SolveDiagnostics diagnostics;
};

// E(r0) = N T(Q/r0) + N U(r0/N) + sum_terms C(N,K) V(sqrt(C(K,2)/C(N,2)) r0).
double energy_at(const SystemSpec& spec, double q, double r0);

// N p0 T'(p0) - r0 U'(r0/N) - sum_terms C(N,K) c_K r0 V'(c_K r0), p0 = Q/r0.
// Equal to -r0 dE/dr0, so its zeros are the stationary points of energy_at and
// a +/- sign change (in increasing r0) is a local minimum.
double stationarity_residual(const SystemSpec& spec, double q, double r0);

// Residual divided by the sum of magnitudes of its terms.
double relative_stationarity_residual(const SystemSpec& spec, double q, double r0);

// Largest natural length among the potential terms.
double characteristic_length(const SystemSpec& spec, double q);

// Locates every stationary point inside the scan window and reports the
// lowest local minimum of E(r0). Throws NoStationaryPoint or NonConvergence.
EtSolution solve(const SystemSpec& spec, double q, const SolveOptions& options = {});
EtSolution solve(const SystemSpec& spec, const QuantumState& state, const SolveOptions& options = {});

}  // namespace envelope
