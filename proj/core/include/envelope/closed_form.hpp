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

#include <optional>

namespace envelope {

// -1/e, the branch point of the Lambert W function.
inline constexpr double kLambertBranchPoint = -0.36787944117144233;

// Principal branch W0 of the Lambert W function: the w >= -1 with w e^w = x.
// Throws DomainError for x < -1/e.
double lambert_w0(double x);

// Parameters shared by the analytic power-law and exponential solutions:
// N particles with T(p) = kinetic_coefficient p^kinetic_exponent and a single
// K-body potential.
struct AnalyticSystem {
  int n_particles = 2;
  int k_body = 2;
  double kinetic_coefficient = 0.5;
  double kinetic_exponent = 2.0;
};

// Stationary r0 and energy for V(x) = a sgn(b) x^b. Requires a > 0 and
// b > -alpha, b != 0; b <= -alpha throws UnsupportedError, b == 0 DomainError.
double power_law_r0(const AnalyticSystem& system, double strength, double exponent, double q);
double power_law_energy(const AnalyticSystem& system, double strength, double exponent, double q);

struct ExponentialSolution {
  double delta = 0.0;
  double w = 0.0;
  double r0 = 0.0;
  double energy = 0.0;
  // delta fell within the tolerance band of -1/e and was clamped to it.
  bool marginal = false;
  // energy < 0
  bool bound = false;
};

// Solution for V(x) = -a exp(-b x^gamma) on the W0 branch. Returns nullopt
// when delta < -1/e: no stationary point exists and hence no bound state.
std::optional<ExponentialSolution> exponential_solution(const AnalyticSystem& system, double strength,
                                                        double decay, double power, double q);

// Argument of W0 in the exponential solution.
double exponential_delta(const AnalyticSystem& system, double strength, double decay, double power, double q);

// Convenience wrapper: the energy, or nullopt when no bound state exists.
std::optional<double> exponential_energy(const AnalyticSystem& system, double strength, double decay,
                                         double power, double q);

}  // namespace envelope
