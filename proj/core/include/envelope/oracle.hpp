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

#include "envelope/laws.hpp"

namespace envelope {

// Exact eigenvalue of N identical harmonic oscillators
//   H = sum p_i^2 / (2 mu) + nu sum s_i^2 + rho sum_{K-sets} r_{K-set}^2
// E = Q sqrt(2 (nu + N C(N-2,K-2) rho) / mu). Throws DomainError when the
// radicand is not positive.
double ho_exact_energy(int n_particles, int k_body, double mu, double nu, double rho, double q);

// Reduced two-body radial problem in three dimensions:
//   -u'' / (2 m) + [V(r) + l(l+1) / (2 m r^2)] u = E u,  u(0) = 0.
// It is integrated with Numerov's method on a logarithmic grid r = exp(x)
// after the substitution u = sqrt(r) phi, which removes the first-derivative
// term and regularises the Coulomb and centrifugal singularities.
struct RadialProblem {
  double reduced_mass = 0.5;
  PotentialLaw potential;
  int angular_momentum = 0;
  double r_min = 1e-7;
  double r_max = 1e3;
  // Step in x = ln r. Richardson extrapolation combines h and h/2.
  double log_step = 2e-3;
};

struct RadialSolution {
  double energy = 0.0;
  // |E(h/2) - E(h)| / 15, the Richardson estimate of the remaining error.
  double error_estimate = 0.0;
};

// Eigenvalue with `node_count` radial nodes, found by bisection on the
// number of nodes of the outward solution. Throws NoBoundState when no such
// eigenvalue lies below the value of the potential at r_max.
RadialSolution solve_two_body(const RadialProblem& problem, int node_count);

// Smallest coupling g for which -g v(r) binds a state with `node_count`
// nodes and angular momentum l: bisection on g of the zero-energy node count
// (including the node at infinity inferred from the asymptotic form).
double two_body_critical_coupling(double reduced_mass, const WellShape& shape, int angular_momentum,
                                  int node_count, double r_max = 0.0);

}  // namespace envelope
