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

#include <vector>

#include <Eigen/Dense>

#include "envelope/laws.hpp"
#include "envelope/model.hpp"

namespace envelope {

// N particles at the vertices of a regular simplex in N-1 dimensions,
// centred on the origin, with circumradius r0 / N. Row i holds vertex i.
struct SimplexConfig {
  int n_particles = 0;
  double r0 = 0.0;
  Eigen::MatrixXd vertices;

  double edge() const;
  double circumradius() const { return r0 / n_particles; }
};

// Built from the Helmert basis of the hyperplane sum(x) = 0, so the
// orientation is fixed.
SimplexConfig build_simplex(int n_particles, double r0);

// sqrt(C(K,2) / C(N,2)) r0, the radius of every K-subset of the simplex.
double subset_radius(int n_particles, int k_body, double r0);

// N / (2 sqrt(C(N,2))): cosine of the angle between an edge leaving a vertex
// and the inward radial direction at that vertex.
double projection_cosine(int n_particles);

// Inward radial force on one particle from one K-body term:
// C(N,K) c V'(c r0) with c = sqrt(C(K,2)/C(N,2)). One entry per many-body term.
std::vector<double> total_radial_force(const SystemSpec& spec, double r0);
double total_radial_force(int n_particles, int k_body, const PotentialLaw& law, double r0);

// Brute-force counterparts computed from explicit coordinates.
double subset_radius_from_coordinates(const SimplexConfig& simplex, const std::vector<int>& subset);
double projection_cosine_from_coordinates(const SimplexConfig& simplex, int i, int j);

struct VertexForce {
  double radial_inward = 0.0;
  double tangential_norm = 0.0;
  int subsets = 0;
};

// Sums the forces -grad_i V(r_S) over every K-subset S containing vertex i.
// Enumeration is limited to N <= 12.
VertexForce vertex_force_from_coordinates(const SimplexConfig& simplex, int k_body, const PotentialLaw& law, int i);

inline constexpr int kMaxEnumeratedParticles = 12;

// Analytic vs coordinate comparison for one (N, K) pair.
struct SimplexCheck {
  int n_particles = 0;
  int k_body = 0;
  double r0 = 0.0;
  double edge = 0.0;
  double max_edge_deviation = 0.0;
  double circumradius_deviation = 0.0;
  double subset_radius = 0.0;
  double max_subset_radius_deviation = 0.0;
  double projection_cosine = 0.0;
  double max_projection_cosine_deviation = 0.0;
  double radial_force = 0.0;
  double max_radial_force_deviation = 0.0;
  double max_tangential_force = 0.0;

  // Largest deviation, each measured relative to its own reference value
  // (edge, circumradius, subset radius, 1 for the cosine, |radial_force|).
  double worst_relative() const;
};

SimplexCheck check_simplex(int n_particles, int k_body, const PotentialLaw& law, double r0);

}  // namespace envelope
