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

#include "envelope/simplex.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <string>

#include "envelope/errors.hpp"

namespace envelope {
namespace {

void require_particles(int n) {
  if (n < 2) throw DomainError("simplex: N must be >= 2");
}

}  // namespace

double SimplexConfig::edge() const { return r0 / std::sqrt(binomial_real(n_particles, 2)); }

SimplexConfig build_simplex(int n_particles, double r0) {
  require_particles(n_particles);
  if (!(r0 > 0.0)) throw DomainError("simplex: r0 must be positive");
  const int n = n_particles;
  Eigen::MatrixXd v = Eigen::MatrixXd::Zero(n, n - 1);
  for (int k = 1; k < n; ++k) {
    const double norm = 1.0 / std::sqrt(static_cast<double>(k) * (k + 1));
    for (int i = 0; i < k; ++i) v(i, k - 1) = norm;
    v(k, k - 1) = -k * norm;
  }
  // Each Helmert vertex sits at distance sqrt((N-1)/N) from the centroid.
  v *= (r0 / n) / std::sqrt(static_cast<double>(n - 1) / n);
  return SimplexConfig{n, r0, std::move(v)};
}

double subset_radius(int n_particles, int k_body, double r0) {
  if (k_body < 2 || k_body > n_particles) throw DomainError("subset_radius: requires 2 <= K <= N");
  return subset_radius_ratio(n_particles, k_body) * r0;
}

double projection_cosine(int n_particles) {
  require_particles(n_particles);
  return n_particles / (2.0 * std::sqrt(binomial_real(n_particles, 2)));
}

double total_radial_force(int n_particles, int k_body, const PotentialLaw& law, double r0) {
  const double c = subset_radius_ratio(n_particles, k_body);
  return binomial_real(n_particles, k_body) * c * derivative(law, c * r0);
}

std::vector<double> total_radial_force(const SystemSpec& spec, double r0) {
  std::vector<double> forces;
  forces.reserve(spec.many_body().size());
  for (const auto& term : spec.many_body()) {
    forces.push_back(total_radial_force(spec.n_particles(), term.k_body, term.law, r0));
  }
  return forces;
}

double subset_radius_from_coordinates(const SimplexConfig& simplex, const std::vector<int>& subset) {
  double sum = 0.0;
  for (std::size_t a = 0; a < subset.size(); ++a) {
    for (std::size_t b = a + 1; b < subset.size(); ++b) {
      sum += (simplex.vertices.row(subset[a]) - simplex.vertices.row(subset[b])).squaredNorm();
    }
  }
  return std::sqrt(sum);
}

double projection_cosine_from_coordinates(const SimplexConfig& simplex, int i, int j) {
  const Eigen::VectorXd edge = simplex.vertices.row(j) - simplex.vertices.row(i);
  const Eigen::VectorXd inward = -simplex.vertices.row(i).transpose().normalized();
  return edge.dot(inward) / edge.norm();
}

VertexForce vertex_force_from_coordinates(const SimplexConfig& simplex, int k_body, const PotentialLaw& law, int i) {
  const int n = simplex.n_particles;
  if (n > kMaxEnumeratedParticles) {
    throw DomainError("subset enumeration is limited to N <= " + std::to_string(kMaxEnumeratedParticles));
  }
  if (k_body < 2 || k_body > n) throw DomainError("vertex_force: requires 2 <= K <= N");
  const Eigen::VectorXd ri = simplex.vertices.row(i).transpose();
  Eigen::VectorXd force = Eigen::VectorXd::Zero(simplex.vertices.cols());
  VertexForce out;
  std::vector<int> subset;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    if (std::popcount(mask) != k_body || !(mask & (1u << i))) continue;
    subset.clear();
    for (int j = 0; j < n; ++j) {
      if (mask & (1u << j)) subset.push_back(j);
    }
    const double r = subset_radius_from_coordinates(simplex, subset);
    Eigen::VectorXd grad = Eigen::VectorXd::Zero(ri.size());
    for (int j : subset) {
      if (j != i) grad += ri - simplex.vertices.row(j).transpose();
    }
    force -= derivative(law, r) * grad / r;
    ++out.subsets;
  }
  const Eigen::VectorXd outward = ri.normalized();
  const double radial_outward = force.dot(outward);
  out.radial_inward = -radial_outward;
  out.tangential_norm = (force - radial_outward * outward).norm();
  return out;
}

double SimplexCheck::worst_relative() const {
  const double force_scale = std::max(std::abs(radial_force), std::numeric_limits<double>::min());
  return std::max({max_edge_deviation / edge, circumradius_deviation / (r0 / n_particles),
                   max_subset_radius_deviation / subset_radius, max_projection_cosine_deviation,
                   max_radial_force_deviation / force_scale, max_tangential_force / force_scale});
}

SimplexCheck check_simplex(int n_particles, int k_body, const PotentialLaw& law, double r0) {
  const SimplexConfig simplex = build_simplex(n_particles, r0);
  const int n = n_particles;
  SimplexCheck c;
  c.n_particles = n;
  c.k_body = k_body;
  c.r0 = r0;
  c.edge = simplex.edge();
  c.subset_radius = subset_radius(n, k_body, r0);
  c.projection_cosine = projection_cosine(n);
  c.radial_force = total_radial_force(n, k_body, law, r0);

  for (int i = 0; i < n; ++i) {
    c.circumradius_deviation =
        std::max(c.circumradius_deviation, std::abs(simplex.vertices.row(i).norm() - simplex.circumradius()));
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      c.max_edge_deviation =
          std::max(c.max_edge_deviation, std::abs((simplex.vertices.row(i) - simplex.vertices.row(j)).norm() - c.edge));
      c.max_projection_cosine_deviation = std::max(
          c.max_projection_cosine_deviation,
          std::abs(projection_cosine_from_coordinates(simplex, i, j) - c.projection_cosine));
    }
  }
  if (n <= kMaxEnumeratedParticles) {
    std::vector<int> subset;
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
      if (std::popcount(mask) != k_body) continue;
      subset.clear();
      for (int j = 0; j < n; ++j) {
        if (mask & (1u << j)) subset.push_back(j);
      }
      c.max_subset_radius_deviation = std::max(
          c.max_subset_radius_deviation, std::abs(subset_radius_from_coordinates(simplex, subset) - c.subset_radius));
    }
    for (int i = 0; i < n; ++i) {
      const VertexForce f = vertex_force_from_coordinates(simplex, k_body, law, i);
      c.max_radial_force_deviation = std::max(c.max_radial_force_deviation, std::abs(f.radial_inward - c.radial_force));
      c.max_tangential_force = std::max(c.max_tangential_force, f.tangential_norm);
    }
  }
  return c;
}

}  // namespace envelope
