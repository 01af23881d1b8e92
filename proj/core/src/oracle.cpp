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

#include "envelope/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "envelope/errors.hpp"
#include "envelope/model.hpp"

namespace envelope {
namespace {

constexpr double kRescale = 1e150;

// Logarithmic grid with the potential pre-sampled; x_i = x0 + i h.
struct LogGrid {
  double x0 = 0.0;
  double h = 0.0;
  std::vector<double> r2;  // r^2 = exp(2 x)
  std::vector<double> potential;
};

LogGrid make_grid(const RadialProblem& p, int subdivisions) {
  if (!(p.r_min > 0.0) || !(p.r_max > p.r_min)) throw DomainError("radial problem: need 0 < r_min < r_max");
  if (!(p.log_step > 0.0)) throw DomainError("radial problem: log_step must be positive");
  const double x0 = std::log(p.r_min);
  const double x1 = std::log(p.r_max);
  const auto base = static_cast<std::size_t>(std::ceil((x1 - x0) / p.log_step));
  const std::size_t intervals = base * static_cast<std::size_t>(subdivisions);
  LogGrid g;
  g.x0 = x0;
  g.h = (x1 - x0) / static_cast<double>(intervals);
  g.r2.resize(intervals + 1);
  g.potential.resize(intervals + 1);
  for (std::size_t i = 0; i <= intervals; ++i) {
    const double r = std::exp(x0 + g.h * static_cast<double>(i));
    g.r2[i] = r * r;
    g.potential[i] = evaluate(p.potential, r);
  }
  return g;
}

// Number of nodes of u(r) for energy e. Integration stops once the solution
// is deep in the final classically forbidden region; a solution still heading
// towards zero there is counted as crossing it.
int count_nodes(const LogGrid& g, double two_m, int l, double e) {
  const double centrifugal = (l + 0.5) * (l + 0.5);
  const std::size_t n = g.r2.size();
  const double h2 = g.h * g.h;
  std::vector<double> f(n);
  std::size_t last_allowed = 0;
  bool any_allowed = false;
  for (std::size_t i = 0; i < n; ++i) {
    f[i] = g.r2[i] * two_m * (g.potential[i] - e) + centrifugal;
    if (f[i] <= 0.0) {
      last_allowed = i;
      any_allowed = true;
    }
  }
  if (!any_allowed) return 0;
  std::size_t stop = n - 1;
  for (std::size_t i = last_allowed + 1; i < n; ++i) {
    if (h2 * f[i] > 1.0) {
      stop = i;
      break;
    }
  }

  double prev = 1.0;
  double curr = std::exp((l + 0.5) * g.h);
  int nodes = 0;
  for (std::size_t i = 1; i < stop; ++i) {
    const double w_prev = (1.0 - h2 * f[i - 1] / 12.0) * prev;
    const double w_curr = (1.0 - h2 * f[i] / 12.0) * curr;
    const double w_next = 2.0 * w_curr - w_prev + h2 * f[i] * curr;
    const double next = w_next / (1.0 - h2 * f[i + 1] / 12.0);
    if ((curr > 0.0 && next <= 0.0) || (curr < 0.0 && next >= 0.0)) ++nodes;
    prev = curr;
    curr = next;
    if (std::abs(curr) > kRescale) {
      prev /= kRescale;
      curr /= kRescale;
    }
  }
  if (curr != 0.0 && prev * curr > 0.0 && std::abs(curr) < std::abs(prev)) ++nodes;
  return nodes;
}

double eigenvalue_on_grid(const RadialProblem& p, const LogGrid& g, int node_count) {
  const double two_m = 2.0 * p.reduced_mass;
  const int l = p.angular_momentum;
  double lo = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < g.r2.size(); ++i) {
    lo = std::min(lo, g.potential[i] + l * (l + 1) / (two_m * g.r2[i]));
  }
  lo -= 1e-12 * (1.0 + std::abs(lo));
  const double hi_cap = g.potential.back();
  if (count_nodes(g, two_m, l, hi_cap) <= node_count) {
    throw NoBoundState("no eigenvalue with " + std::to_string(node_count) + " nodes below V(r_max) = " +
                       std::to_string(hi_cap));
  }
  double hi = hi_cap;
  for (int it = 0; it < 300; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    if (count_nodes(g, two_m, l, mid) > node_count) {
      hi = mid;
    } else {
      lo = mid;
    }
    if (hi - lo <= 2.0 * std::numeric_limits<double>::epsilon() * std::max(std::abs(lo), std::abs(hi))) break;
  }
  return 0.5 * (lo + hi);
}

// Zero-energy node count for the well -g v(r), including a node beyond r_max
// when the growing asymptotic component has the opposite sign.
int zero_energy_nodes(const LogGrid& shape_grid, double two_m, int l, double g) {
  const double k = l + 0.5;
  const double centrifugal = k * k;
  const double h2 = shape_grid.h * shape_grid.h;
  const std::size_t n = shape_grid.r2.size();
  auto f = [&](std::size_t i) { return shape_grid.r2[i] * two_m * (-g * shape_grid.potential[i]) + centrifugal; };

  double prev = 1.0;
  double curr = std::exp(k * shape_grid.h);
  int nodes = 0;
  for (std::size_t i = 1; i + 1 < n; ++i) {
    const double w_prev = (1.0 - h2 * f(i - 1) / 12.0) * prev;
    const double w_curr = (1.0 - h2 * f(i) / 12.0) * curr;
    const double w_next = 2.0 * w_curr - w_prev + h2 * f(i) * curr;
    const double next = w_next / (1.0 - h2 * f(i + 1) / 12.0);
    if ((curr > 0.0 && next <= 0.0) || (curr < 0.0 && next >= 0.0)) ++nodes;
    prev = curr;
    curr = next;
    if (std::abs(curr) > kRescale) {
      prev /= kRescale;
      curr /= kRescale;
    }
  }
  // phi ~ P e^{k (x - x_end)} + R e^{-k (x - x_end)} beyond the well.
  const double ekh = std::exp(k * shape_grid.h);
  const double growing = (curr * ekh - prev) / (ekh - 1.0 / ekh);
  if (growing * curr < 0.0) ++nodes;
  return nodes;
}

double critical_on_grid(const LogGrid& grid, double two_m, int l, int node_count) {
  double lo = 0.0;
  double hi = 1.0;
  int expansions = 0;
  while (zero_energy_nodes(grid, two_m, l, hi) <= node_count) {
    lo = hi;
    hi *= 2.0;
    if (++expansions > 200) throw NoBoundState("critical coupling: no binding found for any coupling");
  }
  for (int it = 0; it < 300; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    if (zero_energy_nodes(grid, two_m, l, mid) > node_count) {
      hi = mid;
    } else {
      lo = mid;
    }
    if (hi - lo <= 4.0 * std::numeric_limits<double>::epsilon() * hi) break;
  }
  return 0.5 * (lo + hi);
}

}  // namespace

double ho_exact_energy(int n_particles, int k_body, double mu, double nu, double rho, double q) {
  if (k_body < 2 || k_body > n_particles) throw DomainError("ho_exact_energy: requires 2 <= K <= N");
  if (!(mu > 0.0)) throw DomainError("ho_exact_energy: mass must be positive");
  const double radicand = nu + n_particles * binomial_real(n_particles - 2, k_body - 2) * rho;
  if (!(radicand > 0.0)) throw DomainError("ho_exact_energy: nu + N C(N-2,K-2) rho must be positive");
  return q * std::sqrt(2.0 / mu * radicand);
}

RadialSolution solve_two_body(const RadialProblem& problem, int node_count) {
  if (node_count < 0) throw DomainError("solve_two_body: node count must be >= 0");
  if (problem.angular_momentum < 0) throw DomainError("solve_two_body: l must be >= 0");
  if (!(problem.reduced_mass > 0.0)) throw DomainError("solve_two_body: reduced mass must be positive");
  validate(problem.potential);
  const double coarse = eigenvalue_on_grid(problem, make_grid(problem, 1), node_count);
  const double fine = eigenvalue_on_grid(problem, make_grid(problem, 2), node_count);
  return {fine + (fine - coarse) / 15.0, std::abs(fine - coarse) / 15.0};
}

double two_body_critical_coupling(double reduced_mass, const WellShape& shape, int angular_momentum, int node_count,
                                  double r_max) {
  if (!(reduced_mass > 0.0)) throw DomainError("critical coupling: reduced mass must be positive");
  if (angular_momentum < 0 || node_count < 0) throw DomainError("critical coupling: l and nodes must be >= 0");
  RadialProblem p;
  p.reduced_mass = reduced_mass;
  p.potential = AttractiveWell{1.0, shape};
  p.angular_momentum = angular_momentum;
  p.r_min = 1e-7 * shape.range;
  p.r_max = r_max > 0.0 ? r_max : 200.0 * shape.range;
  p.log_step = 1e-3;
  const double two_m = 2.0 * reduced_mass;
  // potential on the grid holds -v(r); zero_energy_nodes expects +v.
  LogGrid coarse = make_grid(p, 1);
  LogGrid fine = make_grid(p, 2);
  for (double& v : coarse.potential) v = -v;
  for (double& v : fine.potential) v = -v;
  const double g1 = critical_on_grid(coarse, two_m, angular_momentum, node_count);
  const double g2 = critical_on_grid(fine, two_m, angular_momentum, node_count);
  return g2 + (g2 - g1) / 15.0;
}

}  // namespace envelope
