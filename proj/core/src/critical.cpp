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

#include "envelope/critical.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "envelope/errors.hpp"
#include "envelope/model.hpp"
#include "envelope/roots.hpp"

namespace envelope {

ShapeRoots shape_roots(const WellShape& shape, double alpha, const ShapeRootOptions& options) {
  if (!(alpha > 0.0)) throw DomainError("shape_root: alpha must be positive");
  if (!shape.value || !shape.derivative) throw DomainError("shape_root: shape needs value and derivative");

  const double lo = options.window_lo * shape.range;
  const double hi = options.window_hi * shape.range;
  // x v' + alpha v, with underflowed tails (v == 0, v' == 0) mapped to NaN so
  // that they do not count as roots.
  const RealFunction equation = [&](double x) {
    const double v = shape.value(x);
    const double dv = shape.derivative(x);
    if (v == 0.0 && dv == 0.0) return std::numeric_limits<double>::quiet_NaN();
    return x * dv + alpha * v;
  };

  ShapeRoots out;
  for (double x : log_grid(lo, hi, options.scan_points)) {
    const double v = shape.value(x);
    if (std::isfinite(v) && v < 0.0) out.globally_positive = false;
  }

  for (const SignChange& change : scan_sign_changes(equation, lo, hi, options.scan_points)) {
    out.roots.push_back(refine_root(equation, change, options.relative_tolerance, options.max_iterations).root);
  }
  if (out.roots.empty()) {
    throw NoCriticalPoint("x v'(x) + alpha v(x) has no root in the scan window for shape '" + shape.name + "'");
  }
  double best_value = -std::numeric_limits<double>::infinity();
  for (double x : out.roots) {
    const double value = std::pow(x, alpha) * shape.value(x);
    if (value > best_value) {
      best_value = value;
      out.selected = x;
    }
  }
  return out;
}

double shape_root(const WellShape& shape, double alpha, const ShapeRootOptions& options) {
  return shape_roots(shape, alpha, options).selected;
}

CriticalResult critical_coupling(int n_particles, int k_body, double kinetic_coefficient, double kinetic_exponent,
                                 const WellShape& shape, double q, const ShapeRootOptions& options) {
  if (k_body < 2 || k_body > n_particles) throw DomainError("critical_coupling: requires 2 <= K <= N");
  if (!(kinetic_coefficient > 0.0)) throw DomainError("critical_coupling: kinetic coefficient must be positive");
  if (!(q > 0.0)) throw DomainError("critical_coupling: Q must be positive");

  const double alpha = kinetic_exponent;
  const ShapeRoots roots = shape_roots(shape, alpha, options);
  CriticalResult result;
  result.x0 = roots.selected;
  result.q = q;
  result.candidates = roots.roots;
  result.multiple_critical_points = roots.roots.size() > 1;
  result.globally_positive = roots.globally_positive;

  const double c_nk = binomial_real(n_particles, k_body);
  const double ratio = binomial_real(k_body, 2) / binomial_real(n_particles, 2);
  result.g_c = 1.0 / (std::pow(result.x0, alpha) * shape.value(result.x0)) * (n_particles / c_nk) *
               std::pow(ratio, 0.5 * alpha) * kinetic_coefficient * std::pow(q, alpha);

  // The character does not depend on the coupling strength.
  const SystemSpec spec(n_particles, 1, PowerKinetic{kinetic_coefficient, kinetic_exponent}, std::nullopt,
                        {ManyBodyTerm{k_body, AttractiveWell{1.0, shape}}});
  result.character = classify_bound_character(spec);
  return result;
}

}  // namespace envelope
