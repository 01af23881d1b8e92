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

#include "envelope/bound_character.hpp"
#include "envelope/laws.hpp"

namespace envelope {

struct ShapeRootOptions {
  double window_lo = 1e-8;
  double window_hi = 1e8;
  std::size_t scan_points = 400;
  double relative_tolerance = 1e-13;
  int max_iterations = 200;
};

struct ShapeRoots {
  // All roots of x v'(x) + alpha v(x) = 0 found in the window, increasing.
  std::vector<double> roots;
  // Root maximising x^alpha v(x), i.e. giving the smallest critical coupling.
  double selected = 0.0;
  // Sampled v stayed nonnegative over the scan window.
  bool globally_positive = true;
};

// Throws NoCriticalPoint when the shape equation has no root in the window.
ShapeRoots shape_roots(const WellShape& shape, double alpha, const ShapeRootOptions& options = {});
double shape_root(const WellShape& shape, double alpha, const ShapeRootOptions& options = {});

struct CriticalResult {
  double x0 = 0.0;
  double g_c = 0.0;
  double q = 0.0;
  BoundCharacter character = BoundCharacter::Indeterminate;
  // More than one root of the shape equation was found; x0 is the one with
  // the smallest g_c and `candidates` lists them all.
  bool multiple_critical_points = false;
  std::vector<double> candidates;
  bool globally_positive = true;
};

// Critical coupling of a K-body well -g v(r) for N particles with
// T(p) = kinetic_coefficient p^kinetic_exponent in the state of global quantum number Q.
CriticalResult critical_coupling(int n_particles, int k_body, double kinetic_coefficient, double kinetic_exponent,
                                 const WellShape& shape, double q, const ShapeRootOptions& options = {});

}  // namespace envelope
