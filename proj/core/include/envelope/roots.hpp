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
#include <vector>

#include "envelope/laws.hpp"

namespace envelope {

// Interval [lo, hi] over which a function changes sign from sign_lo to
// sign_hi. lo == hi marks a zero hit exactly on a grid point.
struct SignChange {
  double lo = 0.0;
  double hi = 0.0;
  int sign_lo = 0;
  int sign_hi = 0;
};

struct RootResult {
  double root = 0.0;
  double lo = 0.0;
  double hi = 0.0;
  int iterations = 0;
};

// n points, geometrically spaced, first lo and last hi (both > 0).
std::vector<double> log_grid(double lo, double hi, std::size_t n);

// Samples f on a logarithmic grid and returns every sign change, in
// increasing order. Interior points where |f| has a local minimum without a
// sign change are probed with a bounded minimisation; a pair of close roots
// hidden between two grid points is reported as two sign changes.
std::vector<SignChange> scan_sign_changes(const RealFunction& f, double lo, double hi,
                                          std::size_t points);

// Refines a sign-changing bracket until (hi - lo) <= relative_tolerance * |root|.
// Throws NonConvergence if max_iterations is exhausted first.
RootResult refine_root(const RealFunction& f, const SignChange& bracket, double relative_tolerance,
                       int max_iterations);

}  // namespace envelope
