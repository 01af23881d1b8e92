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

#include <string>

#include "envelope/laws.hpp"
#include "envelope/model.hpp"

namespace envelope {

// Variational status of an envelope-theory eigenvalue, decided by the
// comparison theorem from the curvature of every squared-argument form.
enum class BoundCharacter { UpperBound, LowerBound, Exact, Indeterminate };

// Combines per-law curvatures: affine laws are neutral, all remaining laws
// concave gives an upper bound, all convex a lower bound.
BoundCharacter combine(const std::vector<Curvature>& curvatures);

BoundCharacter classify_bound_character(const SystemSpec& spec, const ClassifierOptions& options = {});

// Exact counts as both an upper and a lower bound.
inline bool is_upper_bound(BoundCharacter c) {
  return c == BoundCharacter::UpperBound || c == BoundCharacter::Exact;
}
inline bool is_lower_bound(BoundCharacter c) {
  return c == BoundCharacter::LowerBound || c == BoundCharacter::Exact;
}

std::string to_string(BoundCharacter c);

}  // namespace envelope
