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

#include "envelope/bound_character.hpp"

namespace envelope {

BoundCharacter combine(const std::vector<Curvature>& curvatures) {
  bool any_concave = false;
  bool any_convex = false;
  for (Curvature c : curvatures) {
    switch (c) {
      case Curvature::Affine:
        break;
      case Curvature::Concave:
        any_concave = true;
        break;
      case Curvature::Convex:
        any_convex = true;
        break;
      case Curvature::Mixed:
        return BoundCharacter::Indeterminate;
    }
  }
  if (any_concave && any_convex) return BoundCharacter::Indeterminate;
  if (any_concave) return BoundCharacter::UpperBound;
  if (any_convex) return BoundCharacter::LowerBound;
  return BoundCharacter::Exact;
}

BoundCharacter classify_bound_character(const SystemSpec& spec, const ClassifierOptions& options) {
  std::vector<Curvature> curvatures;
  curvatures.push_back(curvature(spec.kinetic(), options));
  if (spec.one_body()) curvatures.push_back(curvature(*spec.one_body(), options));
  for (const auto& term : spec.many_body()) curvatures.push_back(curvature(term.law, options));
  return combine(curvatures);
}

std::string to_string(BoundCharacter c) {
  switch (c) {
    case BoundCharacter::UpperBound:
      return "upper";
    case BoundCharacter::LowerBound:
      return "lower";
    case BoundCharacter::Exact:
      return "exact";
    case BoundCharacter::Indeterminate:
      return "indeterminate";
  }
  return "indeterminate";
}

}  // namespace envelope
