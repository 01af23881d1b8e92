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

#include <functional>
#include <string>
#include <variant>
#include <vector>

namespace envelope {

using RealFunction = std::function<double(double)>;

// T(p) = coefficient * p^exponent, coefficient > 0 and exponent > 0.
struct PowerKinetic {
  double coefficient = 0.5;
  double exponent = 2.0;
};

// User supplied kinetic energy. The squared-argument form b(y) with
// T(x) = b(x^2) and its second derivative are optional; they are needed only
// by the bound-character classifier.
struct CustomKinetic {
  RealFunction value;
  RealFunction derivative;
  RealFunction squared_form;
  RealFunction squared_form_second;
};

using KineticLaw = std::variant<PowerKinetic, CustomKinetic>;

// V(x) = strength * sgn(exponent) * x^exponent, strength > 0, exponent != 0.
struct PowerLaw {
  double strength = 1.0;
  double exponent = 2.0;
};

// V(x) = -strength * exp(-decay * x^power), all three parameters > 0.
struct Exponential {
  double strength = 1.0;
  double decay = 1.0;
  double power = 1.0;
};

// Dimensionless, globally positive profile v(x) that vanishes at infinity.
// The second derivative is optional; when absent it is replaced by a central
// difference of the first derivative.
struct WellShape {
  std::string name;
  double range = 1.0;
  RealFunction value;
  RealFunction derivative;
  RealFunction second_derivative;
};

// exp(-x / range)
WellShape exponential_shape(double range = 1.0);
// exp(-(x / range)^2)
WellShape gaussian_shape(double range = 1.0);
// exp(-x / range) / (x / range)
WellShape yukawa_shape(double range = 1.0);

// V(x) = -coupling * v(x).
struct AttractiveWell {
  double coupling = 1.0;
  WellShape shape;
};

struct CustomPotential {
  RealFunction value;
  RealFunction derivative;
  RealFunction squared_form;
  RealFunction squared_form_second;
};

using PotentialLaw = std::variant<PowerLaw, Exponential, AttractiveWell, CustomPotential>;

// Throws DomainError when a built-in law has parameters outside its range.
void validate(const KineticLaw& law);
void validate(const PotentialLaw& law);

// Evaluation at x > 0. Throws DomainError for x <= 0.
double evaluate(const KineticLaw& law, double p);
double derivative(const KineticLaw& law, double p);
double evaluate(const PotentialLaw& law, double x);
double derivative(const PotentialLaw& law, double x);

// Whether the potential tends to zero at large distance (so that a bound
// state must have negative energy). Confining laws return false; custom
// laws are assumed not to vanish.
bool vanishes_at_infinity(const PotentialLaw& law);

// Natural length of a potential, used to position numerical scan windows.
// `kinetic` and `q` enter only for power laws, where the balance between
// kinetic and potential energy sets the scale.
double characteristic_length(const PotentialLaw& law, const KineticLaw& kinetic, double q);

// b(y) with law(x) == b(x^2), and b''(y).
struct SquaredForm {
  RealFunction value;
  RealFunction second;
};

// Throws UnsupportedError for custom laws that do not supply their b-form.
SquaredForm squared_argument_form(const KineticLaw& law);
SquaredForm squared_argument_form(const PotentialLaw& law);

// Sign structure of b'' over y > 0.
enum class Curvature { Affine, Concave, Convex, Mixed };

struct ClassifierOptions {
  std::size_t grid_points = 200;
  double y_min = 1e-6;
  double y_max = 1e6;
  double relative_tolerance = 1e-12;
};

// Built-in power and exponential laws are decided analytically from their
// exponents; everything else by sampling b'' on a logarithmic grid.
Curvature curvature(const KineticLaw& law, const ClassifierOptions& options = {});
Curvature curvature(const PotentialLaw& law, const ClassifierOptions& options = {});

// Sampled decision for an arbitrary b''.
Curvature sampled_curvature(const RealFunction& second, const ClassifierOptions& options);

std::string to_string(Curvature c);

}  // namespace envelope
