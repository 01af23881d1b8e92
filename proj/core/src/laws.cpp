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

#include "envelope/laws.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "envelope/errors.hpp"

namespace envelope {
namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

void require_positive_argument(double x, const char* what) {
  if (!(x > 0.0)) {
    throw DomainError(std::string(what) + ": argument must be positive, got " + std::to_string(x));
  }
}

double sign(double v) { return v > 0.0 ? 1.0 : (v < 0.0 ? -1.0 : 0.0); }

double well_second_derivative(const WellShape& shape, double x) {
  if (shape.second_derivative) return shape.second_derivative(x);
  const double h = 1e-4 * x;
  return (shape.derivative(x + h) - shape.derivative(x - h)) / (2.0 * h);
}

}  // namespace

WellShape exponential_shape(double range) {
  if (!(range > 0.0)) throw DomainError("exponential_shape: range must be positive");
  WellShape s;
  s.name = "exponential";
  s.range = range;
  s.value = [range](double x) { return std::exp(-x / range); };
  s.derivative = [range](double x) { return -std::exp(-x / range) / range; };
  s.second_derivative = [range](double x) { return std::exp(-x / range) / (range * range); };
  return s;
}

WellShape gaussian_shape(double range) {
  if (!(range > 0.0)) throw DomainError("gaussian_shape: range must be positive");
  WellShape s;
  s.name = "gaussian";
  s.range = range;
  s.value = [range](double x) {
    const double u = x / range;
    return std::exp(-u * u);
  };
  s.derivative = [range](double x) {
    const double u = x / range;
    return -2.0 * u * std::exp(-u * u) / range;
  };
  s.second_derivative = [range](double x) {
    const double u = x / range;
    return (4.0 * u * u - 2.0) * std::exp(-u * u) / (range * range);
  };
  return s;
}

WellShape yukawa_shape(double range) {
  if (!(range > 0.0)) throw DomainError("yukawa_shape: range must be positive");
  WellShape s;
  s.name = "yukawa";
  s.range = range;
  s.value = [range](double x) {
    const double u = x / range;
    return std::exp(-u) / u;
  };
  s.derivative = [range](double x) {
    const double u = x / range;
    return -std::exp(-u) * (1.0 / u + 1.0 / (u * u)) / range;
  };
  s.second_derivative = [range](double x) {
    const double u = x / range;
    return std::exp(-u) * (1.0 / u + 2.0 / (u * u) + 2.0 / (u * u * u)) / (range * range);
  };
  return s;
}

void validate(const KineticLaw& law) {
  std::visit(Overloaded{
                 [](const PowerKinetic& k) {
                   if (!(k.coefficient > 0.0)) throw DomainError("power kinetic: coefficient must be > 0");
                   if (!(k.exponent > 0.0)) throw DomainError("power kinetic: exponent must be > 0");
                 },
                 [](const CustomKinetic& k) {
                   if (!k.value || !k.derivative) {
                     throw DomainError("custom kinetic: value and derivative are required");
                   }
                 },
             },
             law);
}

void validate(const PotentialLaw& law) {
  std::visit(Overloaded{
                 [](const PowerLaw& v) {
                   if (!(v.strength > 0.0)) throw DomainError("power law: strength must be > 0");
                   if (v.exponent == 0.0 || !std::isfinite(v.exponent)) {
                     throw DomainError("power law: exponent must be finite and nonzero");
                   }
                 },
                 [](const Exponential& v) {
                   if (!(v.strength > 0.0) || !(v.decay > 0.0) || !(v.power > 0.0)) {
                     throw DomainError("exponential: strength, decay and power must be > 0");
                   }
                 },
                 [](const AttractiveWell& v) {
                   if (!(v.coupling > 0.0)) throw DomainError("well: coupling must be > 0");
                   if (!v.shape.value || !v.shape.derivative) {
                     throw DomainError("well: shape value and derivative are required");
                   }
                 },
                 [](const CustomPotential& v) {
                   if (!v.value || !v.derivative) {
                     throw DomainError("custom potential: value and derivative are required");
                   }
                 },
             },
             law);
}

double evaluate(const KineticLaw& law, double p) {
  require_positive_argument(p, "kinetic");
  return std::visit(Overloaded{
                        [p](const PowerKinetic& k) { return k.coefficient * std::pow(p, k.exponent); },
                        [p](const CustomKinetic& k) { return k.value(p); },
                    },
                    law);
}

double derivative(const KineticLaw& law, double p) {
  require_positive_argument(p, "kinetic derivative");
  return std::visit(
      Overloaded{
          [p](const PowerKinetic& k) {
            return k.coefficient * k.exponent * std::pow(p, k.exponent - 1.0);
          },
          [p](const CustomKinetic& k) { return k.derivative(p); },
      },
      law);
}

double evaluate(const PotentialLaw& law, double x) {
  require_positive_argument(x, "potential");
  return std::visit(
      Overloaded{
          [x](const PowerLaw& v) { return v.strength * sign(v.exponent) * std::pow(x, v.exponent); },
          [x](const Exponential& v) { return -v.strength * std::exp(-v.decay * std::pow(x, v.power)); },
          [x](const AttractiveWell& v) { return -v.coupling * v.shape.value(x); },
          [x](const CustomPotential& v) { return v.value(x); },
      },
      law);
}

double derivative(const PotentialLaw& law, double x) {
  require_positive_argument(x, "potential derivative");
  return std::visit(
      Overloaded{
          [x](const PowerLaw& v) {
            return v.strength * std::abs(v.exponent) * std::pow(x, v.exponent - 1.0);
          },
          [x](const Exponential& v) {
            const double xg = std::pow(x, v.power);
            return v.strength * v.decay * v.power * xg / x * std::exp(-v.decay * xg);
          },
          [x](const AttractiveWell& v) { return -v.coupling * v.shape.derivative(x); },
          [x](const CustomPotential& v) { return v.derivative(x); },
      },
      law);
}

bool vanishes_at_infinity(const PotentialLaw& law) {
  return std::visit(Overloaded{
                        [](const PowerLaw& v) { return v.exponent < 0.0; },
                        [](const Exponential&) { return true; },
                        [](const AttractiveWell&) { return true; },
                        [](const CustomPotential&) { return false; },
                    },
                    law);
}

double characteristic_length(const PotentialLaw& law, const KineticLaw& kinetic, double q) {
  double kin_coefficient = 1.0;
  double kin_exponent = 2.0;
  if (const auto* k = std::get_if<PowerKinetic>(&kinetic)) {
    kin_coefficient = k->coefficient;
    kin_exponent = k->exponent;
  }
  return std::visit(
      Overloaded{
          [&](const PowerLaw& v) {
            const double denom = kin_exponent + v.exponent;
            if (!(denom > 0.0)) return 1.0;
            return std::pow(kin_coefficient * std::pow(q, kin_exponent) / v.strength, 1.0 / denom);
          },
          [](const Exponential& v) { return std::pow(v.decay, -1.0 / v.power); },
          [](const AttractiveWell& v) { return v.shape.range; },
          [](const CustomPotential&) { return 1.0; },
      },
      law);
}

SquaredForm squared_argument_form(const KineticLaw& law) {
  return std::visit(
      Overloaded{
          [](const PowerKinetic& k) {
            const double c = k.coefficient;
            const double h = 0.5 * k.exponent;
            return SquaredForm{
                [c, h](double y) { return c * std::pow(y, h); },
                [c, h](double y) { return c * h * (h - 1.0) * std::pow(y, h - 2.0); },
            };
          },
          [](const CustomKinetic& k) {
            if (!k.squared_form || !k.squared_form_second) {
              throw UnsupportedError("custom kinetic law does not provide its squared-argument form");
            }
            return SquaredForm{k.squared_form, k.squared_form_second};
          },
      },
      law);
}

SquaredForm squared_argument_form(const PotentialLaw& law) {
  return std::visit(
      Overloaded{
          [](const PowerLaw& v) {
            const double c = v.strength * sign(v.exponent);
            const double h = 0.5 * v.exponent;
            return SquaredForm{
                [c, h](double y) { return c * std::pow(y, h); },
                [c, h](double y) { return c * h * (h - 1.0) * std::pow(y, h - 2.0); },
            };
          },
          [](const Exponential& v) {
            const double a = v.strength;
            const double beta = v.decay;
            const double s = 0.5 * v.power;
            return SquaredForm{
                [a, beta, s](double y) { return -a * std::exp(-beta * std::pow(y, s)); },
                [a, beta, s](double y) {
                  const double ys = std::pow(y, s);
                  return a * beta * s * std::exp(-beta * ys) *
                         ((s - 1.0) * ys / (y * y) - beta * s * ys * ys / (y * y));
                },
            };
          },
          [](const AttractiveWell& v) {
            const double g = v.coupling;
            const WellShape shape = v.shape;
            return SquaredForm{
                [g, shape](double y) { return -g * shape.value(std::sqrt(y)); },
                [g, shape](double y) {
                  const double x = std::sqrt(y);
                  const double d1 = -g * shape.derivative(x);
                  const double d2 = -g * well_second_derivative(shape, x);
                  return (d2 - d1 / x) / (4.0 * y);
                },
            };
          },
          [](const CustomPotential& v) {
            if (!v.squared_form || !v.squared_form_second) {
              throw UnsupportedError("custom potential does not provide its squared-argument form");
            }
            return SquaredForm{v.squared_form, v.squared_form_second};
          },
      },
      law);
}

Curvature sampled_curvature(const RealFunction& second, const ClassifierOptions& options) {
  const std::size_t n = std::max<std::size_t>(options.grid_points, 2);
  const double log_lo = std::log(options.y_min);
  const double log_hi = std::log(options.y_max);
  std::vector<double> samples;
  samples.reserve(n);
  double scale = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double y = std::exp(log_lo + (log_hi - log_lo) * static_cast<double>(i) / static_cast<double>(n - 1));
    const double s = second(y);
    if (!std::isfinite(s)) continue;
    samples.push_back(s);
    scale = std::max(scale, std::abs(s));
  }
  const double tol = options.relative_tolerance * (1.0 + scale);
  bool all_small = true;
  bool all_nonpositive = true;
  bool all_nonnegative = true;
  for (double s : samples) {
    all_small = all_small && std::abs(s) <= tol;
    all_nonpositive = all_nonpositive && s <= tol;
    all_nonnegative = all_nonnegative && s >= -tol;
  }
  if (all_small) return Curvature::Affine;
  if (all_nonpositive) return Curvature::Concave;
  if (all_nonnegative) return Curvature::Convex;
  return Curvature::Mixed;
}

namespace {

Curvature power_curvature(double half_exponent_minus_one_sign) {
  if (half_exponent_minus_one_sign < 0.0) return Curvature::Concave;
  if (half_exponent_minus_one_sign > 0.0) return Curvature::Convex;
  return Curvature::Affine;
}

}  // namespace

Curvature curvature(const KineticLaw& law, const ClassifierOptions& options) {
  return std::visit(Overloaded{
                        // D (a/2)(a/2 - 1) y^(a/2 - 2) with D, a > 0
                        [](const PowerKinetic& k) { return power_curvature(k.exponent - 2.0); },
                        [&](const CustomKinetic&) {
                          return sampled_curvature(squared_argument_form(law).second, options);
                        },
                    },
                    law);
}

Curvature curvature(const PotentialLaw& law, const ClassifierOptions& options) {
  return std::visit(Overloaded{
                        // sgn(b) (b/2)(b/2 - 1) is negative for b < 2, b != 0
                        [](const PowerLaw& v) { return power_curvature(v.exponent - 2.0); },
                        [](const Exponential& v) {
                          return v.power <= 2.0 ? Curvature::Concave : Curvature::Mixed;
                        },
                        [&](const AttractiveWell&) {
                          return sampled_curvature(squared_argument_form(law).second, options);
                        },
                        [&](const CustomPotential&) {
                          return sampled_curvature(squared_argument_form(law).second, options);
                        },
                    },
                    law);
}

std::string to_string(Curvature c) {
  switch (c) {
    case Curvature::Affine:
      return "affine";
    case Curvature::Concave:
      return "concave";
    case Curvature::Convex:
      return "convex";
    case Curvature::Mixed:
      return "mixed";
  }
  return "mixed";
}

}  // namespace envelope
