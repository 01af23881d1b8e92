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

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <vector>

#include "envelope/bound_character.hpp"
#include "envelope/errors.hpp"
#include "envelope/laws.hpp"
#include "envelope/model.hpp"
#include "envelope/roots.hpp"

namespace envelope {
namespace {

std::vector<PotentialLaw> builtin_potentials() {
  return {PowerLaw{1.0, 2.0},           PowerLaw{0.7, -1.0},          PowerLaw{2.0, 1.0},
          PowerLaw{1.3, 0.5},           PowerLaw{0.4, 4.0},           PowerLaw{1.0, -0.5},
          Exponential{1.0, 1.0, 1.0},   Exponential{2.0, 0.3, 2.0},   Exponential{0.5, 1.5, 3.0},
          AttractiveWell{3.0, exponential_shape(2.0)}, AttractiveWell{1.5, gaussian_shape(0.7)},
          AttractiveWell{2.0, yukawa_shape(1.0)}};
}

double central_difference(const RealFunction& f, double x) {
  const double h = 1e-5 * std::min(x, 1.0);
  return (f(x + h) - f(x - h)) / (2.0 * h);
}

TEST(Laws, PowerExamples) {
  EXPECT_DOUBLE_EQ(evaluate(PowerLaw{1.0, -1.0}, 2.0), -0.5);
  EXPECT_DOUBLE_EQ(evaluate(PowerLaw{3.0, 2.0}, 2.0), 12.0);
  EXPECT_DOUBLE_EQ(derivative(PowerLaw{3.0, 2.0}, 2.0), 12.0);
  EXPECT_DOUBLE_EQ(derivative(PowerLaw{1.0, -1.0}, 2.0), 0.25);
  EXPECT_DOUBLE_EQ(evaluate(KineticLaw{PowerKinetic{0.5, 2.0}}, 3.0), 4.5);
  EXPECT_DOUBLE_EQ(derivative(KineticLaw{PowerKinetic{0.5, 2.0}}, 3.0), 3.0);
}

TEST(Laws, ExponentialExamples) {
  EXPECT_DOUBLE_EQ(evaluate(Exponential{2.0, 1.0, 1.0}, 1.0), -2.0 * std::exp(-1.0));
  EXPECT_NEAR(evaluate(Exponential{1.0, 1.0, 2.0}, 1e-9), -1.0, 1e-15);
  EXPECT_DOUBLE_EQ(derivative(Exponential{1.0, 1.0, 1.0}, 1.0), std::exp(-1.0));
  EXPECT_DOUBLE_EQ(evaluate(AttractiveWell{4.0, exponential_shape()}, 2.0), -4.0 * std::exp(-2.0));
  EXPECT_DOUBLE_EQ(evaluate(AttractiveWell{1.0, yukawa_shape(2.0)}, 2.0), -std::exp(-1.0));
}

TEST(Laws, NonPositiveArgumentThrows) {
  for (const auto& law : builtin_potentials()) {
    EXPECT_THROW(evaluate(law, 0.0), DomainError);
    EXPECT_THROW(derivative(law, -1.0), DomainError);
  }
  EXPECT_THROW(evaluate(KineticLaw{PowerKinetic{}}, 0.0), DomainError);
}

TEST(Laws, InvalidParametersThrow) {
  EXPECT_THROW(validate(PotentialLaw{PowerLaw{-1.0, 2.0}}), DomainError);
  EXPECT_THROW(validate(PotentialLaw{PowerLaw{1.0, 0.0}}), DomainError);
  EXPECT_THROW(validate(PotentialLaw{Exponential{1.0, 0.0, 1.0}}), DomainError);
  EXPECT_THROW(validate(KineticLaw{PowerKinetic{1.0, 0.0}}), DomainError);
}

TEST(Laws, DerivativeMatchesFiniteDifference) {
  for (const auto& law : builtin_potentials()) {
    for (double x : log_grid(1e-3, 1e3, 61)) {
      const double fd = central_difference([&](double t) { return evaluate(law, t); }, x);
      const double exact = derivative(law, x);
      // truncation plus rounding of the difference quotient
      const double tol = 1e-6 * std::abs(exact) + 1e-10 * std::abs(evaluate(law, x)) / std::min(x, 1.0);
      EXPECT_NEAR(exact, fd, tol) << "x=" << x;
    }
  }
  const KineticLaw t = PowerKinetic{0.8, 1.5};
  for (double p : log_grid(1e-3, 1e3, 61)) {
    EXPECT_NEAR(derivative(t, p), central_difference([&](double s) { return evaluate(t, s); }, p),
                1e-6 * derivative(t, p));
  }
}

TEST(Laws, SquaredFormReproducesLaw) {
  for (const auto& law : builtin_potentials()) {
    const auto form = squared_argument_form(law);
    for (double x : log_grid(1e-3, 1e3, 61)) {
      const double v = evaluate(law, x);
      EXPECT_NEAR(form.value(x * x), v, 1e-12 * std::abs(v) + 1e-300) << "x=" << x;
    }
  }
}

TEST(Laws, SquaredFormSecondDerivative) {
  // compare b'' with a second difference of b
  for (const auto& law : builtin_potentials()) {
    const auto form = squared_argument_form(law);
    for (double y : log_grid(1e-2, 1e1, 16)) {
      const double h = 1e-4 * y;
      const double fd = (form.value(y + h) - 2.0 * form.value(y) + form.value(y - h)) / (h * h);
      const double exact = form.second(y);
      EXPECT_NEAR(exact, fd, 1e-4 * std::abs(exact) + 1e-7 * std::abs(form.value(y)) / (y * y)) << "y=" << y;
    }
  }
}

TEST(Laws, SquaredFormExamples) {
  const auto kinetic = squared_argument_form(KineticLaw{PowerKinetic{0.5, 2.0}});
  EXPECT_DOUBLE_EQ(kinetic.value(4.0), 2.0);
  EXPECT_DOUBLE_EQ(kinetic.second(4.0), 0.0);
  const auto linear = squared_argument_form(PotentialLaw{PowerLaw{1.0, 1.0}});
  EXPECT_NEAR(linear.second(4.0), -0.25 * std::pow(4.0, -1.5), 1e-16);
  const auto gauss = squared_argument_form(PotentialLaw{Exponential{1.0, 1.0, 2.0}});
  EXPECT_NEAR(gauss.value(2.0), -std::exp(-2.0), 1e-16);
  EXPECT_NEAR(gauss.second(2.0), -std::exp(-2.0), 1e-16);
}

TEST(Laws, CustomWithoutSquaredFormIsUnsupported) {
  CustomPotential custom{[](double x) { return x; }, [](double) { return 1.0; }, {}, {}};
  EXPECT_THROW(squared_argument_form(PotentialLaw{custom}), UnsupportedError);
  CustomKinetic kinetic{[](double p) { return p; }, [](double) { return 1.0; }, {}, {}};
  EXPECT_THROW(squared_argument_form(KineticLaw{kinetic}), UnsupportedError);
}

TEST(Laws, VanishesAtInfinity) {
  EXPECT_TRUE(vanishes_at_infinity(PowerLaw{1.0, -1.0}));
  EXPECT_FALSE(vanishes_at_infinity(PowerLaw{1.0, 2.0}));
  EXPECT_TRUE(vanishes_at_infinity(Exponential{}));
  EXPECT_TRUE(vanishes_at_infinity(AttractiveWell{1.0, gaussian_shape()}));
}

TEST(Curvature, PowerLawExponents) {
  EXPECT_EQ(curvature(PotentialLaw{PowerLaw{1.0, 2.0}}), Curvature::Affine);
  EXPECT_EQ(curvature(PotentialLaw{PowerLaw{1.0, 1.0}}), Curvature::Concave);
  EXPECT_EQ(curvature(PotentialLaw{PowerLaw{1.0, -1.0}}), Curvature::Concave);
  EXPECT_EQ(curvature(PotentialLaw{PowerLaw{1.0, 4.0}}), Curvature::Convex);
  EXPECT_EQ(curvature(KineticLaw{PowerKinetic{1.0, 1.0}}), Curvature::Concave);
  EXPECT_EQ(curvature(PotentialLaw{Exponential{1.0, 1.0, 2.0}}), Curvature::Concave);
  EXPECT_EQ(curvature(PotentialLaw{Exponential{1.0, 1.0, 3.0}}), Curvature::Mixed);
}

TEST(Curvature, AnalyticAgreesWithSampling) {
  ClassifierOptions opts;
  for (const auto& law : builtin_potentials()) {
    const auto form = squared_argument_form(law);
    EXPECT_EQ(curvature(law, opts), sampled_curvature(form.second, opts)) << to_string(curvature(law, opts));
  }
}

TEST(BoundCharacter, Examples) {
  const auto spec = [](double alpha, PotentialLaw v) {
    return SystemSpec(3, 3, PowerKinetic{0.5, alpha}, std::nullopt, {ManyBodyTerm{2, std::move(v)}});
  };
  EXPECT_EQ(classify_bound_character(spec(2.0, PowerLaw{1.0, 1.0})), BoundCharacter::UpperBound);
  EXPECT_EQ(classify_bound_character(spec(2.0, PowerLaw{1.0, 2.0})), BoundCharacter::Exact);
  EXPECT_EQ(classify_bound_character(spec(2.0, PowerLaw{1.0, 4.0})), BoundCharacter::LowerBound);
  EXPECT_EQ(classify_bound_character(spec(1.0, PowerLaw{1.0, 4.0})), BoundCharacter::Indeterminate);
  EXPECT_EQ(classify_bound_character(spec(2.0, Exponential{1.0, 1.0, 1.0})), BoundCharacter::UpperBound);
  EXPECT_EQ(classify_bound_character(spec(2.0, AttractiveWell{1.0, yukawa_shape()})), BoundCharacter::UpperBound);
  EXPECT_EQ(classify_bound_character(spec(2.0, AttractiveWell{1.0, gaussian_shape()})), BoundCharacter::UpperBound);
}

TEST(BoundCharacter, PowerLawRule) {
  // upper iff alpha <= 2 and b <= 2, lower iff alpha >= 2 and b >= 2
  for (double alpha : {0.5, 1.0, 1.5, 2.0, 2.5, 3.0}) {
    for (double b : {-1.5, -1.0, -0.5, 0.5, 1.0, 2.0, 3.0, 4.0}) {
      const SystemSpec spec(4, 3, PowerKinetic{0.5, alpha}, std::nullopt, {ManyBodyTerm{3, PowerLaw{1.0, b}}});
      const auto c = classify_bound_character(spec);
      EXPECT_EQ(is_upper_bound(c), alpha <= 2.0 && b <= 2.0) << alpha << " " << b;
      EXPECT_EQ(is_lower_bound(c), alpha >= 2.0 && b >= 2.0) << alpha << " " << b;
    }
  }
}

TEST(BoundCharacter, MixedTermsAndOneBody) {
  const SystemSpec both(3, 3, PowerKinetic{0.5, 2.0}, PowerLaw{1.0, 2.0},
                        {ManyBodyTerm{2, PowerLaw{1.0, -1.0}}, ManyBodyTerm{3, PowerLaw{1.0, 1.0}}});
  EXPECT_EQ(classify_bound_character(both), BoundCharacter::UpperBound);
  const SystemSpec opposed(3, 3, PowerKinetic{0.5, 2.0}, std::nullopt,
                           {ManyBodyTerm{2, PowerLaw{1.0, -1.0}}, ManyBodyTerm{3, PowerLaw{1.0, 4.0}}});
  EXPECT_EQ(classify_bound_character(opposed), BoundCharacter::Indeterminate);
}

TEST(BoundCharacter, CustomLawUsesSampledForm) {
  // V(x) = x^2 + x^4: b(y) = y + y^2, convex
  CustomPotential v{[](double x) { return x * x + x * x * x * x; },
                    [](double x) { return 2.0 * x + 4.0 * x * x * x; },
                    [](double y) { return y + y * y; },
                    [](double) { return 2.0; }};
  const SystemSpec spec(2, 3, PowerKinetic{0.5, 2.0}, std::nullopt, {ManyBodyTerm{2, v}});
  EXPECT_EQ(classify_bound_character(spec), BoundCharacter::LowerBound);
  CustomPotential opaque{v.value, v.derivative, {}, {}};
  const SystemSpec unknown(2, 3, PowerKinetic{0.5, 2.0}, std::nullopt, {ManyBodyTerm{2, opaque}});
  EXPECT_THROW(classify_bound_character(unknown), UnsupportedError);
}

TEST(BoundCharacter, Names) {
  EXPECT_EQ(to_string(BoundCharacter::UpperBound), "upper");
  EXPECT_EQ(to_string(BoundCharacter::Exact), "exact");
}

}  // namespace
}  // namespace envelope
