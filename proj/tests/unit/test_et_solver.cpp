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

#include <cmath>
#include <random>

#include "envelope/closed_form.hpp"
#include "envelope/errors.hpp"
#include "envelope/et_solver.hpp"
#include "envelope/oracle.hpp"

namespace envelope {
namespace {

SystemSpec single_term(int n, int k, double alpha, PotentialLaw v, double coef = 0.5) {
  return SystemSpec(n, 3, PowerKinetic{coef, alpha}, std::nullopt, {ManyBodyTerm{k, std::move(v)}});
}

double rel(double a, double b) { return std::abs(a - b) / std::abs(b); }

TEST(EnergyAt, HarmonicPairAtStationaryRadius) {
  const auto spec = single_term(2, 2, 2.0, PowerLaw{0.5, 2.0});
  const double q = 1.5;
  // E(r) = Q^2 / r^2 + r^2 / 2, minimal at r^4 = 2 Q^2
  const double r0 = std::pow(2.0 * q * q, 0.25);
  EXPECT_NEAR(energy_at(spec, q, r0), q * std::sqrt(2.0), 1e-14);
  EXPECT_NEAR(energy_at(spec, q, std::sqrt(1.5)), 2.25, 1e-14);
  EXPECT_NEAR(stationarity_residual(spec, q, r0), 0.0, 1e-14);
}

TEST(EnergyAt, LinearThreeBody) {
  // N = K = 3, T = p, V = x, Q = 3: E(r) = 9 / r + r, stationary at r = 3
  const auto spec = single_term(3, 3, 1.0, PowerLaw{1.0, 1.0}, 1.0);
  EXPECT_DOUBLE_EQ(energy_at(spec, 3.0, 3.0), 6.0);
  EXPECT_NEAR(stationarity_residual(spec, 3.0, 3.0), 0.0, 1e-14);
}

TEST(Residual, SignMatchesEnergySlope) {
  const auto spec = single_term(3, 2, 2.0, Exponential{1.0, 0.1, 2.0});
  for (double r : {0.3, 1.0, 2.0, 5.0, 12.0}) {
    const double h = 1e-6 * r;
    const double slope = (energy_at(spec, 3.0, r + h) - energy_at(spec, 3.0, r - h)) / (2.0 * h);
    EXPECT_NEAR(stationarity_residual(spec, 3.0, r), -r * slope, 1e-6 * (1.0 + std::abs(r * slope)));
  }
}

TEST(Solve, HarmonicThreeBody) {
  const auto sol = solve(single_term(4, 3, 2.0, PowerLaw{1.0, 2.0}), 4.5);
  EXPECT_NEAR(sol.energy, 18.0, 1e-12 * 18.0);
  EXPECT_EQ(sol.character, BoundCharacter::Exact);
  EXPECT_NEAR(sol.p0 * sol.r0, 4.5, 1e-14 * 4.5);
}

TEST(Solve, Coulomb) {
  const auto sol = solve(single_term(2, 2, 2.0, PowerLaw{1.0, -1.0}), 1.5);
  EXPECT_NEAR(sol.energy, -1.0 / 9.0, 1e-13);
  EXPECT_NEAR(sol.r0, 4.5, 1e-11);
  EXPECT_EQ(sol.character, BoundCharacter::UpperBound);
}

TEST(Solve, ExponentialWell) {
  // reference computed at 30 digits
  const auto sol = solve(single_term(2, 2, 2.0, Exponential{1.0, 0.1, 2.0}), 1.5);
  EXPECT_LT(rel(sol.energy, -0.175942293125574137), 1e-12);
  EXPECT_LT(rel(sol.r0, 2.568448498545246), 1e-11);
  EXPECT_LT(sol.diagnostics.relative_residual, 1e-10);
}

TEST(Solve, LinearThreeBody) {
  const auto sol = solve(single_term(3, 3, 1.0, PowerLaw{1.0, 1.0}, 1.0), 3.0);
  EXPECT_NEAR(sol.energy, 6.0, 1e-12);
  EXPECT_NEAR(sol.r0, 3.0, 1e-11);
}

TEST(Solve, QuantumStateOverload) {
  const auto spec = single_term(4, 3, 2.0, PowerLaw{1.0, 2.0});
  const auto ground = solve(spec, QuantumState::ground(4, 3));
  EXPECT_NEAR(ground.q, 4.5, 0.0);
  EXPECT_NEAR(ground.energy, 18.0, 1e-11);
  EXPECT_THROW(solve(spec, QuantumState({{0, 0}}, 3)), InvalidSystem);
}

TEST(Solve, OneBodyOnly) {
  const SystemSpec spec(3, 3, PowerKinetic{0.5, 2.0}, PowerLaw{0.7, 2.0}, {});
  const double q = ground_state_q(3, 3);
  EXPECT_LT(rel(solve(spec, q).energy, ho_exact_energy(3, 2, 1.0, 0.7, 0.0, q)), 1e-12);
}

TEST(Solve, OneBodyPlusManyBodyHarmonic) {
  for (int n = 2; n <= 6; ++n) {
    for (int k = 2; k <= n; ++k) {
      const SystemSpec spec(n, 3, PowerKinetic{0.5 / 1.3, 2.0}, PowerLaw{0.4, 2.0},
                            {ManyBodyTerm{k, PowerLaw{0.9, 2.0}}});
      const double q = ground_state_q(n, 3) + 2.0;
      EXPECT_LT(rel(solve(spec, q).energy, ho_exact_energy(n, k, 1.3, 0.4, 0.9, q)), 1e-12) << n << " " << k;
    }
  }
}

TEST(Solve, ConjugateVariablesProperty) {
  std::mt19937 rng(11);
  std::uniform_real_distribution<double> b_dist(-0.9, 3.0), q_dist(1.5, 12.0);
  for (int trial = 0; trial < 50; ++trial) {
    double b = b_dist(rng);
    if (std::abs(b) < 0.05) b = 0.5;
    const double q = q_dist(rng);
    const auto sol = solve(single_term(5, 3, 2.0, PowerLaw{1.0, b}), q);
    EXPECT_NEAR(sol.p0 * sol.r0, q, 1e-14 * q);
    EXPECT_LT(sol.diagnostics.relative_residual, 1e-10);
  }
}

TEST(Solve, ScaleCovariance) {
  // D -> D lambda^-alpha, a -> a lambda^b leaves E unchanged and maps r0 -> r0 / lambda
  for (double b : {-1.0, 0.5, 1.0, 3.0}) {
    for (double lambda : {0.1, 2.0, 37.0}) {
      const double alpha = 1.7;
      const auto base = solve(single_term(4, 2, alpha, PowerLaw{1.2, b}, 0.6), 5.0);
      const auto scaled =
          solve(single_term(4, 2, alpha, PowerLaw{1.2 * std::pow(lambda, b), b}, 0.6 * std::pow(lambda, -alpha)), 5.0);
      EXPECT_LT(rel(scaled.energy, base.energy), 1e-11);
      EXPECT_LT(rel(scaled.r0, base.r0 / lambda), 1e-11);
    }
  }
}

TEST(Solve, AgreesWithPowerLawClosedForm) {
  std::mt19937 rng(5);
  std::uniform_int_distribution<int> n_dist(2, 10);
  std::uniform_real_distribution<double> b_dist(-0.9, 4.0), a_dist(0.1, 10.0);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = n_dist(rng);
    const int k = std::uniform_int_distribution<int>(2, n)(rng);
    const double alpha = trial % 2 == 0 ? 1.0 : 2.0;
    double b = b_dist(rng);
    if (b <= -alpha + 0.05) b = 1.0;
    if (std::abs(b) < 0.05) b = 0.5;
    const double a = a_dist(rng);
    const double q = ground_state_q(n, 3) + 2.0 * (trial % 3);
    const AnalyticSystem sys{n, k, 0.5, alpha};
    const auto sol = solve(single_term(n, k, alpha, PowerLaw{a, b}), q);
    EXPECT_LT(rel(sol.energy, power_law_energy(sys, a, b, q)), 1e-10);
    EXPECT_LT(rel(sol.r0, power_law_r0(sys, a, b, q)), 1e-10);
  }
}

TEST(Solve, ExponentialPicksW0Branch) {
  const auto spec = single_term(3, 2, 2.0, Exponential{2.0, 0.2, 1.0});
  const auto sol = solve(spec, 3.0);
  const auto closed = exponential_solution({3, 2, 0.5, 2.0}, 2.0, 0.2, 1.0, 3.0);
  ASSERT_TRUE(closed.has_value());
  EXPECT_LT(rel(sol.energy, closed->energy), 1e-11);
  EXPECT_LT(rel(sol.r0, closed->r0), 1e-11);
  // the other stationary point is the barrier top
  int minima = 0;
  for (const auto& p : sol.stationary_points) minima += p.local_minimum ? 1 : 0;
  EXPECT_EQ(sol.stationary_points.size(), 2u);
  EXPECT_EQ(minima, 1);
}

TEST(Solve, NoStationaryPointForWeakWell) {
  const auto spec = single_term(2, 2, 2.0, Exponential{1.0, 1.0, 1.0});
  EXPECT_THROW(solve(spec, 1.5), NoStationaryPoint);
}

TEST(Solve, NoMinimumForSteepAttraction) {
  // V = -x^-3 falls faster than the kinetic term: only a maximum of E exists
  const auto spec = single_term(2, 2, 2.0, PowerLaw{1.0, -3.0});
  EXPECT_THROW(solve(spec, 1.5), NoStationaryPoint);
}

}  // namespace
}  // namespace envelope
