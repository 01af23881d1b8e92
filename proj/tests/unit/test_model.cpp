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

#include <cstdint>
#include <random>

#include "envelope/errors.hpp"
#include "envelope/model.hpp"

namespace envelope {
namespace {

SystemSpec pair_harmonic(int n) {
  return SystemSpec(n, 3, PowerKinetic{0.5, 2.0}, std::nullopt, {ManyBodyTerm{2, PowerLaw{1.0, 2.0}}});
}

TEST(Binomial, SmallValues) {
  EXPECT_EQ(binomial(0, 0), 1u);
  EXPECT_EQ(binomial(5, 2), 10u);
  EXPECT_EQ(binomial(10, 3), 120u);
  EXPECT_EQ(binomial(4, 0), 1u);
  EXPECT_EQ(binomial(4, 4), 1u);
}

TEST(Binomial, LargestRow) {
  EXPECT_EQ(binomial(64, 32), UINT64_C(1832624140942590534));
  EXPECT_EQ(binomial(64, 1), 64u);
}

TEST(Binomial, OutOfRangeThrows) {
  EXPECT_THROW(binomial(3, 4), DomainError);
  EXPECT_THROW(binomial(-1, 0), DomainError);
  EXPECT_THROW(binomial(65, 2), DomainError);
}

TEST(Binomial, PascalRule) {
  for (int n = 1; n <= 64; ++n) {
    for (int k = 1; k < n; ++k) {
      ASSERT_EQ(binomial(n, k), binomial(n - 1, k - 1) + binomial(n - 1, k)) << n << " " << k;
    }
  }
}

TEST(Binomial, RealMatchesInteger) {
  for (int n = 0; n <= 40; ++n) {
    for (int k = 0; k <= n; ++k) EXPECT_EQ(binomial_real(n, k), static_cast<double>(binomial(n, k)));
  }
}

TEST(CombinatorialIdentity, Examples) {
  EXPECT_TRUE(combinatorial_identity_check(4, 3));
  EXPECT_TRUE(combinatorial_identity_check(10, 5));
  EXPECT_TRUE(combinatorial_identity_check(2, 2));
}

TEST(CombinatorialIdentity, HoldsUpToThirty) {
  for (int n = 2; n <= 30; ++n) {
    for (int k = 2; k <= n; ++k) EXPECT_TRUE(combinatorial_identity_check(n, k)) << n << " " << k;
  }
}

TEST(QuantumNumber, GroundState) {
  EXPECT_DOUBLE_EQ(ground_state_q(2, 3), 1.5);
  EXPECT_DOUBLE_EQ(ground_state_q(4, 3), 4.5);
  EXPECT_DOUBLE_EQ(ground_state_q(3, 2), 2.0);
  EXPECT_DOUBLE_EQ(global_quantum_number(QuantumState::ground(4, 3)), 4.5);
}

TEST(QuantumNumber, Examples) {
  EXPECT_DOUBLE_EQ(global_quantum_number(QuantumState({{1, 0}}, 3)), 3.5);
  EXPECT_DOUBLE_EQ(global_quantum_number(QuantumState({{0, 1}}, 3)), 2.5);
  EXPECT_DOUBLE_EQ(global_quantum_number(QuantumState({{1, 2}, {0, 0}}, 3)), 7.0);
}

TEST(QuantumNumber, Additive) {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> level(0, 6);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<Mode> a(3), b(2);
    for (auto& m : a) m = {level(rng), level(rng)};
    for (auto& m : b) m = {level(rng), level(rng)};
    std::vector<Mode> ab = a;
    ab.insert(ab.end(), b.begin(), b.end());
    EXPECT_DOUBLE_EQ(global_quantum_number(QuantumState(ab, 3)),
                     global_quantum_number(QuantumState(a, 3)) + global_quantum_number(QuantumState(b, 3)));
  }
}

TEST(QuantumState, RejectsNegativeQuantumNumbers) {
  EXPECT_THROW(QuantumState({{-1, 0}}, 3), InvalidSystem);
  EXPECT_THROW(QuantumState({{0, -2}}, 3), InvalidSystem);
  EXPECT_THROW(QuantumState({}, 3), InvalidSystem);
  EXPECT_THROW(QuantumState({{0, 0}}, 0), InvalidSystem);
}

TEST(SystemSpec, Valid) {
  const auto spec = pair_harmonic(5);
  EXPECT_EQ(spec.n_particles(), 5);
  EXPECT_EQ(spec.dimension(), 3);
  EXPECT_EQ(spec.many_body().size(), 1u);
}

TEST(SystemSpec, Invariants) {
  const PowerKinetic t{0.5, 2.0};
  EXPECT_THROW(SystemSpec(1, 3, t, std::nullopt, {ManyBodyTerm{2, PowerLaw{}}}), InvalidSystem);
  EXPECT_THROW(SystemSpec(3, 0, t, std::nullopt, {ManyBodyTerm{2, PowerLaw{}}}), InvalidSystem);
  EXPECT_THROW(SystemSpec(3, 3, t, std::nullopt, {ManyBodyTerm{4, PowerLaw{}}}), InvalidSystem);
  EXPECT_THROW(SystemSpec(3, 3, t, std::nullopt, {ManyBodyTerm{1, PowerLaw{}}}), InvalidSystem);
  EXPECT_THROW(SystemSpec(3, 3, t, std::nullopt, {}), InvalidSystem);
  EXPECT_THROW(SystemSpec(3, 3, PowerKinetic{-1.0, 2.0}, std::nullopt, {ManyBodyTerm{2, PowerLaw{}}}), InvalidSystem);
  EXPECT_NO_THROW(SystemSpec(3, 3, t, PowerLaw{1.0, 2.0}, {}));
}

TEST(SubsetRadius, Ratio) {
  EXPECT_DOUBLE_EQ(subset_radius_ratio(4, 4), 1.0);
  EXPECT_NEAR(subset_radius_ratio(4, 2), std::sqrt(1.0 / 6.0), 1e-16);
  EXPECT_NEAR(subset_radius_ratio(4, 3), std::sqrt(0.5), 1e-16);
}

}  // namespace
}  // namespace envelope
