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

#include <cstdint>
#include <optional>
#include <vector>

#include "envelope/laws.hpp"

namespace envelope {

// Binomial coefficient C(n, k) for 0 <= k <= n <= 64, computed exactly.
// Throws DomainError outside that range.
std::uint64_t binomial(int n, int k);

// C(n, k) as a double, for use inside the energy formulas.
double binomial_real(int n, int k);

// Checks C(N,K) C(K,2) == C(N-2,K-2) C(N,2) in exact integer arithmetic.
bool combinatorial_identity_check(int n_particles, int k_body);

// A K-body interaction term. K = 2 is the usual pair potential.
struct ManyBodyTerm {
  int k_body = 2;
  PotentialLaw law;
};

// N identical particles in D dimensions with kinetic energy T, an optional
// one-body potential U(|r_i - R|) and any number of K-body potentials whose
// argument is the root of the summed squared pair distances within the set.
class SystemSpec {
 public:
  SystemSpec(int n_particles, int dimension, KineticLaw kinetic,
             std::optional<PotentialLaw> one_body,
             std::vector<ManyBodyTerm> many_body);

  int n_particles() const noexcept { return n_particles_; }
  int dimension() const noexcept { return dimension_; }
  const KineticLaw& kinetic() const noexcept { return kinetic_; }
  const std::optional<PotentialLaw>& one_body() const noexcept { return one_body_; }
  const std::vector<ManyBodyTerm>& many_body() const noexcept { return many_body_; }

 private:
  int n_particles_;
  int dimension_;
  KineticLaw kinetic_;
  std::optional<PotentialLaw> one_body_;
  std::vector<ManyBodyTerm> many_body_;
};

// Radial quantum number n and orbital quantum number l of one internal mode.
struct Mode {
  int n = 0;
  int l = 0;

  friend bool operator==(const Mode&, const Mode&) = default;
};

class QuantumState {
 public:
  QuantumState(std::vector<Mode> modes, int dimension);

  // All N-1 internal modes in their lowest level.
  static QuantumState ground(int n_particles, int dimension);

  const std::vector<Mode>& modes() const noexcept { return modes_; }
  int dimension() const noexcept { return dimension_; }

  friend bool operator==(const QuantumState&, const QuantumState&) = default;

 private:
  std::vector<Mode> modes_;
  int dimension_;
};

// Q = sum over internal modes of (2 n + l + D/2).
double global_quantum_number(const QuantumState& state);

// Ground-state value (N-1) D / 2.
double ground_state_q(int n_particles, int dimension);

// sqrt(C(K,2) / C(N,2)): ratio between the K-body radial argument and r0.
double subset_radius_ratio(int n_particles, int k_body);

}  // namespace envelope
