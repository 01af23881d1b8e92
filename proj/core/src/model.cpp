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

#include "envelope/model.hpp"

#include <cmath>
#include <numeric>
#include <string>

#include "envelope/errors.hpp"

namespace envelope {

std::uint64_t binomial(int n, int k) {
  if (n < 0 || k < 0 || k > n || n > 64) {
    throw DomainError("binomial: requires 0 <= k <= n <= 64, got n=" + std::to_string(n) +
                      ", k=" + std::to_string(k));
  }
  k = std::min(k, n - k);
  std::uint64_t result = 1;
  for (int i = 1; i <= k; ++i) {
    // result * (n - k + i) is divisible by i; cancel the common factor first.
    const auto num = static_cast<std::uint64_t>(n - k + i);
    const auto den = static_cast<std::uint64_t>(i);
    const std::uint64_t g = std::gcd(result, den);
    result = (result / g) * (num / (den / g));
  }
  return result;
}

double binomial_real(int n, int k) { return static_cast<double>(binomial(n, k)); }

bool combinatorial_identity_check(int n_particles, int k_body) {
  if (k_body < 2 || k_body > n_particles) {
    throw DomainError("combinatorial_identity_check: requires 2 <= K <= N");
  }
  __extension__ using u128 = unsigned __int128;
  const u128 lhs = static_cast<u128>(binomial(n_particles, k_body)) * binomial(k_body, 2);
  const u128 rhs = static_cast<u128>(binomial(n_particles - 2, k_body - 2)) * binomial(n_particles, 2);
  return lhs == rhs;
}

SystemSpec::SystemSpec(int n_particles, int dimension, KineticLaw kinetic,
                       std::optional<PotentialLaw> one_body, std::vector<ManyBodyTerm> many_body)
    : n_particles_(n_particles),
      dimension_(dimension),
      kinetic_(std::move(kinetic)),
      one_body_(std::move(one_body)),
      many_body_(std::move(many_body)) {
  if (n_particles_ < 2) throw InvalidSystem("N must be >= 2, got " + std::to_string(n_particles_));
  if (n_particles_ > 64) throw InvalidSystem("N must be <= 64 for exact binomials");
  if (dimension_ < 1) throw InvalidSystem("D must be >= 1, got " + std::to_string(dimension_));
  if (!one_body_ && many_body_.empty()) {
    throw InvalidSystem("at least one potential term is required");
  }
  for (const auto& term : many_body_) {
    if (term.k_body < 2 || term.k_body > n_particles_) {
      throw InvalidSystem("many-body term requires 2 <= K <= N, got K=" + std::to_string(term.k_body) +
                          " with N=" + std::to_string(n_particles_));
    }
  }
  try {
    validate(kinetic_);
    if (one_body_) validate(*one_body_);
    for (const auto& term : many_body_) validate(term.law);
  } catch (const DomainError& e) {
    throw InvalidSystem(e.what());
  }
}

QuantumState::QuantumState(std::vector<Mode> modes, int dimension)
    : modes_(std::move(modes)), dimension_(dimension) {
  if (dimension_ < 1) throw InvalidSystem("D must be >= 1");
  if (modes_.empty()) throw InvalidSystem("a quantum state needs at least one internal mode");
  for (const auto& m : modes_) {
    if (m.n < 0 || m.l < 0) throw InvalidSystem("quantum numbers n and l must be >= 0");
  }
}

QuantumState QuantumState::ground(int n_particles, int dimension) {
  if (n_particles < 2) throw InvalidSystem("N must be >= 2");
  return QuantumState(std::vector<Mode>(static_cast<std::size_t>(n_particles - 1)), dimension);
}

double global_quantum_number(const QuantumState& state) {
  const double half_d = 0.5 * state.dimension();
  double q = 0.0;
  for (const auto& m : state.modes()) q += 2.0 * m.n + m.l + half_d;
  return q;
}

double ground_state_q(int n_particles, int dimension) {
  return 0.5 * (n_particles - 1) * dimension;
}

double subset_radius_ratio(int n_particles, int k_body) {
  return std::sqrt(binomial_real(k_body, 2) / binomial_real(n_particles, 2));
}

}  // namespace envelope
