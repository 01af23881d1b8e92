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

#include "envelope/closed_form.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "envelope/errors.hpp"
#include "envelope/model.hpp"

namespace envelope {
namespace {

constexpr double kE = 2.718281828459045;
constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr double kMarginalBand = 1e-12;
// -1/e == kLambertBranchPoint + kBranchPointLow to about 35 digits.
constexpr double kBranchPointLow = 1.2428753672788363e-17;
// Below this distance from -1/e the iteration runs in e = 1 + w.
constexpr double kNearBranch = 2e-2;

// x + 1/e without the cancellation of the naive sum.
double distance_to_branch(double x) { return (x - kLambertBranchPoint) - kBranchPointLow; }

// (1 - e) exp(e) - 1 = -sum_{k >= 2} (k - 1) e^k / k!
double branch_series(double eps) {
  double term = eps;
  double sum = 0.0;
  for (int k = 2; k < 40; ++k) {
    term *= eps / k;
    const double add = (k - 1) * term;
    sum -= add;
    if (std::abs(add) <= 1e-18 * std::abs(sum)) break;
  }
  return sum;
}

// Halley on e = 1 + w with the residual written as -(x + 1/e) - g(e) / e,
// which keeps full relative accuracy in w + 1 close to the branch point.
double near_branch(double x) {
  const double d = distance_to_branch(x);
  if (d <= 0.0) return -1.0;
  const double p = std::sqrt(2.0 * kE * d);
  double eps = p * (1.0 + p * (-1.0 / 3.0 + p * (11.0 / 72.0 + p * (-43.0 / 540.0))));
  for (int i = 0; i < 32; ++i) {
    const double ew = std::exp(eps - 1.0);
    const double f = -d - branch_series(eps) / kE;
    const double fp = ew * eps;
    const double fpp = ew * (1.0 + eps);
    const double step = f / (fp - 0.5 * f * fpp / fp);
    const double next = eps - step;
    if (!(next > 0.0)) break;
    const bool done = std::abs(step) <= kEps * next;
    eps = next;
    if (done) break;
  }
  return eps - 1.0;
}

// Starting point for the Halley iteration.
//  - near the branch point: series in p = sqrt(2 (e x + 1));
//  - moderate x: Winitzki's log1p approximation;
//  - large x: asymptotic L1 - L2 + L2 / L1.
double initial_guess(double x) {
  if (x < -0.25) {
    // x - branch is exact here (Sterbenz), which keeps p accurate.
    const double p = std::sqrt(2.0 * kE * (x - kLambertBranchPoint));
    return -1.0 + p * (1.0 + p * (-1.0 / 3.0 + p * (11.0 / 72.0)));
  }
  if (x < 3.0) {
    const double l = std::log1p(x);
    return l * (1.0 - std::log1p(l) / (2.0 + l));
  }
  const double l1 = std::log(x);
  const double l2 = std::log(l1);
  return l1 - l2 + l2 / l1;
}

void check_analytic_system(const AnalyticSystem& s) {
  if (s.n_particles < 2 || s.k_body < 2 || s.k_body > s.n_particles) {
    throw DomainError("analytic system requires 2 <= K <= N");
  }
  if (!(s.kinetic_coefficient > 0.0) || !(s.kinetic_exponent > 0.0)) {
    throw DomainError("kinetic coefficient and exponent must be positive");
  }
}

void check_power_law(const AnalyticSystem& s, double strength, double exponent, double q) {
  check_analytic_system(s);
  if (!(strength > 0.0)) throw DomainError("power law: strength must be positive");
  if (exponent == 0.0) throw DomainError("power law: exponent must be nonzero");
  if (!(exponent > -s.kinetic_exponent)) {
    throw UnsupportedError("power law: exponent must exceed -alpha for a bound solution");
  }
  if (!(q > 0.0)) throw DomainError("Q must be positive");
}

// C(K,2) / C(N,2)
double pair_ratio(const AnalyticSystem& s) {
  return binomial_real(s.k_body, 2) / binomial_real(s.n_particles, 2);
}

}  // namespace

double lambert_w0(double x) {
  if (std::isnan(x)) throw DomainError("lambert_w0: NaN argument");
  if (x < kLambertBranchPoint) {
    // Allow for rounding of the branch point itself.
    if (x >= kLambertBranchPoint * (1.0 + 4.0 * kEps)) return -1.0;
    throw DomainError("lambert_w0: argument below -1/e: " + std::to_string(x));
  }
  if (x == kLambertBranchPoint) return -1.0;
  if (x == 0.0) return 0.0;
  if (std::isinf(x)) return x;
  if (x - kLambertBranchPoint < kNearBranch) return near_branch(x);

  double w = initial_guess(x);
  for (int i = 0; i < 64; ++i) {
    const double ew = std::exp(w);
    const double f = w * ew - x;
    if (f == 0.0) break;
    const double wp1 = w + 1.0;
    if (wp1 == 0.0) break;
    const double step = f / (ew * wp1 - (w + 2.0) * f / (2.0 * wp1));
    const double next = w - step;
    if (!std::isfinite(next)) break;
    const bool done = std::abs(next - w) <= 2.0 * kEps * (1.0 + std::abs(next));
    w = next;
    if (done) break;
  }
  return w < -1.0 ? -1.0 : w;
}

double power_law_r0(const AnalyticSystem& s, double strength, double exponent, double q) {
  check_power_law(s, strength, exponent, q);
  const double alpha = s.kinetic_exponent;
  const double c_nk = binomial_real(s.n_particles, s.k_body);
  const double log_base = std::log(alpha * s.n_particles * s.kinetic_coefficient / (c_nk * strength * std::abs(exponent))) +
                          alpha * std::log(q) - 0.5 * exponent * std::log(pair_ratio(s));
  return std::exp(log_base / (exponent + alpha));
}

double power_law_energy(const AnalyticSystem& s, double strength, double exponent, double q) {
  check_power_law(s, strength, exponent, q);
  const double alpha = s.kinetic_exponent;
  const double b = exponent;
  const double c_nk = binomial_real(s.n_particles, s.k_body);
  const double log_bracket = b * std::log(s.n_particles * s.kinetic_coefficient / std::abs(b)) +
                             alpha * std::log(strength * c_nk / alpha) + 0.5 * alpha * b * std::log(pair_ratio(s)) +
                             alpha * b * std::log(q);
  const double sign = b > 0.0 ? 1.0 : -1.0;
  return sign * (b + alpha) * std::exp(log_bracket / (b + alpha));
}

double exponential_delta(const AnalyticSystem& s, double strength, double decay, double power, double q) {
  check_analytic_system(s);
  if (!(strength > 0.0) || !(decay > 0.0) || !(power > 0.0)) {
    throw DomainError("exponential: strength, decay and power must be positive");
  }
  if (!(q > 0.0)) throw DomainError("Q must be positive");
  const double alpha = s.kinetic_exponent;
  const double gamma = power;
  const double c_nk = binomial_real(s.n_particles, s.k_body);
  const double log_inner = (alpha / gamma) * std::log(decay) +
                           std::log(alpha * s.kinetic_coefficient / (strength * gamma)) +
                           std::log(s.n_particles / c_nk) + 0.5 * alpha * std::log(pair_ratio(s)) +
                           alpha * std::log(q);
  return -(gamma / (alpha + gamma)) * std::exp(log_inner * gamma / (alpha + gamma));
}

std::optional<ExponentialSolution> exponential_solution(const AnalyticSystem& s, double strength, double decay,
                                                        double power, double q) {
  ExponentialSolution sol;
  sol.delta = exponential_delta(s, strength, decay, power, q);
  const double branch = kLambertBranchPoint;
  if (std::abs(sol.delta - branch) <= kMarginalBand * std::abs(branch)) {
    sol.delta = branch;
    sol.marginal = true;
  } else if (sol.delta < branch) {
    return std::nullopt;
  }
  const double alpha = s.kinetic_exponent;
  const double gamma = power;
  const double m = gamma / (alpha + gamma);
  const double c_nk = binomial_real(s.n_particles, s.k_body);
  sol.w = lambert_w0(sol.delta);
  // t = decay * (c r0)^gamma, the exponent at the stationary point.
  const double t = -sol.w / m;
  sol.r0 = std::pow(t / decay, 1.0 / gamma) / std::sqrt(pair_ratio(s));
  sol.energy = -strength * c_nk * std::exp(sol.w / m) * ((alpha + gamma) / alpha * sol.w + 1.0);
  sol.bound = sol.energy < 0.0;
  return sol;
}

std::optional<double> exponential_energy(const AnalyticSystem& s, double strength, double decay, double power,
                                         double q) {
  const auto sol = exponential_solution(s, strength, decay, power, q);
  if (!sol) return std::nullopt;
  return sol->energy;
}

}  // namespace envelope
