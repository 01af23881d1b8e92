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

#include "envelope/roots.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>

#include <boost/math/tools/minima.hpp>
#include <boost/math/tools/roots.hpp>
#include <boost/math/tools/toms748_solve.hpp>

#include "envelope/errors.hpp"

namespace envelope {
namespace {

int sign_of(double v) { return v > 0.0 ? 1 : (v < 0.0 ? -1 : 0); }

}  // namespace

std::vector<double> log_grid(double lo, double hi, std::size_t n) {
  if (!(lo > 0.0) || !(hi > lo) || n < 2) throw DomainError("log_grid: need 0 < lo < hi and n >= 2");
  std::vector<double> grid(n);
  const double a = std::log(lo);
  const double b = std::log(hi);
  for (std::size_t i = 0; i < n; ++i) {
    grid[i] = std::exp(a + (b - a) * static_cast<double>(i) / static_cast<double>(n - 1));
  }
  grid.front() = lo;
  grid.back() = hi;
  return grid;
}

std::vector<SignChange> scan_sign_changes(const RealFunction& f, double lo, double hi,
                                          std::size_t points) {
  const std::vector<double> x = log_grid(lo, hi, points);
  std::vector<double> y(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) y[i] = f(x[i]);

  std::vector<SignChange> out;
  for (std::size_t i = 0; i + 1 < x.size(); ++i) {
    if (!std::isfinite(y[i]) || !std::isfinite(y[i + 1])) continue;
    const int s0 = sign_of(y[i]);
    const int s1 = sign_of(y[i + 1]);
    if (s0 == 0) {
      // Zero on the grid: orientation from the neighbours.
      const int before = i > 0 && std::isfinite(y[i - 1]) ? sign_of(y[i - 1]) : -s1;
      if (before != 0 && s1 != 0 && before != s1) out.push_back({x[i], x[i], before, s1});
      continue;
    }
    if (s1 != 0 && s0 != s1) {
      out.push_back({x[i], x[i + 1], s0, s1});
      continue;
    }
    if (i == 0 || s1 == 0) continue;
    // Tangent probe around x[i]: same sign at i-1, i, i+1 and |y[i]| a local minimum.
    if (!std::isfinite(y[i - 1]) || sign_of(y[i - 1]) != s0 || s1 != s0) continue;
    if (!(std::abs(y[i]) < std::abs(y[i - 1]) && std::abs(y[i]) <= std::abs(y[i + 1]))) continue;
    const double s = static_cast<double>(s0);
    auto g = [&](double t) { return s * f(std::exp(t)); };
    std::uintmax_t iters = 200;
    const auto [t_min, g_min] = boost::math::tools::brent_find_minima(
        g, std::log(x[i - 1]), std::log(x[i + 1]), std::numeric_limits<double>::digits / 2, iters);
    if (g_min < 0.0) {
      const double xm = std::exp(t_min);
      out.push_back({x[i - 1], xm, s0, -s0});
      out.push_back({xm, x[i + 1], -s0, s0});
    } else if (g_min == 0.0) {
      const double xm = std::exp(t_min);
      out.push_back({xm, xm, s0, s0});
    }
  }
  std::sort(out.begin(), out.end(), [](const SignChange& a, const SignChange& b) { return a.lo < b.lo; });
  return out;
}

RootResult refine_root(const RealFunction& f, const SignChange& bracket, double relative_tolerance,
                       int max_iterations) {
  if (bracket.lo == bracket.hi) return {bracket.lo, bracket.lo, bracket.hi, 0};
  const double f_lo = f(bracket.lo);
  const double f_hi = f(bracket.hi);
  if (f_lo == 0.0) return {bracket.lo, bracket.lo, bracket.lo, 0};
  if (f_hi == 0.0) return {bracket.hi, bracket.hi, bracket.hi, 0};
  if (sign_of(f_lo) == sign_of(f_hi)) {
    throw NonConvergence("refine_root: interval does not bracket a sign change", bracket.lo, bracket.hi);
  }
  auto tolerance = [relative_tolerance](double a, double b) {
    return std::abs(b - a) <= relative_tolerance * std::min(std::abs(a), std::abs(b));
  };
  std::uintmax_t iters = static_cast<std::uintmax_t>(std::max(max_iterations, 1));
  const auto [a, b] = boost::math::tools::toms748_solve(f, bracket.lo, bracket.hi, f_lo, f_hi, tolerance, iters);
  if (!tolerance(a, b) && a != b) {
    throw NonConvergence("refine_root: iteration budget exhausted", a, b);
  }
  // Prefer the endpoint with the smaller residual.
  const double fa = std::abs(f(a));
  const double fb = std::abs(f(b));
  return {fa <= fb ? a : b, a, b, static_cast<int>(iters)};
}

}  // namespace envelope
