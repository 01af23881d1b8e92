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

#include <benchmark/benchmark.h>

#include "envelope/closed_form.hpp"
#include "envelope/critical.hpp"
#include "envelope/et_solver.hpp"
#include "envelope/oracle.hpp"

namespace {

using namespace envelope;

void BM_SolveHarmonic(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const SystemSpec spec(n, 3, PowerKinetic{0.5, 2.0}, std::nullopt, {ManyBodyTerm{2, PowerLaw{1.0, 2.0}}});
  const double q = ground_state_q(n, 3);
  for (auto _ : state) benchmark::DoNotOptimize(solve(spec, q).energy);
}
BENCHMARK(BM_SolveHarmonic)->Arg(2)->Arg(10)->Arg(64);

void BM_SolveExponential(benchmark::State& state) {
  const SystemSpec spec(3, 3, PowerKinetic{0.5, 2.0}, std::nullopt, {ManyBodyTerm{2, Exponential{2.0, 0.1, 2.0}}});
  for (auto _ : state) benchmark::DoNotOptimize(solve(spec, 3.0).energy);
}
BENCHMARK(BM_SolveExponential);

void BM_ScanPoints(benchmark::State& state) {
  const SystemSpec spec(4, 3, PowerKinetic{0.5, 2.0}, std::nullopt, {ManyBodyTerm{3, PowerLaw{1.0, -1.0}}});
  SolveOptions opts;
  opts.scan_points = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(solve(spec, 4.5, opts).energy);
}
BENCHMARK(BM_ScanPoints)->RangeMultiplier(4)->Range(64, 4096);

void BM_PowerLawClosedForm(benchmark::State& state) {
  const AnalyticSystem sys{6, 3, 0.5, 2.0};
  double q = 7.5;
  for (auto _ : state) benchmark::DoNotOptimize(power_law_energy(sys, 1.0, 1.0, q));
}
BENCHMARK(BM_PowerLawClosedForm);

void BM_ExponentialClosedForm(benchmark::State& state) {
  const AnalyticSystem sys{6, 3, 0.5, 2.0};
  for (auto _ : state) benchmark::DoNotOptimize(exponential_energy(sys, 1.0, 0.1, 1.0, 7.5));
}
BENCHMARK(BM_ExponentialClosedForm);

void BM_LambertW(benchmark::State& state) {
  const double x = static_cast<double>(state.range(0)) / 1000.0;
  for (auto _ : state) benchmark::DoNotOptimize(lambert_w0(x));
}
BENCHMARK(BM_LambertW)->Arg(-367)->Arg(-100)->Arg(1000)->Arg(1000000000);

void BM_CriticalCoupling(benchmark::State& state) {
  const auto shape = gaussian_shape();
  for (auto _ : state) benchmark::DoNotOptimize(critical_coupling(5, 3, 0.5, 2.0, shape, 6.0).g_c);
}
BENCHMARK(BM_CriticalCoupling);

void BM_NumerovGround(benchmark::State& state) {
  RadialProblem p;
  p.potential = PowerLaw{1.0, -1.0};
  for (auto _ : state) benchmark::DoNotOptimize(solve_two_body(p, 0).energy);
}
BENCHMARK(BM_NumerovGround)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
