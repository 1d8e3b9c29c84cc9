// Copyright 2026 The entfb Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <benchmark/benchmark.h>

#include "entfb/entanglement.hpp"
#include "entfb/master_equation.hpp"
#include "entfb/optimizer.hpp"

namespace me = entfb::master_equation;

namespace {

const entfb::ModelParams kPoint{1.0, 0.5, 0.3};

void BM_LiouvillianFeedback(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(me::liouvillian_fb(kPoint));
}
BENCHMARK(BM_LiouvillianFeedback);

void BM_SmallestSingularValues(benchmark::State& state) {
  const auto L = me::liouvillian_fb(kPoint);
  for (auto _ : state) benchmark::DoNotOptimize(me::smallest_singular_values(L));
}
BENCHMARK(BM_SmallestSingularValues);

void BM_SteadyState(benchmark::State& state) {
  const auto L = me::liouvillian_fb(kPoint);
  for (auto _ : state) benchmark::DoNotOptimize(me::steady_state(L));
}
BENCHMARK(BM_SteadyState);

void BM_Concurrence(benchmark::State& state) {
  const auto rho = me::steady_state(me::liouvillian_fb(kPoint));
  for (auto _ : state) benchmark::DoNotOptimize(entfb::entanglement::concurrence(rho));
}
BENCHMARK(BM_Concurrence);

void BM_FeedbackConcurrence(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(entfb::optimizer::feedback_concurrence(kPoint));
}
BENCHMARK(BM_FeedbackConcurrence);

void BM_OptimizeLambda(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(entfb::optimizer::optimize_lambda({1.0, 0.2, 0.0}));
}
BENCHMARK(BM_OptimizeLambda)->Unit(benchmark::kMillisecond);

void BM_Propagate(benchmark::State& state) {
  const auto L = me::liouvillian_nofb({1.0, 1.0, 0.0});
  const auto rho0 = me::DensityMatrix::pure(entfb::basis_ket(entfb::basis::gg));
  for (auto _ : state) benchmark::DoNotOptimize(me::propagate(rho0, L, 50.0, 0.01));
}
BENCHMARK(BM_Propagate)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
