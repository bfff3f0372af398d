// Copyright 2026 The Authors.
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

#include "tsa/cost_assortment.h"
#include "tsa/ellipsoid.h"
#include "tsa/instance.h"
#include "tsa/lp.h"
#include "tsa/mnl.h"
#include "tsa/policies.h"
#include "tsa/simplex.h"

namespace tsa {
namespace {

void BM_OptimalRevenue(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Instance inst = Generate(InstanceKind::kUniformRandom, n, 1, 1);
  const Subset all = Subset::Range(n);
  for (auto _ : state) benchmark::DoNotOptimize(OptimalRevenue(inst, 0, all));
}
BENCHMARK(BM_OptimalRevenue)->Arg(8)->Arg(64)->Arg(512);

void BM_SubDualExact(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Instance inst = Generate(InstanceKind::kUniformRandom, n, 1, 2);
  const CostMatrix gamma = CostMatrix::Constant(n, 1, 0.05);
  for (auto _ : state) benchmark::DoNotOptimize(SubDualExact(inst, 0, gamma));
}
BENCHMARK(BM_SubDualExact)->Arg(4)->Arg(8)->Arg(12);

void BM_EllipsoidIterations(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Instance inst =
      NormalizeRevenues(Generate(InstanceKind::kUniformRandom, n, 2, 3));
  EllipsoidConfig config;
  config.t_max = 10000;
  const ExactSubDualOracle oracle;
  for (auto _ : state) {
    benchmark::DoNotOptimize(RunEllipsoid(inst, oracle, config).obj);
  }
  state.SetItemsProcessed(state.iterations() * config.t_max);
}
BENCHMARK(BM_EllipsoidIterations)->Arg(2)->Arg(4)->Arg(6)
    ->Unit(benchmark::kMillisecond);

void BM_MarginalLpSimplex(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Instance inst = Generate(InstanceKind::kUniformRandom, n, 2, 4);
  for (auto _ : state) benchmark::DoNotOptimize(Lp2ExactSmall(inst).objective);
}
BENCHMARK(BM_MarginalLpSimplex)->Arg(3)->Arg(5)->Arg(7)
    ->Unit(benchmark::kMillisecond);

void BM_AdaptiveDp(benchmark::State& state) {
  const Instance inst = Generate(InstanceKind::kUniformRandom, 4, 4, 5);
  for (auto _ : state) benchmark::DoNotOptimize(ExactDpAtar(inst).value);
}
BENCHMARK(BM_AdaptiveDp)->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace tsa

BENCHMARK_MAIN();
