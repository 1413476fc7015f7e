// Copyright 2026 The qunc Authors
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

#include "qunc/assist.hpp"
#include "qunc/channels.hpp"
#include "qunc/linalg.hpp"
#include "qunc/measures.hpp"
#include "qunc/random.hpp"

namespace {

using namespace qunc;

void BM_Fidelity(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  Rng rng(1);
  const DensityMatrix a = random_mixed_state(d, rng);
  const DensityMatrix b = random_mixed_state(d, rng);
  for (auto _ : state) benchmark::DoNotOptimize(fidelity(a, b));
}
BENCHMARK(BM_Fidelity)->Arg(2)->Arg(4)->Arg(8)->Arg(16)->Arg(32);

void BM_GeometricCoherence(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  Rng rng(2);
  const DensityMatrix rho = random_mixed_state(d, rng);
  for (auto _ : state) benchmark::DoNotOptimize(geometric_coherence(rho).value);
}
BENCHMARK(BM_GeometricCoherence)->Arg(2)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_CoherenceOfAssistance(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  Rng rng(3);
  const DensityMatrix rho = random_mixed_state(d, rng);
  const SymmetricConcaveFunction f = entropy_function(2.0);
  AssistConfig cfg;
  cfg.restarts = 8;
  for (auto _ : state) benchmark::DoNotOptimize(coherence_of_assistance(f, rho, cfg).value);
}
BENCHMARK(BM_CoherenceOfAssistance)->Arg(2)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_ConstantDiagonalUnitary(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  Rng rng(4);
  const DensityMatrix rho = random_mixed_state(d, rng);
  for (auto _ : state) benchmark::DoNotOptimize(constant_diagonal_unitary(rho).rotations);
}
BENCHMARK(BM_ConstantDiagonalUnitary)->Arg(2)->Arg(8)->Arg(32);

void BM_IsCertainOperation(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  Rng rng(5);
  const KrausChannel ch = random_certain_channel(d, rng);
  for (auto _ : state) benchmark::DoNotOptimize(is_certain_operation(ch).is_certain);
}
BENCHMARK(BM_IsCertainOperation)->Arg(2)->Arg(4)->Arg(8);

}  // namespace

BENCHMARK_MAIN();
