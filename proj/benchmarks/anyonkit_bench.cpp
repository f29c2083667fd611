// Copyright 2026 The anyonkit Authors
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

#include "anyonkit/analysis.hpp"
#include "anyonkit/braiding.hpp"

using namespace anyonkit;

namespace {

const char* kSpecs[] = {"S3", "D4", "A4", "S4", "A5"};

void BM_CharacterTable(benchmark::State& state) {
  auto g = named_group(kSpecs[state.range(0)]);
  for (auto _ : state) benchmark::DoNotOptimize(character_table(g));
  state.SetLabel(kSpecs[state.range(0)]);
}
BENCHMARK(BM_CharacterTable)->DenseRange(0, 4);

void BM_QuantumDouble(benchmark::State& state) {
  auto g = named_group(kSpecs[state.range(0)]);
  for (auto _ : state) benchmark::DoNotOptimize(QuantumDouble(g));
  state.SetLabel(kSpecs[state.range(0)]);
}
BENCHMARK(BM_QuantumDouble)->DenseRange(0, 4);

void BM_ModularData(benchmark::State& state) {
  QuantumDouble dbl(named_group(kSpecs[state.range(0)]));
  for (auto _ : state) benchmark::DoNotOptimize(modular_data(dbl));
  state.SetLabel(kSpecs[state.range(0)]);
}
BENCHMARK(BM_ModularData)->DenseRange(0, 4);

void BM_FusionTable(benchmark::State& state) {
  QuantumDouble dbl(named_group(kSpecs[state.range(0)]));
  auto md = modular_data(dbl);
  for (auto _ : state) benchmark::DoNotOptimize(fusion_table(dbl, md));
  state.SetLabel(kSpecs[state.range(0)]);
}
BENCHMARK(BM_FusionTable)->DenseRange(0, 4);

void BM_Associativity(benchmark::State& state) {
  QuantumDouble dbl(named_group("A5"));
  auto table = fusion_table(dbl, modular_data(dbl));
  for (auto _ : state) benchmark::DoNotOptimize(check_associativity(table));
}
BENCHMARK(BM_Associativity)->Unit(benchmark::kMillisecond);

void BM_BraidMatrix(benchmark::State& state) {
  QuantumDouble dbl(named_group("S4"));
  InternalSpace a(dbl, static_cast<std::size_t>(state.range(0)));
  InternalSpace b(dbl, static_cast<std::size_t>(state.range(1)));
  for (auto _ : state) benchmark::DoNotOptimize(braid_matrix(a, b));
}
BENCHMARK(BM_BraidMatrix)->Args({1, 1})->Args({9, 12})->Args({20, 20});

void BM_ClosedSubsystems(benchmark::State& state) {
  QuantumDouble dbl(named_group("A4"));
  auto table = fusion_table(dbl, modular_data(dbl));
  for (auto _ : state) benchmark::DoNotOptimize(closed_subsystems(table));
}
BENCHMARK(BM_ClosedSubsystems)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
