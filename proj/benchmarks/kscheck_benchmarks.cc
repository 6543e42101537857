// Copyright 2026 The kscheck Authors
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


// Timings for the main search routines on the built-in sets.

#include <benchmark/benchmark.h>

#include "kscheck/frames.h"
#include "kscheck/inequality.h"
#include "kscheck/kssets.h"
#include "kscheck/symmetrizer.h"

namespace kscheck {
namespace {

VectorSet set_for(int which) {
  switch (which) {
    case 0:
      return build_S4();
    case 1:
      return build_A3();
    default:
      return build_S6();
  }
}

void BM_EnumerateFrames(benchmark::State& state) {
  const auto s = set_for(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_frames(s));
  state.SetLabel(s.name());
}
BENCHMARK(BM_EnumerateFrames)->DenseRange(0, 2);

void BM_EnumerateFramesNaive(benchmark::State& state) {
  const auto s = set_for(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_frames_naive(s));
  state.SetLabel(s.name());
}
BENCHMARK(BM_EnumerateFramesNaive)->DenseRange(0, 2);

void BM_Colorability(benchmark::State& state) {
  const auto s = set_for(static_cast<int>(state.range(0)));
  const auto frames = enumerate_frames(s);
  for (auto _ : state) benchmark::DoNotOptimize(ks_colorable(s, frames));
  state.SetLabel(s.name());
}
BENCHMARK(BM_Colorability)->DenseRange(0, 2);

void BM_NoncontextualBound(benchmark::State& state) {
  const auto s = build_A3();
  const auto frames = enumerate_frames(s);
  for (auto _ : state) benchmark::DoNotOptimize(noncontextual_bound(frames));
}
BENCHMARK(BM_NoncontextualBound);

void BM_QuantumValue(benchmark::State& state) {
  const auto s = build_A3();
  const auto frames = enumerate_frames(s);
  const auto psi = QuantumState::from_integers(std::vector<std::int64_t>{3, -1, 2});
  for (auto _ : state) benchmark::DoNotOptimize(quantum_value(frames, psi));
}
BENCHMARK(BM_QuantumValue);

void BM_GenerateBasis(benchmark::State& state) {
  const auto scenario =
      Scenario::make(static_cast<int>(state.range(0)), 3, Statistics::kBosonic);
  for (auto _ : state) benchmark::DoNotOptimize(generate_basis(scenario));
}
BENCHMARK(BM_GenerateBasis)->DenseRange(2, 4);

}  // namespace
}  // namespace kscheck

BENCHMARK_MAIN();
