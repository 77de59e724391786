// Copyright 2026 The gateassign Authors
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

// Serial reference versus OpenMP kernels.

#include <random>
#include <vector>

#include "benchmark/benchmark.h"
#include "gateassign/objective.h"
#include "gateassign/schedule.h"
#include "gateassign/solver.h"

namespace gateassign {
namespace {

SolveConfig Config(int gates) {
  SolveConfig cfg;
  cfg.gate_count = gates;
  return cfg;
}

// Exact search on a generated schedule with a few gates above the minimum.
struct ExactInstance {
  Schedule schedule = GenerateSchedule(22, 360, 900, 60, 5);
  SolveConfig cfg = Config(MinGatesRequired(schedule, kDefaultBuffer) + 1);
};

void BM_ExactSerial(benchmark::State& state) {
  const ExactInstance in;
  for (auto _ : state) {
    benchmark::DoNotOptimize(serial::SolveExact(in.schedule, in.cfg));
  }
}
BENCHMARK(BM_ExactSerial)->Unit(benchmark::kMillisecond);

void BM_ExactParallel(benchmark::State& state) {
  const ExactInstance in;
  ExactOptions options;
  options.bound = static_cast<BoundKind>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(SolveExact(in.schedule, in.cfg, options));
  }
}
BENCHMARK(BM_ExactParallel)
    ->Arg(static_cast<int>(BoundKind::kCommitted))
    ->Arg(static_cast<int>(BoundKind::kMatching))
    ->Unit(benchmark::kMillisecond);

// Random feasible start: each flight goes to a random gate that is free for
// it, which leaves many improving moves.
struct LocalInstance {
  Schedule schedule = GenerateSchedule(500, 360, 1439, 60, 0);
  SolveConfig cfg = Config(MinGatesRequired(schedule, kDefaultBuffer) + 10);
  Assignment start;
  LocalInstance() {
    std::mt19937_64 rng(4);
    start.gate_count = cfg.gate_count;
    start.gate_of.assign(schedule.size(), -1);
    std::vector<Minutes> free_from(cfg.gate_count, -kDefaultBuffer - 1);
    for (int i : schedule.chronological_order()) {
      const LockedInterval li = LockedIntervalOf(schedule[i], kDefaultBuffer);
      std::vector<int> open;
      for (int g = 0; g < cfg.gate_count; ++g) {
        if (free_from[g] < li.start) open.push_back(g);
      }
      const int g = open[std::uniform_int_distribution<std::size_t>(
          0, open.size() - 1)(rng)];
      start.gate_of[i] = g;
      free_from[g] = li.end;
    }
  }
};

void BM_LocalSearchSerial(benchmark::State& state) {
  const LocalInstance in;
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        serial::ImproveLocalSearch(in.schedule, in.start, in.cfg));
  }
}
BENCHMARK(BM_LocalSearchSerial)->Unit(benchmark::kMillisecond);

void BM_LocalSearchParallel(benchmark::State& state) {
  const LocalInstance in;
  for (auto _ : state) {
    benchmark::DoNotOptimize(ImproveLocalSearch(in.schedule, in.start, in.cfg));
  }
}
BENCHMARK(BM_LocalSearchParallel)->Unit(benchmark::kMillisecond);

// Deliberately crowded random assignment so every gate has long scans.
struct ConflictInstance {
  Schedule schedule = GenerateSchedule(20000, 0, 2700, 120, 9);
  Assignment a;
  ConflictInstance() {
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<int> gate(0, 63);
    a.gate_count = 64;
    for (std::size_t i = 0; i < schedule.size(); ++i) a.gate_of.push_back(gate(rng));
  }
};

void BM_ConflictCountSerial(benchmark::State& state) {
  const ConflictInstance in;
  for (auto _ : state) {
    benchmark::DoNotOptimize(serial::ConflictCount(in.schedule, in.a, 15));
  }
}
BENCHMARK(BM_ConflictCountSerial)->Unit(benchmark::kMicrosecond);

void BM_ConflictCountParallel(benchmark::State& state) {
  const ConflictInstance in;
  for (auto _ : state) {
    benchmark::DoNotOptimize(ConflictCount(in.schedule, in.a, 15));
  }
}
BENCHMARK(BM_ConflictCountParallel)->Unit(benchmark::kMicrosecond);

}  // namespace
}  // namespace gateassign

BENCHMARK_MAIN();
