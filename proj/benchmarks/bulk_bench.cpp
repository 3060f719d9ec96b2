// Copyright 2026 The datashower Authors
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

#include "datashower/bulk.hpp"

using namespace datashower;

static void BM_BulkIntegralPass(benchmark::State& state) {
  const CapacityModel model(ThzParams{}, MmWaveParams{});
  const Trajectory traj(StraightLinePath(4.0, 10.0 / 3.6, 200.0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(bulk_integral(traj, model));
  }
}
BENCHMARK(BM_BulkIntegralPass);

static void BM_AverageCapacity(benchmark::State& state) {
  const CapacityModel model(ThzParams{}, MmWaveParams{});
  for (auto _ : state) {
    benchmark::DoNotOptimize(average_capacity(model, 4.0, 200.0));
  }
}
BENCHMARK(BM_AverageCapacity);

static void BM_SlotIntegral(benchmark::State& state) {
  const CapacityModel model(ThzParams{}, MmWaveParams{});
  const Trajectory traj(StraightLinePath(5.0, 5.0, 200.0));
  const double t0 = traj.t_begin() + 30.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        capacity_time_integral(traj, model, t0, t0 + 12.0));
  }
}
BENCHMARK(BM_SlotIntegral);

BENCHMARK_MAIN();
