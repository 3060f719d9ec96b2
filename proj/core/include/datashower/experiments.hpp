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

#pragma once

#include <string>
#include <vector>

#include "datashower/scenario.hpp"

namespace datashower {

/// Experiment registry: each name reproduces one figure-style dataset as a
/// plot-ready CSV. Every file starts with a comment line recording the
/// scenario hash and master seed, so reruns are verifiably identical.
const std::vector<std::string>& experiment_names();
bool is_experiment_name(const std::string& name);

/// Runs the named experiment and returns the paths written. Unknown names
/// throw ConfigError; scheduler-budget violations propagate as
/// BudgetExceeded. Monte Carlo batches fan out over a worker pool capped by
/// DATASHOWER_THREADS (default: hardware concurrency); outputs do not
/// depend on the pool size.
std::vector<std::string> run_experiment(const std::string& name,
                                        const Scenario& scenario,
                                        const std::string& out_dir);

/// One row of the scheduler-comparison sweep.
struct CompareRow {
  std::string algorithm;
  double overhead_ratio;
  double mean_bits;
  double ci95_bits;
  int runs;
};

/// The scheduler-compare computation, exposed for the acceptance suite.
std::vector<CompareRow> scheduler_compare_rows(const Scenario& scenario);

int worker_count();

}  // namespace datashower
