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

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "datashower/bulk.hpp"
#include "datashower/channel.hpp"
#include "datashower/macsim.hpp"
#include "datashower/rng.hpp"
#include "datashower/scheduler.hpp"
#include "datashower/trajectory.hpp"

namespace datashower {

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct VehicleSpec {
  enum class Kind { kStraight, kTrace };
  Kind kind = Kind::kStraight;
  // straight-line pass
  double d_min_m = 4.0;
  double speed_mps = 10.0 / 3.6;
  double d_entry_m = 200.0;
  double t_entry_s = 0.0;
  // trace-backed
  std::string trace_file;
  double time_scale = 1.0;
  std::optional<std::pair<double, double>> tower_xy;
};

/// Randomized multi-vehicle setup: straight passes with uniform speeds and
/// arrival offsets, shared closest-approach distance, uniform demands.
struct FleetSpec {
  int count = 5;
  double speed_min_mps = 3.0;
  double speed_max_mps = 7.0;
  double arrival_span_s = 30.0;
  double d_min_m = 5.0;
  double demand_min_bits = 5e12;
  double demand_max_bits = 15e12;
  double overhead_s = 0.0;
};

struct SchedulerSpec {
  double slot_duration_s = 0.0865;
  double overhead_s = 0.0;
  double optimal_budget = 1e8;
  std::string algorithm = "greedy";
};

/// Setup for the scheduler-comparison sweep. The slot duration here is
/// deliberately coarse so the exhaustive baseline stays affordable over the
/// whole Monte Carlo batch.
struct CompareSpec {
  int vehicles = 2;
  double slot_duration_s = 12.0;
  double arrival_span_s = 30.0;
  double speed_min_mps = 3.0;
  double speed_max_mps = 7.0;
  double d_min_m = 5.0;
  double demand_min_bits = 2e13;
  double demand_max_bits = 6e13;
  std::vector<double> overhead_ratios = {1e-4, 1e-3, 1e-2, 1e-1, 1.0};
};

struct Scenario {
  std::string name = "table1_defaults";
  std::uint64_t seed = 1;
  bool seed_present = true;
  int runs = 1000;

  ThzParams thz;
  MmWaveParams mmwave;
  std::string absorption_csv;  // optional, resolved against base_dir

  std::vector<VehicleSpec> vehicles;
  FleetSpec fleet;
  SchedulerSpec scheduler;
  CompareSpec compare;
  ProtocolConfig protocol;
  OverheadTimes overheads;
  QuadratureOptions quadrature;

  std::string base_dir = ".";

  /// The bundled Table-1 configuration plus a single d_min = 4 m, 10 km/h
  /// straight pass.
  static Scenario table1_defaults();

  static Scenario from_json_file(const std::string& path);
  static Scenario from_json_text(const std::string& text,
                                 const std::string& source_name,
                                 const std::string& base_dir);

  std::string to_json_text() const;
  /// FNV-1a 64 over the canonical JSON dump, hex-encoded.
  std::string canonical_hash() const;

  std::string resolve_path(const std::string& relative) const;

  /// Throws ConfigError when the scenario is not buildable.
  CapacityModel build_model() const;
  std::vector<Trajectory> build_trajectories() const;
};

struct Diagnostic {
  std::string path;     // config-path location, e.g. "thz.d_th_m"
  std::string message;
};

/// Checks every invariant the scenario can violate (region ordering, missing
/// trace files, non-positive demands, ...) and lists each violation with its
/// config-path location. Empty result means the scenario is clean.
std::vector<Diagnostic> validate_scenario(const Scenario& scenario);

/// A one-parameter sweep: the dotted config path to vary (say
/// "thz.tx_power_dbm" or "scheduler.overhead_s"), the values to take, and
/// how many Monte Carlo runs to spend per value.
struct SweepSpec {
  std::string parameter_path;
  std::vector<double> values;
  int runs_per_value = 1;
};

/// Copy of `base` with the swept parameter replaced. Throws ConfigError when
/// the path does not name a numeric scalar in the scenario.
Scenario apply_sweep_value(const Scenario& base,
                           const std::string& parameter_path, double value);

std::vector<Diagnostic> validate_sweep(const SweepSpec& sweep,
                                       const Scenario& base);

std::vector<StraightLinePath> generate_fleet(int n_vehicles,
                                             double speed_min_mps,
                                             double speed_max_mps,
                                             double arrival_span_s,
                                             double d_min_m, double d_entry_m,
                                             Rng& rng);

std::vector<VehicleDemand> generate_demands(int n_vehicles,
                                            double demand_min_bits,
                                            double demand_max_bits,
                                            double overhead_s, Rng& rng);

}  // namespace datashower
