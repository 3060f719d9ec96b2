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

#include <functional>
#include <span>

#include "datashower/channel.hpp"
#include "datashower/trajectory.hpp"

namespace datashower {

/// Link-establishment overheads charged against the contact time in the
/// closed-form bound: mmWave sync, THz sync, and the UL/DL switch time.
struct OverheadTimes {
  double eps_sync_mm_s = 0.0;
  double eps_sync_thz_s = 0.0;
  double eps_switch_s = 0.0;

  double total() const { return eps_sync_mm_s + eps_sync_thz_s + eps_switch_s; }
};

/// Step bounds for the composite-trapezoid integrations. Time-domain panels
/// are sized so consecutive samples differ by at most max_distance_step in
/// distance; distance-domain panels directly. Scaling both down by 2 is the
/// convergence check.
struct QuadratureOptions {
  double max_distance_step_m = 0.1;
  double max_eta_step_m = 0.05;

  QuadratureOptions halved() const {
    return {max_distance_step_m / 2.0, max_eta_step_m / 2.0};
  }
};

using CapacityFn = std::function<double(double /*d_m*/)>;

/// Integral of capacity(d(t)) dt over [a, b] (a subset of the trajectory
/// span). Instants with d(t) > d_max contribute zero; panels split at the
/// given distance levels and at trace sample instants. [bits]
double capacity_time_integral(const Trajectory& trajectory,
                              const CapacityFn& capacity, double d_max_m,
                              std::span<const double> split_levels_m,
                              double a_s, double b_s,
                              const QuadratureOptions& opts = {});
double capacity_time_integral(const Trajectory& trajectory,
                              const CapacityModel& model, double a_s,
                              double b_s, const QuadratureOptions& opts = {});

/// Time integral of capacity(d(t)) over every contact window with
/// d <= d_max. Panels split at the given distance levels (region
/// boundaries) and at trace sample instants. Returns 0 when the trajectory
/// never comes within range. [bits]
double bulk_integral(const Trajectory& trajectory, const CapacityFn& capacity,
                     double d_max_m, std::span<const double> split_levels_m,
                     const QuadratureOptions& opts = {});

/// Convenience overload for the combined capacity model (splits at d_th_thz,
/// range limit d_th_mm).
double bulk_integral(const Trajectory& trajectory, const CapacityModel& model,
                     const QuadratureOptions& opts = {});

/// Mean capacity over the distance interval [d_lo, d_hi]:
/// (1/(d_hi-d_lo)) * integral of capacity(eta) d eta. d_lo may be 0; the
/// integrand is evaluated no closer than a 0.1 mm antenna-separation floor.
double average_capacity(const CapacityFn& capacity, double d_lo_m,
                        double d_hi_m, std::span<const double> split_levels_m,
                        const QuadratureOptions& opts = {});
double average_capacity(const CapacityModel& model, double d_lo_m,
                        double d_hi_m, const QuadratureOptions& opts = {});

struct BulkBound {
  double bits = 0.0;
  /// Set when the overheads consume the whole contact time (or the path
  /// never enters range), in which case bits is clamped to 0.
  bool degenerate = false;
};

/// Closed-form constant-speed bound: usable contact time
/// (2 d_th_mm cos(alpha)/v - overheads) times the mean capacity over
/// [d_min, d_th_mm], with alpha taken at the d_th_mm sight line.
BulkBound bulk_closed_form(const StraightLinePath& path,
                           const CapacityModel& model,
                           const OverheadTimes& overheads,
                           const QuadratureOptions& opts = {});

/// Stub-friendly variant used by tests: capacity callable + explicit range.
BulkBound bulk_closed_form(const StraightLinePath& path,
                           const CapacityFn& capacity, double d_th_mm,
                           std::span<const double> split_levels_m,
                           const OverheadTimes& overheads,
                           const QuadratureOptions& opts = {});

}  // namespace datashower
