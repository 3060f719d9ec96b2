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

#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace datashower {

/// Maximal interval [t_in, t_out] during which the antenna separation stays
/// within a given range threshold.
struct ContactWindow {
  double t_in_s;
  double t_out_s;
  double duration() const { return t_out_s - t_in_s; }
};

/// Constant-speed straight pass by the tower.
///
/// The vehicle enters at distance d_entry, travels a straight line whose
/// perpendicular offset from the tower is d_min, and exits symmetrically:
///   d(t) = sqrt(d_min^2 + (x0 - v (t - t_entry))^2),  x0 = d_entry cos(alpha)
/// with alpha = asin(d_min/d_entry) the entry angle between the sight line
/// and the motion direction. Defined for t in [t_entry, t_entry + 2 x0 / v].
struct StraightLinePath {
  double d_min_m = 0.0;
  double speed_mps = 1.0;
  double d_entry_m = 200.0;
  double t_entry_s = 0.0;

  StraightLinePath(double d_min, double speed, double d_entry,
                   double t_entry = 0.0);

  static StraightLinePath from_entry_angle(double alpha_rad, double speed,
                                           double d_entry,
                                           double t_entry = 0.0);

  double alpha_rad() const;
  double x0_m() const;  // along-track distance from entry to closest approach
  double t_begin() const { return t_entry_s; }
  double t_end() const { return t_entry_s + 2.0 * x0_m() / speed_mps; }
  double closest_approach_time() const { return t_entry_s + x0_m() / speed_mps; }
  double distance_at(double t_s) const;
};

/// Piecewise-linear distance trace, (t, d) samples with strictly
/// increasing t.
struct TraceTrajectory {
  struct Sample {
    double t_s;
    double d_m;
  };
  std::vector<Sample> samples;

  explicit TraceTrajectory(std::vector<Sample> samples);

  /// Loads `t_s,d_m` or `t_s,x_m,y_m` CSV (header row required). The x/y
  /// form needs the tower position to reduce coordinates to distances.
  /// Parse errors report the offending line number.
  static TraceTrajectory from_csv(
      const std::string& path,
      std::optional<std::pair<double, double>> tower_xy = std::nullopt);
  static TraceTrajectory from_csv_stream(
      std::istream& in, const std::string& source_name,
      std::optional<std::pair<double, double>> tower_xy = std::nullopt);

  /// Copy with the time axis scaled by `factor` around t=0 (a factor of 2
  /// halves the average speed).
  TraceTrajectory time_scaled(double factor) const;

  double t_begin() const { return samples.front().t_s; }
  double t_end() const { return samples.back().t_s; }
  double distance_at(double t_s) const;
};

/// Value-semantic wrapper over the two trajectory kinds. Immutable after
/// construction; all queries are const and thread-safe.
class Trajectory {
 public:
  Trajectory(StraightLinePath path) : impl_(std::move(path)) {}
  Trajectory(TraceTrajectory trace) : impl_(std::move(trace)) {}

  double t_begin() const;
  double t_end() const;

  /// d(t); throws std::domain_error for t outside [t_begin, t_end].
  double distance_at(double t_s) const;

  /// Maximal disjoint intervals with d(t) <= d_max, in time order. Interior
  /// boundary crossings are located to 1 ms: bisection on analytic paths,
  /// exact linear inversion on trace segments.
  std::vector<ContactWindow> contact_windows(double d_max_m) const;

  /// Largest/smallest separation over [a, b] (subset of the span).
  double max_distance_over(double a_s, double b_s) const;
  double min_distance_over(double a_s, double b_s) const;

  /// Upper bound on |d'(t)| over [a, b]; used to size quadrature steps.
  double max_abs_slope_over(double a_s, double b_s) const;

  /// Times in (a, b) where d crosses `level`, ascending. Used to split
  /// integration panels at capacity-model region boundaries.
  std::vector<double> crossing_times(double level_m, double a_s,
                                     double b_s) const;

  /// Interior integration breakpoints in (a, b): trace sample instants, or
  /// the closest-approach instant of a straight pass.
  std::vector<double> breakpoints(double a_s, double b_s) const;

  const StraightLinePath* as_straight() const {
    return std::get_if<StraightLinePath>(&impl_);
  }
  const TraceTrajectory* as_trace() const {
    return std::get_if<TraceTrajectory>(&impl_);
  }

 private:
  std::variant<StraightLinePath, TraceTrajectory> impl_;
};

/// Bundled synthetic urban journey: a straight two-way drive past the tower
/// with urban speed steps, slowing on approach and holding ~40 s near the
/// closest point (5.02 m), then pulling away. Sampled at 1 s.
TraceTrajectory synthetic_urban_trace();

/// Along-route length of the synthetic journey, for average-speed bookkeeping.
double synthetic_urban_trace_route_length_m();

}  // namespace datashower
