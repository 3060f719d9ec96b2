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

#include "datashower/bulk.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace datashower {

namespace {

// Antennas are never mathematically coincident; head-on passes touch d = 0
// for an instant and the integrand is evaluated at this floor instead.
constexpr double kDistanceFloorM = 1e-4;

// Composite trapezoid over [a, b], starting from n0 uniform panels (the
// documented step bound) and doubling the panel count until two successive
// estimates agree to 1e-6 relative. Doubling reuses all previous samples.
template <typename F>
double trapezoid(const F& f, double a, double b, long n0) {
  if (!(b > a)) return 0.0;
  long n = std::max<long>(n0, 1);
  double h = (b - a) / static_cast<double>(n);
  double acc = 0.5 * (f(a) + f(b));
  for (long i = 1; i < n; ++i) {
    acc += f(a + static_cast<double>(i) * h);
  }
  double estimate = acc * h;
  // The round cap bounds the cost when the integrand has a genuine kink
  // (head-on passes touch the distance floor); smooth panels exit after a
  // couple of rounds.
  for (int round = 0; round < 8; ++round) {
    double mid_sum = 0.0;
    for (long i = 0; i < n; ++i) {
      mid_sum += f(a + (static_cast<double>(i) + 0.5) * h);
    }
    const double refined = 0.5 * estimate + 0.5 * h * mid_sum;
    const bool converged =
        std::abs(refined - estimate) <= 1e-6 * std::abs(refined) + 1e-9;
    estimate = refined;
    n *= 2;
    h *= 0.5;
    if (converged) break;
  }
  return estimate;
}

// Sorted, deduplicated interior split points for [a, b].
std::vector<double> collect_splits(double a, double b,
                                   const std::vector<double>& candidates) {
  std::vector<double> pts;
  pts.push_back(a);
  for (double t : candidates) {
    if (t > a && t < b) pts.push_back(t);
  }
  pts.push_back(b);
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end(),
                        [](double x, double y) { return y - x < 1e-12; }),
            pts.end());
  if (pts.back() < b) pts.back() = b;
  return pts;
}

}  // namespace

double capacity_time_integral(const Trajectory& trajectory,
                              const CapacityFn& capacity, double d_max_m,
                              std::span<const double> split_levels_m,
                              double a_s, double b_s,
                              const QuadratureOptions& opts) {
  if (!(opts.max_distance_step_m > 0.0)) {
    throw std::invalid_argument(
        "capacity_time_integral: step bound must be > 0");
  }
  if (!(b_s > a_s)) return 0.0;

  auto integrand = [&](double t) {
    const double d = std::max(trajectory.distance_at(t), kDistanceFloorM);
    return d <= d_max_m ? capacity(d) : 0.0;
  };

  std::vector<double> candidates = trajectory.breakpoints(a_s, b_s);
  for (double t : trajectory.crossing_times(d_max_m, a_s, b_s)) {
    candidates.push_back(t);
  }
  for (double level : split_levels_m) {
    for (double t : trajectory.crossing_times(level, a_s, b_s)) {
      candidates.push_back(t);
    }
  }

  double total = 0.0;
  const std::vector<double> pts = collect_splits(a_s, b_s, candidates);
  for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
    const double a = pts[i];
    const double b = pts[i + 1];
    const double slope = trajectory.max_abs_slope_over(a, b);
    // |d(t+h) - d(t)| <= slope * h, so this n keeps successive samples
    // within the distance-step bound.
    long n = 1;
    if (slope > 0.0) {
      n = static_cast<long>(
          std::ceil((b - a) * slope / opts.max_distance_step_m));
      n = std::max<long>(n, 1);
    }
    // The capacity is discontinuous across region boundaries and panels are
    // split exactly at the crossings, so the endpoint samples are pulled a
    // hair inside the panel to stay on its side of the jump.
    const double nudge = 1e-9 * (b - a);
    auto one_sided = [&](double t) {
      return integrand(std::clamp(t, a + nudge, b - nudge));
    };
    total += trapezoid(one_sided, a, b, n);
  }
  return total;
}

double capacity_time_integral(const Trajectory& trajectory,
                              const CapacityModel& model, double a_s,
                              double b_s, const QuadratureOptions& opts) {
  const double split[] = {model.thz().d_th_m};
  return capacity_time_integral(
      trajectory, [&](double d) { return model.capacity(d); },
      model.max_range_m(), split, a_s, b_s, opts);
}

double bulk_integral(const Trajectory& trajectory, const CapacityFn& capacity,
                     double d_max_m, std::span<const double> split_levels_m,
                     const QuadratureOptions& opts) {
  double total = 0.0;
  for (const ContactWindow& w : trajectory.contact_windows(d_max_m)) {
    total += capacity_time_integral(trajectory, capacity, d_max_m,
                                    split_levels_m, w.t_in_s, w.t_out_s, opts);
  }
  return total;
}

double bulk_integral(const Trajectory& trajectory, const CapacityModel& model,
                     const QuadratureOptions& opts) {
  const double split[] = {model.thz().d_th_m};
  return bulk_integral(
      trajectory, [&](double d) { return model.capacity(d); },
      model.max_range_m(), split, opts);
}

double average_capacity(const CapacityFn& capacity, double d_lo_m,
                        double d_hi_m, std::span<const double> split_levels_m,
                        const QuadratureOptions& opts) {
  if (d_lo_m < 0.0 || !(d_hi_m > d_lo_m)) {
    throw std::domain_error("average_capacity: need 0 <= d_lo < d_hi");
  }
  if (!(opts.max_eta_step_m > 0.0)) {
    throw std::invalid_argument("average_capacity: step bound must be > 0");
  }
  auto integrand = [&](double eta) {
    return capacity(std::max(eta, kDistanceFloorM));
  };
  std::vector<double> candidates(split_levels_m.begin(), split_levels_m.end());
  const std::vector<double> pts = collect_splits(d_lo_m, d_hi_m, candidates);
  double integral = 0.0;
  for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
    const double a = pts[i];
    const double b = pts[i + 1];
    const long n = std::max<long>(
        1, static_cast<long>(std::ceil((b - a) / opts.max_eta_step_m)));
    const double nudge = 1e-9 * (b - a);
    auto one_sided = [&](double eta) {
      return integrand(std::clamp(eta, a + nudge, b - nudge));
    };
    integral += trapezoid(one_sided, a, b, n);
  }
  return integral / (d_hi_m - d_lo_m);
}

double average_capacity(const CapacityModel& model, double d_lo_m,
                        double d_hi_m, const QuadratureOptions& opts) {
  const double split[] = {model.thz().d_th_m, model.mmwave().d_th_m};
  return average_capacity([&](double d) { return model.capacity(d); }, d_lo_m,
                          d_hi_m, split, opts);
}

BulkBound bulk_closed_form(const StraightLinePath& path,
                           const CapacityFn& capacity, double d_th_mm,
                           std::span<const double> split_levels_m,
                           const OverheadTimes& overheads,
                           const QuadratureOptions& opts) {
  if (path.d_min_m >= d_th_mm) {
    return {0.0, true};
  }
  // Entry angle taken at the d_th_mm sight line, as the contact time
  // 2 d_th cos(alpha)/v is.
  const double alpha = std::asin(path.d_min_m / d_th_mm);
  const double contact_time =
      2.0 * d_th_mm * std::cos(alpha) / path.speed_mps;
  const double usable = contact_time - overheads.total();
  if (!(usable > 0.0)) {
    return {0.0, true};
  }
  const double mean_capacity =
      average_capacity(capacity, path.d_min_m, d_th_mm, split_levels_m, opts);
  return {usable * mean_capacity, false};
}

BulkBound bulk_closed_form(const StraightLinePath& path,
                           const CapacityModel& model,
                           const OverheadTimes& overheads,
                           const QuadratureOptions& opts) {
  const double split[] = {model.thz().d_th_m};
  return bulk_closed_form(
      path, [&](double d) { return model.capacity(d); },
      model.mmwave().d_th_m, split, overheads, opts);
}

}  // namespace datashower
