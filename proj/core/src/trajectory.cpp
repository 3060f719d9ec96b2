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

#include "datashower/trajectory.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace datashower {

namespace {

constexpr double kCrossingTolS = 1e-3;  // absolute tolerance for crossings

double span_eps(double a, double b) {
  return 1e-9 * std::max(1.0, std::abs(b - a));
}

}  // namespace

// ---- StraightLinePath ----

StraightLinePath::StraightLinePath(double d_min, double speed, double d_entry,
                                   double t_entry)
    : d_min_m(d_min), speed_mps(speed), d_entry_m(d_entry),
      t_entry_s(t_entry) {
  if (!(speed_mps > 0.0)) {
    throw std::invalid_argument("StraightLinePath: speed must be > 0");
  }
  if (d_min_m < 0.0 || d_min_m > d_entry_m) {
    throw std::invalid_argument(
        "StraightLinePath: need 0 <= d_min <= d_entry");
  }
}

StraightLinePath StraightLinePath::from_entry_angle(double alpha_rad,
                                                    double speed,
                                                    double d_entry,
                                                    double t_entry) {
  if (alpha_rad < 0.0 || alpha_rad >= std::numbers::pi / 2.0) {
    throw std::invalid_argument(
        "StraightLinePath: entry angle must be in [0, pi/2)");
  }
  return StraightLinePath(d_entry * std::sin(alpha_rad), speed, d_entry,
                          t_entry);
}

double StraightLinePath::alpha_rad() const {
  return std::asin(d_min_m / d_entry_m);
}

double StraightLinePath::x0_m() const {
  return std::sqrt(d_entry_m * d_entry_m - d_min_m * d_min_m);
}

double StraightLinePath::distance_at(double t_s) const {
  const double x = x0_m() - speed_mps * (t_s - t_entry_s);
  return std::hypot(d_min_m, x);
}

// ---- TraceTrajectory ----

TraceTrajectory::TraceTrajectory(std::vector<Sample> s)
    : samples(std::move(s)) {
  if (samples.size() < 2) {
    throw std::invalid_argument("TraceTrajectory: need at least 2 samples");
  }
  for (std::size_t i = 0; i < samples.size(); ++i) {
    if (!std::isfinite(samples[i].t_s) || !std::isfinite(samples[i].d_m)) {
      throw std::invalid_argument("TraceTrajectory: non-finite sample " +
                                  std::to_string(i));
    }
    if (!(samples[i].d_m > 0.0)) {
      throw std::invalid_argument(
          "TraceTrajectory: distances must be > 0 (sample " +
          std::to_string(i) + ")");
    }
    if (i > 0 && samples[i].t_s <= samples[i - 1].t_s) {
      throw std::invalid_argument(
          "TraceTrajectory: times must be strictly increasing (sample " +
          std::to_string(i) + ")");
    }
  }
}

TraceTrajectory TraceTrajectory::from_csv(
    const std::string& path, std::optional<std::pair<double, double>> tower) {
  std::ifstream in(path);
  if (!in) {
    throw std::runtime_error("TraceTrajectory: cannot open " + path);
  }
  return from_csv_stream(in, path, tower);
}

TraceTrajectory TraceTrajectory::from_csv_stream(
    std::istream& in, const std::string& source_name,
    std::optional<std::pair<double, double>> tower) {
  std::string line;
  long line_no = 0;
  auto fail = [&](const std::string& what) -> std::runtime_error {
    return std::runtime_error("TraceTrajectory: " + source_name + " line " +
                              std::to_string(line_no) + ": " + what);
  };

  if (!std::getline(in, line)) {
    throw std::runtime_error("TraceTrajectory: " + source_name + " is empty");
  }
  line_no = 1;
  while (!line.empty() && line[0] == '#') {
    if (!std::getline(in, line)) throw fail("no header row");
    ++line_no;
  }

  bool xy_form = false;
  if (line.find("t_s") != std::string::npos &&
      line.find("x_m") != std::string::npos &&
      line.find("y_m") != std::string::npos) {
    xy_form = true;
  } else if (line.find("t_s") == std::string::npos ||
             line.find("d_m") == std::string::npos) {
    throw fail("expected header 't_s,d_m' or 't_s,x_m,y_m'");
  }
  if (xy_form && !tower.has_value()) {
    throw fail("x/y trace needs a tower position");
  }

  std::vector<TraceTrajectory::Sample> samples;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    std::istringstream row(line);
    std::string field;
    std::vector<double> vals;
    while (std::getline(row, field, ',')) {
      try {
        vals.push_back(std::stod(field));
      } catch (const std::exception&) {
        throw fail("cannot parse '" + field + "'");
      }
    }
    const std::size_t want = xy_form ? 3 : 2;
    if (vals.size() != want) {
      throw fail("expected " + std::to_string(want) + " columns, got " +
                 std::to_string(vals.size()));
    }
    double d;
    if (xy_form) {
      d = std::hypot(vals[1] - tower->first, vals[2] - tower->second);
    } else {
      d = vals[1];
    }
    if (!samples.empty() && vals[0] <= samples.back().t_s) {
      throw fail("t not strictly increasing");
    }
    if (!(d > 0.0)) {
      throw fail("distance must be > 0");
    }
    samples.push_back({vals[0], d});
  }
  if (samples.size() < 2) {
    throw std::runtime_error("TraceTrajectory: " + source_name +
                             ": need at least 2 samples");
  }
  return TraceTrajectory(std::move(samples));
}

TraceTrajectory TraceTrajectory::time_scaled(double factor) const {
  if (!(factor > 0.0)) {
    throw std::invalid_argument("TraceTrajectory: scale factor must be > 0");
  }
  std::vector<Sample> scaled = samples;
  for (auto& s : scaled) s.t_s *= factor;
  return TraceTrajectory(std::move(scaled));
}

double TraceTrajectory::distance_at(double t_s) const {
  auto it = std::lower_bound(
      samples.begin(), samples.end(), t_s,
      [](const Sample& s, double t) { return s.t_s < t; });
  if (it == samples.begin()) return samples.front().d_m;
  if (it == samples.end()) return samples.back().d_m;
  const Sample& hi = *it;
  const Sample& lo = *(it - 1);
  const double w = (t_s - lo.t_s) / (hi.t_s - lo.t_s);
  return lo.d_m + w * (hi.d_m - lo.d_m);
}

// ---- Trajectory ----

double Trajectory::t_begin() const {
  return std::visit([](const auto& t) { return t.t_begin(); }, impl_);
}

double Trajectory::t_end() const {
  return std::visit([](const auto& t) { return t.t_end(); }, impl_);
}

double Trajectory::distance_at(double t_s) const {
  const double eps = span_eps(t_begin(), t_end());
  if (t_s < t_begin() - eps || t_s > t_end() + eps) {
    throw std::domain_error("Trajectory: t=" + std::to_string(t_s) +
                            " outside span [" + std::to_string(t_begin()) +
                            ", " + std::to_string(t_end()) + "]");
  }
  const double t = std::clamp(t_s, t_begin(), t_end());
  return std::visit([&](const auto& traj) { return traj.distance_at(t); },
                    impl_);
}

namespace {

// Bisects d(t)-level on [lo, hi] where the sign differs at the ends.
template <typename F>
double bisect_crossing(const F& d, double level, double lo, double hi) {
  bool lo_inside = d(lo) <= level;
  for (int i = 0; i < 64 && hi - lo > kCrossingTolS; ++i) {
    const double mid = 0.5 * (lo + hi);
    if ((d(mid) <= level) == lo_inside) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace

std::vector<ContactWindow> Trajectory::contact_windows(double d_max_m) const {
  if (!(d_max_m > 0.0)) {
    throw std::invalid_argument("contact_windows: d_max must be > 0");
  }
  std::vector<ContactWindow> windows;

  if (const StraightLinePath* p = as_straight()) {
    if (p->d_min_m > d_max_m) return windows;
    auto dist = [&](double t) { return p->distance_at(t); };
    const double tv = p->closest_approach_time();
    double t1 = p->t_begin();
    if (dist(t1) > d_max_m) {
      t1 = bisect_crossing(dist, d_max_m, t1, tv);
    }
    double t2 = p->t_end();
    if (dist(t2) > d_max_m) {
      t2 = bisect_crossing(dist, d_max_m, tv, t2);
    }
    windows.push_back({t1, t2});
    return windows;
  }

  const TraceTrajectory& trace = *as_trace();
  const auto& s = trace.samples;
  bool inside = s[0].d_m <= d_max_m;
  double t_open = s[0].t_s;
  for (std::size_t i = 0; i + 1 < s.size(); ++i) {
    const bool next_inside = s[i + 1].d_m <= d_max_m;
    if (next_inside == inside) continue;
    // Linear inverse within the segment.
    const double f0 = s[i].d_m - d_max_m;
    const double f1 = s[i + 1].d_m - d_max_m;
    const double tc = s[i].t_s + (0.0 - f0) / (f1 - f0) * (s[i + 1].t_s - s[i].t_s);
    if (inside) {
      windows.push_back({t_open, tc});
    } else {
      t_open = tc;
    }
    inside = next_inside;
  }
  if (inside) {
    windows.push_back({t_open, s.back().t_s});
  }
  return windows;
}

double Trajectory::max_distance_over(double a_s, double b_s) const {
  if (const StraightLinePath* p = as_straight()) {
    return std::max(p->distance_at(a_s), p->distance_at(b_s));
  }
  const TraceTrajectory& trace = *as_trace();
  double best = std::max(distance_at(a_s), distance_at(b_s));
  for (const auto& smp : trace.samples) {
    if (smp.t_s > a_s && smp.t_s < b_s) best = std::max(best, smp.d_m);
  }
  return best;
}

double Trajectory::min_distance_over(double a_s, double b_s) const {
  if (const StraightLinePath* p = as_straight()) {
    const double tv = p->closest_approach_time();
    if (tv >= a_s && tv <= b_s) return p->d_min_m;
    return std::min(p->distance_at(a_s), p->distance_at(b_s));
  }
  const TraceTrajectory& trace = *as_trace();
  double best = std::min(distance_at(a_s), distance_at(b_s));
  for (const auto& smp : trace.samples) {
    if (smp.t_s > a_s && smp.t_s < b_s) best = std::min(best, smp.d_m);
  }
  return best;
}

double Trajectory::max_abs_slope_over(double a_s, double b_s) const {
  if (const StraightLinePath* p = as_straight()) {
    return p->speed_mps;
  }
  const TraceTrajectory& trace = *as_trace();
  const auto& s = trace.samples;
  double best = 0.0;
  for (std::size_t i = 0; i + 1 < s.size(); ++i) {
    if (s[i + 1].t_s <= a_s || s[i].t_s >= b_s) continue;
    best = std::max(best, std::abs((s[i + 1].d_m - s[i].d_m) /
                                   (s[i + 1].t_s - s[i].t_s)));
  }
  return best;
}

std::vector<double> Trajectory::crossing_times(double level_m, double a_s,
                                               double b_s) const {
  std::vector<double> out;
  if (const StraightLinePath* p = as_straight()) {
    if (level_m < p->d_min_m) return out;
    const double s = std::sqrt(level_m * level_m - p->d_min_m * p->d_min_m);
    const double t1 = p->t_entry_s + (p->x0_m() - s) / p->speed_mps;
    const double t2 = p->t_entry_s + (p->x0_m() + s) / p->speed_mps;
    for (double t : {t1, t2}) {
      if (t > a_s && t < b_s) out.push_back(t);
    }
    return out;
  }
  const TraceTrajectory& trace = *as_trace();
  const auto& smp = trace.samples;
  for (std::size_t i = 0; i + 1 < smp.size(); ++i) {
    const double f0 = smp[i].d_m - level_m;
    const double f1 = smp[i + 1].d_m - level_m;
    if ((f0 <= 0.0) == (f1 <= 0.0)) continue;
    const double tc =
        smp[i].t_s + (0.0 - f0) / (f1 - f0) * (smp[i + 1].t_s - smp[i].t_s);
    if (tc > a_s && tc < b_s) {
      if (out.empty() || tc - out.back() > 1e-12) out.push_back(tc);
    }
  }
  return out;
}

std::vector<double> Trajectory::breakpoints(double a_s, double b_s) const {
  std::vector<double> out;
  if (const TraceTrajectory* trace = as_trace()) {
    for (const auto& smp : trace->samples) {
      if (smp.t_s > a_s && smp.t_s < b_s) out.push_back(smp.t_s);
    }
  } else if (const StraightLinePath* p = as_straight()) {
    const double tv = p->closest_approach_time();
    if (tv > a_s && tv < b_s) out.push_back(tv);
  }
  return out;
}

namespace {

constexpr double kUrbanRouteHalfLength = 965.0;  // m each side of the tower
constexpr double kUrbanClosestApproach = 5.02;   // m

double urban_speed(double abs_x) {
  if (abs_x > 300.0) return 6.5;
  if (abs_x > 150.0) return 5.0;
  if (abs_x > 50.0) return 3.0;
  if (abs_x > 15.0) return 1.2;
  return 0.6;
}

}  // namespace

TraceTrajectory synthetic_urban_trace() {
  std::vector<TraceTrajectory::Sample> samples;
  const double dt = 0.25;
  double x = -kUrbanRouteHalfLength;
  double t = 0.0;
  bool dwelled = false;
  int step = 0;
  auto record = [&] {
    if (step % 4 == 0) {
      samples.push_back({t, std::hypot(kUrbanClosestApproach, x)});
    }
    ++step;
  };
  record();
  while (x < kUrbanRouteHalfLength) {
    if (!dwelled && x >= 0.0) {
      // Hold at the closest point (stopped in traffic by the tower).
      const double t_dwell_end = t + 40.0;
      while (t < t_dwell_end - dt / 2) {
        t += dt;
        record();
      }
      dwelled = true;
    }
    x += urban_speed(std::abs(x)) * dt;
    t += dt;
    record();
  }
  return TraceTrajectory(std::move(samples));
}

double synthetic_urban_trace_route_length_m() {
  return 2.0 * kUrbanRouteHalfLength;
}

}  // namespace datashower
