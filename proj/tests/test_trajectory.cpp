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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <sstream>

#include "datashower/trajectory.hpp"

using namespace datashower;

TEST_CASE("straight head-on pass geometry") {
  StraightLinePath p(0.0, 1.0, 10.0);
  CHECK(p.distance_at(0.0) == doctest::Approx(10.0));
  CHECK(p.distance_at(10.0) == doctest::Approx(0.0));
  CHECK(p.distance_at(20.0) == doctest::Approx(10.0));
  CHECK(p.t_end() == doctest::Approx(20.0));
}

TEST_CASE("straight pass attains d_min at the perpendicular foot") {
  StraightLinePath p(5.0, 2.0, 200.0);
  const double tv = p.closest_approach_time();
  CHECK(p.distance_at(tv) == doctest::Approx(5.0).epsilon(1e-12));
  CHECK(tv == doctest::Approx(p.x0_m() / 2.0));
  // Convex with a single minimum: strictly decreasing then increasing.
  double prev = p.distance_at(0.0);
  for (double t = 1.0; t < tv; t += 1.0) {
    const double d = p.distance_at(t);
    CHECK(d < prev);
    prev = d;
  }
  prev = p.distance_at(tv);
  for (double t = tv + 1.0; t <= p.t_end(); t += 1.0) {
    const double d = p.distance_at(t);
    CHECK(d > prev);
    prev = d;
  }
}

TEST_CASE("entry-angle construction is consistent with d_min") {
  StraightLinePath p = StraightLinePath::from_entry_angle(0.3, 2.0, 200.0);
  CHECK(p.d_min_m == doctest::Approx(200.0 * std::sin(0.3)).epsilon(1e-12));
  CHECK(p.alpha_rad() == doctest::Approx(0.3).epsilon(1e-12));
  CHECK_THROWS_AS(StraightLinePath::from_entry_angle(1.6, 2.0, 200.0),
                  std::invalid_argument);
}

TEST_CASE("straight path invariants are enforced") {
  CHECK_THROWS_AS(StraightLinePath(0.0, 0.0, 10.0), std::invalid_argument);
  CHECK_THROWS_AS(StraightLinePath(-1.0, 1.0, 10.0), std::invalid_argument);
  CHECK_THROWS_AS(StraightLinePath(11.0, 1.0, 10.0), std::invalid_argument);
}

TEST_CASE("trace interpolation and span") {
  TraceTrajectory trace({{0.0, 100.0}, {10.0, 50.0}});
  CHECK(trace.distance_at(5.0) == doctest::Approx(75.0));
  Trajectory traj(trace);
  CHECK(traj.t_begin() == 0.0);
  CHECK(traj.t_end() == 10.0);
  CHECK_THROWS_AS(traj.distance_at(-1.0), std::domain_error);
  CHECK_THROWS_AS(traj.distance_at(10.5), std::domain_error);
}

TEST_CASE("trace invariants are enforced") {
  CHECK_THROWS_AS(TraceTrajectory({{0.0, 1.0}}), std::invalid_argument);
  CHECK_THROWS_AS(TraceTrajectory({{0.0, 1.0}, {0.0, 2.0}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(TraceTrajectory({{0.0, 1.0}, {1.0, 0.0}}),
                  std::invalid_argument);
}

TEST_CASE("contact windows: never in range") {
  Trajectory traj(StraightLinePath(300.0, 5.0, 400.0));
  CHECK(traj.contact_windows(200.0).empty());
}

TEST_CASE("contact windows: symmetric pass spanning the whole range") {
  Trajectory traj(StraightLinePath(0.0, 1.0, 200.0));
  const auto windows = traj.contact_windows(200.0);
  REQUIRE(windows.size() == 1);
  CHECK(windows[0].t_in_s == doctest::Approx(0.0).epsilon(1e-6));
  CHECK(windows[0].t_out_s == doctest::Approx(400.0).epsilon(1e-6));
}

TEST_CASE("contact windows: interior crossings located to 1 ms") {
  Trajectory traj(StraightLinePath(5.0, 3.0, 400.0));
  const double d_max = 200.0;
  const auto windows = traj.contact_windows(d_max);
  REQUIRE(windows.size() == 1);
  for (double endpoint : {windows[0].t_in_s, windows[0].t_out_s}) {
    CHECK(std::abs(traj.distance_at(endpoint) - d_max) <= 3.0 * 2e-3);
  }
}

TEST_CASE("contact windows: a two-dip trace yields two windows") {
  TraceTrajectory trace({{0.0, 300.0},
                         {10.0, 100.0},
                         {20.0, 300.0},
                         {30.0, 100.0},
                         {40.0, 300.0}});
  Trajectory traj(trace);
  const auto windows = traj.contact_windows(200.0);
  REQUIRE(windows.size() == 2);
  // Linear inversion makes the crossings exact: 300 -> 100 hits 200 halfway.
  CHECK(windows[0].t_in_s == doctest::Approx(5.0).epsilon(1e-12));
  CHECK(windows[0].t_out_s == doctest::Approx(15.0).epsilon(1e-12));
  CHECK(windows[1].t_in_s == doctest::Approx(25.0).epsilon(1e-12));
  CHECK(windows[1].t_out_s == doctest::Approx(35.0).epsilon(1e-12));
}

TEST_CASE("windows are disjoint and sorted") {
  TraceTrajectory trace({{0.0, 250.0},
                         {5.0, 150.0},
                         {10.0, 250.0},
                         {15.0, 120.0},
                         {20.0, 260.0},
                         {25.0, 180.0},
                         {30.0, 240.0}});
  Trajectory traj(trace);
  const auto windows = traj.contact_windows(200.0);
  REQUIRE(windows.size() == 3);
  for (std::size_t i = 0; i + 1 < windows.size(); ++i) {
    CHECK(windows[i].t_out_s < windows[i + 1].t_in_s);
  }
}

TEST_CASE("distance extrema and slope bounds over intervals") {
  StraightLinePath p(5.0, 2.0, 200.0);
  Trajectory traj(p);
  const double tv = p.closest_approach_time();
  CHECK(traj.min_distance_over(tv - 1.0, tv + 1.0) == doctest::Approx(5.0));
  CHECK(traj.max_distance_over(0.0, tv) == doctest::Approx(200.0));
  CHECK(traj.max_abs_slope_over(0.0, tv) == 2.0);

  TraceTrajectory trace({{0.0, 100.0}, {10.0, 40.0}, {20.0, 100.0}});
  Trajectory ttraj(trace);
  CHECK(ttraj.min_distance_over(0.0, 20.0) == doctest::Approx(40.0));
  CHECK(ttraj.max_distance_over(5.0, 15.0) == doctest::Approx(70.0));
  CHECK(ttraj.max_abs_slope_over(0.0, 20.0) == doctest::Approx(6.0));
}

TEST_CASE("crossing times split levels exactly") {
  StraightLinePath p(0.0, 1.0, 200.0);
  Trajectory traj(p);
  const auto crossings = traj.crossing_times(10.0, 0.0, 400.0);
  REQUIRE(crossings.size() == 2);
  CHECK(crossings[0] == doctest::Approx(190.0).epsilon(1e-9));
  CHECK(crossings[1] == doctest::Approx(210.0).epsilon(1e-9));
  CHECK(traj.crossing_times(300.0, 0.0, 400.0).empty());
}

TEST_CASE("trace csv loading, both header forms") {
  SUBCASE("t,d form") {
    std::istringstream in("t_s,d_m\n0,100\n10,50\n");
    TraceTrajectory trace = TraceTrajectory::from_csv_stream(in, "trace");
    CHECK(trace.distance_at(5.0) == doctest::Approx(75.0));
  }
  SUBCASE("t,x,y form reduces against the tower position") {
    std::istringstream in("t_s,x_m,y_m\n0,3,0\n10,0,4\n");
    TraceTrajectory trace =
        TraceTrajectory::from_csv_stream(in, "trace", {{0.0, 0.0}});
    CHECK(trace.distance_at(0.0) == doctest::Approx(3.0));
    CHECK(trace.distance_at(10.0) == doctest::Approx(4.0));
  }
  SUBCASE("x,y form without a tower is an error") {
    std::istringstream in("t_s,x_m,y_m\n0,3,0\n10,0,4\n");
    CHECK_THROWS_AS(TraceTrajectory::from_csv_stream(in, "trace"),
                    std::runtime_error);
  }
  SUBCASE("non-increasing time reports the line number") {
    std::istringstream in("t_s,d_m\n0,100\n10,50\n5,60\n");
    CHECK_THROWS_WITH_AS(TraceTrajectory::from_csv_stream(in, "trace"),
                         doctest::Contains("line 4"), std::runtime_error);
  }
}

TEST_CASE("time scaling stretches the span without touching distances") {
  TraceTrajectory trace({{0.0, 100.0}, {10.0, 50.0}});
  TraceTrajectory slow = trace.time_scaled(2.0);
  CHECK(slow.t_end() == doctest::Approx(20.0));
  CHECK(slow.distance_at(10.0) == doctest::Approx(75.0));
}

TEST_CASE("distance is continuous across the span") {
  for (const Trajectory& traj :
       {Trajectory(StraightLinePath(3.0, 2.5, 150.0)),
        Trajectory(TraceTrajectory(
            {{0.0, 210.0}, {7.0, 80.0}, {13.0, 5.5}, {25.0, 190.0}}))}) {
    const double a = traj.t_begin();
    const double b = traj.t_end();
    double prev = traj.distance_at(a);
    double max_jump = 0.0;
    const int n = 2000;
    for (int i = 1; i <= n; ++i) {
      const double t = a + (b - a) * i / n;
      const double d = traj.distance_at(t);
      max_jump = std::max(max_jump, std::abs(d - prev));
      prev = d;
    }
    // Bounded by max|slope| * step.
    const double step = (b - a) / n;
    CHECK(max_jump <= traj.max_abs_slope_over(a, b) * step * 1.0001);
  }
}

TEST_CASE("bundled synthetic journey has the expected shape") {
  TraceTrajectory trace = synthetic_urban_trace();
  Trajectory traj(trace);
  double min_d = 1e9;
  for (const auto& s : trace.samples) min_d = std::min(min_d, s.d_m);
  CHECK(min_d == doctest::Approx(5.02).epsilon(0.01));
  CHECK(trace.samples.front().d_m > 900.0);
  CHECK(trace.samples.back().d_m > 900.0);
  const auto windows = traj.contact_windows(200.0);
  REQUIRE(windows.size() == 1);
}
