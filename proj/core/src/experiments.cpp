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

#include "datashower/experiments.hpp"

#include <array>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iomanip>
#include <mutex>
#include <thread>

namespace datashower {

namespace fs = std::filesystem;

int worker_count() {
  if (const char* env = std::getenv("DATASHOWER_THREADS")) {
    const int n = std::atoi(env);
    if (n >= 1) return n;
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

namespace {

// Runs fn(0..n-1) on the worker pool. Results must depend only on the index
// so the pool size never changes the output.
void parallel_for(int n, const std::function<void(int)>& fn) {
  const int workers = std::min(worker_count(), n);
  if (workers <= 1) {
    for (int i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<int> next{0};
  std::atomic<bool> failed{false};
  std::exception_ptr error;
  std::mutex error_mutex;
  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(workers));
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (;;) {
        const int i = next.fetch_add(1);
        if (i >= n || failed.load()) return;
        try {
          fn(i);
        } catch (...) {
          std::lock_guard<std::mutex> lock(error_mutex);
          if (!error) error = std::current_exception();
          failed.store(true);
          return;
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
}

std::ofstream open_csv(const std::string& out_dir, const std::string& filename,
                       const Scenario& scenario, const std::string& header,
                       std::vector<std::string>& written,
                       const std::string& extra_comment = "") {
  fs::create_directories(out_dir);
  const std::string path = (fs::path(out_dir) / filename).string();
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw std::runtime_error("cannot write " + path);
  }
  out << "# scenario=" << scenario.name << " hash=" << scenario.canonical_hash()
      << " seed=" << scenario.seed << "\n";
  if (!extra_comment.empty()) out << "# " << extra_comment << "\n";
  out << header << "\n";
  out << std::setprecision(12);
  written.push_back(path);
  return out;
}

// ---- individual experiments ----

void run_state_probs_mm(const Scenario& s, const std::string& out_dir,
                        std::vector<std::string>& written) {
  std::ofstream out = open_csv(out_dir, "state_probs_mm.csv", s,
                               "d_m,p_los,p_nlos,p_outage", written);
  for (int i = 1; i <= 800; ++i) {
    const double d = 0.5 * i;
    const StateProbs p = mmwave_state_probs(d, s.mmwave);
    out << d << "," << p.los << "," << p.nlos << "," << p.outage << "\n";
  }
}

void run_state_probs_thz(const Scenario& s, const std::string& out_dir,
                         std::vector<std::string>& written) {
  std::ofstream out = open_csv(out_dir, "state_probs_thz.csv", s,
                               "d_m,gamma_th_fraction,p_los,p_outage", written);
  const CapacityModel model = s.build_model();
  for (int ki = 1; ki <= 10; ++ki) {
    ThzParams p = model.thz();
    p.gamma_th_fraction = 0.1 * ki;
    for (int i = 1; i <= 100; ++i) {
      const double d = 0.1 * i;
      const double outage = thz_outage_prob(d, p);
      out << d << "," << p.gamma_th_fraction << "," << (1.0 - outage) << ","
          << outage << "\n";
    }
  }
}

void run_thz_capacity_grid(const Scenario& s, const std::string& out_dir,
                           std::vector<std::string>& written) {
  std::ofstream out =
      open_csv(out_dir, "thz_capacity_grid.csv", s,
               "tx_power_dbm,d_m,capacity_los_bps,capacity_bps", written);
  const CapacityModel base = s.build_model();
  for (int pi = 0; pi <= 20; ++pi) {
    ThzParams p = base.thz();
    p.tx_power_dbm = pi;
    const double gamma_th = p.gamma_th_fraction * thz_snr(p.d_th_m, p);
    for (int di = 2; di <= 40; ++di) {
      const double d = 0.25 * di;
      const double los = thz_capacity_los(d, p);
      const double outage = -std::expm1(-gamma_th / thz_snr(d, p));
      out << pi << "," << d << "," << los << "," << los * (1.0 - outage)
          << "\n";
    }
  }
}

void run_combined_capacity_grid(const Scenario& s, const std::string& out_dir,
                                std::vector<std::string>& written) {
  std::ofstream out = open_csv(out_dir, "combined_capacity_grid.csv", s,
                               "thz_tx_power_dbm,d_m,capacity_bps", written);
  const SweepSpec sweep{"thz.tx_power_dbm", {0.0, 5.0, 10.0, 15.0, 20.0}, 1};
  for (double power : sweep.values) {
    const Scenario varied = apply_sweep_value(s, sweep.parameter_path, power);
    const CapacityModel model = varied.build_model();
    for (int di = 1; di <= 200; ++di) {
      const double d = static_cast<double>(di);
      out << power << "," << d << "," << model.capacity(d) << "\n";
    }
  }
}

void run_bulk_vs_dmin_speed(const Scenario& s, const std::string& out_dir,
                            std::vector<std::string>& written) {
  std::ofstream out = open_csv(
      out_dir, "bulk_vs_dmin_speed.csv", s,
      "d_min_m,speed_kmh,bulk_closed_form_bits,bulk_integral_bits,degenerate",
      written);
  const CapacityModel model = s.build_model();
  struct Cell {
    double closed_form;
    double integral;
    bool degenerate;
  };
  std::vector<Cell> cells(100);
  parallel_for(100, [&](int idx) {
    const double d_min = static_cast<double>(idx / 10 + 1);
    const double v_kmh = static_cast<double>(idx % 10 + 1);
    const StraightLinePath path(d_min, v_kmh / 3.6, model.mmwave().d_th_m);
    const BulkBound bound =
        bulk_closed_form(path, model, s.overheads, s.quadrature);
    const double integral = bulk_integral(Trajectory(path), model, s.quadrature);
    cells[static_cast<std::size_t>(idx)] = {bound.bits, integral,
                                            bound.degenerate};
  });
  for (int idx = 0; idx < 100; ++idx) {
    const Cell& c = cells[static_cast<std::size_t>(idx)];
    out << (idx / 10 + 1) << "," << (idx % 10 + 1) << "," << c.closed_form
        << "," << c.integral << "," << (c.degenerate ? 1 : 0) << "\n";
  }
}

void run_bulk_trace(const Scenario& s, const std::string& out_dir,
                    std::vector<std::string>& written) {
  // Use the first trace vehicle if the scenario carries one; otherwise the
  // bundled synthetic urban trace.
  TraceTrajectory base = synthetic_urban_trace();
  double route_length_m = synthetic_urban_trace_route_length_m();
  for (const VehicleSpec& v : s.vehicles) {
    if (v.kind == VehicleSpec::Kind::kTrace) {
      base = TraceTrajectory::from_csv(s.resolve_path(v.trace_file),
                                       v.tower_xy);
      route_length_m = 0.0;  // unknown for user traces
      break;
    }
  }
  const CapacityModel model = s.build_model();
  const double nominal_duration = base.t_end() - base.t_begin();

  std::ofstream out = open_csv(out_dir, "bulk_trace.csv", s,
                               "time_scale,avg_speed_mps,bulk_bits", written);
  const std::vector<double> scales = {0.75, 1.0, 1.25, 1.5, 1.75, 2.0};
  std::vector<double> bulk(scales.size());
  parallel_for(static_cast<int>(scales.size()), [&](int i) {
    const TraceTrajectory scaled =
        base.time_scaled(scales[static_cast<std::size_t>(i)]);
    bulk[static_cast<std::size_t>(i)] =
        bulk_integral(Trajectory(scaled), model, s.quadrature);
  });
  for (std::size_t i = 0; i < scales.size(); ++i) {
    const double speed = route_length_m > 0.0
                             ? route_length_m / (nominal_duration * scales[i])
                             : 0.0;
    out << scales[i] << "," << speed << "," << bulk[i] << "\n";
  }
}

void run_schedule_timeline(const Scenario& s, const std::string& out_dir,
                           std::vector<std::string>& written) {
  const CapacityModel model = s.build_model();
  Rng master(s.seed);
  Rng fleet_rng = master.derive(11);
  Rng demand_rng = master.derive(12);
  Rng sched_rng = master.derive(13);

  const std::vector<StraightLinePath> fleet = generate_fleet(
      s.fleet.count, s.fleet.speed_min_mps, s.fleet.speed_max_mps,
      s.fleet.arrival_span_s, s.fleet.d_min_m, model.mmwave().d_th_m,
      fleet_rng);
  const std::vector<VehicleDemand> demands =
      generate_demands(s.fleet.count, s.fleet.demand_min_bits,
                       s.fleet.demand_max_bits, s.scheduler.overhead_s,
                       demand_rng);

  std::vector<Trajectory> trajectories(fleet.begin(), fleet.end());

  {
    std::ofstream out = open_csv(out_dir, "fleet_distances.csv", s,
                                 "t_s,vehicle_id,d_m", written);
    for (std::size_t v = 0; v < trajectories.size(); ++v) {
      const Trajectory& traj = trajectories[v];
      const double step = 0.25;
      for (double t = traj.t_begin(); t <= traj.t_end() + 1e-9; t += step) {
        out << t << "," << v << ","
            << traj.distance_at(std::min(t, traj.t_end())) << "\n";
      }
    }
  }

  const std::vector<SlotGrid> grids = build_slot_grid(
      trajectories, model, s.scheduler.slot_duration_s, s.quadrature);

  std::ofstream out =
      open_csv(out_dir, "schedule_timeline.csv", s,
               "slot_index,t_start_s,vehicle_id,bits,switched", written,
               "capping=min(remaining_demand,slot_bits)");
  for (const SlotGrid& grid : grids) {
    const Schedule schedule = schedule_greedy(grid, demands, sched_rng);
    for (std::size_t k = 0; k < schedule.assignment.size(); ++k) {
      const long global = schedule.first_slot + static_cast<long>(k);
      out << global << ","
          << static_cast<double>(global - 1) * schedule.slot_duration_s << ","
          << schedule.assignment[k] << "," << schedule.counted_bits[k] << ","
          << (schedule.switched[k] ? 1 : 0) << "\n";
    }
  }
}

}  // namespace

std::vector<CompareRow> scheduler_compare_rows(const Scenario& s) {
  const CapacityModel model = s.build_model();
  const CompareSpec& cfg = s.compare;
  const double T = cfg.slot_duration_s;
  const int runs = s.runs;
  const int n_ratios = static_cast<int>(cfg.overhead_ratios.size());
  const char* algorithms[] = {"optimal", "greedy", "random"};

  // totals[run][ratio][alg]
  std::vector<std::array<std::array<double, 3>, 16>> totals(
      static_cast<std::size_t>(runs));
  if (n_ratios > 16) {
    throw ConfigError("scheduler-compare: at most 16 overhead ratios");
  }

  Rng master(s.seed);
  parallel_for(runs, [&](int run) {
    Rng run_rng = master.derive(static_cast<std::uint64_t>(run));
    Rng fleet_rng = run_rng.derive(1);
    Rng demand_rng = run_rng.derive(2);

    const std::vector<StraightLinePath> fleet = generate_fleet(
        cfg.vehicles, cfg.speed_min_mps, cfg.speed_max_mps, cfg.arrival_span_s,
        cfg.d_min_m, model.mmwave().d_th_m, fleet_rng);
    std::vector<VehicleDemand> demands =
        generate_demands(cfg.vehicles, cfg.demand_min_bits,
                         cfg.demand_max_bits, 0.0, demand_rng);
    const std::vector<Trajectory> trajectories(fleet.begin(), fleet.end());
    const std::vector<SlotGrid> grids =
        build_slot_grid(trajectories, model, T, s.quadrature);

    for (int ri = 0; ri < n_ratios; ++ri) {
      const double overhead =
          cfg.overhead_ratios[static_cast<std::size_t>(ri)] * T;
      for (VehicleDemand& d : demands) d.overhead_s = overhead;

      double n_optimal = 0.0;
      double n_greedy = 0.0;
      double n_random = 0.0;
      Rng greedy_rng = run_rng.derive(100 + 4 * ri + 1);
      Rng random_rng = run_rng.derive(100 + 4 * ri + 2);
      for (const SlotGrid& grid : grids) {
        n_optimal +=
            schedule_optimal(grid, demands, s.scheduler.optimal_budget)
                .total_bits;
        n_greedy += schedule_greedy(grid, demands, greedy_rng).total_bits;
        n_random += schedule_random(grid, demands, random_rng).total_bits;
      }
      totals[static_cast<std::size_t>(run)][static_cast<std::size_t>(ri)] = {
          n_optimal, n_greedy, n_random};
    }
  });

  std::vector<CompareRow> rows;
  for (int ai = 0; ai < 3; ++ai) {
    for (int ri = 0; ri < n_ratios; ++ri) {
      double sum = 0.0;
      for (int run = 0; run < runs; ++run) {
        sum += totals[static_cast<std::size_t>(run)]
                     [static_cast<std::size_t>(ri)]
                     [static_cast<std::size_t>(ai)];
      }
      const double mean = sum / runs;
      double var = 0.0;
      for (int run = 0; run < runs; ++run) {
        const double x = totals[static_cast<std::size_t>(run)]
                               [static_cast<std::size_t>(ri)]
                               [static_cast<std::size_t>(ai)] -
                         mean;
        var += x * x;
      }
      var = runs > 1 ? var / (runs - 1) : 0.0;
      const double ci95 = 1.96 * std::sqrt(var / runs);
      rows.push_back({algorithms[ai],
                      cfg.overhead_ratios[static_cast<std::size_t>(ri)], mean,
                      ci95, runs});
    }
  }
  return rows;
}

namespace {

void run_scheduler_compare(const Scenario& s, const std::string& out_dir,
                           std::vector<std::string>& written) {
  const std::vector<CompareRow> rows = scheduler_compare_rows(s);
  std::ofstream out =
      open_csv(out_dir, "scheduler_compare.csv", s,
               "algorithm,overhead_ratio,mean_bits,ci95_bits,runs", written);
  for (const CompareRow& r : rows) {
    out << r.algorithm << "," << r.overhead_ratio << "," << r.mean_bits << ","
        << r.ci95_bits << "," << r.runs << "\n";
  }
}

}  // namespace

const std::vector<std::string>& experiment_names() {
  static const std::vector<std::string> names = {
      "state-probs-mm",    "state-probs-thz",       "thz-capacity-grid",
      "combined-capacity-grid", "bulk-vs-dmin-speed", "bulk-trace",
      "schedule-timeline", "scheduler-compare"};
  return names;
}

bool is_experiment_name(const std::string& name) {
  for (const std::string& n : experiment_names()) {
    if (n == name) return true;
  }
  return false;
}

std::vector<std::string> run_experiment(const std::string& name,
                                        const Scenario& scenario,
                                        const std::string& out_dir) {
  std::vector<std::string> written;
  if (name == "state-probs-mm") {
    run_state_probs_mm(scenario, out_dir, written);
  } else if (name == "state-probs-thz") {
    run_state_probs_thz(scenario, out_dir, written);
  } else if (name == "thz-capacity-grid") {
    run_thz_capacity_grid(scenario, out_dir, written);
  } else if (name == "combined-capacity-grid") {
    run_combined_capacity_grid(scenario, out_dir, written);
  } else if (name == "bulk-vs-dmin-speed") {
    run_bulk_vs_dmin_speed(scenario, out_dir, written);
  } else if (name == "bulk-trace") {
    run_bulk_trace(scenario, out_dir, written);
  } else if (name == "schedule-timeline") {
    run_schedule_timeline(scenario, out_dir, written);
  } else if (name == "scheduler-compare") {
    run_scheduler_compare(scenario, out_dir, written);
  } else {
    throw ConfigError("unknown experiment '" + name + "'");
  }
  return written;
}

}  // namespace datashower
