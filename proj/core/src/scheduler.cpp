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

#include "datashower/scheduler.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <istream>
#include <memory>
#include <mutex>
#include <tuple>
#include <ostream>
#include <sstream>
#include <unordered_map>

namespace datashower {

namespace {

const SlotCell* find_cell(const std::vector<SlotCell>& cells, int vehicle) {
  for (const SlotCell& c : cells) {
    if (c.vehicle == vehicle) return &c;
  }
  return nullptr;
}

std::unordered_map<int, VehicleDemand> index_demands(
    std::span<const VehicleDemand> demands) {
  std::unordered_map<int, VehicleDemand> by_id;
  for (const VehicleDemand& d : demands) {
    if (!(d.demand_bits > 0.0)) {
      throw std::invalid_argument("VehicleDemand: demand must be > 0 bits");
    }
    if (d.overhead_s < 0.0) {
      throw std::invalid_argument("VehicleDemand: overhead must be >= 0");
    }
    if (!by_id.emplace(d.vehicle_id, d).second) {
      throw std::invalid_argument("VehicleDemand: duplicate vehicle id " +
                                  std::to_string(d.vehicle_id));
    }
  }
  return by_id;
}

}  // namespace

// ---- SlotGrid ----

bool SlotGrid::is_candidate(int local_slot, int vehicle) const {
  return find_cell(slots.at(static_cast<std::size_t>(local_slot)), vehicle) !=
         nullptr;
}

double SlotGrid::n_tilde(int local_slot, int vehicle) const {
  const SlotCell* cell =
      find_cell(slots.at(static_cast<std::size_t>(local_slot)), vehicle);
  if (cell == nullptr) {
    throw std::domain_error("SlotGrid: vehicle " + std::to_string(vehicle) +
                            " is not a candidate for slot " +
                            std::to_string(global_slot(local_slot)));
  }
  return cell->n_tilde_bits;
}

double SlotGrid::switch_bits(int local_slot, int vehicle,
                             double overhead_s) const {
  const double nt = n_tilde(local_slot, vehicle);
  if (overhead_s <= 0.0) return nt;
  if (overhead_s >= slot_duration_s) return 0.0;
  if (switch_bits_fn) return switch_bits_fn(local_slot, vehicle, overhead_s);
  return nt * (1.0 - overhead_s / slot_duration_s);
}

std::vector<int> SlotGrid::vehicle_ids() const {
  std::vector<int> ids;
  for (const auto& cells : slots) {
    for (const SlotCell& c : cells) ids.push_back(c.vehicle);
  }
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  return ids;
}

void SlotGrid::validate() const {
  if (!(slot_duration_s > 0.0)) {
    throw std::invalid_argument("SlotGrid: slot duration must be > 0");
  }
  for (std::size_t k = 0; k < slots.size(); ++k) {
    if (slots[k].empty()) {
      throw std::invalid_argument("SlotGrid: slot " +
                                  std::to_string(first_slot + (long)k) +
                                  " has no candidates");
    }
    for (const SlotCell& c : slots[k]) {
      if (!(c.n_tilde_bits >= 0.0)) {
        throw std::invalid_argument("SlotGrid: negative n_tilde");
      }
    }
  }
}

// ---- grid construction ----

std::vector<SlotGrid> build_slot_grid(std::span<const Trajectory> trajectories,
                                      const CapacityModel& model,
                                      double slot_duration_s,
                                      const QuadratureOptions& opts) {
  if (trajectories.empty()) {
    throw std::invalid_argument("build_slot_grid: need at least one vehicle");
  }
  if (!(slot_duration_s > 0.0)) {
    throw std::invalid_argument("build_slot_grid: slot duration must be > 0");
  }

  const double T = slot_duration_s;
  const double tol = 1e-9 * std::max(1.0, T);
  const double d_max = model.max_range_m();

  // Candidate cells per global slot index. std::map keeps slots ordered.
  std::map<long, std::vector<SlotCell>> by_slot;
  for (std::size_t v = 0; v < trajectories.size(); ++v) {
    const Trajectory& traj = trajectories[v];
    for (const ContactWindow& w : traj.contact_windows(d_max)) {
      // Whole-slot membership: [(k-1)T, kT] inside the window.
      long k_first = static_cast<long>(std::floor(w.t_in_s / T)) + 1;
      while ((k_first - 1) * T < w.t_in_s - tol) ++k_first;
      long k_last = static_cast<long>(std::floor(w.t_out_s / T)) + 1;
      while (k_last * T > w.t_out_s + tol) --k_last;
      for (long k = k_first; k <= k_last; ++k) {
        const double bits = capacity_time_integral(
            traj, model, (k - 1) * T, k * T, opts);
        by_slot[k].push_back({static_cast<int>(v), bits});
      }
    }
  }

  // Split maximal runs of consecutive non-empty slots into journeys.
  std::vector<SlotGrid> grids;
  auto model_ptr = std::make_shared<const CapacityModel>(model);
  auto traj_ptr = std::make_shared<const std::vector<Trajectory>>(
      trajectories.begin(), trajectories.end());

  auto flush = [&](long start, std::vector<std::vector<SlotCell>>&& slots) {
    if (slots.empty()) return;
    SlotGrid grid;
    grid.slot_duration_s = T;
    grid.first_slot = start;
    grid.slots = std::move(slots);
    // Switch bits = n_tilde minus the short overhead prefix, memoized so the
    // three schedulers share one quadrature per (slot, vehicle, overhead).
    auto ntilde = std::make_shared<std::map<std::pair<int, int>, double>>();
    for (int k = 0; k < grid.num_slots(); ++k) {
      for (const SlotCell& c : grid.slots[static_cast<std::size_t>(k)]) {
        (*ntilde)[{k, c.vehicle}] = c.n_tilde_bits;
      }
    }
    auto cache = std::make_shared<
        std::map<std::tuple<int, int, double>, double>>();
    auto cache_mutex = std::make_shared<std::mutex>();
    grid.switch_bits_fn = [model_ptr, traj_ptr, T, start, opts, ntilde, cache,
                           cache_mutex](int local, int vehicle,
                                        double overhead) {
      {
        std::lock_guard<std::mutex> lock(*cache_mutex);
        auto it = cache->find({local, vehicle, overhead});
        if (it != cache->end()) return it->second;
      }
      const double a = (start + local - 1) * T;
      const double prefix = capacity_time_integral(
          (*traj_ptr)[static_cast<std::size_t>(vehicle)], *model_ptr, a,
          a + overhead, opts);
      const double bits =
          std::max(0.0, ntilde->at({local, vehicle}) - prefix);
      std::lock_guard<std::mutex> lock(*cache_mutex);
      cache->emplace(std::tuple<int, int, double>{local, vehicle, overhead},
                     bits);
      return bits;
    };
    grids.push_back(std::move(grid));
  };

  std::vector<std::vector<SlotCell>> run;
  long run_start = 0;
  long prev = 0;
  for (auto& [k, cells] : by_slot) {
    std::sort(cells.begin(), cells.end(),
              [](const SlotCell& a, const SlotCell& b) {
                return a.vehicle < b.vehicle;
              });
    if (run.empty() || k != prev + 1) {
      flush(run_start, std::move(run));
      run.clear();
      run_start = k;
    }
    run.push_back(std::move(cells));
    prev = k;
  }
  flush(run_start, std::move(run));
  return grids;
}

// ---- evaluation ----

double slot_bits(const SlotGrid& grid, std::span<const int> assignment,
                 int local_slot, const VehicleDemand& demand) {
  const int v = demand.vehicle_id;
  if (!grid.is_candidate(local_slot, v)) {
    throw std::domain_error("slot_bits: vehicle " + std::to_string(v) +
                            " is not a candidate for slot " +
                            std::to_string(grid.global_slot(local_slot)));
  }
  const bool held_previous =
      local_slot > 0 &&
      assignment[static_cast<std::size_t>(local_slot - 1)] == v;
  if (held_previous) return grid.n_tilde(local_slot, v);
  return grid.switch_bits(local_slot, v, demand.overhead_s);
}

Schedule evaluate_assignment(const SlotGrid& grid,
                             std::span<const VehicleDemand> demands,
                             std::vector<int> assignment) {
  if (assignment.size() != grid.slots.size()) {
    throw std::invalid_argument(
        "evaluate_assignment: assignment size does not match grid");
  }
  const auto by_id = index_demands(demands);

  Schedule s;
  s.assignment = std::move(assignment);
  s.switched.assign(s.assignment.size(), false);
  s.counted_bits.assign(s.assignment.size(), 0.0);
  s.first_slot = grid.first_slot;
  s.slot_duration_s = grid.slot_duration_s;

  std::unordered_map<int, double> remaining;
  for (const auto& [id, d] : by_id) remaining[id] = d.demand_bits;

  for (int k = 0; k < grid.num_slots(); ++k) {
    const int v = s.assignment[static_cast<std::size_t>(k)];
    if (v == kUnassigned) continue;
    auto it = by_id.find(v);
    if (it == by_id.end()) {
      throw std::invalid_argument("evaluate_assignment: no demand for vehicle " +
                                  std::to_string(v));
    }
    const bool switched =
        k == 0 || s.assignment[static_cast<std::size_t>(k - 1)] != v;
    s.switched[static_cast<std::size_t>(k)] = switched;
    const double raw = switched
                           ? grid.switch_bits(k, v, it->second.overhead_s)
                           : grid.n_tilde(k, v);
    double& rem = remaining[v];
    const double counted = std::min(raw, std::max(rem, 0.0));
    rem -= counted;
    s.counted_bits[static_cast<std::size_t>(k)] = counted;
    s.delivered_bits[v] += counted;
    s.total_bits += counted;
  }
  return s;
}

// ---- greedy (Algorithm 1 + inner procedure) ----

Schedule schedule_greedy(const SlotGrid& grid,
                         std::span<const VehicleDemand> demands, Rng& rng,
                         GreedyStats* stats) {
  grid.validate();
  const auto by_id = index_demands(demands);
  const int K = grid.num_slots();

  std::vector<std::vector<SlotCell>> cand = grid.slots;
  std::vector<char> active(static_cast<std::size_t>(K), 1);
  std::vector<int> assignment(static_cast<std::size_t>(K), kUnassigned);
  std::unordered_map<int, double> remaining;
  for (const auto& [id, d] : by_id) remaining[id] = d.demand_bits;
  for (int id : grid.vehicle_ids()) {
    if (!by_id.count(id)) {
      throw std::invalid_argument("schedule_greedy: no demand for vehicle " +
                                  std::to_string(id));
    }
  }
  std::uint64_t inspections = 0;

  auto evict = [&](int vehicle) {
    for (int k = 0; k < K; ++k) {
      if (!active[static_cast<std::size_t>(k)]) continue;
      auto& cells = cand[static_cast<std::size_t>(k)];
      cells.erase(std::remove_if(cells.begin(), cells.end(),
                                 [vehicle](const SlotCell& c) {
                                   return c.vehicle == vehicle;
                                 }),
                  cells.end());
    }
  };

  // Phase 1: slots with a single vehicle in contact.
  for (int k = 0; k < K; ++k) {
    auto& cells = cand[static_cast<std::size_t>(k)];
    if (!active[static_cast<std::size_t>(k)] || cells.size() != 1) continue;
    const SlotCell cell = cells[0];
    assignment[static_cast<std::size_t>(k)] = cell.vehicle;
    active[static_cast<std::size_t>(k)] = 0;
    double& rem = remaining[cell.vehicle];
    rem -= cell.n_tilde_bits;
    if (rem <= 0.0) evict(cell.vehicle);
  }

  // Phase 2: remove slots emptied by the evictions above.
  for (int k = 0; k < K; ++k) {
    if (active[static_cast<std::size_t>(k)] &&
        cand[static_cast<std::size_t>(k)].empty()) {
      active[static_cast<std::size_t>(k)] = 0;
    }
  }

  // Phase 3: repeatedly pick the cell with the largest n_tilde.
  auto any_active = [&] {
    return std::any_of(active.begin(), active.end(),
                       [](char a) { return a != 0; });
  };

  while (any_active()) {
    // Inner procedure: slots achieving the global per-slot maximum.
    double global_max = -1.0;
    for (int k = 0; k < K; ++k) {
      if (!active[static_cast<std::size_t>(k)]) continue;
      for (const SlotCell& c : cand[static_cast<std::size_t>(k)]) {
        ++inspections;
        global_max = std::max(global_max, c.n_tilde_bits);
      }
    }
    std::vector<int> tied_slots;
    for (int k = 0; k < K; ++k) {
      if (!active[static_cast<std::size_t>(k)]) continue;
      for (const SlotCell& c : cand[static_cast<std::size_t>(k)]) {
        if (c.n_tilde_bits == global_max) {
          tied_slots.push_back(k);
          break;
        }
      }
    }

    auto pick_vehicle = [&](int k) {
      std::vector<int> best;
      for (const SlotCell& c : cand[static_cast<std::size_t>(k)]) {
        if (c.n_tilde_bits == global_max) best.push_back(c.vehicle);
      }
      return best.size() == 1
                 ? best[0]
                 : best[static_cast<std::size_t>(
                       rng.uniform_int(static_cast<int>(best.size())))];
    };

    int k_t;
    int v_t;
    if (tied_slots.size() == 1) {
      k_t = tied_slots[0];
      v_t = pick_vehicle(k_t);
    } else {
      // Among tied slots, prefer the one whose remaining candidates have
      // the least to exchange.
      std::vector<int> chosen(tied_slots.size());
      std::vector<double> other_sum(tied_slots.size(), 0.0);
      for (std::size_t i = 0; i < tied_slots.size(); ++i) {
        chosen[i] = pick_vehicle(tied_slots[i]);
        for (const SlotCell& c :
             cand[static_cast<std::size_t>(tied_slots[i])]) {
          ++inspections;
          if (c.vehicle != chosen[i]) other_sum[i] += c.n_tilde_bits;
        }
      }
      const double min_sum =
          *std::min_element(other_sum.begin(), other_sum.end());
      std::vector<std::size_t> tied_idx;
      for (std::size_t i = 0; i < tied_slots.size(); ++i) {
        if (other_sum[i] == min_sum) tied_idx.push_back(i);
      }
      const std::size_t pick =
          tied_idx.size() == 1
              ? tied_idx[0]
              : tied_idx[static_cast<std::size_t>(
                    rng.uniform_int(static_cast<int>(tied_idx.size())))];
      k_t = tied_slots[pick];
      v_t = chosen[pick];
    }

    assignment[static_cast<std::size_t>(k_t)] = v_t;
    active[static_cast<std::size_t>(k_t)] = 0;
    double& rem = remaining[v_t];
    rem -= grid.n_tilde(k_t, v_t);
    if (rem <= 0.0) {
      evict(v_t);
      for (int k = 0; k < K; ++k) {
        if (active[static_cast<std::size_t>(k)] &&
            cand[static_cast<std::size_t>(k)].empty()) {
          active[static_cast<std::size_t>(k)] = 0;
        }
      }
    }
  }

  if (stats != nullptr) stats->inspections = inspections;
  return evaluate_assignment(grid, demands, std::move(assignment));
}

// ---- exhaustive optimal ----

Schedule schedule_optimal(const SlotGrid& grid,
                          std::span<const VehicleDemand> demands,
                          double budget) {
  grid.validate();
  const auto by_id = index_demands(demands);
  const int K = grid.num_slots();
  if (K == 0) {
    return evaluate_assignment(grid, demands, {});
  }

  double combinations = 1.0;
  for (const auto& cells : grid.slots) {
    combinations *= static_cast<double>(cells.size());
    if (combinations > budget) {
      std::ostringstream msg;
      msg << "schedule_optimal: instance needs more than " << budget
          << " assignments (" << combinations << "+ of " << K
          << " slots); refusing";
      throw BudgetExceeded(msg.str());
    }
  }

  // Dense vehicle indexing and precomputed switch bits per cell.
  std::vector<int> ids = grid.vehicle_ids();
  std::unordered_map<int, int> dense;
  std::vector<double> demand_of(ids.size());
  for (std::size_t i = 0; i < ids.size(); ++i) {
    auto it = by_id.find(ids[i]);
    if (it == by_id.end()) {
      throw std::invalid_argument("schedule_optimal: no demand for vehicle " +
                                  std::to_string(ids[i]));
    }
    dense[ids[i]] = static_cast<int>(i);
    demand_of[i] = it->second.demand_bits;
  }

  struct Cell {
    int vehicle;
    int dense;
    double n_tilde;
    double switched;
  };
  std::vector<std::vector<Cell>> cells(static_cast<std::size_t>(K));
  for (int k = 0; k < K; ++k) {
    for (const SlotCell& c : grid.slots[static_cast<std::size_t>(k)]) {
      const double overhead = by_id.at(c.vehicle).overhead_s;
      cells[static_cast<std::size_t>(k)].push_back(
          {c.vehicle, dense.at(c.vehicle), c.n_tilde_bits,
           grid.switch_bits(k, c.vehicle, overhead)});
    }
  }

  std::vector<std::size_t> idx(static_cast<std::size_t>(K), 0);
  std::vector<double> remaining(ids.size());
  std::vector<int> best;
  double best_n = -1.0;

  for (;;) {
    // Evaluate the current assignment.
    std::copy(demand_of.begin(), demand_of.end(), remaining.begin());
    double total = 0.0;
    int prev_vehicle = kUnassigned;
    for (int k = 0; k < K; ++k) {
      const Cell& c = cells[static_cast<std::size_t>(k)][idx[static_cast<std::size_t>(k)]];
      const double raw = c.vehicle == prev_vehicle ? c.n_tilde : c.switched;
      double& rem = remaining[static_cast<std::size_t>(c.dense)];
      const double counted = std::min(raw, std::max(rem, 0.0));
      rem -= counted;
      total += counted;
      prev_vehicle = c.vehicle;
    }
    if (total > best_n) {
      best_n = total;
      best.resize(static_cast<std::size_t>(K));
      for (int k = 0; k < K; ++k) {
        best[static_cast<std::size_t>(k)] =
            cells[static_cast<std::size_t>(k)][idx[static_cast<std::size_t>(k)]]
                .vehicle;
      }
    }
    // Lexicographic odometer, last slot fastest.
    int k = K - 1;
    for (; k >= 0; --k) {
      if (++idx[static_cast<std::size_t>(k)] <
          cells[static_cast<std::size_t>(k)].size()) {
        break;
      }
      idx[static_cast<std::size_t>(k)] = 0;
    }
    if (k < 0) break;
  }

  return evaluate_assignment(grid, demands, std::move(best));
}

// ---- random baseline ----

Schedule schedule_random(const SlotGrid& grid,
                         std::span<const VehicleDemand> demands, Rng& rng) {
  grid.validate();
  const auto by_id = index_demands(demands);
  const int K = grid.num_slots();
  std::vector<int> assignment(static_cast<std::size_t>(K), kUnassigned);
  std::unordered_map<int, double> remaining;
  for (const auto& [id, d] : by_id) remaining[id] = d.demand_bits;

  for (int k = 0; k < K; ++k) {
    std::vector<const SlotCell*> pool;
    for (const SlotCell& c : grid.slots[static_cast<std::size_t>(k)]) {
      auto it = remaining.find(c.vehicle);
      if (it == remaining.end()) {
        throw std::invalid_argument("schedule_random: no demand for vehicle " +
                                    std::to_string(c.vehicle));
      }
      if (it->second > 0.0) pool.push_back(&c);
    }
    if (pool.empty()) continue;
    const SlotCell* cell =
        pool[static_cast<std::size_t>(rng.uniform_int(static_cast<int>(pool.size())))];
    const int v = cell->vehicle;
    assignment[static_cast<std::size_t>(k)] = v;
    const bool switched =
        k == 0 || assignment[static_cast<std::size_t>(k - 1)] != v;
    const double raw = switched
                           ? grid.switch_bits(k, v, by_id.at(v).overhead_s)
                           : cell->n_tilde_bits;
    double& rem = remaining[v];
    rem -= std::min(raw, std::max(rem, 0.0));
  }
  return evaluate_assignment(grid, demands, std::move(assignment));
}

// ---- instance / schedule I/O ----

namespace {

std::string g17(double x) {
  std::ostringstream os;
  os << std::setprecision(17) << x;
  return os.str();
}

}  // namespace

void export_instance(const SlotGrid& grid,
                     std::span<const VehicleDemand> demands,
                     std::ostream& matrix_out, std::ostream& demands_out) {
  matrix_out << "# slot_duration_s=" << g17(grid.slot_duration_s)
             << " first_slot=" << grid.first_slot << "\n";
  matrix_out << "slot_index,vehicle_id,n_tilde_bits\n";
  for (int k = 0; k < grid.num_slots(); ++k) {
    for (const SlotCell& c : grid.slots[static_cast<std::size_t>(k)]) {
      matrix_out << grid.global_slot(k) << "," << c.vehicle << ","
                 << g17(c.n_tilde_bits) << "\n";
    }
  }
  demands_out << "vehicle_id,demand_bits,overhead_s\n";
  for (const VehicleDemand& d : demands) {
    demands_out << d.vehicle_id << "," << g17(d.demand_bits) << ","
                << g17(d.overhead_s) << "\n";
  }
}

std::pair<SlotGrid, std::vector<VehicleDemand>> import_instance(
    std::istream& matrix_in, std::istream& demands_in) {
  SlotGrid grid;
  std::string line;
  if (!std::getline(matrix_in, line) || line.rfind("# slot_duration_s=", 0) != 0) {
    throw std::runtime_error("import_instance: missing metadata comment line");
  }
  {
    std::istringstream meta(line.substr(2));
    std::string kv;
    while (meta >> kv) {
      const auto eq = kv.find('=');
      if (eq == std::string::npos) continue;
      const std::string key = kv.substr(0, eq);
      const std::string val = kv.substr(eq + 1);
      if (key == "slot_duration_s") grid.slot_duration_s = std::stod(val);
      if (key == "first_slot") grid.first_slot = std::stol(val);
    }
  }
  if (!std::getline(matrix_in, line)) {
    throw std::runtime_error("import_instance: missing matrix header");
  }
  std::map<long, std::vector<SlotCell>> by_slot;
  while (std::getline(matrix_in, line)) {
    if (line.empty()) continue;
    std::istringstream row(line);
    std::string a, b, c;
    if (!std::getline(row, a, ',') || !std::getline(row, b, ',') ||
        !std::getline(row, c)) {
      throw std::runtime_error("import_instance: malformed matrix row: " + line);
    }
    by_slot[std::stol(a)].push_back({std::stoi(b), std::stod(c)});
  }
  if (by_slot.empty()) {
    throw std::runtime_error("import_instance: empty matrix");
  }
  long expect = grid.first_slot;
  for (auto& [k, cells] : by_slot) {
    if (k != expect++) {
      throw std::runtime_error("import_instance: slots must be consecutive");
    }
    std::sort(cells.begin(), cells.end(),
              [](const SlotCell& x, const SlotCell& y) {
                return x.vehicle < y.vehicle;
              });
    grid.slots.push_back(std::move(cells));
  }
  grid.validate();

  std::vector<VehicleDemand> demands;
  if (!std::getline(demands_in, line)) {
    throw std::runtime_error("import_instance: missing demands header");
  }
  while (std::getline(demands_in, line)) {
    if (line.empty()) continue;
    std::istringstream row(line);
    std::string a, b, c;
    if (!std::getline(row, a, ',') || !std::getline(row, b, ',') ||
        !std::getline(row, c)) {
      throw std::runtime_error("import_instance: malformed demand row: " + line);
    }
    demands.push_back({std::stoi(a), std::stod(b), std::stod(c)});
  }
  return {std::move(grid), std::move(demands)};
}

void write_schedule_csv(const Schedule& schedule, std::ostream& out) {
  out << "# capping=min(remaining_demand,slot_bits)\n";
  out << "slot_index,t_start_s,vehicle_id,bits,switched\n";
  for (std::size_t k = 0; k < schedule.assignment.size(); ++k) {
    const long global = schedule.first_slot + static_cast<long>(k);
    out << global << ","
        << g17(static_cast<double>(global - 1) * schedule.slot_duration_s)
        << "," << schedule.assignment[k] << "," << g17(schedule.counted_bits[k])
        << "," << (schedule.switched[k] ? 1 : 0) << "\n";
  }
}

}  // namespace datashower
