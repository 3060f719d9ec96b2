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
#include <functional>
#include <iosfwd>
#include <map>
#include <span>
#include <stdexcept>
#include <vector>

#include "datashower/bulk.hpp"
#include "datashower/channel.hpp"
#include "datashower/rng.hpp"
#include "datashower/trajectory.hpp"

namespace datashower {

/// Per-journey communication need of one vehicle: bits to exchange and the
/// link-establishment overhead charged whenever the tower switches to it.
struct VehicleDemand {
  int vehicle_id = 0;
  double demand_bits = 0.0;
  double overhead_s = 0.0;
};

inline constexpr int kUnassigned = -1;

/// One (slot, vehicle) cell: the bits exchangeable in the slot with no
/// scheduling overhead.
struct SlotCell {
  int vehicle;
  double n_tilde_bits;
};

/// Discretized horizon for one journey: consecutive slots, each with a
/// non-empty candidate set. A vehicle is a candidate for a slot iff it is
/// inside the operational range for the entire slot. Slot k (global,
/// 1-based) spans [(k-1)T, kT].
struct SlotGrid {
  double slot_duration_s = 1.0;
  long first_slot = 1;
  std::vector<std::vector<SlotCell>> slots;

  /// Exact integral over [(k-1)T + overhead, kT] for physics-backed grids.
  /// When absent, switch bits fall back to the uniform-rate model
  /// n_tilde * (1 - overhead/T), clamped at 0.
  std::function<double(int local_slot, int vehicle, double overhead_s)>
      switch_bits_fn;

  int num_slots() const { return static_cast<int>(slots.size()); }
  long global_slot(int local) const { return first_slot + local; }
  double slot_start_s(int local) const {
    return static_cast<double>(global_slot(local) - 1) * slot_duration_s;
  }

  bool is_candidate(int local_slot, int vehicle) const;
  /// Throws std::domain_error when the vehicle is not a candidate.
  double n_tilde(int local_slot, int vehicle) const;
  /// Bits available in the slot when the vehicle is freshly switched in.
  double switch_bits(int local_slot, int vehicle, double overhead_s) const;

  std::vector<int> vehicle_ids() const;
  void validate() const;
};

/// Builds the per-journey slot grids for a set of vehicles. Empty slots
/// separate journeys: each maximal run of slots with at least one candidate
/// becomes its own independent SlotGrid, in time order. Returns an empty
/// vector when no vehicle ever comes within range.
std::vector<SlotGrid> build_slot_grid(std::span<const Trajectory> trajectories,
                                      const CapacityModel& model,
                                      double slot_duration_s,
                                      const QuadratureOptions& opts = {});

/// A solved assignment with delivered-bit accounting. Counted bits are
/// capped at the remaining demand (slots may overshoot; the overshoot does
/// not count), processed in time order.
struct Schedule {
  std::vector<int> assignment;            // per local slot; kUnassigned = hole
  std::vector<bool> switched;             // chi of the assigned vehicle
  std::vector<double> counted_bits;       // capped per-slot contribution
  std::map<int, double> delivered_bits;   // N_v per vehicle
  double total_bits = 0.0;                // N
  long first_slot = 1;
  double slot_duration_s = 1.0;
};

/// Raw (uncapped) bits the vehicle would exchange in `local_slot` given the
/// assignment decided so far: n_tilde when it already held the previous
/// slot, the overhead-shortened integral otherwise. Throws std::domain_error
/// when the vehicle is not a candidate for the slot.
double slot_bits(const SlotGrid& grid, std::span<const int> assignment,
                 int local_slot, const VehicleDemand& demand);

/// Evaluates a complete assignment: chi indicators, per-slot capping against
/// demands, and totals. The capping rule is applied identically for every
/// scheduler so comparisons are fair.
Schedule evaluate_assignment(const SlotGrid& grid,
                             std::span<const VehicleDemand> demands,
                             std::vector<int> assignment);

struct GreedyStats {
  std::uint64_t inspections = 0;  // candidate cells examined in selections
};

/// Greedy scheduler. Phase 1 assigns slots with a single candidate; phase 2
/// drops slots emptied by satisfied vehicles; phase 3 repeatedly assigns the
/// (slot, vehicle) pair with the largest overhead-free n_tilde, breaking
/// slot ties toward the slot whose other candidates have the least to lose
/// and residual ties uniformly at random from `rng`. Selection ignores the
/// switching overhead; the returned schedule is always evaluated with it.
Schedule schedule_greedy(const SlotGrid& grid,
                         std::span<const VehicleDemand> demands, Rng& rng,
                         GreedyStats* stats = nullptr);

struct BudgetExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Exhaustive search over every admissible assignment (exactly one candidate
/// per slot). Ties on the objective break toward the lexicographically
/// smallest assignment. Throws BudgetExceeded when the assignment count
/// exceeds `budget`.
Schedule schedule_optimal(const SlotGrid& grid,
                          std::span<const VehicleDemand> demands,
                          double budget = 1e8);

/// Admissible baseline: per slot, one uniform draw among the candidates with
/// demand left. Reproducible for a fixed rng seed.
Schedule schedule_random(const SlotGrid& grid,
                         std::span<const VehicleDemand> demands, Rng& rng);

// ---- instance and schedule I/O (regression / oracle replay) ----

void export_instance(const SlotGrid& grid,
                     std::span<const VehicleDemand> demands,
                     std::ostream& matrix_out, std::ostream& demands_out);

std::pair<SlotGrid, std::vector<VehicleDemand>> import_instance(
    std::istream& matrix_in, std::istream& demands_in);

/// CSV rows `slot_index,t_start_s,vehicle_id,bits,switched(0|1)`.
void write_schedule_csv(const Schedule& schedule, std::ostream& out);

}  // namespace datashower
