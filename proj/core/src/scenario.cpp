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

#include "datashower/scenario.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace datashower {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

json thz_to_json(const ThzParams& p, const std::string& absorption_csv) {
  json j;
  j["carrier_hz"] = p.carrier_hz;
  j["bandwidth_hz"] = p.bandwidth_hz;
  j["n_subbands"] = p.n_subbands;
  j["tx_power_dbm"] = p.tx_power_dbm;
  j["antenna_gain_db"] = p.antenna_gain_db;
  j["gain_per_end"] = p.gain_per_end;
  j["d_th_m"] = p.d_th_m;
  j["noise_floor_psd_w_per_hz"] = p.noise_floor_psd_w_per_hz;
  j["ambient_temperature_k"] = p.ambient_temperature_k;
  j["gamma_th_fraction"] = p.gamma_th_fraction;
  if (!absorption_csv.empty()) j["absorption_csv"] = absorption_csv;
  return j;
}

json mmwave_to_json(const MmWaveParams& p) {
  json j;
  j["carrier_hz"] = p.carrier_hz;
  j["bandwidth_hz"] = p.bandwidth_hz;
  j["pl_intercept_los_db"] = p.pl_intercept_los_db;
  j["pl_slope_los"] = p.pl_slope_los;
  j["pl_intercept_nlos_db"] = p.pl_intercept_nlos_db;
  j["pl_slope_nlos"] = p.pl_slope_nlos;
  j["tx_power_dbm"] = p.tx_power_dbm;
  j["antenna_gain_db"] = p.antenna_gain_db;
  j["noise_power_dbm"] = p.noise_power_dbm;
  j["noise_figure_db"] = p.noise_figure_db;
  j["d_th_m"] = p.d_th_m;
  // Mirrors the reciprocal form the parameter table uses.
  j["inv_a_los_m"] = 1.0 / p.a_los_per_m;
  j["inv_a_out_m"] = 1.0 / p.a_out_per_m;
  j["b_out"] = p.b_out;
  return j;
}

template <typename T>
T get_or(const json& j, const char* key, T fallback) {
  if (!j.contains(key)) return fallback;
  return j.at(key).get<T>();
}

}  // namespace

Scenario Scenario::table1_defaults() {
  Scenario s;
  s.name = "table1_defaults";
  s.seed = 1;
  s.seed_present = true;
  s.runs = 1000;
  s.thz = ThzParams{};
  s.mmwave = MmWaveParams{};
  VehicleSpec v;
  v.kind = VehicleSpec::Kind::kStraight;
  v.d_min_m = 4.0;
  v.speed_mps = 10.0 / 3.6;
  v.d_entry_m = 200.0;
  v.t_entry_s = 0.0;
  s.vehicles = {v};
  return s;
}

Scenario Scenario::from_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw ConfigError("scenario: cannot open " + path);
  }
  std::ostringstream text;
  text << in.rdbuf();
  return from_json_text(text.str(), path,
                        fs::path(path).parent_path().string());
}

Scenario Scenario::from_json_text(const std::string& text,
                                  const std::string& source_name,
                                  const std::string& base_dir) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ConfigError("scenario: " + source_name + ": parse error at byte " +
                      std::to_string(e.byte) + ": " + e.what());
  }

  Scenario s = Scenario::table1_defaults();
  s.base_dir = base_dir.empty() ? "." : base_dir;
  s.vehicles.clear();

  try {
    s.name = get_or<std::string>(j, "name", "scenario");
    s.seed_present = j.contains("seed");
    s.seed = get_or<std::uint64_t>(j, "seed", 1);
    s.runs = get_or<int>(j, "runs", 1000);

    if (j.contains("thz")) {
      const json& t = j.at("thz");
      s.thz.carrier_hz = get_or(t, "carrier_hz", s.thz.carrier_hz);
      s.thz.bandwidth_hz = get_or(t, "bandwidth_hz", s.thz.bandwidth_hz);
      s.thz.n_subbands = get_or(t, "n_subbands", s.thz.n_subbands);
      s.thz.tx_power_dbm = get_or(t, "tx_power_dbm", s.thz.tx_power_dbm);
      s.thz.antenna_gain_db = get_or(t, "antenna_gain_db", s.thz.antenna_gain_db);
      s.thz.gain_per_end = get_or(t, "gain_per_end", s.thz.gain_per_end);
      s.thz.d_th_m = get_or(t, "d_th_m", s.thz.d_th_m);
      s.thz.noise_floor_psd_w_per_hz =
          get_or(t, "noise_floor_psd_w_per_hz", s.thz.noise_floor_psd_w_per_hz);
      s.thz.ambient_temperature_k =
          get_or(t, "ambient_temperature_k", s.thz.ambient_temperature_k);
      s.thz.gamma_th_fraction =
          get_or(t, "gamma_th_fraction", s.thz.gamma_th_fraction);
      s.absorption_csv = get_or<std::string>(t, "absorption_csv", "");
    }

    if (j.contains("mmwave")) {
      const json& m = j.at("mmwave");
      s.mmwave.carrier_hz = get_or(m, "carrier_hz", s.mmwave.carrier_hz);
      s.mmwave.bandwidth_hz = get_or(m, "bandwidth_hz", s.mmwave.bandwidth_hz);
      s.mmwave.pl_intercept_los_db =
          get_or(m, "pl_intercept_los_db", s.mmwave.pl_intercept_los_db);
      s.mmwave.pl_slope_los = get_or(m, "pl_slope_los", s.mmwave.pl_slope_los);
      s.mmwave.pl_intercept_nlos_db =
          get_or(m, "pl_intercept_nlos_db", s.mmwave.pl_intercept_nlos_db);
      s.mmwave.pl_slope_nlos =
          get_or(m, "pl_slope_nlos", s.mmwave.pl_slope_nlos);
      s.mmwave.tx_power_dbm = get_or(m, "tx_power_dbm", s.mmwave.tx_power_dbm);
      s.mmwave.antenna_gain_db =
          get_or(m, "antenna_gain_db", s.mmwave.antenna_gain_db);
      s.mmwave.noise_power_dbm =
          get_or(m, "noise_power_dbm", s.mmwave.noise_power_dbm);
      s.mmwave.noise_figure_db =
          get_or(m, "noise_figure_db", s.mmwave.noise_figure_db);
      s.mmwave.d_th_m = get_or(m, "d_th_m", s.mmwave.d_th_m);
      if (m.contains("inv_a_los_m")) {
        s.mmwave.a_los_per_m = 1.0 / m.at("inv_a_los_m").get<double>();
      }
      if (m.contains("inv_a_out_m")) {
        s.mmwave.a_out_per_m = 1.0 / m.at("inv_a_out_m").get<double>();
      }
      s.mmwave.b_out = get_or(m, "b_out", s.mmwave.b_out);
    }

    if (j.contains("vehicles")) {
      for (const json& vj : j.at("vehicles")) {
        VehicleSpec v;
        const std::string kind = get_or<std::string>(vj, "kind", "straight");
        if (kind == "straight") {
          v.kind = VehicleSpec::Kind::kStraight;
          v.d_min_m = get_or(vj, "d_min_m", v.d_min_m);
          v.speed_mps = get_or(vj, "speed_mps", v.speed_mps);
          v.d_entry_m = get_or(vj, "d_entry_m", v.d_entry_m);
          v.t_entry_s = get_or(vj, "t_entry_s", v.t_entry_s);
        } else if (kind == "trace") {
          v.kind = VehicleSpec::Kind::kTrace;
          v.trace_file = get_or<std::string>(vj, "file", "");
          v.time_scale = get_or(vj, "time_scale", 1.0);
          if (vj.contains("tower_x_m") || vj.contains("tower_y_m")) {
            v.tower_xy = {get_or(vj, "tower_x_m", 0.0),
                          get_or(vj, "tower_y_m", 0.0)};
          }
        } else {
          throw ConfigError("scenario: vehicles[].kind must be 'straight' or "
                            "'trace', got '" + kind + "'");
        }
        s.vehicles.push_back(std::move(v));
      }
    }

    if (j.contains("fleet")) {
      const json& f = j.at("fleet");
      s.fleet.count = get_or(f, "count", s.fleet.count);
      s.fleet.speed_min_mps = get_or(f, "speed_min_mps", s.fleet.speed_min_mps);
      s.fleet.speed_max_mps = get_or(f, "speed_max_mps", s.fleet.speed_max_mps);
      s.fleet.arrival_span_s =
          get_or(f, "arrival_span_s", s.fleet.arrival_span_s);
      s.fleet.d_min_m = get_or(f, "d_min_m", s.fleet.d_min_m);
      s.fleet.demand_min_bits =
          get_or(f, "demand_min_bits", s.fleet.demand_min_bits);
      s.fleet.demand_max_bits =
          get_or(f, "demand_max_bits", s.fleet.demand_max_bits);
      s.fleet.overhead_s = get_or(f, "overhead_s", s.fleet.overhead_s);
    }

    if (j.contains("scheduler")) {
      const json& sc = j.at("scheduler");
      s.scheduler.slot_duration_s =
          get_or(sc, "slot_duration_s", s.scheduler.slot_duration_s);
      s.scheduler.overhead_s = get_or(sc, "overhead_s", s.scheduler.overhead_s);
      s.scheduler.optimal_budget =
          get_or(sc, "optimal_budget", s.scheduler.optimal_budget);
      s.scheduler.algorithm =
          get_or<std::string>(sc, "algorithm", s.scheduler.algorithm);
    }

    if (j.contains("compare")) {
      const json& c = j.at("compare");
      s.compare.vehicles = get_or(c, "vehicles", s.compare.vehicles);
      s.compare.slot_duration_s =
          get_or(c, "slot_duration_s", s.compare.slot_duration_s);
      s.compare.arrival_span_s =
          get_or(c, "arrival_span_s", s.compare.arrival_span_s);
      s.compare.speed_min_mps =
          get_or(c, "speed_min_mps", s.compare.speed_min_mps);
      s.compare.speed_max_mps =
          get_or(c, "speed_max_mps", s.compare.speed_max_mps);
      s.compare.d_min_m = get_or(c, "d_min_m", s.compare.d_min_m);
      s.compare.demand_min_bits =
          get_or(c, "demand_min_bits", s.compare.demand_min_bits);
      s.compare.demand_max_bits =
          get_or(c, "demand_max_bits", s.compare.demand_max_bits);
      if (c.contains("overhead_ratios")) {
        s.compare.overhead_ratios =
            c.at("overhead_ratios").get<std::vector<double>>();
      }
    }

    if (j.contains("protocol")) {
      const json& p = j.at("protocol");
      s.protocol.chunk_duration_s =
          get_or(p, "chunk_duration_s", s.protocol.chunk_duration_s);
      s.protocol.packet_size_bits =
          get_or(p, "packet_size_bits", s.protocol.packet_size_bits);
      const std::string lm = get_or<std::string>(p, "loss_model", "independent");
      if (lm == "independent") {
        s.protocol.loss_model = LossModel::kIndependent;
      } else if (lm == "burst") {
        s.protocol.loss_model = LossModel::kBurst;
      } else {
        throw ConfigError("scenario: protocol.loss_model must be "
                          "'independent' or 'burst'");
      }
      s.protocol.loss_prob_thz =
          get_or(p, "loss_prob_thz", s.protocol.loss_prob_thz);
      s.protocol.loss_prob_mmwave =
          get_or(p, "loss_prob_mmwave", s.protocol.loss_prob_mmwave);
      s.protocol.burst_recovery_prob =
          get_or(p, "burst_recovery_prob", s.protocol.burst_recovery_prob);
      s.protocol.ack_loss_prob =
          get_or(p, "ack_loss_prob", s.protocol.ack_loss_prob);
      s.protocol.ack_delay_s = get_or(p, "ack_delay_s", s.protocol.ack_delay_s);
      s.protocol.ul_dl_split = get_or(p, "ul_dl_split", s.protocol.ul_dl_split);
      s.protocol.phase_switch_guard_s =
          get_or(p, "phase_switch_guard_s", s.protocol.phase_switch_guard_s);
    }

    if (j.contains("overheads")) {
      const json& o = j.at("overheads");
      s.overheads.eps_sync_mm_s =
          get_or(o, "eps_sync_mm_s", s.overheads.eps_sync_mm_s);
      s.overheads.eps_sync_thz_s =
          get_or(o, "eps_sync_thz_s", s.overheads.eps_sync_thz_s);
      s.overheads.eps_switch_s =
          get_or(o, "eps_switch_s", s.overheads.eps_switch_s);
    }

    if (j.contains("quadrature")) {
      const json& q = j.at("quadrature");
      s.quadrature.max_distance_step_m =
          get_or(q, "max_distance_step_m", s.quadrature.max_distance_step_m);
      s.quadrature.max_eta_step_m =
          get_or(q, "max_eta_step_m", s.quadrature.max_eta_step_m);
    }
  } catch (const json::exception& e) {
    throw ConfigError("scenario: " + source_name + ": " + e.what());
  }
  return s;
}

std::string Scenario::to_json_text() const {
  json j;
  j["name"] = name;
  j["seed"] = seed;
  j["runs"] = runs;
  j["thz"] = thz_to_json(thz, absorption_csv);
  j["mmwave"] = mmwave_to_json(mmwave);
  j["vehicles"] = json::array();
  for (const VehicleSpec& v : vehicles) {
    json vj;
    if (v.kind == VehicleSpec::Kind::kStraight) {
      vj["kind"] = "straight";
      vj["d_min_m"] = v.d_min_m;
      vj["speed_mps"] = v.speed_mps;
      vj["d_entry_m"] = v.d_entry_m;
      vj["t_entry_s"] = v.t_entry_s;
    } else {
      vj["kind"] = "trace";
      vj["file"] = v.trace_file;
      vj["time_scale"] = v.time_scale;
      if (v.tower_xy) {
        vj["tower_x_m"] = v.tower_xy->first;
        vj["tower_y_m"] = v.tower_xy->second;
      }
    }
    j["vehicles"].push_back(vj);
  }
  j["fleet"] = {{"count", fleet.count},
                {"speed_min_mps", fleet.speed_min_mps},
                {"speed_max_mps", fleet.speed_max_mps},
                {"arrival_span_s", fleet.arrival_span_s},
                {"d_min_m", fleet.d_min_m},
                {"demand_min_bits", fleet.demand_min_bits},
                {"demand_max_bits", fleet.demand_max_bits},
                {"overhead_s", fleet.overhead_s}};
  j["scheduler"] = {{"slot_duration_s", scheduler.slot_duration_s},
                    {"overhead_s", scheduler.overhead_s},
                    {"optimal_budget", scheduler.optimal_budget},
                    {"algorithm", scheduler.algorithm}};
  j["compare"] = {{"vehicles", compare.vehicles},
                  {"slot_duration_s", compare.slot_duration_s},
                  {"arrival_span_s", compare.arrival_span_s},
                  {"speed_min_mps", compare.speed_min_mps},
                  {"speed_max_mps", compare.speed_max_mps},
                  {"d_min_m", compare.d_min_m},
                  {"demand_min_bits", compare.demand_min_bits},
                  {"demand_max_bits", compare.demand_max_bits},
                  {"overhead_ratios", compare.overhead_ratios}};
  j["protocol"] = {
      {"chunk_duration_s", protocol.chunk_duration_s},
      {"packet_size_bits", protocol.packet_size_bits},
      {"loss_model",
       protocol.loss_model == LossModel::kIndependent ? "independent" : "burst"},
      {"loss_prob_thz", protocol.loss_prob_thz},
      {"loss_prob_mmwave", protocol.loss_prob_mmwave},
      {"burst_recovery_prob", protocol.burst_recovery_prob},
      {"ack_loss_prob", protocol.ack_loss_prob},
      {"ack_delay_s", protocol.ack_delay_s},
      {"ul_dl_split", protocol.ul_dl_split},
      {"phase_switch_guard_s", protocol.phase_switch_guard_s}};
  j["overheads"] = {{"eps_sync_mm_s", overheads.eps_sync_mm_s},
                    {"eps_sync_thz_s", overheads.eps_sync_thz_s},
                    {"eps_switch_s", overheads.eps_switch_s}};
  j["quadrature"] = {{"max_distance_step_m", quadrature.max_distance_step_m},
                     {"max_eta_step_m", quadrature.max_eta_step_m}};
  return j.dump(2);
}

std::string Scenario::canonical_hash() const {
  const std::string text = to_json_text();
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  std::ostringstream os;
  os << std::hex << h;
  return os.str();
}

std::string Scenario::resolve_path(const std::string& relative) const {
  fs::path p(relative);
  if (p.is_absolute()) return relative;
  return (fs::path(base_dir) / p).string();
}

CapacityModel Scenario::build_model() const {
  ThzParams t = thz;
  if (!absorption_csv.empty()) {
    t.absorption = AbsorptionTable::from_csv(resolve_path(absorption_csv));
  }
  try {
    return CapacityModel(std::move(t), mmwave);
  } catch (const std::invalid_argument& e) {
    throw ConfigError(std::string("scenario: ") + e.what());
  }
}

std::vector<Trajectory> Scenario::build_trajectories() const {
  std::vector<Trajectory> out;
  for (std::size_t i = 0; i < vehicles.size(); ++i) {
    const VehicleSpec& v = vehicles[i];
    try {
      if (v.kind == VehicleSpec::Kind::kStraight) {
        out.emplace_back(StraightLinePath(v.d_min_m, v.speed_mps, v.d_entry_m,
                                          v.t_entry_s));
      } else {
        TraceTrajectory trace =
            TraceTrajectory::from_csv(resolve_path(v.trace_file), v.tower_xy);
        if (v.time_scale != 1.0) trace = trace.time_scaled(v.time_scale);
        out.emplace_back(std::move(trace));
      }
    } catch (const std::exception& e) {
      throw ConfigError("scenario: vehicles[" + std::to_string(i) + "]: " +
                        e.what());
    }
  }
  return out;
}

std::vector<Diagnostic> validate_scenario(const Scenario& s) {
  std::vector<Diagnostic> diags;
  auto add = [&](const std::string& path, const std::string& message) {
    diags.push_back({path, message});
  };

  if (!s.seed_present) {
    add("seed", "master seed is required (wall-clock seeding is not allowed)");
  }
  if (s.runs < 1) add("runs", "run count must be >= 1");

  if (!(s.thz.d_th_m > 0.0)) add("thz.d_th_m", "must be > 0");
  if (!(s.mmwave.d_th_m > s.thz.d_th_m)) {
    add("thz.d_th_m",
        "region ordering violated: thz.d_th_m must be < mmwave.d_th_m (" +
            std::to_string(s.thz.d_th_m) + " vs " +
            std::to_string(s.mmwave.d_th_m) + ")");
  }
  if (s.thz.n_subbands < 1) add("thz.n_subbands", "must be >= 1");
  if (!(s.thz.bandwidth_hz > 0.0)) add("thz.bandwidth_hz", "must be > 0");
  if (!(s.thz.gamma_th_fraction > 0.0) || s.thz.gamma_th_fraction > 1.0) {
    add("thz.gamma_th_fraction", "must be in (0, 1]");
  }
  if (!(s.mmwave.bandwidth_hz > 0.0)) add("mmwave.bandwidth_hz", "must be > 0");
  if (!(s.mmwave.a_los_per_m > 0.0)) add("mmwave.inv_a_los_m", "must be > 0");
  if (!(s.mmwave.a_out_per_m > 0.0)) add("mmwave.inv_a_out_m", "must be > 0");

  if (!s.absorption_csv.empty()) {
    const std::string path = s.resolve_path(s.absorption_csv);
    if (!fs::exists(path)) {
      add("thz.absorption_csv", "file not found: " + path);
    } else {
      try {
        AbsorptionTable table = AbsorptionTable::from_csv(path);
        const double f_lo = s.thz.carrier_hz - s.thz.bandwidth_hz / 2.0;
        const double f_hi = s.thz.carrier_hz + s.thz.bandwidth_hz / 2.0;
        if (f_lo < table.min_frequency() || f_hi > table.max_frequency()) {
          add("thz.absorption_csv",
              "table does not cover the configured band");
        }
      } catch (const std::exception& e) {
        add("thz.absorption_csv", e.what());
      }
    }
  }

  for (std::size_t i = 0; i < s.vehicles.size(); ++i) {
    const VehicleSpec& v = s.vehicles[i];
    const std::string where = "vehicles[" + std::to_string(i) + "]";
    if (v.kind == VehicleSpec::Kind::kStraight) {
      if (!(v.speed_mps > 0.0)) add(where + ".speed_mps", "must be > 0");
      if (v.d_min_m < 0.0 || v.d_min_m > v.d_entry_m) {
        add(where + ".d_min_m", "need 0 <= d_min <= d_entry");
      }
    } else {
      const std::string path = s.resolve_path(v.trace_file);
      if (!fs::exists(path)) {
        add(where + ".file", "trace file not found: " + path);
      } else {
        try {
          TraceTrajectory::from_csv(path, v.tower_xy);
        } catch (const std::exception& e) {
          add(where + ".file", e.what());
        }
      }
      if (!(v.time_scale > 0.0)) add(where + ".time_scale", "must be > 0");
    }
  }

  if (s.fleet.count < 1) add("fleet.count", "must be >= 1");
  if (!(s.fleet.speed_min_mps > 0.0) ||
      s.fleet.speed_max_mps < s.fleet.speed_min_mps) {
    add("fleet.speed_min_mps", "need 0 < speed_min <= speed_max");
  }
  if (!(s.fleet.demand_min_bits > 0.0) ||
      s.fleet.demand_max_bits < s.fleet.demand_min_bits) {
    add("fleet.demand_min_bits", "need 0 < demand_min <= demand_max");
  }
  if (s.fleet.overhead_s < 0.0) add("fleet.overhead_s", "must be >= 0");

  if (!(s.scheduler.slot_duration_s > 0.0)) {
    add("scheduler.slot_duration_s", "must be > 0");
  }
  if (s.scheduler.overhead_s < 0.0) add("scheduler.overhead_s", "must be >= 0");
  if (s.scheduler.algorithm != "greedy" && s.scheduler.algorithm != "optimal" &&
      s.scheduler.algorithm != "random") {
    add("scheduler.algorithm", "must be greedy, optimal or random");
  }

  if (s.compare.vehicles < 1) add("compare.vehicles", "must be >= 1");
  if (s.compare.overhead_ratios.empty()) {
    add("compare.overhead_ratios", "must be non-empty");
  }
  if (!(s.compare.demand_min_bits > 0.0) ||
      s.compare.demand_max_bits < s.compare.demand_min_bits) {
    add("compare.demand_min_bits", "need 0 < demand_min <= demand_max");
  }

  try {
    s.protocol.validate();
  } catch (const std::exception& e) {
    add("protocol", e.what());
  }

  if (!(s.quadrature.max_distance_step_m > 0.0)) {
    add("quadrature.max_distance_step_m", "must be > 0");
  }
  if (!(s.quadrature.max_eta_step_m > 0.0)) {
    add("quadrature.max_eta_step_m", "must be > 0");
  }

  if (s.overheads.eps_sync_mm_s < 0.0 || s.overheads.eps_sync_thz_s < 0.0 ||
      s.overheads.eps_switch_s < 0.0) {
    add("overheads", "overhead times must be >= 0");
  }

  // Only try the full model build when the cheap checks are clean; it
  // catches what is left (table span vs band, etc).
  if (diags.empty()) {
    try {
      s.build_model();
    } catch (const std::exception& e) {
      add("thz", e.what());
    }
  }
  return diags;
}

Scenario apply_sweep_value(const Scenario& base,
                           const std::string& parameter_path, double value) {
  std::string pointer = "/" + parameter_path;
  for (char& c : pointer) {
    if (c == '.') c = '/';
  }
  json j = json::parse(base.to_json_text());
  const json::json_pointer where(pointer);
  if (!j.contains(where)) {
    throw ConfigError("sweep: parameter path '" + parameter_path +
                      "' does not resolve against the scenario");
  }
  if (!j.at(where).is_number()) {
    throw ConfigError("sweep: parameter '" + parameter_path +
                      "' is not a numeric scalar");
  }
  j[where] = value;
  Scenario swept =
      Scenario::from_json_text(j.dump(), "sweep:" + parameter_path,
                               base.base_dir);
  swept.base_dir = base.base_dir;
  return swept;
}

std::vector<Diagnostic> validate_sweep(const SweepSpec& sweep,
                                       const Scenario& base) {
  std::vector<Diagnostic> diags;
  if (sweep.values.empty()) {
    diags.push_back({"sweep.values", "must be non-empty"});
  }
  if (sweep.runs_per_value < 1) {
    diags.push_back({"sweep.runs_per_value", "must be >= 1"});
  }
  try {
    if (!sweep.values.empty()) {
      apply_sweep_value(base, sweep.parameter_path, sweep.values.front());
    } else {
      apply_sweep_value(base, sweep.parameter_path, 0.0);
    }
  } catch (const ConfigError& e) {
    diags.push_back({"sweep.parameter_path", e.what()});
  }
  return diags;
}

std::vector<StraightLinePath> generate_fleet(int n_vehicles,
                                             double speed_min_mps,
                                             double speed_max_mps,
                                             double arrival_span_s,
                                             double d_min_m, double d_entry_m,
                                             Rng& rng) {
  if (n_vehicles < 1) {
    throw std::invalid_argument("generate_fleet: need at least one vehicle");
  }
  if (!(speed_min_mps > 0.0) || speed_max_mps < speed_min_mps) {
    throw std::invalid_argument("generate_fleet: bad speed range");
  }
  std::vector<StraightLinePath> fleet;
  fleet.reserve(static_cast<std::size_t>(n_vehicles));
  for (int i = 0; i < n_vehicles; ++i) {
    const double speed = rng.uniform(speed_min_mps, speed_max_mps);
    const double arrival = rng.uniform(0.0, arrival_span_s);
    fleet.emplace_back(d_min_m, speed, d_entry_m, arrival);
  }
  return fleet;
}

std::vector<VehicleDemand> generate_demands(int n_vehicles,
                                            double demand_min_bits,
                                            double demand_max_bits,
                                            double overhead_s, Rng& rng) {
  std::vector<VehicleDemand> demands;
  demands.reserve(static_cast<std::size_t>(n_vehicles));
  for (int i = 0; i < n_vehicles; ++i) {
    demands.push_back({i, rng.uniform(demand_min_bits, demand_max_bits),
                       overhead_s});
  }
  return demands;
}

}  // namespace datashower
