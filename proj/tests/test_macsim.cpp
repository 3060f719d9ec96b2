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

#include <algorithm>
#include <set>
#include <sstream>

#include "datashower/bulk.hpp"
#include "datashower/macsim.hpp"

using namespace datashower;

namespace {

CapacityModel default_model() { return {ThzParams{}, MmWaveParams{}}; }

// Parked just inside the THz region: constant capacity, stable chunk size.
Trajectory parked_at(double d_m, double duration_s) {
  return Trajectory(TraceTrajectory({{0.0, d_m}, {duration_s, d_m}}));
}

ProtocolConfig lossless_config() {
  ProtocolConfig cfg;
  cfg.chunk_duration_s = 0.01;
  cfg.packet_size_bits = 3e8;
  cfg.ul_dl_split = 0.5;
  cfg.phase_switch_guard_s = 0.0;
  return cfg;
}

}  // namespace

TEST_CASE("mode selection is a pure function of distance") {
  const CapacityModel model = default_model();
  CHECK(select_mode(5.0, model) == ChannelMode::kThzDataMmWaveAck);
  CHECK(select_mode(10.0, model) == ChannelMode::kThzDataMmWaveAck);
  CHECK(select_mode(10.01, model) == ChannelMode::kMmWaveDataLteAck);
  CHECK(select_mode(100.0, model) == ChannelMode::kMmWaveDataLteAck);
  CHECK(select_mode(200.0, model) == ChannelMode::kMmWaveDataLteAck);
  CHECK(select_mode(250.0, model) == ChannelMode::kNoLink);
  CHECK_THROWS_AS(select_mode(0.0, model), std::domain_error);
}

TEST_CASE("scripted losses parse, with ack lines and comments") {
  std::istringstream in(
      "# chunk_id,packet_id data losses; ack,chunk_id ACK losses\n"
      "1,21\n"
      "1,22\n"
      "ack,3\n");
  const ScriptedLosses losses = ScriptedLosses::from_csv_stream(in, "mem");
  CHECK(losses.packets.count({1, 21}) == 1);
  CHECK(losses.packets.count({1, 22}) == 1);
  CHECK(losses.packets.count({2, 21}) == 0);
  CHECK(losses.acks.count(3) == 1);
}

TEST_CASE("losses in chunk 1 are repaired at the head of chunk 3") {
  const CapacityModel model = default_model();
  ProtocolConfig cfg = lossless_config();
  ScriptedLosses losses;
  losses.packets = {{1, 21}, {1, 22}};
  Rng rng(1);
  const SessionReport report =
      run_session(parked_at(5.0, 1.0), model, cfg, rng, &losses);
  REQUIRE(report.chunks.size() >= 3);
  // Chunk 1 must actually carry ids 21 and 22.
  const Chunk& first = report.chunks[0];
  CHECK(std::find(first.packet_ids.begin(), first.packet_ids.end(), 21) !=
        first.packet_ids.end());
  // The repair waits out the one-chunk ACK delay: not in chunk 2...
  const Chunk& second = report.chunks[1];
  CHECK(std::find(second.packet_ids.begin(), second.packet_ids.end(), 21) ==
        second.packet_ids.end());
  // ...and leads chunk 3.
  const Chunk& third = report.chunks[2];
  REQUIRE(third.packet_ids.size() >= 2);
  CHECK(third.packet_ids[0] == 21);
  CHECK(third.packet_ids[1] == 22);
  CHECK(report.retransmitted_bits == doctest::Approx(2.0 * cfg.packet_size_bits));
}

TEST_CASE("a lost ACK forces the whole chunk out again, bit-exact") {
  const CapacityModel model = default_model();
  ProtocolConfig cfg = lossless_config();
  ScriptedLosses losses;
  losses.acks = {2};
  Rng rng(1);
  const SessionReport report =
      run_session(parked_at(5.0, 1.0), model, cfg, rng, &losses);
  REQUIRE(report.chunks.size() >= 4);
  const Chunk& second = report.chunks[1];
  const Chunk& fourth = report.chunks[3];
  REQUIRE(fourth.packet_ids.size() >= second.packet_ids.size());
  for (std::size_t i = 0; i < second.packet_ids.size(); ++i) {
    CHECK(fourth.packet_ids[i] == second.packet_ids[i]);
  }
  // Every resent packet had already been delivered, so they all come back
  // as duplicates.
  CHECK(report.duplicate_packets ==
        static_cast<long>(second.packet_ids.size()));
}

TEST_CASE("chunk ids are strictly increasing and retx precedes fresh") {
  const CapacityModel model = default_model();
  ProtocolConfig cfg = lossless_config();
  cfg.loss_prob_thz = 0.2;
  Rng rng(77);
  const SessionReport report =
      run_session(parked_at(6.0, 2.0), model, cfg, rng, nullptr);
  std::set<long> seen;
  long max_seen = 0;
  for (const Chunk& chunk : report.chunks) {
    REQUIRE_FALSE(chunk.packet_ids.empty());
    // Strictly increasing ids within a chunk; retransmitted ids (those
    // already seen) must precede all fresh ids.
    bool fresh_started = false;
    for (std::size_t i = 0; i < chunk.packet_ids.size(); ++i) {
      const long id = chunk.packet_ids[i];
      if (i > 0) CHECK(id > chunk.packet_ids[i - 1]);
      const bool is_fresh = id > max_seen;
      if (is_fresh) fresh_started = true;
      if (fresh_started) CHECK(is_fresh);
    }
    for (long id : chunk.packet_ids) {
      seen.insert(id);
      max_seen = std::max(max_seen, id);
    }
  }
}

TEST_CASE("eventual delivery under heavy loss") {
  const CapacityModel model = default_model();
  ProtocolConfig cfg = lossless_config();
  cfg.loss_prob_thz = 0.3;
  Rng rng(5);
  const SessionReport report =
      run_session(parked_at(5.0, 5.0), model, cfg, rng, nullptr);
  // Everything offered long enough before the window end must be in; here
  // the last few chunk/ACK cycles are the only possible stragglers.
  CHECK(report.packets_delivered >= report.packets_offered -
                                        8 * static_cast<long>(
                                                report.chunks.back()
                                                    .packet_ids.size()));
  // Delivered exactly once: unique count equals delivered count.
  CHECK(report.delivery_latency_s.size() ==
        static_cast<std::size_t>(report.packets_delivered));
}

TEST_CASE("zero loss: goodput equals the analytic bulk up to edge effects") {
  const CapacityModel model = default_model();
  ProtocolConfig cfg = lossless_config();
  Rng rng(3);
  const Trajectory traj = parked_at(5.0, 2.0);
  const SessionReport report = run_session(traj, model, cfg, rng, nullptr);
  const double bulk = bulk_integral(traj, model);
  const double delivered = report.goodput_bps * report.contact_time_s;
  CHECK(delivered <= bulk * (1.0 + 1e-9));
  // Loses at most packet-rounding per tick.
  const double rounding =
      cfg.packet_size_bits * static_cast<double>(report.ticks.size());
  CHECK(delivered >= bulk - rounding - 1e-6 * bulk);
  CHECK(report.retransmitted_bits == 0.0);
}

TEST_CASE("the UL/DL guard gap removes its share of the offered bits") {
  const CapacityModel model = default_model();
  ProtocolConfig cfg = lossless_config();
  const Trajectory traj = parked_at(5.0, 2.0);
  Rng r1(3), r2(3);
  const double without =
      run_session(traj, model, cfg, r1, nullptr).delivered_unique_bits;
  cfg.phase_switch_guard_s = 0.2;
  const double with_guard =
      run_session(traj, model, cfg, r2, nullptr).delivered_unique_bits;
  const double capacity = model.capacity(5.0);
  const double removed = without - with_guard;
  CHECK(removed > 0.0);
  CHECK(removed == doctest::Approx(0.2 * capacity).epsilon(0.15));
}

TEST_CASE("modes progress mmwave -> thz -> mmwave over a full pass") {
  const CapacityModel model = default_model();
  ProtocolConfig cfg = lossless_config();
  cfg.chunk_duration_s = 0.25;
  Trajectory traj(StraightLinePath(2.0, 5.0, 200.0));
  Rng rng(9);
  const SessionReport report = run_session(traj, model, cfg, rng, nullptr);
  REQUIRE_FALSE(report.ticks.empty());
  CHECK(report.ticks.front().mode == ChannelMode::kMmWaveDataLteAck);
  CHECK(report.ticks.back().mode == ChannelMode::kMmWaveDataLteAck);
  bool saw_thz = false;
  for (const TickRecord& t : report.ticks) {
    if (t.mode == ChannelMode::kThzDataMmWaveAck) saw_thz = true;
  }
  CHECK(saw_thz);
  CHECK(report.mode_switches == 2);
}

TEST_CASE("no contact means an empty report") {
  const CapacityModel model = default_model();
  ProtocolConfig cfg = lossless_config();
  Rng rng(1);
  Trajectory traj(TraceTrajectory({{0.0, 300.0}, {10.0, 280.0}}));
  const SessionReport report = run_session(traj, model, cfg, rng, nullptr);
  CHECK(report.empty());
  CHECK(report.goodput_bps == 0.0);
}

TEST_CASE("per-tick csv and summary formats") {
  const CapacityModel model = default_model();
  ProtocolConfig cfg = lossless_config();
  Rng rng(2);
  const SessionReport report =
      run_session(parked_at(5.0, 0.1), model, cfg, rng, nullptr);
  std::ostringstream csv;
  report.write_csv(csv);
  CHECK(csv.str().rfind("t_s,mode,offered_bits,delivered_bits,retx_bits", 0) ==
        0);
  CHECK(csv.str().find("thz") != std::string::npos);
  std::ostringstream summary;
  report.write_summary(summary);
  CHECK(summary.str().find("goodput_bps = ") != std::string::npos);
  CHECK(summary.str().find("mode_switches = ") != std::string::npos);
}

TEST_CASE("burst loss model recovers and still delivers") {
  const CapacityModel model = default_model();
  ProtocolConfig cfg = lossless_config();
  cfg.loss_model = LossModel::kBurst;
  cfg.burst_recovery_prob = 0.5;
  Rng rng(11);
  const SessionReport report =
      run_session(parked_at(9.5, 3.0), model, cfg, rng, nullptr);
  CHECK(report.packets_delivered > 0);
  CHECK(report.delivered_unique_bits <=
        report.offered_bits * (1.0 + 1e-12));
}

TEST_CASE("config validation rejects nonsense") {
  ProtocolConfig cfg;
  cfg.chunk_duration_s = 0.0;
  CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
  cfg = ProtocolConfig{};
  cfg.ack_loss_prob = 1.5;
  CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
  cfg = ProtocolConfig{};
  cfg.ul_dl_split = -0.1;
  CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
}
