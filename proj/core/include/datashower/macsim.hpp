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

#include <iosfwd>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "datashower/channel.hpp"
#include "datashower/rng.hpp"
#include "datashower/trajectory.hpp"

namespace datashower {

/// Active data/ACK channel pairing, a pure function of distance: THz data
/// with mmWave ACKs inside the THz region, mmWave data with LTE ACKs inside
/// the mmWave region, nothing beyond.
enum class ChannelMode { kThzDataMmWaveAck, kMmWaveDataLteAck, kNoLink };

const char* to_string(ChannelMode mode);

ChannelMode select_mode(double d_m, const CapacityModel& model);

/// A packet train validated by one cumulative ACK. Retransmitted packets sit
/// at the head, before any fresh ids.
struct Chunk {
  long chunk_id = 0;
  std::vector<long> packet_ids;
  double t_sent_s = 0.0;
};

struct CumulativeAck {
  long chunk_id = 0;
  std::vector<bool> received_ok;  // one flag per packet of the chunk
  double t_sent_s = 0.0;
};

enum class LossModel {
  kIndependent,  // per-packet i.i.d. loss with the per-mode probability
  kBurst,        // two-state process; outage entry tracks the channel model
};

struct ProtocolConfig {
  double chunk_duration_s = 0.01;
  double packet_size_bits = 1e7;
  LossModel loss_model = LossModel::kIndependent;
  double loss_prob_thz = 0.0;
  double loss_prob_mmwave = 0.0;
  double burst_recovery_prob = 0.5;
  double ack_loss_prob = 0.0;
  // ACK processing + reverse-channel delay; negative means the default of
  // one chunk duration (losses in chunk i are repaired in chunk i+2).
  double ack_delay_s = -1.0;
  double ul_dl_split = 0.5;       // fraction of the contact window for UL
  double phase_switch_guard_s = 0.0;  // idle gap at the UL/DL boundary

  double effective_ack_delay() const {
    return ack_delay_s < 0.0 ? chunk_duration_s : ack_delay_s;
  }
  void validate() const;
};

/// Deterministic loss script for regression tests: exact packet losses as
/// (chunk_id, packet_id) and ACK losses by chunk_id.
struct ScriptedLosses {
  std::set<std::pair<long, long>> packets;
  std::set<long> acks;

  /// Lines `chunk_id,packet_id` for data losses and `ack,chunk_id` for ACK
  /// losses; '#' comments allowed.
  static ScriptedLosses from_csv(const std::string& path);
  static ScriptedLosses from_csv_stream(std::istream& in,
                                        const std::string& source_name);
};

struct TickRecord {
  double t_s;
  ChannelMode mode;
  double offered_bits;
  double delivered_bits;
  double retx_bits;
};

struct SessionReport {
  std::vector<TickRecord> ticks;
  std::vector<Chunk> chunks;

  double contact_time_s = 0.0;
  double offered_bits = 0.0;            // all transmitted payload
  double delivered_unique_bits = 0.0;   // first-time deliveries only
  double retransmitted_bits = 0.0;
  double goodput_bps = 0.0;             // delivered_unique_bits / contact_time
  long mode_switches = 0;
  long packets_offered = 0;
  long packets_delivered = 0;
  long duplicate_packets = 0;
  std::vector<double> delivery_latency_s;  // per delivered packet

  bool empty() const { return ticks.empty(); }

  /// Per-tick CSV `t_s,mode,offered_bits,delivered_bits,retx_bits`.
  void write_csv(std::ostream& out) const;
  /// Key-value summary block (goodput and counters).
  void write_summary(std::ostream& out) const;
};

/// Runs one chunk/cumulative-ACK session over the trajectory's contact
/// windows. Time advances in chunk ticks; each tick sends one chunk sized by
/// the capacity integrated over the tick, losses are repaired selectively
/// after the cumulative ACK arrives, and a lost ACK forces the whole chunk
/// out again. The UL/DL boundary inserts the configured guard gap.
SessionReport run_session(const Trajectory& trajectory,
                          const CapacityModel& model,
                          const ProtocolConfig& config, Rng& rng,
                          const ScriptedLosses* scripted = nullptr);

}  // namespace datashower
