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

#include "datashower/macsim.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

#include "datashower/bulk.hpp"

namespace datashower {

const char* to_string(ChannelMode mode) {
  switch (mode) {
    case ChannelMode::kThzDataMmWaveAck:
      return "thz";
    case ChannelMode::kMmWaveDataLteAck:
      return "mmwave";
    case ChannelMode::kNoLink:
      return "nolink";
  }
  return "?";
}

ChannelMode select_mode(double d_m, const CapacityModel& model) {
  if (!(d_m > 0.0)) {
    throw std::domain_error("select_mode: distance must be > 0");
  }
  if (d_m <= model.thz().d_th_m) return ChannelMode::kThzDataMmWaveAck;
  if (d_m <= model.mmwave().d_th_m) return ChannelMode::kMmWaveDataLteAck;
  return ChannelMode::kNoLink;
}

void ProtocolConfig::validate() const {
  if (!(chunk_duration_s > 0.0)) {
    throw std::invalid_argument("ProtocolConfig: chunk duration must be > 0");
  }
  if (!(packet_size_bits > 0.0)) {
    throw std::invalid_argument("ProtocolConfig: packet size must be > 0");
  }
  for (double p : {loss_prob_thz, loss_prob_mmwave, ack_loss_prob,
                   burst_recovery_prob}) {
    if (p < 0.0 || p > 1.0) {
      throw std::invalid_argument("ProtocolConfig: probability outside [0,1]");
    }
  }
  if (ul_dl_split < 0.0 || ul_dl_split > 1.0) {
    throw std::invalid_argument("ProtocolConfig: ul_dl_split outside [0,1]");
  }
  if (phase_switch_guard_s < 0.0) {
    throw std::invalid_argument("ProtocolConfig: guard must be >= 0");
  }
}

ScriptedLosses ScriptedLosses::from_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::runtime_error("ScriptedLosses: cannot open " + path);
  }
  return from_csv_stream(in, path);
}

ScriptedLosses ScriptedLosses::from_csv_stream(std::istream& in,
                                               const std::string& source_name) {
  ScriptedLosses losses;
  std::string line;
  long line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line[0] == '#') continue;
    std::istringstream row(line);
    std::string a, b;
    if (!std::getline(row, a, ',') || !std::getline(row, b)) {
      throw std::runtime_error("ScriptedLosses: " + source_name + " line " +
                               std::to_string(line_no) + ": malformed row");
    }
    try {
      if (a == "ack") {
        losses.acks.insert(std::stol(b));
      } else {
        losses.packets.insert({std::stol(a), std::stol(b)});
      }
    } catch (const std::exception&) {
      throw std::runtime_error("ScriptedLosses: " + source_name + " line " +
                               std::to_string(line_no) +
                               ": cannot parse ids");
    }
  }
  return losses;
}

namespace {

struct AckEvent {
  double arrival_s;
  long chunk_id;
  bool lost;
  std::vector<long> missing_ids;  // ids to repair when the ACK is received
  std::vector<long> all_ids;      // full chunk, resent when the ACK is lost
};

double loss_prob_for(const ProtocolConfig& cfg, ChannelMode mode) {
  return mode == ChannelMode::kThzDataMmWaveAck ? cfg.loss_prob_thz
                                                : cfg.loss_prob_mmwave;
}

double outage_prob_at(const CapacityModel& model, ChannelMode mode,
                      double d_m) {
  if (mode == ChannelMode::kThzDataMmWaveAck) {
    return -std::expm1(-model.thz_gamma_th() /
                       thz_snr(std::min(d_m, model.thz().d_th_m), model.thz()));
  }
  return mmwave_state_probs(d_m, model.mmwave()).outage;
}

}  // namespace

SessionReport run_session(const Trajectory& trajectory,
                          const CapacityModel& model,
                          const ProtocolConfig& config, Rng& rng,
                          const ScriptedLosses* scripted) {
  config.validate();
  SessionReport report;
  const auto windows = trajectory.contact_windows(model.max_range_m());
  if (windows.empty()) return report;

  const double tick = config.chunk_duration_s;
  const double ack_delay = config.effective_ack_delay();

  long next_chunk_id = 1;
  long next_fresh_id = 1;
  std::set<long> pending_retx;            // ids awaiting retransmission
  std::deque<AckEvent> acks_in_flight;    // chronological (constant delay)
  std::unordered_set<long> received;      // ids delivered at the receiver
  std::unordered_map<long, double> first_offered;
  bool burst_outage = false;
  bool have_prev_mode = false;
  ChannelMode prev_mode = ChannelMode::kNoLink;

  for (const ContactWindow& w : windows) {
    report.contact_time_s += w.duration();
    const double t_split = w.t_in_s + config.ul_dl_split * w.duration();
    const double guard_lo = t_split;
    const double guard_hi =
        std::min(t_split + config.phase_switch_guard_s, w.t_out_s);

    double t = w.t_in_s;
    while (t + tick <= w.t_out_s + 1e-9 * tick) {
      const double t_next = t + tick;

      // Sender reacts to every ACK due by now: selective repair on
      // reception, full-chunk resend on loss.
      while (!acks_in_flight.empty() &&
             acks_in_flight.front().arrival_s <= t + 1e-12) {
        const AckEvent& ev = acks_in_flight.front();
        const auto& ids = ev.lost ? ev.all_ids : ev.missing_ids;
        pending_retx.insert(ids.begin(), ids.end());
        acks_in_flight.pop_front();
      }

      const double d_start = trajectory.distance_at(t);
      const ChannelMode mode = select_mode(std::max(d_start, 1e-4), model);
      if (have_prev_mode && mode != prev_mode) ++report.mode_switches;
      prev_mode = mode;
      have_prev_mode = true;

      // Capacity through the tick, excluding any overlap with the UL/DL
      // guard gap.
      double capacity_bits = 0.0;
      if (guard_hi > guard_lo && t < guard_hi && t_next > guard_lo) {
        capacity_bits +=
            capacity_time_integral(trajectory, model, t,
                                   std::min(t_next, guard_lo), {});
        capacity_bits += capacity_time_integral(
            trajectory, model, std::max(t, guard_hi), t_next, {});
      } else {
        capacity_bits = capacity_time_integral(trajectory, model, t, t_next, {});
      }

      const long packet_count = static_cast<long>(
          std::floor(capacity_bits / config.packet_size_bits));

      if (config.loss_model == LossModel::kBurst) {
        if (burst_outage) {
          if (rng.bernoulli(config.burst_recovery_prob)) burst_outage = false;
        } else if (rng.bernoulli(outage_prob_at(model, mode, d_start))) {
          burst_outage = true;
        }
      }

      TickRecord rec{t, mode, 0.0, 0.0, 0.0};
      if (packet_count > 0) {
        Chunk chunk;
        chunk.chunk_id = next_chunk_id++;
        chunk.t_sent_s = t;
        long retx_count = 0;
        while (!pending_retx.empty() &&
               static_cast<long>(chunk.packet_ids.size()) < packet_count) {
          chunk.packet_ids.push_back(*pending_retx.begin());
          pending_retx.erase(pending_retx.begin());
          ++retx_count;
        }
        while (static_cast<long>(chunk.packet_ids.size()) < packet_count) {
          chunk.packet_ids.push_back(next_fresh_id);
          first_offered.emplace(next_fresh_id, t);
          ++next_fresh_id;
          ++report.packets_offered;
        }

        const double p_loss = loss_prob_for(config, mode);
        CumulativeAck ack;
        ack.chunk_id = chunk.chunk_id;
        ack.t_sent_s = t_next;
        ack.received_ok.reserve(chunk.packet_ids.size());
        std::vector<long> missing;
        for (long id : chunk.packet_ids) {
          bool lost = false;
          if (scripted != nullptr &&
              scripted->packets.count({chunk.chunk_id, id}) > 0) {
            lost = true;
          }
          if (config.loss_model == LossModel::kIndependent) {
            if (rng.bernoulli(p_loss)) lost = true;
          } else if (burst_outage) {
            lost = true;
          }
          ack.received_ok.push_back(!lost);
          if (lost) {
            missing.push_back(id);
          } else if (received.insert(id).second) {
            ++report.packets_delivered;
            rec.delivered_bits += config.packet_size_bits;
            auto it = first_offered.find(id);
            if (it != first_offered.end()) {
              report.delivery_latency_s.push_back(t_next - it->second);
            }
          } else {
            ++report.duplicate_packets;
          }
        }

        bool ack_lost = scripted != nullptr &&
                        scripted->acks.count(chunk.chunk_id) > 0;
        if (rng.bernoulli(config.ack_loss_prob)) ack_lost = true;
        acks_in_flight.push_back({t_next + ack_delay, chunk.chunk_id, ack_lost,
                                  std::move(missing), chunk.packet_ids});

        rec.offered_bits =
            static_cast<double>(packet_count) * config.packet_size_bits;
        rec.retx_bits = static_cast<double>(retx_count) * config.packet_size_bits;
        report.offered_bits += rec.offered_bits;
        report.retransmitted_bits += rec.retx_bits;
        report.chunks.push_back(std::move(chunk));
      }
      report.ticks.push_back(rec);
      report.delivered_unique_bits += rec.delivered_bits;
      t = t_next;
    }
  }

  report.goodput_bps = report.contact_time_s > 0.0
                           ? report.delivered_unique_bits / report.contact_time_s
                           : 0.0;
  return report;
}

void SessionReport::write_csv(std::ostream& out) const {
  out << "t_s,mode,offered_bits,delivered_bits,retx_bits\n";
  out << std::setprecision(12);
  for (const TickRecord& r : ticks) {
    out << r.t_s << "," << to_string(r.mode) << "," << r.offered_bits << ","
        << r.delivered_bits << "," << r.retx_bits << "\n";
  }
}

void SessionReport::write_summary(std::ostream& out) const {
  out << std::setprecision(12);
  out << "contact_time_s = " << contact_time_s << "\n";
  out << "goodput_bps = " << goodput_bps << "\n";
  out << "offered_bits = " << offered_bits << "\n";
  out << "delivered_unique_bits = " << delivered_unique_bits << "\n";
  out << "retransmitted_bits = " << retransmitted_bits << "\n";
  out << "mode_switches = " << mode_switches << "\n";
  out << "packets_offered = " << packets_offered << "\n";
  out << "packets_delivered = " << packets_delivered << "\n";
  out << "duplicate_packets = " << duplicate_packets << "\n";
  double max_latency = 0.0;
  double sum_latency = 0.0;
  for (double l : delivery_latency_s) {
    max_latency = std::max(max_latency, l);
    sum_latency += l;
  }
  out << "mean_delivery_latency_s = "
      << (delivery_latency_s.empty()
              ? 0.0
              : sum_latency / static_cast<double>(delivery_latency_s.size()))
      << "\n";
  out << "max_delivery_latency_s = " << max_latency << "\n";
}

}  // namespace datashower
