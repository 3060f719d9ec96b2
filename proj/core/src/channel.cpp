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

#include "datashower/channel.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "datashower/units.hpp"

namespace datashower {

namespace {

// Pairwise (split-at-n/2) summation. Keeps band sums associative over
// aligned half-partitions and improves accumulation error over a plain
// left-to-right loop.
double pairwise_sum(const double* v, std::size_t n) {
  if (n == 0) return 0.0;
  if (n == 1) return v[0];
  if (n == 2) return v[0] + v[1];
  const std::size_t h = n / 2;
  return pairwise_sum(v, h) + pairwise_sum(v + h, n - h);
}

double pairwise_sum(const std::vector<double>& v) {
  return pairwise_sum(v.data(), v.size());
}

void require_positive_distance(double d_m, const char* who) {
  if (!(d_m > 0.0)) {
    throw std::domain_error(std::string(who) + ": distance must be > 0 m");
  }
}

}  // namespace

double ThzParams::linear_link_gain() const {
  const double g = gain_per_end ? 2.0 * antenna_gain_db : antenna_gain_db;
  return db_to_linear(g);
}

double ThzParams::tx_power_w() const { return dbm_to_watt(tx_power_dbm); }

void ThzParams::validate() const {
  if (n_subbands < 1) {
    throw std::invalid_argument("ThzParams: n_subbands must be >= 1");
  }
  if (!(bandwidth_hz > 0.0)) {
    throw std::invalid_argument("ThzParams: bandwidth must be > 0");
  }
  if (!(d_th_m > 0.0)) {
    throw std::invalid_argument("ThzParams: d_th must be > 0");
  }
  if (!(gamma_th_fraction > 0.0) || gamma_th_fraction > 1.0) {
    throw std::invalid_argument(
        "ThzParams: gamma_th_fraction must be in (0, 1]");
  }
  if (!(noise_floor_psd_w_per_hz >= 0.0)) {
    throw std::invalid_argument("ThzParams: noise floor must be >= 0");
  }
  if (!(ambient_temperature_k > 0.0)) {
    throw std::invalid_argument("ThzParams: ambient temperature must be > 0");
  }
  const double f_lo = carrier_hz - bandwidth_hz / 2.0;
  const double f_hi = carrier_hz + bandwidth_hz / 2.0;
  if (f_lo < absorption.min_frequency() || f_hi > absorption.max_frequency()) {
    throw std::invalid_argument(
        "ThzParams: configured band exceeds the absorption table span");
  }
}

void MmWaveParams::validate() const {
  if (!(bandwidth_hz > 0.0)) {
    throw std::invalid_argument("MmWaveParams: bandwidth must be > 0");
  }
  if (!(d_th_m > 0.0)) {
    throw std::invalid_argument("MmWaveParams: d_th must be > 0");
  }
  if (!(a_los_per_m > 0.0) || !(a_out_per_m > 0.0)) {
    throw std::invalid_argument("MmWaveParams: a_los and a_out must be > 0");
  }
}

double thz_path_gain(double f_hz, double d_m, const AbsorptionTable& k) {
  require_positive_distance(d_m, "thz_path_gain");
  const double spread =
      kSpeedOfLight / (4.0 * std::numbers::pi * f_hz * d_m);
  return spread * spread * std::exp(-k.k_at(f_hz) * d_m);
}

double thz_noise_psd(double f_hz, double d_m, const ThzParams& p) {
  require_positive_distance(d_m, "thz_noise_psd");
  const double emissivity = -std::expm1(-p.absorption.k_at(f_hz) * d_m);
  return kBoltzmann * p.ambient_temperature_k * emissivity +
         p.noise_floor_psd_w_per_hz;
}

double thz_capacity_over(double d_m, double f_lo_hz, double f_hi_hz,
                         int n_subbands, double power_per_band_w,
                         const ThzParams& p) {
  require_positive_distance(d_m, "thz_capacity_over");
  if (n_subbands < 1 || !(f_hi_hz > f_lo_hz)) {
    throw std::invalid_argument("thz_capacity_over: bad band spec");
  }
  const double df = (f_hi_hz - f_lo_hz) / n_subbands;
  std::vector<double> terms(static_cast<std::size_t>(n_subbands));
  for (int i = 0; i < n_subbands; ++i) {
    const double f = f_lo_hz + (i + 0.5) * df;
    const double gain = thz_path_gain(f, d_m, p.absorption);
    const double sn = thz_noise_psd(f, d_m, p);
    const double snr = gain * power_per_band_w / (df * sn);
    terms[static_cast<std::size_t>(i)] = df * std::log2(1.0 + snr);
  }
  return pairwise_sum(terms);
}

double thz_capacity_los(double d_m, const ThzParams& p) {
  const double p_band =
      p.tx_power_w() * p.linear_link_gain() / p.n_subbands;
  return thz_capacity_over(d_m, p.carrier_hz - p.bandwidth_hz / 2.0,
                           p.carrier_hz + p.bandwidth_hz / 2.0, p.n_subbands,
                           p_band, p);
}

double thz_snr(double d_m, const ThzParams& p) {
  require_positive_distance(d_m, "thz_snr");
  const double df = p.bandwidth_hz / p.n_subbands;
  const double f_lo = p.carrier_hz - p.bandwidth_hz / 2.0;
  const double st = p.tx_power_w() * p.linear_link_gain() /
                    p.n_subbands / df;  // transmit PSD per band
  std::vector<double> terms(static_cast<std::size_t>(p.n_subbands));
  for (int i = 0; i < p.n_subbands; ++i) {
    const double f = f_lo + (i + 0.5) * df;
    const double gain = thz_path_gain(f, d_m, p.absorption);
    const double sn = thz_noise_psd(f, d_m, p);
    terms[static_cast<std::size_t>(i)] = gain * st / sn;
  }
  return pairwise_sum(terms);
}

double thz_outage_prob(double d_m, const ThzParams& p) {
  require_positive_distance(d_m, "thz_outage_prob");
  if (d_m > p.d_th_m) {
    throw std::domain_error("thz_outage_prob: no THz link beyond d_th");
  }
  const double gamma_th = p.gamma_th_fraction * thz_snr(p.d_th_m, p);
  return -std::expm1(-gamma_th / thz_snr(d_m, p));
}

double mmwave_snr(double d_m, LinkState state, const MmWaveParams& p) {
  require_positive_distance(d_m, "mmwave_snr");
  if (state == LinkState::kOutage) {
    throw std::domain_error("mmwave_snr: no SNR defined in outage");
  }
  const bool los = state == LinkState::kLos;
  const double intercept = los ? p.pl_intercept_los_db : p.pl_intercept_nlos_db;
  const double slope = los ? p.pl_slope_los : p.pl_slope_nlos;
  const double pl_db = intercept + 10.0 * slope * std::log10(d_m);
  const double snr_db = p.tx_power_dbm + p.antenna_gain_db - pl_db -
                        (p.noise_power_dbm + p.noise_figure_db);
  return db_to_linear(snr_db);
}

double mmwave_capacity(double d_m, LinkState state, const MmWaveParams& p) {
  return p.bandwidth_hz * std::log2(1.0 + mmwave_snr(d_m, state, p));
}

StateProbs mmwave_state_probs(double d_m, const MmWaveParams& p) {
  require_positive_distance(d_m, "mmwave_state_probs");
  const double outage =
      std::max(0.0, -std::expm1(p.b_out - p.a_out_per_m * d_m));
  const double los = (1.0 - outage) * std::exp(-p.a_los_per_m * d_m);
  const double nlos = 1.0 - outage - los;
  return {los, nlos, outage};
}

double mmwave_nlos_delta(double d_m, const MmWaveParams& p) {
  return mmwave_snr(d_m, LinkState::kLos, p) /
         mmwave_snr(d_m, LinkState::kNlos, p);
}

namespace {

// One pass over the sub-band grid producing both the LoS capacity and the
// wideband SNR, term-for-term identical to thz_capacity_los / thz_snr.
struct ThzEval {
  double capacity;
  double snr;
};

ThzEval thz_eval(double d_m, const ThzParams& p) {
  const double df = p.bandwidth_hz / p.n_subbands;
  const double f_lo = p.carrier_hz - p.bandwidth_hz / 2.0;
  const double p_band = p.tx_power_w() * p.linear_link_gain() / p.n_subbands;
  const double st = p.tx_power_w() * p.linear_link_gain() / p.n_subbands / df;
  std::vector<double> cap_terms(static_cast<std::size_t>(p.n_subbands));
  std::vector<double> snr_terms(static_cast<std::size_t>(p.n_subbands));
  for (int i = 0; i < p.n_subbands; ++i) {
    const double f = f_lo + (i + 0.5) * df;
    const double gain = thz_path_gain(f, d_m, p.absorption);
    const double sn = thz_noise_psd(f, d_m, p);
    const double snr = gain * p_band / (df * sn);
    cap_terms[static_cast<std::size_t>(i)] = df * std::log2(1.0 + snr);
    snr_terms[static_cast<std::size_t>(i)] = gain * st / sn;
  }
  return {pairwise_sum(cap_terms), pairwise_sum(snr_terms)};
}

}  // namespace

CapacityModel::CapacityModel(ThzParams thz, MmWaveParams mmwave)
    : thz_(std::move(thz)), mmwave_(std::move(mmwave)) {
  thz_.validate();
  mmwave_.validate();
  if (!(mmwave_.d_th_m > thz_.d_th_m)) {
    throw std::invalid_argument(
        "CapacityModel: regions must be ordered, d_th_mm > d_th_thz");
  }
  gamma_th_ = thz_.gamma_th_fraction * thz_snr(thz_.d_th_m, thz_);
}

double CapacityModel::capacity(double d_m) const {
  require_positive_distance(d_m, "combined_capacity");
  if (d_m <= thz_.d_th_m) {
    const ThzEval ev = thz_eval(d_m, thz_);
    const double p_outage = -std::expm1(-gamma_th_ / ev.snr);
    return ev.capacity * (1.0 - p_outage);
  }
  if (d_m <= mmwave_.d_th_m) {
    const StateProbs probs = mmwave_state_probs(d_m, mmwave_);
    return mmwave_capacity(d_m, LinkState::kLos, mmwave_) * probs.los +
           mmwave_capacity(d_m, LinkState::kNlos, mmwave_) * probs.nlos;
  }
  return 0.0;
}

double combined_capacity(double d_m, const CapacityModel& model) {
  return model.capacity(d_m);
}

}  // namespace datashower
