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

#include "datashower/absorption.hpp"

namespace datashower {

/// Link state of a point-to-point radio link. THz links only take kLos or
/// kOutage; mmWave links can be in any of the three.
enum class LinkState { kLos, kNlos, kOutage };

/// THz band parameters. Defaults encode the bundled 0.85 THz configuration:
/// 0.1 THz of bandwidth split into 100 sub-bands, 27 dB of directional gain
/// per antenna end, and a 10 m operational distance.
struct ThzParams {
  double carrier_hz = 0.85e12;
  double bandwidth_hz = 0.1e12;
  int n_subbands = 100;
  double tx_power_dbm = 20.0;
  double antenna_gain_db = 27.0;
  // When true the directional gain is counted at both ends (54 dB link
  // gain); when false it is a single combined link gain.
  bool gain_per_end = true;
  double d_th_m = 10.0;
  // Receiver noise floor added to the molecular noise PSD. This is the one
  // free calibration parameter of the THz receiver model.
  double noise_floor_psd_w_per_hz = 1e-25;
  double ambient_temperature_k = 296.0;
  // The outage threshold SNR is this fraction of the link SNR measured at
  // d_th: gamma_th = fraction * snr(d_th).
  double gamma_th_fraction = 1.0;
  AbsorptionTable absorption = AbsorptionTable::default_table();

  double linear_link_gain() const;
  double tx_power_w() const;
  /// Throws std::invalid_argument on any violated invariant.
  void validate() const;
};

/// mmWave band parameters, defaulted to the 73 GHz measurement fit:
/// PL(d) = alpha + 10*beta*log10(d) per link state, exponential LoS decay
/// and outage onset at b_out/a_out = 150.15 m.
struct MmWaveParams {
  double carrier_hz = 73e9;
  double bandwidth_hz = 1e9;
  double pl_intercept_los_db = 69.8;
  double pl_slope_los = 2.0;
  double pl_intercept_nlos_db = 82.7;
  double pl_slope_nlos = 2.69;
  double tx_power_dbm = 30.0;
  double antenna_gain_db = 27.0;
  double noise_power_dbm = -87.0;
  double noise_figure_db = 5.0;
  double d_th_m = 200.0;
  double a_los_per_m = 1.0 / 37.0;
  double a_out_per_m = 1.0 / 45.5;
  double b_out = 3.3;

  void validate() const;
};

struct StateProbs {
  double los;
  double nlos;
  double outage;
};

// ---- THz primitives ----

/// Magnitude-squared channel gain |H(f,d)|^2 = (c/(4 pi f d))^2 e^(-k(f) d).
/// Throws std::domain_error for d <= 0 or f outside the table span.
double thz_path_gain(double f_hz, double d_m, const AbsorptionTable& k);

/// Noise PSD seen by the receiver: emissivity-scaled thermal radiation
/// kB*T0*(1 - e^(-k(f) d)) plus the receiver floor. [W/Hz]
double thz_noise_psd(double f_hz, double d_m, const ThzParams& p);

/// Capacity of the sub-band grid spanning [f_lo, f_hi], split into n equal
/// sub-bands with `power_per_band_w` allocated to each. Per-band terms are
/// combined with pairwise summation, so evaluating aligned partitions of a
/// band and adding the halves reproduces the full-band value bit for bit.
double thz_capacity_over(double d_m, double f_lo_hz, double f_hi_hz,
                         int n_subbands, double power_per_band_w,
                         const ThzParams& p);

/// LoS Shannon capacity over the full configured band with uniform power
/// allocation P_i = P_linear * G / N_B. [bits/s]
double thz_capacity_los(double d_m, const ThzParams& p);

/// Wideband SNR: sum over sub-bands of |H|^2 S_t / S_n with S_t = P_i/df.
double thz_snr(double d_m, const ThzParams& p);

/// Outage probability 1 - e^(-gamma_th/gamma(d)) with
/// gamma_th = gamma_th_fraction * snr(d_th). Defined for 0 < d <= d_th only.
double thz_outage_prob(double d_m, const ThzParams& p);

// ---- mmWave primitives ----

/// Linear average SNR at distance d for the given link state (kLos/kNlos).
double mmwave_snr(double d_m, LinkState state, const MmWaveParams& p);

/// Shannon capacity B*log2(1 + snr) for the given state. [bits/s]
double mmwave_capacity(double d_m, LinkState state, const MmWaveParams& p);

/// (p_los, p_nlos, p_outage) at distance d; the three always sum to 1.
StateProbs mmwave_state_probs(double d_m, const MmWaveParams& p);

/// The implied NLoS penalty Delta(d) = snr_los(d)/snr_nlos(d), exposed for
/// inspection; the NLoS capacity itself comes from the NLoS path-loss fit.
double mmwave_nlos_delta(double d_m, const MmWaveParams& p);

// ---- combined model ----

/// Distance-switched capacity model. The THz region (0, d_th_thz] and the
/// mmWave region (d_th_thz, d_th_mm] partition the operational range; the
/// outage-threshold SNR is cached at construction.
class CapacityModel {
 public:
  CapacityModel(ThzParams thz, MmWaveParams mmwave);

  const ThzParams& thz() const { return thz_; }
  const MmWaveParams& mmwave() const { return mmwave_; }

  /// Cached gamma_th = gamma_th_fraction * thz_snr(d_th).
  double thz_gamma_th() const { return gamma_th_; }

  bool in_thz_region(double d_m) const {
    return d_m > 0.0 && d_m <= thz_.d_th_m;
  }
  bool in_mmwave_region(double d_m) const {
    return d_m > thz_.d_th_m && d_m <= mmwave_.d_th_m;
  }
  double max_range_m() const { return mmwave_.d_th_m; }

  /// State-averaged capacity C(d) available for data at distance d:
  /// the mmWave LoS/NLoS mixture on the mmWave region, the outage-discounted
  /// THz LoS capacity on the THz region, zero beyond d_th_mm.
  /// Throws std::domain_error for d <= 0.
  double capacity(double d_m) const;

 private:
  ThzParams thz_;
  MmWaveParams mmwave_;
  double gamma_th_;
};

/// Free-function spelling of CapacityModel::capacity.
double combined_capacity(double d_m, const CapacityModel& model);

}  // namespace datashower
