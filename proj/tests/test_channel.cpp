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

#include "datashower/channel.hpp"
#include "datashower/units.hpp"

using namespace datashower;

namespace {

AbsorptionTable flat_table(double k_per_m) {
  return AbsorptionTable({{0.5e12, k_per_m}, {1.5e12, k_per_m}});
}

ThzParams thz_with_table(AbsorptionTable table) {
  ThzParams p;
  p.absorption = std::move(table);
  return p;
}

}  // namespace

TEST_CASE("thz path gain: pure spreading loss with zero absorption") {
  AbsorptionTable zero_k = flat_table(0.0);
  // (c / (4 pi f d))^2 at f = 0.85 THz, d = 1 m.
  CHECK(thz_path_gain(0.85e12, 1.0, zero_k) ==
        doctest::Approx(7.877416826496126e-10).epsilon(1e-12));
  // Inverse-square: doubling the distance divides the gain by 4.
  const double g1 = thz_path_gain(0.85e12, 7.0, zero_k);
  const double g2 = thz_path_gain(0.85e12, 14.0, zero_k);
  CHECK(g1 / g2 == doctest::Approx(4.0).epsilon(1e-12));
}

TEST_CASE("thz path gain: absorption attenuates exponentially") {
  AbsorptionTable table = flat_table(1e-2);
  CHECK(thz_path_gain(0.85e12, 10.0, table) ==
        doctest::Approx(7.127781502079777e-12).epsilon(1e-12));
}

TEST_CASE("thz path gain domain errors") {
  AbsorptionTable table = flat_table(0.0);
  CHECK_THROWS_AS(thz_path_gain(0.85e12, 0.0, table), std::domain_error);
  CHECK_THROWS_AS(thz_path_gain(0.85e12, -1.0, table), std::domain_error);
  CHECK_THROWS_AS(thz_path_gain(2.0e12, 1.0, table), std::domain_error);
}

TEST_CASE("thz molecular noise psd") {
  ThzParams p = thz_with_table(flat_table(0.0));
  p.noise_floor_psd_w_per_hz = 1e-25;
  SUBCASE("zero emissivity leaves only the receiver floor") {
    CHECK(thz_noise_psd(0.85e12, 5.0, p) == 1e-25);
  }
  SUBCASE("emissivity saturates at kB*T0 for an opaque medium") {
    ThzParams q = thz_with_table(flat_table(1e-2));
    q.noise_floor_psd_w_per_hz = 1e-25;
    const double far = thz_noise_psd(0.85e12, 1e9, q);
    CHECK(far == doctest::Approx(kBoltzmann * 296.0 + 1e-25).epsilon(1e-9));
  }
  SUBCASE("hand value at k=1e-2, d=10, T0=296") {
    ThzParams q = thz_with_table(flat_table(1e-2));
    q.noise_floor_psd_w_per_hz = 1e-25;
    CHECK(thz_noise_psd(0.85e12, 10.0, q) ==
          doctest::Approx(3.8900292593316877e-22).epsilon(1e-12));
  }
  SUBCASE("non-decreasing in distance") {
    ThzParams q = thz_with_table(flat_table(5e-3));
    double prev = 0.0;
    for (double d = 1.0; d <= 100.0; d += 1.0) {
      const double n = thz_noise_psd(0.85e12, d, q);
      CHECK(n >= prev);
      prev = n;
    }
  }
}

TEST_CASE("thz capacity: single-band closed form at SNR = 1") {
  ThzParams p = thz_with_table(flat_table(0.0));
  p.n_subbands = 1;
  p.tx_power_dbm = 30.0;  // 1 W
  p.antenna_gain_db = 0.0;
  p.gain_per_end = false;
  const double d = 3.0;
  const double gain = thz_path_gain(p.carrier_hz, d, p.absorption);
  // Pick the receiver floor so the single-band SNR lands exactly at 1.
  p.noise_floor_psd_w_per_hz = gain * 1.0 / p.bandwidth_hz;
  CHECK(thz_capacity_los(d, p) ==
        doctest::Approx(p.bandwidth_hz).epsilon(1e-12));
}

TEST_CASE("thz capacity: vanishing transmit power kills the link") {
  ThzParams p;
  p.tx_power_dbm = -1000.0;
  CHECK(thz_capacity_los(10.0, p) < 1.0);
  CHECK(thz_snr(10.0, p) < 1e-50);
}

TEST_CASE("thz snr: one sub-band reduces to the plain ratio") {
  ThzParams p = thz_with_table(flat_table(2e-4));
  p.n_subbands = 1;
  const double d = 6.0;
  const double gain = thz_path_gain(p.carrier_hz, d, p.absorption);
  const double st = p.tx_power_w() * p.linear_link_gain() / p.bandwidth_hz;
  const double sn = thz_noise_psd(p.carrier_hz, d, p);
  CHECK(thz_snr(d, p) == doctest::Approx(gain * st / sn).epsilon(1e-12));
}

TEST_CASE("thz capacity: monotone in distance and transmit power") {
  ThzParams p;
  CHECK(thz_capacity_los(2.0, p) > thz_capacity_los(5.0, p));
  CHECK(thz_capacity_los(5.0, p) > thz_capacity_los(10.0, p));
  ThzParams lo = p;
  lo.tx_power_dbm = 0.0;
  ThzParams hi = p;
  hi.tx_power_dbm = 10.0;
  CHECK(thz_capacity_los(10.0, hi) > thz_capacity_los(10.0, lo));
  CHECK(thz_snr(5.0, p) > thz_snr(10.0, p));
}

TEST_CASE("sub-band additivity over an aligned two-half partition") {
  ThzParams p;  // default table, 100 sub-bands over [0.8, 0.9] THz
  const double p_band = p.tx_power_w() * p.linear_link_gain() / p.n_subbands;
  const double f_lo = p.carrier_hz - p.bandwidth_hz / 2.0;
  const double f_hi = p.carrier_hz + p.bandwidth_hz / 2.0;
  for (double d : {1.0, 5.0, 10.0}) {
    const double full = thz_capacity_over(d, f_lo, f_hi, 100, p_band, p);
    const double lower = thz_capacity_over(d, f_lo, p.carrier_hz, 50, p_band, p);
    const double upper = thz_capacity_over(d, p.carrier_hz, f_hi, 50, p_band, p);
    CHECK(full == lower + upper);  // bit-for-bit
    CHECK(full == thz_capacity_los(d, p));
  }
}

TEST_CASE("sub-band refinement converges on the smooth bundled table") {
  ThzParams p100;
  ThzParams p200 = p100;
  p200.n_subbands = 200;
  const double c100 = thz_capacity_los(10.0, p100);
  const double c200 = thz_capacity_los(10.0, p200);
  CHECK(std::abs(c200 - c100) / c100 < 0.01);
}

TEST_CASE("thz outage probability") {
  ThzParams p;  // gamma_th_fraction = 1
  SUBCASE("anchor: fraction 1 at d_th gives 1 - 1/e") {
    CHECK(thz_outage_prob(10.0, p) ==
          doctest::Approx(0.6321205588285577).epsilon(1e-12));
  }
  SUBCASE("fraction 0.5 at d_th") {
    ThzParams q = p;
    q.gamma_th_fraction = 0.5;
    CHECK(thz_outage_prob(10.0, q) ==
          doctest::Approx(0.3934693402873666).epsilon(1e-9));
  }
  SUBCASE("tiny fraction means almost no outage") {
    ThzParams q = p;
    q.gamma_th_fraction = 1e-9;
    CHECK(thz_outage_prob(10.0, q) < 1e-8);
  }
  SUBCASE("non-decreasing in distance, within [0,1)") {
    double prev = 0.0;
    for (double d = 0.5; d <= 10.0; d += 0.5) {
      const double o = thz_outage_prob(d, p);
      CHECK(o >= prev);
      CHECK(o >= 0.0);
      CHECK(o < 1.0);
      prev = o;
    }
  }
  SUBCASE("no THz link beyond d_th") {
    CHECK_THROWS_AS(thz_outage_prob(10.5, p), std::domain_error);
  }
}

TEST_CASE("mmwave snr matches the link-budget arithmetic") {
  MmWaveParams p;
  // 30 + 27 - 69.8 - (-87 + 5) = 69.2 dB at 1 m (log10(1) = 0).
  CHECK(linear_to_db(mmwave_snr(1.0, LinkState::kLos, p)) ==
        doctest::Approx(69.2).epsilon(1e-12));
  // PL(100) = 69.8 + 2*20 dB.
  CHECK(linear_to_db(mmwave_snr(100.0, LinkState::kLos, p)) ==
        doctest::Approx(29.2).epsilon(1e-12));
  for (double d : {2.0, 10.0, 50.0, 100.0, 200.0}) {
    CHECK(mmwave_snr(d, LinkState::kNlos, p) <
          mmwave_snr(d, LinkState::kLos, p));
  }
  CHECK_THROWS_AS(mmwave_snr(100.0, LinkState::kOutage, p), std::domain_error);
  CHECK_THROWS_AS(mmwave_snr(0.0, LinkState::kLos, p), std::domain_error);
}

TEST_CASE("mmwave shannon capacity") {
  MmWaveParams p;
  CHECK(mmwave_capacity(100.0, LinkState::kLos, p) ==
        doctest::Approx(9.701763496179317e9).epsilon(1e-12));
  CHECK(mmwave_capacity(100.0, LinkState::kNlos, p) ==
        doctest::Approx(1.4741916976659222e9).epsilon(1e-12));
  for (double d : {5.0, 50.0, 150.0}) {
    CHECK(mmwave_capacity(d, LinkState::kLos, p) >
          mmwave_capacity(d, LinkState::kNlos, p));
  }
  // Vanishing SNR -> vanishing rate.
  MmWaveParams mute = p;
  mute.tx_power_dbm = -1000.0;
  CHECK(mmwave_capacity(100.0, LinkState::kLos, mute) < 1.0);
}

TEST_CASE("mmwave state probabilities") {
  MmWaveParams p;
  SUBCASE("towards zero distance everything is LoS") {
    const StateProbs probs = mmwave_state_probs(1e-9, p);
    CHECK(probs.los == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(probs.outage == 0.0);
  }
  SUBCASE("outage is exactly null below the onset") {
    for (double d : {1.0, 50.0, 100.0, 149.0, 150.0}) {
      CHECK(mmwave_state_probs(d, p).outage == 0.0);
    }
  }
  SUBCASE("outage reaches about 2/3 at 200 m") {
    CHECK(mmwave_state_probs(200.0, p).outage ==
          doctest::Approx(0.6656625262289734).epsilon(1e-12));
  }
  SUBCASE("simplex and monotonicity over the operational range") {
    double prev_outage = 0.0;
    for (int i = 1; i <= 400; ++i) {
      const double d = static_cast<double>(i);
      const StateProbs probs = mmwave_state_probs(d, p);
      CHECK(probs.los >= 0.0);
      CHECK(probs.nlos >= 0.0);
      CHECK(probs.outage >= 0.0);
      CHECK(probs.los + probs.nlos + probs.outage ==
            doctest::Approx(1.0).epsilon(1e-14));
      CHECK(probs.outage >= prev_outage);
      prev_outage = probs.outage;
    }
  }
  SUBCASE("p_los decays with distance") {
    double prev = 1.0;
    for (double d = 1.0; d <= 400.0; d += 1.0) {
      const double los = mmwave_state_probs(d, p).los;
      CHECK(los <= prev);
      prev = los;
    }
  }
}

TEST_CASE("implied NLoS penalty is above one") {
  MmWaveParams p;
  for (double d : {2.0, 20.0, 200.0}) {
    CHECK(mmwave_nlos_delta(d, p) > 1.0);
  }
}

TEST_CASE("combined capacity switches regions at the thresholds") {
  CapacityModel model(ThzParams{}, MmWaveParams{});
  SUBCASE("outside both regions the capacity is zero") {
    CHECK(model.capacity(250.0) == 0.0);
    CHECK(model.capacity(200.0) > 0.0);
  }
  SUBCASE("the THz boundary itself belongs to the THz region") {
    const ThzParams& t = model.thz();
    const double expected =
        thz_capacity_los(10.0, t) * (1.0 - thz_outage_prob(10.0, t));
    CHECK(model.capacity(10.0) == expected);
    // Just above, the mmWave mixture applies.
    const StateProbs probs = mmwave_state_probs(10.0001, model.mmwave());
    const double mm = mmwave_capacity(10.0001, LinkState::kLos, model.mmwave()) *
                          probs.los +
                      mmwave_capacity(10.0001, LinkState::kNlos, model.mmwave()) *
                          probs.nlos;
    CHECK(model.capacity(10.0001) == doctest::Approx(mm).epsilon(1e-12));
  }
  SUBCASE("short range beats mid range by orders of magnitude") {
    CHECK(model.capacity(5.0) / model.capacity(50.0) >= 100.0);
  }
  SUBCASE("domain error at non-positive distance") {
    CHECK_THROWS_AS(model.capacity(0.0), std::domain_error);
  }
  SUBCASE("free function mirrors the method") {
    CHECK(combined_capacity(42.0, model) == model.capacity(42.0));
  }
  SUBCASE("continuous inside each region's interior") {
    for (auto [lo, hi] : {std::pair{0.5, 10.0}, std::pair{10.001, 200.0}}) {
      const int n = 4000;
      double prev = model.capacity(lo);
      for (int i = 1; i <= n; ++i) {
        const double d = lo + (hi - lo) * i / n;
        const double c = model.capacity(d);
        // No jumps beyond what the local slope explains.
        CHECK(std::abs(c - prev) <= 0.01 * std::max(c, prev) + 1.0);
        prev = c;
      }
    }
  }
}

TEST_CASE("model construction rejects inverted regions") {
  ThzParams t;
  MmWaveParams m;
  m.d_th_m = 5.0;  // below the 10 m THz threshold
  CHECK_THROWS_AS(CapacityModel(t, m), std::invalid_argument);
}
