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

#include "datashower/absorption.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace datashower {

namespace {

// Sane physical upper bound for k: 30 cm^-1 = 3000 m^-1. Values this large
// already extinguish a 10 m link by ~e^-30000; anything larger is a parse or
// unit mistake.
constexpr double kMaxKPerM = 3000.0;

}  // namespace

AbsorptionTable::AbsorptionTable(std::vector<Entry> entries)
    : entries_(std::move(entries)) {
  if (entries_.size() < 2) {
    throw std::invalid_argument(
        "AbsorptionTable: need at least 2 (frequency, k) samples");
  }
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    const Entry& e = entries_[i];
    if (!std::isfinite(e.frequency_hz) || !std::isfinite(e.k_per_m)) {
      throw std::invalid_argument("AbsorptionTable: non-finite entry");
    }
    if (e.k_per_m < 0.0 || e.k_per_m > kMaxKPerM) {
      throw std::invalid_argument(
          "AbsorptionTable: k out of sane range [0, 3000] 1/m at sample " +
          std::to_string(i));
    }
    if (i > 0 && e.frequency_hz <= entries_[i - 1].frequency_hz) {
      throw std::invalid_argument(
          "AbsorptionTable: frequencies must be strictly increasing (sample " +
          std::to_string(i) + ")");
    }
  }
}

double AbsorptionTable::k_at(double frequency_hz) const {
  if (frequency_hz < min_frequency() || frequency_hz > max_frequency()) {
    throw std::domain_error(
        "AbsorptionTable: frequency " + std::to_string(frequency_hz) +
        " Hz outside sampled span [" + std::to_string(min_frequency()) + ", " +
        std::to_string(max_frequency()) + "]");
  }
  auto it = std::lower_bound(
      entries_.begin(), entries_.end(), frequency_hz,
      [](const Entry& e, double f) { return e.frequency_hz < f; });
  if (it->frequency_hz == frequency_hz) return it->k_per_m;
  const Entry& hi = *it;
  const Entry& lo = *(it - 1);
  const double w =
      (frequency_hz - lo.frequency_hz) / (hi.frequency_hz - lo.frequency_hz);
  return lo.k_per_m + w * (hi.k_per_m - lo.k_per_m);
}

AbsorptionTable AbsorptionTable::from_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::runtime_error("AbsorptionTable: cannot open " + path);
  }
  return from_csv_stream(in, path);
}

AbsorptionTable AbsorptionTable::from_csv_stream(
    std::istream& in, const std::string& source_name) {
  std::string line;
  if (!std::getline(in, line)) {
    throw std::runtime_error("AbsorptionTable: " + source_name + " is empty");
  }
  // Tolerate an optional leading comment line before the header.
  long line_no = 1;
  while (!line.empty() && line[0] == '#') {
    if (!std::getline(in, line)) {
      throw std::runtime_error("AbsorptionTable: " + source_name +
                               " has no header row");
    }
    ++line_no;
  }
  if (line.find("frequency_hz") == std::string::npos ||
      line.find("k_per_cm") == std::string::npos) {
    throw std::runtime_error("AbsorptionTable: " + source_name +
                             " line " + std::to_string(line_no) +
                             ": expected header 'frequency_hz,k_per_cm'");
  }
  std::vector<Entry> entries;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    std::istringstream row(line);
    std::string a, b;
    if (!std::getline(row, a, ',') || !std::getline(row, b)) {
      throw std::runtime_error("AbsorptionTable: " + source_name + " line " +
                               std::to_string(line_no) + ": malformed row");
    }
    try {
      const double f = std::stod(a);
      const double k_cm = std::stod(b);
      entries.push_back({f, k_cm * 100.0});  // 1/cm -> 1/m
    } catch (const std::exception&) {
      throw std::runtime_error("AbsorptionTable: " + source_name + " line " +
                               std::to_string(line_no) +
                               ": cannot parse numbers");
    }
  }
  try {
    return AbsorptionTable(std::move(entries));
  } catch (const std::invalid_argument& e) {
    throw std::runtime_error("AbsorptionTable: " + source_name + ": " +
                             e.what());
  }
}

const AbsorptionTable& AbsorptionTable::default_table() {
  static const AbsorptionTable table = [] {
    std::vector<Entry> entries;
    entries.reserve(101);
    for (int i = 0; i <= 100; ++i) {
      const double f = 0.8e12 + 1e9 * i;
      const double x = (f - 0.8e12) / 0.1e12;  // 0..1 across the window
      // Baseline rises from 2e-6 to 3e-6 cm^-1 across the window; two
      // narrow lines sit at 0.832 and 0.871 THz.
      double k_cm = 2e-6 * (1.0 + 0.5 * x);
      const double u1 = (f - 0.832e12) / 1.0e9;
      const double u2 = (f - 0.871e12) / 1.2e9;
      k_cm += 1.5e-5 * std::exp(-u1 * u1);
      k_cm += 1.0e-4 * std::exp(-u2 * u2);
      entries.push_back({f, k_cm * 100.0});
    }
    return AbsorptionTable(std::move(entries));
  }();
  return table;
}

}  // namespace datashower
