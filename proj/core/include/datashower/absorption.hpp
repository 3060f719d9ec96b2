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
#include <string>
#include <vector>

namespace datashower {

/// Sampled frequency-dependent medium absorption coefficient k(f).
///
/// Entries are (frequency [Hz], k [1/m]) pairs with strictly increasing
/// frequency. Queries interpolate linearly between samples; queries outside
/// the sampled span throw std::domain_error rather than clamping. Immutable
/// after construction, so instances can be shared across threads freely.
class AbsorptionTable {
 public:
  struct Entry {
    double frequency_hz;
    double k_per_m;
  };

  explicit AbsorptionTable(std::vector<Entry> entries);

  /// Loads the two-column CSV `frequency_hz,k_per_cm` (header row required).
  /// k is converted from 1/cm to 1/m on load.
  static AbsorptionTable from_csv(const std::string& path);
  static AbsorptionTable from_csv_stream(std::istream& in,
                                         const std::string& source_name);

  /// Bundled 101-point table over the [0.8, 0.9] THz transmission window:
  /// a gently rising baseline near the low end of the sane range plus two
  /// narrow absorption lines.
  static const AbsorptionTable& default_table();

  /// Linear interpolation of k at `frequency_hz` [1/m]. Throws
  /// std::domain_error outside [min_frequency, max_frequency].
  double k_at(double frequency_hz) const;

  double min_frequency() const { return entries_.front().frequency_hz; }
  double max_frequency() const { return entries_.back().frequency_hz; }
  const std::vector<Entry>& entries() const { return entries_; }

 private:
  std::vector<Entry> entries_;
};

}  // namespace datashower
