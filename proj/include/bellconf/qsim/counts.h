// Copyright 2026 The bellconf Authors
//
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
#include <map>
#include <string>

namespace bellconf::qsim {

/// Renders a classical record with slot 0 as the rightmost character.
std::string format_bits(uint64_t record, int num_slots);

/// Bit of `slot` in a key produced by format_bits.
int bit_at(const std::string& key, int slot);

/// Shot histogram keyed by classical bitstring (see format_bits).
struct Counts {
  uint64_t total_shots = 0;
  int num_slots = 0;
  std::map<std::string, uint64_t> table;

  uint64_t count(const std::string& key) const;
  double frequency(const std::string& key) const;

  /// Shots in which `slot` read `bit`.
  uint64_t count_where(int slot, int bit) const;

  /// {"shots": N, "counts": {"bitstring": n, ...}}
  std::string to_json() const;
};

}  // namespace bellconf::qsim
