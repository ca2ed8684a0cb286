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

#include "bellconf/qsim/counts.h"

#include "bellconf/errors.h"
#include "json.hpp"

namespace bellconf::qsim {

std::string format_bits(uint64_t record, int num_slots) {
  std::string key(num_slots, '0');
  for (int s = 0; s < num_slots; ++s) {
    if ((record >> s) & 1) key[num_slots - 1 - s] = '1';
  }
  return key;
}

int bit_at(const std::string& key, int slot) {
  if (slot < 0 || slot >= static_cast<int>(key.size())) {
    throw ArgumentError("slot " + std::to_string(slot) + " not in key '" + key + "'");
  }
  return key[key.size() - 1 - slot] == '1' ? 1 : 0;
}

uint64_t Counts::count(const std::string& key) const {
  auto it = table.find(key);
  return it == table.end() ? 0 : it->second;
}

double Counts::frequency(const std::string& key) const {
  return static_cast<double>(count(key)) / static_cast<double>(total_shots);
}

uint64_t Counts::count_where(int slot, int bit) const {
  uint64_t n = 0;
  for (const auto& [key, c] : table) {
    if (bit_at(key, slot) == bit) n += c;
  }
  return n;
}

std::string Counts::to_json() const {
  nlohmann::ordered_json j;
  j["shots"] = total_shots;
  j["counts"] = nlohmann::ordered_json::object();
  for (const auto& [key, c] : table) j["counts"][key] = c;
  return j.dump();
}

}  // namespace bellconf::qsim
