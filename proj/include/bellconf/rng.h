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
#include <initializer_list>

namespace bellconf {

/// SplitMix64 finalizer (Steele, Lea, Flood 2014).
constexpr uint64_t mix64(uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

/// Derives an independent substream seed from a root seed and an index path.
///
///   h = mix64(seed)
///   for each index i in path: h = mix64(h ^ mix64(i + 0x9E3779B97F4A7C15))
///
/// Every random quantity in the toolkit is drawn from a stream addressed this
/// way, e.g. (seed, trial, correlator) or (correlator_seed, shot), so results
/// never depend on execution order.
constexpr uint64_t derive_seed(uint64_t seed, std::initializer_list<uint64_t> path) {
  uint64_t h = mix64(seed);
  for (uint64_t i : path) {
    h = mix64(h ^ mix64(i + 0x9E3779B97F4A7C15ULL));
  }
  return h;
}

/// SplitMix64 generator. Small, fast and fully specified, so streams are
/// identical on every platform.
class Rng {
 public:
  explicit constexpr Rng(uint64_t seed) : state_(seed) {}

  constexpr uint64_t next_u64() {
    state_ += 0x9E3779B97F4A7C15ULL;
    return mix64(state_);
  }

  /// Uniform double in [0, 1) with 53 random bits.
  constexpr double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  constexpr bool bernoulli(double p) { return uniform() < p; }

  constexpr int bit() { return static_cast<int>(next_u64() >> 63); }

 private:
  uint64_t state_;
};

}  // namespace bellconf
