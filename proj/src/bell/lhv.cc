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

#include "bellconf/bell/lhv.h"

#include <cstdlib>

#include "bellconf/errors.h"
#include "bellconf/rng.h"

namespace bellconf::bell {

int LhvStrategy::correlator(int alice_setting, int bob_setting) const {
  return responses[alice_setting] * responses[2 + bob_setting];
}

int LhvStrategy::chsh_value() const {
  return correlator(0, 0) + correlator(0, 1) + correlator(1, 0) - correlator(1, 1);
}

int LhvStrategy::ch_value() const {
  auto one = [this](int k) { return responses[k] == 1 ? 1 : 0; };
  return one(0) * one(2) + one(0) * one(3) + one(1) * one(2) - one(1) * one(3) - one(0) -
         one(2);
}

std::vector<LhvStrategy> all_deterministic_strategies() {
  std::vector<LhvStrategy> out;
  for (int mask = 0; mask < 16; ++mask) {
    LhvStrategy s;
    // Bit 3 is the first response, so mask order is lexicographic order.
    for (int k = 0; k < 4; ++k) s.responses[k] = ((mask >> (3 - k)) & 1) ? 1 : -1;
    out.push_back(s);
  }
  return out;
}

LhvStrategy optimal_lhv_strategy(const ChshSettings&) {
  std::vector<LhvStrategy> all = all_deterministic_strategies();
  LhvStrategy best = all.front();
  for (const LhvStrategy& s : all) {
    if (s.chsh_value() > best.chsh_value()) best = s;
  }
  return best;
}

ChshCorrelators sample_lhv_chsh(const LhvStrategy& strategy, uint64_t shots, uint64_t seed) {
  if (shots == 0) throw ArgumentError("LHV sampling requires shots >= 1");
  double p = strategy.flip_probability;
  if (!(p >= 0 && p <= 0.5)) throw ConfigError("LHV flip probability must be in [0, 0.5]");
  const int pairs[4][2] = {{0, 0}, {0, 1}, {1, 0}, {1, 1}};
  double e[4];
  for (int k = 0; k < 4; ++k) {
    int ideal = strategy.correlator(pairs[k][0], pairs[k][1]);
    int64_t sum = 0;
    uint64_t correlator_seed = derive_seed(seed, {static_cast<uint64_t>(k)});
    for (uint64_t shot = 0; shot < shots; ++shot) {
      Rng rng(derive_seed(correlator_seed, {shot}));
      bool flip_a = rng.bernoulli(p);
      bool flip_b = rng.bernoulli(p);
      sum += (flip_a != flip_b) ? -ideal : ideal;
    }
    e[k] = static_cast<double>(sum) / static_cast<double>(shots);
  }
  return {e[0], e[1], e[2], e[3]};
}

int lhv_max_abs_chsh() {
  int best = 0;
  for (const LhvStrategy& s : all_deterministic_strategies()) best = std::max(best, std::abs(s.chsh_value()));
  return best;
}

int lhv_max_ch() {
  int best = -1000;
  for (const LhvStrategy& s : all_deterministic_strategies()) best = std::max(best, s.ch_value());
  return best;
}

}  // namespace bellconf::bell
