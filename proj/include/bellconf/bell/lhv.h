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

#include <array>
#include <cstdint>
#include <vector>

#include "bellconf/bell/chsh.h"

namespace bellconf::bell {

/// Deterministic local response function with optional classical noise.
///
/// responses = {A(a), A(a'), B(b), B(b')}, each +1 or -1. Each party's output
/// depends only on its own setting and the shared hidden variable, so the
/// statistics factorize. With flip_probability p each reported outcome is
/// independently inverted, shrinking every correlator by (1 - 2p)^2.
struct LhvStrategy {
  std::array<int, 4> responses = {1, 1, 1, 1};
  double flip_probability = 0;

  /// Noise-free E for the pair (alice_setting, bob_setting), indices 0/1.
  int correlator(int alice_setting, int bob_setting) const;

  /// Noise-free S.
  int chsh_value() const;

  /// Noise-free CH with the +1 outcome as the counted event.
  int ch_value() const;
};

/// All 16 assignments in lexicographic order with -1 < +1.
std::vector<LhvStrategy> all_deterministic_strategies();

/// Maximizes S over the 16 deterministic assignments; the first maximizer in
/// lexicographic order wins. S is independent of the angles for
/// deterministic responses, so `settings` only documents the protocol.
LhvStrategy optimal_lhv_strategy(const ChshSettings& settings = {});

/// Sampled correlators: each shot reports the strategy's responses, each
/// independently flipped with the strategy's flip_probability.
ChshCorrelators sample_lhv_chsh(const LhvStrategy& strategy, uint64_t shots, uint64_t seed);

/// Largest |S| over the 16 deterministic strategies.
int lhv_max_abs_chsh();

/// Largest CH over the 16 deterministic strategies.
int lhv_max_ch();

}  // namespace bellconf::bell
