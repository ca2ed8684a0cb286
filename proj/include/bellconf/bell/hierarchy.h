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
#include <string>

#include "bellconf/bell/chsh.h"

namespace bellconf::bell {

struct HierarchyConfig {
  uint64_t shots = 10000;
  int trials = 100;
  uint64_t seed = 42;
  double lhv_flip = 0;
  ChshSettings settings;
  int jobs = 0;
};

/// Per-scenario CS distributions for the three confounding regimes.
struct HierarchyResult {
  CsEstimate no_confounding;
  CsEstimate classical;
  CsEstimate quantum;

  /// (mean_q - mean_c) / sqrt(se_q^2 + se_c^2); infinite when both are exact.
  double quantum_classical_separation() const;
  double classical_none_separation() const;
};

/// Trial t of scenario k uses seed derive_seed(config.seed, {k, t}) with
/// k = 0 (none), 1 (classical), 2 (quantum).
///
/// none: independent Haar-random single-qubit states, fresh each trial.
/// classical: optimal_lhv_strategy with flip_probability = config.lhv_flip.
/// quantum: |Phi+>.
HierarchyResult run_hierarchy(const HierarchyConfig& config);

/// Haar-random product state preparation drawn from `seed`.
qsim::Circuit random_product_state(uint64_t seed);

}  // namespace bellconf::bell
