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
#include <vector>

#include "bellconf/bell/chsh.h"
#include "bellconf/stats/stats.h"

namespace bellconf::bell {

struct SweepPoint {
  double theta = 0;
  double concurrence = 0;
  double cs_measured = 0;
  double cs_theory = 0;
};

struct SweepConfig {
  int theta_steps = 25;
  uint64_t shots = 10000;
  uint64_t seed = 7;
  ChshSettings settings;
  int jobs = 0;
};

struct SweepResult {
  std::vector<SweepPoint> points;
  double r_squared = 0;        // cs_measured against cs_theory
  double pearson_r = 0;        // cs_measured against concurrence
  stats::LinearFit fit;        // cs_measured ~ concurrence
};

/// Protocol law for the fixed default settings: |(1 + sin 2 theta) / sqrt 2|.
double theoretical_cs(double theta);

/// Exact-oracle CS of |psi(theta)> under `settings`.
double exact_cs(double theta, const ChshSettings& settings = {});

/// theta_k = k * (pi/2) / (steps - 1); point k samples with
/// derive_seed(config.seed, {k}).
SweepResult run_sweep(const SweepConfig& config);

}  // namespace bellconf::bell
