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

#include "bellconf/bell/hierarchy.h"

#include <cmath>
#include <limits>
#include <numbers>

#include "bellconf/bell/lhv.h"
#include "bellconf/errors.h"
#include "bellconf/parallel.h"
#include "bellconf/rng.h"

namespace bellconf::bell {
namespace {

double separation(const CsEstimate& hi, const CsEstimate& lo) {
  double se = std::sqrt(hi.std_error * hi.std_error + lo.std_error * lo.std_error);
  double diff = hi.cs - lo.cs;
  if (se == 0) return diff == 0 ? 0 : std::copysign(std::numeric_limits<double>::infinity(), diff);
  return diff / se;
}

}  // namespace

double HierarchyResult::quantum_classical_separation() const {
  return separation(quantum, classical);
}

double HierarchyResult::classical_none_separation() const {
  return separation(classical, no_confounding);
}

qsim::Circuit random_product_state(uint64_t seed) {
  Rng rng(seed);
  qsim::Circuit c(2);
  for (int q = 0; q < 2; ++q) {
    // Uniform on the Bloch sphere: cos(polar) uniform in [-1, 1].
    double polar = std::acos(1.0 - 2.0 * rng.uniform());
    double azimuth = 2.0 * std::numbers::pi * rng.uniform();
    c.ry(q, polar).rz(q, azimuth);
  }
  return c;
}

HierarchyResult run_hierarchy(const HierarchyConfig& config) {
  if (config.trials < 2) throw ConfigError("hierarchy needs at least 2 trials");
  if (config.shots == 0) throw ConfigError("hierarchy needs shots >= 1");
  const size_t trials = static_cast<size_t>(config.trials);
  LhvStrategy lhv = optimal_lhv_strategy(config.settings);
  lhv.flip_probability = config.lhv_flip;
  const qsim::Circuit phi_plus = bell_pair();

  std::vector<double> cs(3 * trials);
  parallel_for(cs.size(), config.jobs, [&](size_t i) {
    const uint64_t scenario = i / trials;
    const uint64_t trial = i % trials;
    const uint64_t seed = derive_seed(config.seed, {scenario, trial});
    double s = 0;
    switch (scenario) {
      case 0:
        s = chsh_s(random_product_state(derive_seed(seed, {100})), config.settings, config.shots,
                   seed);
        break;
      case 1:
        s = sample_lhv_chsh(lhv, config.shots, seed).s();
        break;
      default:
        s = chsh_s(phi_plus, config.settings, config.shots, seed);
    }
    cs[i] = confounding_strength(s);
  });

  auto slice = [&](size_t k) {
    return std::vector<double>(cs.begin() + k * trials, cs.begin() + (k + 1) * trials);
  };
  HierarchyResult r;
  r.no_confounding = CsEstimate::from_trials(slice(0));
  r.classical = CsEstimate::from_trials(slice(1));
  r.quantum = CsEstimate::from_trials(slice(2));
  return r;
}

}  // namespace bellconf::bell
