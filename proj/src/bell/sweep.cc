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

#include "bellconf/bell/sweep.h"

#include <cmath>
#include <numbers>

#include "bellconf/errors.h"
#include "bellconf/parallel.h"
#include "bellconf/qsim/measures.h"
#include "bellconf/qsim/simulator.h"
#include "bellconf/rng.h"

namespace bellconf::bell {

double theoretical_cs(double theta) {
  return std::abs((1.0 + std::sin(2 * theta)) / std::numbers::sqrt2);
}

double exact_cs(double theta, const ChshSettings& settings) {
  return confounding_strength(exact_chsh_s(partially_entangled_state(theta), settings));
}

SweepResult run_sweep(const SweepConfig& config) {
  if (config.theta_steps < 2) throw ConfigError("sweep needs theta_steps >= 2");
  if (config.shots == 0) throw ConfigError("sweep needs shots >= 1");
  const size_t n = static_cast<size_t>(config.theta_steps);
  SweepResult r;
  r.points.resize(n);
  parallel_for(n, config.jobs, [&](size_t k) {
    double theta = (std::numbers::pi / 2) * static_cast<double>(k) / static_cast<double>(n - 1);
    qsim::Circuit prep = partially_entangled_state(theta);
    SweepPoint& p = r.points[k];
    p.theta = theta;
    p.concurrence = qsim::concurrence(qsim::prepare_state(prep));
    p.cs_measured =
        confounding_strength(chsh_s(prep, config.settings, config.shots, derive_seed(config.seed, {k})));
    p.cs_theory = theoretical_cs(theta);
  });

  std::vector<double> measured, theory, conc;
  for (const SweepPoint& p : r.points) {
    measured.push_back(p.cs_measured);
    theory.push_back(p.cs_theory);
    conc.push_back(p.concurrence);
  }
  r.r_squared = stats::r_squared(measured, theory);
  r.pearson_r = stats::pearson_r(conc, measured);
  r.fit = stats::linear_fit(conc, measured);
  return r;
}

}  // namespace bellconf::bell
