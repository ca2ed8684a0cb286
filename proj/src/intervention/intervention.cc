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

#include "bellconf/intervention/intervention.h"

#include <cmath>

#include "bellconf/errors.h"
#include "bellconf/qsim/counts.h"
#include "bellconf/qsim/simulator.h"
#include "bellconf/rng.h"

namespace bellconf::intervention {
namespace {

constexpr int kA = 0;  // qubit and register slot of A
constexpr int kB = 1;  // qubit and register slot of B

std::string do_label(int a0) { return "DO(A=" + std::to_string(a0) + ")"; }

void check_config(const ArmConfig& config) {
  if (config.shots == 0) throw ConfigError("intervention arms need shots >= 1");
  if (config.trials < 1) throw ConfigError("intervention arms need trials >= 1");
}

uint64_t count_ab(const qsim::Counts& counts, int a, int b) {
  uint64_t n = 0;
  for (const auto& [key, c] : counts.table) {
    if (qsim::bit_at(key, kA) == a && qsim::bit_at(key, kB) == b) n += c;
  }
  return n;
}

// Per-trial bookkeeping shared by both arms.
struct Tally {
  uint64_t ab[2][2] = {{0, 0}, {0, 0}};  // [a][b]
};

ArmResult run_arm(const qsim::Circuit& circuit, const ArmConfig& config, Tally& tally) {
  check_config(config);
  ArmResult arm;
  for (int t = 0; t < config.trials; ++t) {
    qsim::Counts counts = qsim::run_circuit(circuit, config.shots,
                                            derive_seed(config.seed, {static_cast<uint64_t>(t)}));
    uint64_t b0 = 0, a0 = 0;
    for (int a = 0; a < 2; ++a) {
      for (int b = 0; b < 2; ++b) {
        uint64_t n = count_ab(counts, a, b);
        tally.ab[a][b] += n;
        if (b == 0) b0 += n;
        if (a == 0) a0 += n;
      }
    }
    double shots = static_cast<double>(config.shots);
    arm.trial_p_b0.push_back(static_cast<double>(b0) / shots);
    arm.trial_p_a0.push_back(static_cast<double>(a0) / shots);
    arm.b0_total += b0;
    arm.shots_total += config.shots;
  }
  return arm;
}

}  // namespace

ConditionalEstimate ConditionalEstimate::from_counts(uint64_t successes, uint64_t n) {
  ConditionalEstimate e;
  e.successes = successes;
  e.n = n;
  if (n == 0) return e;
  e.defined = true;
  e.estimate = static_cast<double>(successes) / static_cast<double>(n);
  stats::Interval iv = stats::wilson_interval(successes, n);
  e.wilson_lo = iv.lo;
  e.wilson_hi = iv.hi;
  return e;
}

const ConditionalEstimate& ConditionalDistribution::at(const std::string& label) const {
  auto it = p_b0_given.find(label);
  if (it == p_b0_given.end()) throw ArgumentError("no conditional for '" + label + "'");
  return it->second;
}

qsim::Circuit observational_circuit() {
  qsim::Circuit c(2);
  c.h(kA).cnot(kA, kB).measure_z(kA, kA).measure_z(kB, kB);
  return c;
}

qsim::Circuit project_prepare(int num_qubits, int target, int a0) {
  if (a0 != 0 && a0 != 1) throw ArgumentError("intervention value must be 0 or 1");
  qsim::Circuit c(num_qubits);
  c.non_selective_z(target).reset(target);
  if (a0 == 1) c.x(target);
  return c;
}

qsim::Circuit interventional_circuit(int a0) {
  qsim::Circuit c(2);
  c.h(kA).cnot(kA, kB);
  c.append(project_prepare(2, kA, a0));
  c.measure_z(kA, kA).measure_z(kB, kB);
  return c;
}

ArmResult observe(const ArmConfig& config) {
  Tally tally;
  ArmResult arm = run_arm(observational_circuit(), config, tally);
  for (int a = 0; a < 2; ++a) {
    arm.distribution.p_b0_given["A=" + std::to_string(a)] =
        ConditionalEstimate::from_counts(tally.ab[a][0], tally.ab[a][0] + tally.ab[a][1]);
  }
  return arm;
}

ArmResult intervene(int a0, const ArmConfig& config) {
  Tally tally;
  ArmResult arm = run_arm(interventional_circuit(a0), config, tally);
  arm.distribution.p_b0_given[do_label(a0)] =
      ConditionalEstimate::from_counts(arm.b0_total, arm.shots_total);
  uint64_t matched = tally.ab[a0][0] + tally.ab[a0][1];
  arm.a_register_match = static_cast<double>(matched) / static_cast<double>(arm.shots_total);
  return arm;
}

std::optional<double> exact_observational_p_b0(int a) {
  auto probs = qsim::exact_probabilities(observational_circuit());
  double p_a = 0, p_ab0 = 0;
  for (const auto& [key, p] : probs) {
    if (qsim::bit_at(key, kA) != a) continue;
    p_a += p;
    if (qsim::bit_at(key, kB) == 0) p_ab0 += p;
  }
  if (p_a == 0) return std::nullopt;
  return p_ab0 / p_a;
}

double exact_interventional_p_b0(int a0) {
  double p_b0 = 0;
  for (const auto& [key, p] : qsim::exact_probabilities(interventional_circuit(a0))) {
    if (qsim::bit_at(key, kB) == 0) p_b0 += p;
  }
  return p_b0;
}

qsim::DensityMatrix apply_intervention_channel(const qsim::DensityMatrix& input, int a0) {
  return qsim::apply_channel(project_prepare(2, kA, a0), input);
}

NoSignalingResult no_signaling_test(const std::vector<double>& do0_trials,
                                    const std::vector<double>& do1_trials) {
  if (do0_trials.size() < 2 || do1_trials.size() < 2) {
    throw ArgumentError("no-signaling test needs at least 2 trials per arm");
  }
  NoSignalingResult r;
  r.test = stats::welch_t_test(do0_trials, do1_trials);
  r.delta = std::abs(stats::mean(do0_trials) - stats::mean(do1_trials));
  r.p_value = r.test.p_value;
  return r;
}

NoSignalingResult no_signaling_pooled(uint64_t b0_do0, uint64_t n_do0, uint64_t b0_do1,
                                      uint64_t n_do1) {
  NoSignalingResult r;
  r.test = stats::two_proportion_z_test(b0_do0, n_do0, b0_do1, n_do1);
  r.delta = std::abs(static_cast<double>(b0_do0) / n_do0 - static_cast<double>(b0_do1) / n_do1);
  r.p_value = r.test.p_value;
  return r;
}

InterventionReport run_intervention(const ArmConfig& config) {
  InterventionReport report;
  ArmConfig obs = config, do0 = config, do1 = config;
  obs.seed = derive_seed(config.seed, {0});
  do0.seed = derive_seed(config.seed, {1});
  do1.seed = derive_seed(config.seed, {2});
  report.observational_arm = observe(obs);
  report.do0_arm = intervene(0, do0);
  report.do1_arm = intervene(1, do1);
  report.observational = report.observational_arm.distribution;
  for (const ArmResult* arm : {&report.do0_arm, &report.do1_arm}) {
    for (const auto& [label, est] : arm->distribution.p_b0_given) {
      report.interventional.p_b0_given[label] = est;
    }
  }
  for (int a = 0; a < 2; ++a) {
    const ConditionalEstimate& o = report.observational.at("A=" + std::to_string(a));
    const ConditionalEstimate& d = report.interventional.at(do_label(a));
    report.causal_effect.push_back(o.defined && d.defined
                                       ? std::optional<double>(std::abs(o.estimate - d.estimate))
                                       : std::nullopt);
  }
  if (config.trials >= 2) {
    report.no_signaling = no_signaling_test(report.do0_arm.trial_p_b0, report.do1_arm.trial_p_b0);
  }
  report.no_signaling_pooled =
      no_signaling_pooled(report.do0_arm.b0_total, report.do0_arm.shots_total,
                          report.do1_arm.b0_total, report.do1_arm.shots_total);
  return report;
}

}  // namespace bellconf::intervention
