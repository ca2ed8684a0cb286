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
#include <optional>
#include <string>
#include <vector>

#include "bellconf/qsim/circuit.h"
#include "bellconf/qsim/density_matrix.h"
#include "bellconf/stats/stats.h"

namespace bellconf::intervention {

/// P(B=0 | condition) with its Wilson interval. `defined` is false when the
/// conditioning event never occurred, which is distinct from an estimate of 0.
struct ConditionalEstimate {
  bool defined = false;
  double estimate = 0;
  double wilson_lo = 0;
  double wilson_hi = 0;
  uint64_t successes = 0;  // shots with B = 0 among the n conditioning shots
  uint64_t n = 0;

  static ConditionalEstimate from_counts(uint64_t successes, uint64_t n);
};

/// Keyed by condition label, e.g. "A=0" or "DO(A=1)".
struct ConditionalDistribution {
  std::map<std::string, ConditionalEstimate> p_b0_given;

  const ConditionalEstimate& at(const std::string& label) const;
};

/// One arm of the experiment: aggregated estimates plus per-trial data.
struct ArmResult {
  ConditionalDistribution distribution;
  /// Per-trial P(B=0) over all shots of the trial.
  std::vector<double> trial_p_b0;
  /// Per-trial P(A=0).
  std::vector<double> trial_p_a0;
  /// Aggregate shots with B = 0, and all shots.
  uint64_t b0_total = 0;
  uint64_t shots_total = 0;
  /// Fraction of shots in which the A register read the intervention value.
  double a_register_match = 1;
};

/// Trials run on derive_seed(seed, {trial}).
struct ArmConfig {
  uint64_t shots = 10000;
  int trials = 10;
  uint64_t seed = 42;
};

/// Bell pair measured in Z on both qubits (A = qubit 0, B = qubit 1).
qsim::Circuit observational_circuit();

/// Bell pair, then NonSelectiveZ(A), Reset(A), X(A) iff a0 = 1, measure both.
qsim::Circuit interventional_circuit(int a0);

/// The DO(A = a0) surgery on qubit `target` of an `num_qubits` register.
qsim::Circuit project_prepare(int num_qubits, int target, int a0);

/// P(B=b | A=a) for both a, labels "A=0" and "A=1".
ArmResult observe(const ArmConfig& config);

/// P(B | DO(A=a0)), label "DO(A=<a0>)".
ArmResult intervene(int a0, const ArmConfig& config);

/// Exact P(B=0 | A=a) (nullopt if P(A=a) = 0) and P(B=0 | DO(A=a0)).
std::optional<double> exact_observational_p_b0(int a);
double exact_interventional_p_b0(int a0);

/// Runs the project-prepare channel on an arbitrary 2-qubit input.
qsim::DensityMatrix apply_intervention_channel(const qsim::DensityMatrix& input, int a0);

struct NoSignalingResult {
  double delta = 0;
  double p_value = 1;
  stats::TestResult test;
};

/// Welch t-test over per-trial B frequencies under DO(A=0) and DO(A=1).
/// Requires at least two trials per arm.
NoSignalingResult no_signaling_test(const std::vector<double>& do0_trials,
                                    const std::vector<double>& do1_trials);

/// Pooled two-proportion z-test on aggregate counts, for cross-checking.
NoSignalingResult no_signaling_pooled(uint64_t b0_do0, uint64_t n_do0, uint64_t b0_do1,
                                      uint64_t n_do1);

struct InterventionReport {
  ConditionalDistribution observational;
  ConditionalDistribution interventional;
  /// |P(B=0|A=a) - P(B=0|DO(A=a))| for a = 0, 1 (nullopt if undefined).
  std::vector<std::optional<double>> causal_effect;
  NoSignalingResult no_signaling;
  NoSignalingResult no_signaling_pooled;
  ArmResult observational_arm;
  ArmResult do0_arm;
  ArmResult do1_arm;
};

/// Observational arm on derive_seed(seed, {0}); DO(A=a0) on {1 + a0}.
InterventionReport run_intervention(const ArmConfig& config);

// Confounder validation -------------------------------------------------------

struct ConfounderValidationReport {
  double purity_a = 0, purity_b = 0;
  double entropy_a = 0, entropy_b = 0;
  double e_zz = 0, e_xx = 0;                   // |Phi+>, sampled
  double e_zz_product = 0, e_xx_product = 0;   // separable control, sampled
  double no_signaling_p = 1;
  stats::TestResult no_signaling_test;
  std::vector<double> a0_with_b_measured;
  std::vector<double> a0_without_b_measured;
};

/// Separable control |+i>|+i>: uniform Z and X marginals, no correlation.
qsim::Circuit product_control_state();

/// Trial t of a check uses derive_seed(seed, {check, t}); correlators are
/// averaged over trials.
ConfounderValidationReport validate_confounder(const ArmConfig& config);

}  // namespace bellconf::intervention
