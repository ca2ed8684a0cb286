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
#include <span>
#include <string>
#include <vector>

#include "bellconf/qsim/circuit.h"
#include "bellconf/stats/stats.h"

namespace bellconf::qml {

/// Register layout of the C <-> A -> B circuit.
inline constexpr int kQubitA = 0;
inline constexpr int kQubitC = 1;
inline constexpr int kQubitB = 2;

enum class Feature { kA, kC };

std::string feature_name(Feature f);

/// One test/training domain.
///
/// With probability `lambda` a sample's (A, C) pair comes from a Z
/// measurement of a fresh Bell pair; otherwise A and C are independent
/// uniform bits. B = A xor Bernoulli(flip_probability).
struct DomainSpec {
  double lambda = 1.0;
  double flip_probability = 0.0;
  size_t n_samples = 2000;

  void validate() const;
};

struct Sample {
  int a = 0;
  int c = 0;
  int b = 0;
};

struct Dataset {
  std::vector<Sample> rows;
  DomainSpec domain;
};

/// H(A), CNOT(A,C): the confounding Bell pair.
qsim::Circuit confounder_circuit();

/// Confounder, optional DO surgery on `surgery_target` (-1 for none),
/// mechanism CNOT(A,B), then Z measurement of every qubit into the slot of
/// the same index.
qsim::Circuit causal_circuit(int surgery_target = -1, int value = 0);

/// Draws one row from `seed`. The Bell branch runs causal_circuit with one
/// shot on derive_seed(seed, {1}).
Sample generate_sample(const DomainSpec& domain, uint64_t seed);

/// Row i uses derive_seed(seed, {i}).
Dataset generate_dataset(const DomainSpec& domain, uint64_t seed);

/// Exact CS of the (A, C) state mixture: lambda |Phi+><Phi+| + (1-lambda) I/4.
double exact_mixture_cs(double lambda);

struct FeatureCheck {
  Feature feature = Feature::kA;
  double p_do_1 = 0;    // P(B=1 | DO(X=1))
  double p_do_0 = 0;    // P(B=1 | DO(X=0))
  double effect = 0;    // |p_do_1 - p_do_0|
  bool causal = false;  // effect > tau
  double p_obs_1 = 0;   // P(B=1 | X=1), observational
  double p_obs_0 = 0;   // P(B=1 | X=0), observational
};

/// Project-prepare surgery on the feature's qubit in the maximally confounded
/// circuit. DO(X=x) uses derive_seed(seed, {x}); the observational run uses
/// {2}.
FeatureCheck interventional_feature_check(Feature feature, double flip_probability,
                                          uint64_t shots, uint64_t seed, double tau = 0.2);

/// Same quantities from exact probabilities.
FeatureCheck exact_feature_check(Feature feature, double flip_probability, double tau = 0.2);

struct Hyper {
  double learning_rate = 0.1;
  int iterations = 1000;
  double l2 = 1e-4;
};

/// Logistic regression on a subset of {A, C}.
struct LogisticModel {
  std::vector<Feature> features;
  std::vector<double> weights;  // parallel to features
  double bias = 0;
  Hyper training_meta;

  double score(const Sample& s) const;
  double probability(const Sample& s) const;
  /// 1 iff sigmoid(score) >= 0.5.
  int predict(const Sample& s) const;
};

/// Full-batch gradient descent on mean cross-entropy plus (l2/2)|w|^2 (bias
/// unpenalized), zero initialization, fixed iteration count.
LogisticModel train_logistic(std::span<const Sample> train, std::vector<Feature> features,
                             const Hyper& hyper = {});

double accuracy(const LogisticModel& model, std::span<const Sample> rows);

struct RobustnessConfig {
  int seeds = 20;
  size_t train_n = 2000;
  double split = 0.7;
  std::vector<double> lambdas = {1.0, 0.75, 0.5, 0.25, 0.0};
  size_t test_n = 500;
  double flip_probability = 0.0;
  uint64_t seed = 42;
  uint64_t check_shots = 10000;
  double tau = 0.2;
  Hyper hyper;
  int jobs = 0;
};

/// Results for one independent seed.
struct SeedOutcome {
  uint64_t seed_index = 0;
  FeatureCheck check_a, check_c;
  std::vector<Feature> causal_features;
  LogisticModel naive, causal, control;
  /// Accuracy on the held-out 30% of the training domain.
  double naive_holdout = 0, causal_holdout = 0, control_holdout = 0;
  /// Accuracy per shifted domain, parallel to RobustnessConfig::lambdas.
  std::vector<double> naive_acc, causal_acc, control_acc;
};

struct DomainSummary {
  double lambda = 0;
  stats::Summary naive, causal, control;
};

struct RobustnessReport {
  std::vector<SeedOutcome> seeds;
  std::vector<DomainSummary> domains;
  /// Mean over seeds and domains of causal - naive accuracy.
  double mean_gap = 0;
  /// Paired t-test on per-seed mean (over domains) accuracies.
  stats::TestResult paired_t;
  /// Per-seed sd of causal accuracy across domains, averaged over seeds.
  double causal_cross_domain_sd = 0;
};

/// Seed i runs on s = derive_seed(config.seed, {i}): training data on
/// derive_seed(s, {0}), domain k on derive_seed(s, {1, k}), feature checks on
/// derive_seed(s, {2, feature}).
RobustnessReport run_robustness(const RobustnessConfig& config);

}  // namespace bellconf::qml
