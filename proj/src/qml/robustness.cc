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

#include <cmath>

#include "bellconf/errors.h"
#include "bellconf/parallel.h"
#include "bellconf/qml/qml.h"
#include "bellconf/rng.h"

namespace bellconf::qml {
namespace {

SeedOutcome run_seed(const RobustnessConfig& config, uint64_t index) {
  const uint64_t s = derive_seed(config.seed, {index});
  SeedOutcome out;
  out.seed_index = index;

  out.check_a = interventional_feature_check(Feature::kA, config.flip_probability,
                                             config.check_shots, derive_seed(s, {2, 0}), config.tau);
  out.check_c = interventional_feature_check(Feature::kC, config.flip_probability,
                                             config.check_shots, derive_seed(s, {2, 1}), config.tau);
  for (const FeatureCheck* check : {&out.check_a, &out.check_c}) {
    if (check->causal) out.causal_features.push_back(check->feature);
  }
  if (out.causal_features.empty()) {
    throw ConfigError("no feature passed the interventional check; lower tau or the label noise");
  }

  DomainSpec train_domain{1.0, config.flip_probability, config.train_n};
  Dataset data = generate_dataset(train_domain, derive_seed(s, {0}));
  size_t n_train = static_cast<size_t>(std::llround(config.split * static_cast<double>(config.train_n)));
  if (n_train == 0 || n_train >= data.rows.size()) {
    throw ConfigError("train/test split leaves an empty partition");
  }
  std::span<const Sample> train(data.rows.data(), n_train);
  std::span<const Sample> holdout(data.rows.data() + n_train, data.rows.size() - n_train);

  out.naive = train_logistic(train, {Feature::kA, Feature::kC}, config.hyper);
  out.causal = train_logistic(train, out.causal_features, config.hyper);
  out.control = train_logistic(train, {Feature::kC}, config.hyper);
  out.naive_holdout = accuracy(out.naive, holdout);
  out.causal_holdout = accuracy(out.causal, holdout);
  out.control_holdout = accuracy(out.control, holdout);

  for (size_t k = 0; k < config.lambdas.size(); ++k) {
    DomainSpec domain{config.lambdas[k], config.flip_probability, config.test_n};
    Dataset test = generate_dataset(domain, derive_seed(s, {1, k}));
    out.naive_acc.push_back(accuracy(out.naive, test.rows));
    out.causal_acc.push_back(accuracy(out.causal, test.rows));
    out.control_acc.push_back(accuracy(out.control, test.rows));
  }
  return out;
}

}  // namespace

RobustnessReport run_robustness(const RobustnessConfig& config) {
  if (config.seeds < 2) throw ConfigError("robustness study needs at least 2 seeds");
  if (config.lambdas.empty()) throw ConfigError("robustness study needs at least one domain");
  if (config.test_n == 0 || config.train_n < 2) throw ConfigError("dataset sizes too small");
  if (!(config.split > 0 && config.split < 1)) throw ConfigError("split must be in (0, 1)");

  RobustnessReport report;
  report.seeds.resize(static_cast<size_t>(config.seeds));
  parallel_for(report.seeds.size(), config.jobs,
               [&](size_t i) { report.seeds[i] = run_seed(config, i); });

  const size_t n_domains = config.lambdas.size();
  for (size_t k = 0; k < n_domains; ++k) {
    std::vector<double> naive, causal, control;
    for (const SeedOutcome& s : report.seeds) {
      naive.push_back(s.naive_acc[k]);
      causal.push_back(s.causal_acc[k]);
      control.push_back(s.control_acc[k]);
    }
    report.domains.push_back({config.lambdas[k], stats::summarize(naive),
                              stats::summarize(causal), stats::summarize(control)});
  }

  std::vector<double> per_seed_gap;
  double sd_total = 0;
  for (const SeedOutcome& s : report.seeds) {
    double gap = 0;
    for (size_t k = 0; k < n_domains; ++k) gap += s.causal_acc[k] - s.naive_acc[k];
    per_seed_gap.push_back(gap / static_cast<double>(n_domains));
    sd_total += n_domains >= 2 ? stats::sample_sd(s.causal_acc) : 0.0;
  }
  report.mean_gap = stats::mean(per_seed_gap);
  report.paired_t = stats::paired_t_test(per_seed_gap);
  report.causal_cross_domain_sd = sd_total / static_cast<double>(report.seeds.size());
  return report;
}

}  // namespace bellconf::qml
