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
#include <numbers>
#include <vector>

#include "bellconf/errors.h"
#include "bellconf/qml/qml.h"
#include "bellconf/rng.h"
#include "bellconf/stats/stats.h"
#include "gtest/gtest.h"

namespace bellconf::qml {
namespace {

std::vector<double> column(const Dataset& d, int Sample::*field) {
  std::vector<double> out;
  for (const Sample& s : d.rows) out.push_back(s.*field);
  return out;
}

TEST(Domain, Validation) {
  EXPECT_THROW((DomainSpec{1.5, 0, 10}.validate()), ConfigError);
  EXPECT_THROW((DomainSpec{0.5, 0.6, 10}.validate()), ConfigError);
  EXPECT_THROW(generate_dataset({0.5, 0, 0}, 1), ConfigError);
  EXPECT_NO_THROW((DomainSpec{0.5, 0.1, 10}.validate()));
}

TEST(Generator, MaximalConfoundingCopiesA) {
  Dataset d = generate_dataset({1.0, 0.0, 2000}, 42);
  ASSERT_EQ(d.rows.size(), 2000u);
  for (const Sample& s : d.rows) {
    EXPECT_EQ(s.a, s.c);
    EXPECT_EQ(s.b, s.a);
  }
}

TEST(Generator, NoConfoundingIsIndependent) {
  Dataset d = generate_dataset({0.0, 0.0, 10000}, 42);
  EXPECT_LT(std::abs(stats::pearson_r(column(d, &Sample::a), column(d, &Sample::c))), 0.05);
}

TEST(Generator, MarginalsUniformForAllLambdas) {
  const size_t n = 10000;
  const double sigma = std::sqrt(0.25 / n);
  uint64_t seed = 0;
  for (double lambda : {1.0, 0.75, 0.5, 0.25, 0.0}) {
    Dataset d = generate_dataset({lambda, 0.0, n}, ++seed);
    EXPECT_NEAR(stats::mean(column(d, &Sample::a)), 0.5, 5 * sigma) << lambda;
    EXPECT_NEAR(stats::mean(column(d, &Sample::c)), 0.5, 5 * sigma) << lambda;
  }
}

TEST(Generator, LabelNoise) {
  Dataset d = generate_dataset({0.5, 0.2, 10000}, 9);
  double flips = 0;
  for (const Sample& s : d.rows) flips += s.b != s.a;
  EXPECT_NEAR(flips / d.rows.size(), 0.2, 5 * std::sqrt(0.16 / 10000));
}

TEST(Generator, Deterministic) {
  Dataset a = generate_dataset({0.5, 0.1, 300}, 77);
  Dataset b = generate_dataset({0.5, 0.1, 300}, 77);
  for (size_t i = 0; i < a.rows.size(); ++i) {
    EXPECT_EQ(a.rows[i].a, b.rows[i].a);
    EXPECT_EQ(a.rows[i].c, b.rows[i].c);
    EXPECT_EQ(a.rows[i].b, b.rows[i].b);
  }
}

TEST(Generator, MixtureCsIsLinearInLambda) {
  for (double lambda : {0.0, 0.25, 0.5, 0.75, 1.0}) {
    EXPECT_NEAR(exact_mixture_cs(lambda), lambda * std::numbers::sqrt2, 1e-12);
  }
}

TEST(FeatureCheck, AIsCausalCIsSpurious) {
  FeatureCheck a = interventional_feature_check(Feature::kA, 0.0, 10000, 1);
  FeatureCheck c = interventional_feature_check(Feature::kC, 0.0, 10000, 2);
  EXPECT_TRUE(a.causal);
  EXPECT_FALSE(c.causal);
  EXPECT_DOUBLE_EQ(a.p_do_1, 1.0);
  EXPECT_DOUBLE_EQ(a.p_do_0, 0.0);
  EXPECT_NEAR(c.p_do_1, 0.5, 5 * std::sqrt(0.25 / 10000));
  EXPECT_NEAR(c.p_do_0, 0.5, 5 * std::sqrt(0.25 / 10000));
  EXPECT_DOUBLE_EQ(c.p_obs_1, 1.0);
  EXPECT_DOUBLE_EQ(c.p_obs_0, 0.0);
}

TEST(FeatureCheck, ExactOracle) {
  FeatureCheck a = exact_feature_check(Feature::kA, 0.0);
  FeatureCheck c = exact_feature_check(Feature::kC, 0.0);
  EXPECT_NEAR(a.effect, 1.0, 1e-12);
  EXPECT_NEAR(c.effect, 0.0, 1e-12);
  EXPECT_NEAR(c.p_do_1, 0.5, 1e-12);
  EXPECT_NEAR(c.p_obs_1, 1.0, 1e-12);
  FeatureCheck noisy = exact_feature_check(Feature::kA, 0.1);
  EXPECT_NEAR(noisy.effect, 0.8, 1e-12);
}

TEST(FeatureCheck, CausalCircuitLayout) {
  qsim::Circuit c = causal_circuit(kQubitC, 1);
  EXPECT_EQ(c.num_qubits(), 3);
  EXPECT_EQ(c.num_classical_slots(), 3);
  EXPECT_THROW(causal_circuit(kQubitB, 0), ArgumentError);
}

TEST(Logistic, SeparableSingleFeature) {
  std::vector<Sample> rows;
  for (int i = 0; i < 100; ++i) rows.push_back({i % 2, 0, i % 2});
  LogisticModel m = train_logistic(rows, {Feature::kA});
  EXPECT_DOUBLE_EQ(accuracy(m, rows), 1.0);
  EXPECT_GT(m.weights[0], 0);
  EXPECT_EQ(m.training_meta.iterations, 1000);
}

TEST(Logistic, ColinearFeaturesGetEqualWeights) {
  Dataset d = generate_dataset({1.0, 0.0, 1400}, 5);
  LogisticModel m = train_logistic(d.rows, {Feature::kA, Feature::kC});
  EXPECT_NEAR(m.weights[0], m.weights[1], 1e-6);
  EXPECT_DOUBLE_EQ(accuracy(m, d.rows), 1.0);
}

TEST(Logistic, LabelIndependentFeatureStaysSmall) {
  Rng rng(13);
  std::vector<Sample> rows;
  // Weight standard error is about 4/sqrt(n); n = 20000 keeps 0.1 beyond 3 sigma.
  for (int i = 0; i < 20000; ++i) rows.push_back({rng.bit(), rng.bit(), rng.bit()});
  LogisticModel m = train_logistic(rows, {Feature::kC});
  EXPECT_LT(std::abs(m.weights[0]), 0.1);

  std::vector<Sample> balanced = {{0, 0, 0}, {0, 0, 1}, {1, 1, 0}, {1, 1, 1}};
  LogisticModel z = train_logistic(balanced, {Feature::kC});
  EXPECT_NEAR(z.weights[0], 0.0, 1e-12);
}

TEST(Logistic, PredictThresholdAtHalf) {
  LogisticModel m;
  m.features = {Feature::kA};
  m.weights = {0.0};
  m.bias = 0.0;
  EXPECT_EQ(m.predict({0, 0, 0}), 1);
  m.bias = -1e-9;
  EXPECT_EQ(m.predict({0, 0, 0}), 0);
}

TEST(Logistic, Errors) {
  std::vector<Sample> none;
  std::vector<Sample> one = {{1, 1, 1}};
  EXPECT_THROW(train_logistic(none, {Feature::kA}), ArgumentError);
  EXPECT_THROW(train_logistic(one, {}), ArgumentError);
  EXPECT_THROW(accuracy(train_logistic(one, {Feature::kA}), none), ArgumentError);
}

class Robustness : public ::testing::Test {
 protected:
  static void SetUpTestSuite() { report_ = new RobustnessReport(run_robustness({})); }
  static void TearDownTestSuite() { delete report_; }
  static RobustnessReport* report_;
};
RobustnessReport* Robustness::report_ = nullptr;

TEST_F(Robustness, CausalModelPerfectEverywhere) {
  for (const SeedOutcome& s : report_->seeds) {
    ASSERT_EQ(s.causal_features, std::vector<Feature>{Feature::kA});
    for (double acc : s.causal_acc) EXPECT_DOUBLE_EQ(acc, 1.0);
  }
  EXPECT_LT(report_->causal_cross_domain_sd, 0.05);
}

TEST_F(Robustness, NaiveCollapsesToThreeQuarters) {
  const DomainSummary& last = report_->domains.back();
  ASSERT_DOUBLE_EQ(last.lambda, 0.0);
  EXPECT_NEAR(last.naive.mean, 0.75, 0.02);
  EXPECT_NEAR(report_->domains.front().naive.mean, 1.0, 1e-12);
}

TEST_F(Robustness, MonotoneAndDominated) {
  const auto& d = report_->domains;
  for (size_t k = 1; k < d.size(); ++k) {
    EXPECT_LE(d[k].naive.mean, d[k - 1].naive.mean + 0.01) << d[k].lambda;
    EXPECT_GE(d[k].causal.mean, d[k].naive.mean);
  }
}

TEST_F(Robustness, GapSignificant) {
  EXPECT_GT(report_->mean_gap, 0.05);
  EXPECT_LT(report_->paired_t.p_value, 0.01);
  EXPECT_EQ(report_->seeds.size(), 20u);
}

TEST(RobustnessConfig, Validation) {
  RobustnessConfig c;
  c.seeds = 1;
  EXPECT_THROW(run_robustness(c), ConfigError);
  RobustnessConfig noisy;
  noisy.seeds = 2;
  noisy.flip_probability = 0.5;
  EXPECT_THROW(run_robustness(noisy), ConfigError);
}

TEST(RobustnessConfig, IndependentOfJobs) {
  RobustnessConfig c;
  c.seeds = 3;
  c.jobs = 1;
  RobustnessReport a = run_robustness(c);
  c.jobs = 3;
  RobustnessReport b = run_robustness(c);
  for (size_t i = 0; i < a.seeds.size(); ++i) {
    EXPECT_EQ(a.seeds[i].naive_acc, b.seeds[i].naive_acc);
    EXPECT_EQ(a.seeds[i].naive.weights, b.seeds[i].naive.weights);
  }
}

}  // namespace
}  // namespace bellconf::qml
