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

#include "bellconf/bell/chsh.h"
#include "bellconf/bell/hierarchy.h"
#include "bellconf/bell/lhv.h"
#include "bellconf/bell/sweep.h"
#include "bellconf/bell/universality.h"
#include "bellconf/errors.h"
#include "bellconf/qsim/simulator.h"
#include "bellconf/rng.h"
#include "bellconf/stats/stats.h"
#include "gtest/gtest.h"

namespace bellconf::bell {
namespace {

using std::numbers::pi;
using std::numbers::sqrt2;

std::vector<double> sweep_thetas() {
  std::vector<double> t;
  for (int k = 0; k < 25; ++k) t.push_back(k * (pi / 2) / 24);
  return t;
}

// Generic 2-qubit pure state: Schmidt form followed by arbitrary local rotations.
qsim::Circuit random_two_qubit_state(Rng& rng) {
  qsim::Circuit c = partially_entangled_state(pi / 2 * rng.uniform());
  for (int q = 0; q < 2; ++q) {
    c.rz(q, 2 * pi * rng.uniform()).ry(q, 2 * pi * rng.uniform()).rz(q, 2 * pi * rng.uniform());
  }
  return c;
}

ChshSettings random_settings(Rng& rng) {
  return {pi * rng.uniform(), pi * rng.uniform(), pi * rng.uniform(), pi * rng.uniform()};
}

TEST(ConfoundingStrength, Normalization) {
  EXPECT_NEAR(confounding_strength(2 * sqrt2), sqrt2, 1e-15);
  EXPECT_DOUBLE_EQ(confounding_strength(2), 1.0);
  EXPECT_DOUBLE_EQ(confounding_strength(-2), 1.0);
  EXPECT_DOUBLE_EQ(confounding_strength(0), 0.0);
}

TEST(Correlator, BellPairBornRule) {
  EXPECT_NEAR(exact_correlator(bell_pair(), 0, pi / 8), std::cos(pi / 4), 1e-12);
  for (double a : {0.0, 0.3, 1.1}) {
    EXPECT_NEAR(exact_correlator(bell_pair(), a, a), 1.0, 1e-12);
    for (double b : {-0.4, 0.2, 0.9}) {
      EXPECT_NEAR(exact_correlator(bell_pair(), a, b), std::cos(2 * (a - b)), 1e-12);
    }
  }
  double sampled = measure_correlator(bell_pair(), 0, pi / 8, 10000, 42);
  EXPECT_NEAR(sampled, std::cos(pi / 4), 5 * std::sqrt((1 - 0.5) / 10000));
}

TEST(Correlator, PartiallyEntangledOracle) {
  for (double t : sweep_thetas()) {
    double a = pi / 4, b = pi / 8;
    double want = std::cos(2 * a) * std::cos(2 * b) + std::sin(2 * t) * std::sin(2 * a) * std::sin(2 * b);
    EXPECT_NEAR(exact_correlator(partially_entangled_state(t), a, b), want, 1e-12);
    EXPECT_NEAR(want, std::sin(2 * t) * std::sin(pi / 4), 1e-12);
  }
}

TEST(Correlator, RejectsBadPreparations) {
  EXPECT_THROW(measure_correlator(qsim::Circuit(3), 0, 0, 10, 1), ArgumentError);
  qsim::Circuit measured = bell_pair();
  measured.measure_z(0, 0);
  EXPECT_THROW(measure_correlator(measured, 0, 0, 10, 1), ArgumentError);
}

TEST(Chsh, ExactValues) {
  EXPECT_NEAR(exact_chsh_s(bell_pair(), {}), 2 * sqrt2, 1e-12);
  EXPECT_NEAR(exact_chsh_s(qsim::Circuit(2), {}), sqrt2, 1e-12);
}

TEST(Chsh, SampledBellPair) {
  double s = chsh_s(bell_pair(), {}, 10000, 42);
  EXPECT_NEAR(s, 2 * sqrt2, 0.03);
  EXPECT_EQ(s, chsh_s(bell_pair(), {}, 10000, 42));
}

TEST(Chsh, TsirelsonCeilingOverRandomStates) {
  Rng rng(1000);
  const uint64_t shots = 1000;
  // Per-trial CS has standard error at most sqrt(4 / shots) / 2.
  const double stderr_cs = 1 / std::sqrt(static_cast<double>(shots));
  for (int i = 0; i < 1000; ++i) {
    qsim::Circuit prep = random_two_qubit_state(rng);
    ChshSettings st = random_settings(rng);
    double exact = confounding_strength(exact_chsh_s(prep, st));
    ASSERT_LE(exact, sqrt2 + 1e-12);
    double sampled = confounding_strength(chsh_s(prep, st, shots, derive_seed(5, {uint64_t(i)})));
    ASSERT_LE(sampled, sqrt2 + 5 * stderr_cs) << i;
  }
}

TEST(Lhv, SixteenStrategiesBoundedByTwo) {
  auto all = all_deterministic_strategies();
  ASSERT_EQ(all.size(), 16u);
  int best = 0;
  for (const LhvStrategy& s : all) {
    EXPECT_LE(std::abs(s.chsh_value()), 2);
    EXPECT_LE(s.ch_value(), 0);
    best = std::max(best, std::abs(s.chsh_value()));
  }
  EXPECT_EQ(best, 2);
  EXPECT_EQ(lhv_max_abs_chsh(), 2);
  EXPECT_EQ(lhv_max_ch(), 0);
}

TEST(Lhv, OptimalStrategyIsFirstMaximizer) {
  LhvStrategy best = optimal_lhv_strategy();
  EXPECT_EQ(best.chsh_value(), 2);
  EXPECT_DOUBLE_EQ(confounding_strength(best.chsh_value()), 1.0);
  for (const LhvStrategy& s : all_deterministic_strategies()) {
    if (s.responses == best.responses) break;
    EXPECT_LT(s.chsh_value(), 2);
  }
}

TEST(Lhv, DeterministicSamplingIsExact) {
  LhvStrategy s = optimal_lhv_strategy();
  ChshCorrelators e = sample_lhv_chsh(s, 1000, 3);
  EXPECT_DOUBLE_EQ(e.s(), 2.0);
}

TEST(Lhv, FlipNoiseShrinksCorrelators) {
  LhvStrategy s = optimal_lhv_strategy();
  s.flip_probability = 0.1;
  const double shrink = (1 - 2 * 0.1) * (1 - 2 * 0.1);
  const uint64_t shots = 20000;
  ChshCorrelators e = sample_lhv_chsh(s, shots, 17);
  const double sigma = std::sqrt((1 - shrink * shrink) / shots);
  EXPECT_NEAR(e.e_ab, s.correlator(0, 0) * shrink, 5 * sigma);
  EXPECT_NEAR(e.e_abp, s.correlator(0, 1) * shrink, 5 * sigma);
  EXPECT_NEAR(e.e_apb, s.correlator(1, 0) * shrink, 5 * sigma);
  EXPECT_NEAR(e.e_apbp, s.correlator(1, 1) * shrink, 5 * sigma);
}

TEST(CsEstimate, FromTrials) {
  CsEstimate e = CsEstimate::from_trials({1.0, 1.2, 1.4});
  EXPECT_NEAR(e.cs, 1.2, 1e-12);
  EXPECT_NEAR(e.s_value, 2.4, 1e-12);
  EXPECT_NEAR(e.std_error, 0.2 / std::sqrt(3.0), 1e-12);
  EXPECT_EQ(e.n_trials, 3);
}

TEST(Hierarchy, RandomProductStatesStayClassical) {
  for (uint64_t i = 0; i < 200; ++i) {
    double cs = confounding_strength(exact_chsh_s(random_product_state(i), {}));
    EXPECT_LE(cs, 1.0 + 1e-12);
  }
}

TEST(Hierarchy, OrderingAtReducedScale) {
  HierarchyConfig c;
  c.shots = 2000;
  c.trials = 20;
  HierarchyResult r = run_hierarchy(c);
  EXPECT_DOUBLE_EQ(r.classical.cs, 1.0);
  EXPECT_GT(r.quantum.cs, r.classical.cs);
  EXPECT_GT(r.classical.cs, r.no_confounding.cs);
  EXPECT_GT(r.quantum_classical_separation(), 10);
  EXPECT_EQ(r.quantum.n_trials, 20);
}

TEST(Hierarchy, DeterministicAcrossJobCounts) {
  HierarchyConfig c;
  c.shots = 500;
  c.trials = 8;
  c.jobs = 1;
  HierarchyResult serial = run_hierarchy(c);
  c.jobs = 4;
  HierarchyResult parallel = run_hierarchy(c);
  EXPECT_EQ(serial.quantum.trial_values, parallel.quantum.trial_values);
  EXPECT_EQ(serial.no_confounding.trial_values, parallel.no_confounding.trial_values);
}

TEST(Hierarchy, LhvFlipLowersClassicalMean) {
  HierarchyConfig c;
  c.shots = 10000;
  c.trials = 10;
  c.lhv_flip = 0.0025;
  HierarchyResult r = run_hierarchy(c);
  EXPECT_NEAR(r.classical.cs, 0.99, 0.005);
}

TEST(Sweep, ProtocolLawExact) {
  for (double t : sweep_thetas()) {
    EXPECT_NEAR(exact_cs(t), std::abs((1 + std::sin(2 * t)) / sqrt2), 1e-9) << t;
    EXPECT_DOUBLE_EQ(theoretical_cs(t), std::abs((1 + std::sin(2 * t)) / sqrt2));
  }
  EXPECT_NEAR(exact_cs(0), 1 / sqrt2, 1e-12);
  EXPECT_NEAR(exact_cs(pi / 4), sqrt2, 1e-12);
}

TEST(Sweep, LinearLawExact) {
  std::vector<double> conc, cs;
  for (double t : sweep_thetas()) {
    conc.push_back(std::abs(std::sin(2 * t)));
    cs.push_back(exact_cs(t));
  }
  stats::LinearFit f = stats::linear_fit(conc, cs);
  EXPECT_NEAR(f.slope, 1 / sqrt2, 1e-9);
  EXPECT_NEAR(f.intercept, 1 / sqrt2, 1e-9);
  EXPECT_GT(stats::pearson_r(conc, cs), 0.9999);
}

TEST(Sweep, SampledShape) {
  SweepConfig c;
  c.theta_steps = 9;
  c.shots = 4000;
  SweepResult r = run_sweep(c);
  ASSERT_EQ(r.points.size(), 9u);
  EXPECT_DOUBLE_EQ(r.points.front().theta, 0.0);
  EXPECT_DOUBLE_EQ(r.points.back().theta, pi / 2);
  for (const SweepPoint& p : r.points) {
    EXPECT_NEAR(p.concurrence, std::abs(std::sin(2 * p.theta)), 1e-12);
    EXPECT_NEAR(p.cs_measured, p.cs_theory, 0.05);
  }
  EXPECT_GT(r.r_squared, 0.99);
  SweepConfig single;
  single.theta_steps = 1;
  EXPECT_THROW(run_sweep(single), ConfigError);
}

TEST(Mermin, GhzOracle) {
  EXPECT_NEAR(exact_mermin_expectation(), 4.0, 1e-9);
  EXPECT_EQ(lhv_max_abs_mermin(), 2);
  EXPECT_NEAR(mermin_cs(10000, 42), 2.0, 0.02);
}

TEST(Ch, BellPairAndProduct) {
  EXPECT_NEAR(exact_ch_value(bell_pair(), {}), (sqrt2 - 1) / 2, 1e-12);
  EXPECT_LE(exact_ch_value(qsim::Circuit(2), {}), 1e-12);
  EXPECT_NEAR(ch_value(bell_pair(), {}, 20000, 4), (sqrt2 - 1) / 2, 0.03);
}

TEST(Hardy, BuiltinConfigurationHitsOptimum) {
  HardyConfig h = builtin_hardy();
  HardyTerms t = exact_hardy_terms(partially_entangled_state(h.theta), h.settings());
  const double golden = (5 * std::sqrt(5.0) - 11) / 2;
  EXPECT_NEAR(t.forbidden, golden, 1e-9);
  EXPECT_NEAR(t.premise_1, 0, 1e-12);
  EXPECT_NEAR(t.premise_2, 0, 1e-12);
  EXPECT_NEAR(t.premise_3, 0, 1e-12);
  EXPECT_NEAR(t.p_imp(), golden, 1e-9);
}

TEST(Hardy, ProductStateHasNoImpossibleEvent) {
  HardyConfig h = builtin_hardy();
  EXPECT_NEAR(exact_hardy_terms(qsim::Circuit(2), h.settings()).p_imp(), 0.0, 1e-12);
  EXPECT_EQ(lhv_max_hardy_value(), 0);
}

TEST(Hardy, SampledWithinAcceptanceBand) {
  double p = hardy_p_imp(10000, 42);
  EXPECT_GE(p, 0.080);
  EXPECT_LE(p, 0.095);
}

TEST(Universality, Table) {
  UniversalityResult r = run_universality(10000, 42);
  EXPECT_NEAR(r.chsh.exact_value, sqrt2, 1e-12);
  EXPECT_NEAR(r.mermin.exact_value, 2.0, 1e-9);
  EXPECT_DOUBLE_EQ(r.chsh.classical_bound, 1.0);
  EXPECT_DOUBLE_EQ(r.mermin.classical_bound, 1.0);
  EXPECT_GT(r.hardy.exact_value, r.hardy.classical_bound);
  EXPECT_GT(r.ch.exact_value, r.ch.classical_bound);
}

}  // namespace
}  // namespace bellconf::bell
