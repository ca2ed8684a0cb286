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

#include "bellconf/bell/chsh.h"
#include "bellconf/errors.h"
#include "bellconf/qml/qml.h"
#include "bellconf/qsim/counts.h"
#include "bellconf/qsim/measures.h"
#include "bellconf/qsim/simulator.h"
#include "bellconf/rng.h"

namespace bellconf::qml {
namespace {

qsim::RunOptions label_noise(double flip_probability) {
  qsim::RunOptions options;
  options.slot_flip_probability = {0.0, 0.0, flip_probability};
  return options;
}

// P(B=1 | X=x) from a distribution over 3-bit keys; nan if X=x never occurs.
template <typename Dist>
double p_b1_given(const Dist& dist, int x_slot, int x) {
  double joint = 0, marginal = 0;
  for (const auto& [key, w] : dist) {
    if (qsim::bit_at(key, x_slot) != x) continue;
    marginal += static_cast<double>(w);
    if (qsim::bit_at(key, kQubitB) == 1) joint += static_cast<double>(w);
  }
  return marginal > 0 ? joint / marginal : std::nan("");
}

int qubit_of(Feature f) { return f == Feature::kA ? kQubitA : kQubitC; }

FeatureCheck finish(FeatureCheck check, double tau) {
  check.effect = std::abs(check.p_do_1 - check.p_do_0);
  check.causal = check.effect > tau;
  return check;
}

}  // namespace

std::string feature_name(Feature f) { return f == Feature::kA ? "A" : "C"; }

void DomainSpec::validate() const {
  if (!(lambda >= 0 && lambda <= 1)) throw ConfigError("domain lambda must be in [0, 1]");
  if (!(flip_probability >= 0 && flip_probability <= 0.5)) {
    throw ConfigError("label flip probability must be in [0, 0.5]");
  }
}

qsim::Circuit confounder_circuit() {
  qsim::Circuit c(3);
  c.h(kQubitA).cnot(kQubitA, kQubitC);
  return c;
}

qsim::Circuit causal_circuit(int surgery_target, int value) {
  if (surgery_target != -1 && surgery_target != kQubitA && surgery_target != kQubitC) {
    throw ArgumentError("surgery target must be the A or C qubit");
  }
  if (value != 0 && value != 1) throw ArgumentError("surgery value must be 0 or 1");
  qsim::Circuit c = confounder_circuit();
  if (surgery_target >= 0) {
    c.non_selective_z(surgery_target).reset(surgery_target);
    if (value == 1) c.x(surgery_target);
  }
  c.cnot(kQubitA, kQubitB);
  c.measure_all();
  return c;
}

Sample generate_sample(const DomainSpec& domain, uint64_t seed) {
  domain.validate();
  Rng rng(seed);
  Sample s;
  if (rng.bernoulli(domain.lambda)) {
    static const qsim::Circuit circuit = causal_circuit();
    qsim::Counts counts = qsim::run_circuit(circuit, 1, derive_seed(seed, {1}),
                                            label_noise(domain.flip_probability));
    const std::string& key = counts.table.begin()->first;
    s.a = qsim::bit_at(key, kQubitA);
    s.c = qsim::bit_at(key, kQubitC);
    s.b = qsim::bit_at(key, kQubitB);
  } else {
    s.a = rng.bit();
    s.c = rng.bit();
    s.b = s.a ^ (rng.bernoulli(domain.flip_probability) ? 1 : 0);
  }
  return s;
}

Dataset generate_dataset(const DomainSpec& domain, uint64_t seed) {
  domain.validate();
  if (domain.n_samples == 0) throw ConfigError("dataset needs n_samples >= 1");
  Dataset d;
  d.domain = domain;
  d.rows.reserve(domain.n_samples);
  for (uint64_t i = 0; i < domain.n_samples; ++i) {
    d.rows.push_back(generate_sample(domain, derive_seed(seed, {i})));
  }
  return d;
}

double exact_mixture_cs(double lambda) {
  if (!(lambda >= 0 && lambda <= 1)) throw ArgumentError("lambda must be in [0, 1]");
  qsim::DensityMatrix bell = qsim::DensityMatrix::pure(qsim::prepare_state(bell::bell_pair()));
  qsim::DensityMatrix mixed(lambda * bell.matrix() +
                            (1 - lambda) * qsim::DensityMatrix::maximally_mixed(2).matrix());
  // E(alpha, beta) = Tr(rho O(alpha) x O(beta)) expanded over Z/X terms.
  auto e = [&](double alpha, double beta) {
    double ca = std::cos(2 * alpha), sa = std::sin(2 * alpha);
    double cb = std::cos(2 * beta), sb = std::sin(2 * beta);
    using qsim::PauliString;
    return ca * cb * qsim::expectation(mixed, PauliString::parse("ZZ")) +
           ca * sb * qsim::expectation(mixed, PauliString::parse("ZX")) +
           sa * cb * qsim::expectation(mixed, PauliString::parse("XZ")) +
           sa * sb * qsim::expectation(mixed, PauliString::parse("XX"));
  };
  bell::ChshSettings st;
  double s = e(st.a, st.b) + e(st.a, st.b_prime) + e(st.a_prime, st.b) - e(st.a_prime, st.b_prime);
  return bell::confounding_strength(s);
}

FeatureCheck interventional_feature_check(Feature feature, double flip_probability,
                                          uint64_t shots, uint64_t seed, double tau) {
  const qsim::RunOptions noise = label_noise(flip_probability);
  const int q = qubit_of(feature);
  FeatureCheck check;
  check.feature = feature;
  auto do_run = [&](int x) {
    qsim::Counts counts = qsim::run_circuit(causal_circuit(q, x), shots,
                                            derive_seed(seed, {static_cast<uint64_t>(x)}), noise);
    return static_cast<double>(counts.count_where(kQubitB, 1)) / static_cast<double>(shots);
  };
  check.p_do_0 = do_run(0);
  check.p_do_1 = do_run(1);
  qsim::Counts obs = qsim::run_circuit(causal_circuit(), shots, derive_seed(seed, {2}), noise);
  check.p_obs_1 = p_b1_given(obs.table, q, 1);
  check.p_obs_0 = p_b1_given(obs.table, q, 0);
  return finish(check, tau);
}

FeatureCheck exact_feature_check(Feature feature, double flip_probability, double tau) {
  const qsim::RunOptions noise = label_noise(flip_probability);
  const int q = qubit_of(feature);
  FeatureCheck check;
  check.feature = feature;
  auto do_run = [&](int x) {
    auto probs = qsim::exact_probabilities(causal_circuit(q, x), noise);
    double p = 0;
    for (const auto& [key, w] : probs) {
      if (qsim::bit_at(key, kQubitB) == 1) p += w;
    }
    return p;
  };
  check.p_do_0 = do_run(0);
  check.p_do_1 = do_run(1);
  auto obs = qsim::exact_probabilities(causal_circuit(), noise);
  check.p_obs_1 = p_b1_given(obs, q, 1);
  check.p_obs_0 = p_b1_given(obs, q, 0);
  return finish(check, tau);
}

}  // namespace bellconf::qml
