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

#include "bellconf/bell/chsh.h"

#include <cmath>

#include "bellconf/errors.h"
#include "bellconf/qsim/simulator.h"
#include "bellconf/rng.h"
#include "bellconf/stats/stats.h"

namespace bellconf::bell {
namespace {

double parity_expectation(const std::map<std::string, double>& probabilities) {
  double e = 0;
  for (const auto& [key, p] : probabilities) {
    int ones = 0;
    for (char c : key) ones += c == '1';
    e += (ones % 2 == 0 ? 1.0 : -1.0) * p;
  }
  return e;
}

double parity_expectation(const qsim::Counts& counts) {
  std::map<std::string, double> freq;
  for (const auto& [key, n] : counts.table) freq[key] = counts.frequency(key);
  return parity_expectation(freq);
}

}  // namespace

double confounding_strength(double s) { return std::abs(s) / 2.0; }

qsim::Circuit partially_entangled_state(double theta) {
  qsim::Circuit c(2);
  c.ry(0, 2 * theta).cnot(0, 1);
  return c;
}

qsim::Circuit bell_pair() {
  qsim::Circuit c(2);
  c.h(0).cnot(0, 1);
  return c;
}

qsim::Circuit correlator_circuit(const qsim::Circuit& prep, double alpha, double beta) {
  if (prep.num_qubits() != 2) throw ArgumentError("CHSH preparation must act on 2 qubits");
  if (prep.has_measurements()) throw ArgumentError("CHSH preparation must not measure");
  qsim::Circuit c = prep;
  c.ry(0, -2 * alpha).ry(1, -2 * beta).measure_z(0, 0).measure_z(1, 1);
  return c;
}

double measure_correlator(const qsim::Circuit& prep, double alpha, double beta,
                          uint64_t shots, uint64_t seed) {
  return parity_expectation(qsim::run_circuit(correlator_circuit(prep, alpha, beta), shots, seed));
}

double exact_correlator(const qsim::Circuit& prep, double alpha, double beta) {
  return parity_expectation(qsim::exact_probabilities(correlator_circuit(prep, alpha, beta)));
}

ChshCorrelators measure_chsh(const qsim::Circuit& prep, const ChshSettings& st, uint64_t shots,
                             uint64_t seed) {
  ChshCorrelators c;
  c.e_ab = measure_correlator(prep, st.a, st.b, shots, derive_seed(seed, {0}));
  c.e_abp = measure_correlator(prep, st.a, st.b_prime, shots, derive_seed(seed, {1}));
  c.e_apb = measure_correlator(prep, st.a_prime, st.b, shots, derive_seed(seed, {2}));
  c.e_apbp = measure_correlator(prep, st.a_prime, st.b_prime, shots, derive_seed(seed, {3}));
  return c;
}

ChshCorrelators exact_chsh(const qsim::Circuit& prep, const ChshSettings& st) {
  ChshCorrelators c;
  c.e_ab = exact_correlator(prep, st.a, st.b);
  c.e_abp = exact_correlator(prep, st.a, st.b_prime);
  c.e_apb = exact_correlator(prep, st.a_prime, st.b);
  c.e_apbp = exact_correlator(prep, st.a_prime, st.b_prime);
  return c;
}

double chsh_s(const qsim::Circuit& prep, const ChshSettings& settings, uint64_t shots,
              uint64_t seed) {
  return measure_chsh(prep, settings, shots, seed).s();
}

double exact_chsh_s(const qsim::Circuit& prep, const ChshSettings& settings) {
  return exact_chsh(prep, settings).s();
}

CsEstimate CsEstimate::from_trials(std::vector<double> trial_cs) {
  if (trial_cs.empty()) throw ArgumentError("CsEstimate needs at least one trial");
  CsEstimate e;
  e.n_trials = static_cast<int>(trial_cs.size());
  stats::Summary s = stats::summarize(trial_cs);
  e.cs = s.mean;
  e.s_value = 2 * s.mean;
  e.std_error = s.stderr_mean;
  e.trial_values = std::move(trial_cs);
  return e;
}

}  // namespace bellconf::bell
