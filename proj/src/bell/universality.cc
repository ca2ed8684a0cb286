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

#include "bellconf/bell/universality.h"

#include <array>
#include <cmath>
#include <numbers>

#include "bellconf/bell/lhv.h"
#include "bellconf/qsim/simulator.h"
#include "bellconf/rng.h"

namespace bellconf::bell {
namespace {

constexpr double kPi = std::numbers::pi;

// Mermin terms: basis per qubit ('X' or 'Y') and sign.
struct MerminTerm {
  std::array<char, 3> basis;
  double sign;
};
constexpr std::array<MerminTerm, 4> kMerminTerms = {{
    {{'X', 'X', 'X'}, 1.0},
    {{'X', 'Y', 'Y'}, -1.0},
    {{'Y', 'X', 'Y'}, -1.0},
    {{'Y', 'Y', 'X'}, -1.0},
}};

qsim::Circuit mermin_circuit(const MerminTerm& term) {
  qsim::Circuit c = ghz_state();
  for (int q = 0; q < 3; ++q) {
    // Y is measured as Rz(-pi/2) followed by the X-basis rotation.
    if (term.basis[q] == 'Y') c.rz(q, -kPi / 2);
    c.ry(q, -kPi / 2);
  }
  c.measure_all();
  return c;
}

template <typename Dist>
double parity(const Dist& probabilities) {
  double e = 0;
  for (const auto& [key, p] : probabilities) {
    int ones = 0;
    for (char ch : key) ones += ch == '1';
    e += (ones % 2 == 0 ? 1.0 : -1.0) * p;
  }
  return e;
}

std::map<std::string, double> frequencies(const qsim::Counts& counts) {
  std::map<std::string, double> f;
  for (const auto& [key, n] : counts.table) f[key] = counts.frequency(key);
  return f;
}

// Joint distributions for the four setting pairs (a,b), (a,b'), (a',b), (a',b').
using Joint = std::array<std::map<std::string, double>, 4>;

std::array<std::pair<double, double>, 4> setting_pairs(const ChshSettings& st) {
  return {{{st.a, st.b}, {st.a, st.b_prime}, {st.a_prime, st.b}, {st.a_prime, st.b_prime}}};
}

Joint exact_joint(const qsim::Circuit& prep, const ChshSettings& st) {
  Joint j;
  auto pairs = setting_pairs(st);
  for (int k = 0; k < 4; ++k) {
    j[k] = qsim::exact_probabilities(correlator_circuit(prep, pairs[k].first, pairs[k].second));
  }
  return j;
}

Joint sampled_joint(const qsim::Circuit& prep, const ChshSettings& st, uint64_t shots,
                    uint64_t seed) {
  Joint j;
  auto pairs = setting_pairs(st);
  for (int k = 0; k < 4; ++k) {
    j[k] = frequencies(qsim::run_circuit(correlator_circuit(prep, pairs[k].first, pairs[k].second),
                                         shots, derive_seed(seed, {static_cast<uint64_t>(k)})));
  }
  return j;
}

double lookup(const std::map<std::string, double>& d, const char* key) {
  auto it = d.find(key);
  return it == d.end() ? 0.0 : it->second;
}

// Keys render slot 1 (Bob) on the left, slot 0 (Alice) on the right; "+" is
// bit 0.
double p_pp(const std::map<std::string, double>& d) { return lookup(d, "00"); }
double p_pm(const std::map<std::string, double>& d) { return lookup(d, "10"); }
double p_mp(const std::map<std::string, double>& d) { return lookup(d, "01"); }

double ch_from_joint(const Joint& j) {
  // P1(a) from the (a,b) run; P1(b) from the (a,b) run.
  double p1_a = p_pp(j[0]) + p_pm(j[0]);
  double p1_b = p_pp(j[0]) + p_mp(j[0]);
  return p_pp(j[0]) + p_pp(j[1]) + p_pp(j[2]) - p_pp(j[3]) - p1_a - p1_b;
}

HardyTerms hardy_from_joint(const Joint& j) {
  return {p_pp(j[0]), p_pm(j[1]), p_mp(j[2]), p_pp(j[3])};
}

}  // namespace

qsim::Circuit ghz_state() {
  qsim::Circuit c(3);
  c.h(0).cnot(0, 1).cnot(1, 2);
  return c;
}

double exact_mermin_expectation() {
  double m = 0;
  for (const MerminTerm& t : kMerminTerms) {
    m += t.sign * parity(qsim::exact_probabilities(mermin_circuit(t)));
  }
  return m;
}

double sample_mermin_expectation(uint64_t shots, uint64_t seed) {
  double m = 0;
  for (size_t k = 0; k < kMerminTerms.size(); ++k) {
    qsim::Counts counts = qsim::run_circuit(mermin_circuit(kMerminTerms[k]), shots,
                                            derive_seed(seed, {static_cast<uint64_t>(k)}));
    m += kMerminTerms[k].sign * parity(frequencies(counts));
  }
  return m;
}

double mermin_cs(uint64_t shots, uint64_t seed) {
  return std::abs(sample_mermin_expectation(shots, seed)) / 2.0;
}

int lhv_max_abs_mermin() {
  int best = 0;
  for (int mask = 0; mask < 64; ++mask) {
    // x_i = response to X, y_i = response to Y for party i.
    int x[3], y[3];
    for (int i = 0; i < 3; ++i) {
      x[i] = ((mask >> (2 * i)) & 1) ? 1 : -1;
      y[i] = ((mask >> (2 * i + 1)) & 1) ? 1 : -1;
    }
    int m = x[0] * x[1] * x[2] - x[0] * y[1] * y[2] - y[0] * x[1] * y[2] - y[0] * y[1] * x[2];
    best = std::max(best, std::abs(m));
  }
  return best;
}

double ch_value(const qsim::Circuit& prep, const ChshSettings& settings, uint64_t shots,
                uint64_t seed) {
  return ch_from_joint(sampled_joint(prep, settings, shots, seed));
}

double exact_ch_value(const qsim::Circuit& prep, const ChshSettings& settings) {
  return ch_from_joint(exact_joint(prep, settings));
}

double HardyTerms::p_imp() const { return std::max(0.0, hardy_value()); }

HardyConfig builtin_hardy() {
  // Golden-ratio optimum, P_imp = (5 sqrt(5) - 11) / 2.
  return {-1.1361039834904816, 0.306420194413495, -0.59813669914708489};
}

HardyTerms exact_hardy_terms(const qsim::Circuit& prep, const ChshSettings& settings) {
  return hardy_from_joint(exact_joint(prep, settings));
}

HardyTerms sample_hardy_terms(const qsim::Circuit& prep, const ChshSettings& settings,
                              uint64_t shots, uint64_t seed) {
  return hardy_from_joint(sampled_joint(prep, settings, shots, seed));
}

double hardy_p_imp(uint64_t shots, uint64_t seed) {
  HardyConfig h = builtin_hardy();
  return sample_hardy_terms(partially_entangled_state(h.theta), h.settings(), shots, seed).p_imp();
}

int lhv_max_hardy_value() {
  int best = -1000;
  for (const LhvStrategy& s : all_deterministic_strategies()) {
    auto plus = [&s](int k) { return s.responses[k] == 1 ? 1 : 0; };
    auto minus = [&s](int k) { return s.responses[k] == -1 ? 1 : 0; };
    int h = plus(0) * plus(2) - plus(0) * minus(3) - minus(1) * plus(2) - plus(1) * plus(3);
    best = std::max(best, h);
  }
  return best;
}

UniversalityResult run_universality(uint64_t shots, uint64_t seed) {
  UniversalityResult r;
  const qsim::Circuit phi_plus = bell_pair();
  const ChshSettings chsh;
  r.chsh = {"CHSH", 1.0, confounding_strength(exact_chsh_s(phi_plus, chsh)),
            confounding_strength(chsh_s(phi_plus, chsh, shots, derive_seed(seed, {0})))};
  r.ch = {"CH", 0.0, std::abs(exact_ch_value(phi_plus, chsh)),
          std::abs(ch_value(phi_plus, chsh, shots, derive_seed(seed, {1})))};
  HardyConfig h = builtin_hardy();
  qsim::Circuit hardy_state = partially_entangled_state(h.theta);
  r.hardy = {"Hardy", 0.0, exact_hardy_terms(hardy_state, h.settings()).p_imp(),
             sample_hardy_terms(hardy_state, h.settings(), shots, derive_seed(seed, {2})).p_imp()};
  r.mermin = {"Mermin", 1.0, std::abs(exact_mermin_expectation()) / 2.0,
              mermin_cs(shots, derive_seed(seed, {3}))};
  return r;
}

}  // namespace bellconf::bell
