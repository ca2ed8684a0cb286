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

#include <array>
#include <numbers>

#include "bellconf/bell/chsh.h"
#include "bellconf/errors.h"
#include "bellconf/intervention/intervention.h"
#include "bellconf/qsim/measures.h"
#include "bellconf/qsim/simulator.h"
#include "bellconf/rng.h"

namespace bellconf::intervention {
namespace {

constexpr double kX = std::numbers::pi / 4;  // half-angle selecting X

double mean_correlator(const qsim::Circuit& prep, double angle, const ArmConfig& config,
                       uint64_t check) {
  double total = 0;
  for (int t = 0; t < config.trials; ++t) {
    total += bell::measure_correlator(prep, angle, angle, config.shots,
                                      derive_seed(config.seed, {check, static_cast<uint64_t>(t)}));
  }
  return total / config.trials;
}

std::vector<double> a0_frequencies(const qsim::Circuit& circuit, const ArmConfig& config,
                                   uint64_t check) {
  std::vector<double> out;
  for (int t = 0; t < config.trials; ++t) {
    qsim::Counts counts = qsim::run_circuit(
        circuit, config.shots, derive_seed(config.seed, {check, static_cast<uint64_t>(t)}));
    out.push_back(static_cast<double>(counts.count_where(0, 0)) /
                  static_cast<double>(config.shots));
  }
  return out;
}

}  // namespace

qsim::Circuit product_control_state() {
  qsim::Circuit c(2);
  for (int q = 0; q < 2; ++q) c.h(q).rz(q, std::numbers::pi / 2);
  return c;
}

ConfounderValidationReport validate_confounder(const ArmConfig& config) {
  if (config.trials < 2) throw ConfigError("confounder validation needs at least 2 trials");
  if (config.shots == 0) throw ConfigError("confounder validation needs shots >= 1");
  ConfounderValidationReport r;

  // (i) common cause: both reduced states maximally mixed.
  qsim::StateVector phi = qsim::prepare_state(bell::bell_pair());
  const std::array<int, 1> keep_a = {0}, keep_b = {1};
  qsim::DensityMatrix rho_a = qsim::reduced_density_matrix(phi, keep_a);
  qsim::DensityMatrix rho_b = qsim::reduced_density_matrix(phi, keep_b);
  r.purity_a = qsim::purity(rho_a);
  r.purity_b = qsim::purity(rho_b);
  r.entropy_a = qsim::von_neumann_entropy(rho_a);
  r.entropy_b = qsim::von_neumann_entropy(rho_b);

  // (ii) no signaling: A's marginal with and without B measured.
  qsim::Circuit with_b = bell::bell_pair();
  with_b.measure_z(0, 0).measure_z(1, 1);
  qsim::Circuit without_b = bell::bell_pair();
  without_b.measure_z(0, 0);
  r.a0_with_b_measured = a0_frequencies(with_b, config, 0);
  r.a0_without_b_measured = a0_frequencies(without_b, config, 1);
  r.no_signaling_test = stats::welch_t_test(r.a0_with_b_measured, r.a0_without_b_measured);
  r.no_signaling_p = r.no_signaling_test.p_value;

  // (iii) spurious correlation present with the confounder, absent without.
  const qsim::Circuit product = product_control_state();
  r.e_zz = mean_correlator(bell::bell_pair(), 0, config, 2);
  r.e_xx = mean_correlator(bell::bell_pair(), kX, config, 3);
  r.e_zz_product = mean_correlator(product, 0, config, 4);
  r.e_xx_product = mean_correlator(product, kX, config, 5);
  return r;
}

}  // namespace bellconf::intervention
