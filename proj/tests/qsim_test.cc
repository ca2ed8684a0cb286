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

#include <Eigen/Dense>
#include <unsupported/Eigen/KroneckerProduct>

#include "bellconf/errors.h"
#include "bellconf/qsim/circuit.h"
#include "bellconf/qsim/counts.h"
#include "bellconf/qsim/density_matrix.h"
#include "bellconf/qsim/measures.h"
#include "bellconf/qsim/simulator.h"
#include "bellconf/qsim/state_vector.h"
#include "bellconf/rng.h"
#include "gtest/gtest.h"

namespace bellconf::qsim {
namespace {

using std::numbers::pi;
const double kInvSqrt2 = 1 / std::numbers::sqrt2;

Circuit bell() { return Circuit(2).h(0).cnot(0, 1); }

Circuit psi(double theta) { return Circuit(2).ry(0, 2 * theta).cnot(0, 1); }

std::vector<double> sweep_thetas() {
  std::vector<double> t;
  for (int k = 0; k < 25; ++k) t.push_back(k * (pi / 2) / 24);
  return t;
}

void expect_amplitudes(const StateVector& s, std::vector<Amplitude> want, double tol = 1e-12) {
  ASSERT_EQ(s.dim(), want.size());
  for (size_t i = 0; i < want.size(); ++i) {
    EXPECT_NEAR(std::abs(s[i] - want[i]), 0.0, tol) << "index " << i;
  }
}

TEST(StateVector, StartsInZero) {
  StateVector s(3);
  EXPECT_EQ(s.dim(), 8u);
  EXPECT_EQ(s[0], Amplitude(1));
  EXPECT_DOUBLE_EQ(s.norm_squared(), 1.0);
}

TEST(StateVector, RejectsBadSizes) {
  EXPECT_THROW(StateVector(0), ConfigError);
  EXPECT_THROW(StateVector(kMaxQubits + 1), ConfigError);
  EXPECT_THROW(StateVector::from_amplitudes({1, 0, 0}), ConfigError);
  EXPECT_THROW(StateVector::from_amplitudes({1, 1}), NumericalError);
}

TEST(Gates, HadamardOnZero) {
  expect_amplitudes(prepare_state(Circuit(1).h(0)), {kInvSqrt2, kInvSqrt2});
}

TEST(Gates, BellPair) {
  expect_amplitudes(prepare_state(bell()), {kInvSqrt2, 0, 0, kInvSqrt2});
}

TEST(Gates, RyCnotMatchesMatrixOracle) {
  const double theta = pi / 6;
  // Independent oracle: CNOT * (I (x) Ry(2 theta)) |00>, qubit 0 as the low bit.
  const double c = std::cos(theta), s = std::sin(theta);
  Eigen::Matrix2cd ry;
  ry << c, -s, s, c;
  Eigen::Matrix4cd cnot = Eigen::Matrix4cd::Zero();
  cnot(0, 0) = cnot(2, 2) = 1;  // control (low bit) clear
  cnot(3, 1) = cnot(1, 3) = 1;  // control set: flip the high bit
  Eigen::Matrix4cd u = cnot * Eigen::kroneckerProduct(Eigen::Matrix2cd::Identity(), ry).eval();
  Eigen::Vector4cd expected = u.col(0);
  EXPECT_NEAR(expected(0).real(), 0.8660254037844387, 1e-15);
  EXPECT_NEAR(expected(3).real(), 0.5, 1e-15);

  StateVector got = prepare_state(psi(theta));
  for (int i = 0; i < 4; ++i) EXPECT_NEAR(std::abs(got[i] - expected(i)), 0.0, 1e-12);
}

TEST(Gates, LittleEndianOrdering) {
  StateVector s = prepare_state(Circuit(3).x(1));
  EXPECT_EQ(s[2], Amplitude(1));
  EXPECT_DOUBLE_EQ(s.probability_one(1), 1.0);
  EXPECT_DOUBLE_EQ(s.probability_one(0), 0.0);
}

TEST(Gates, RzPhases) {
  StateVector s = prepare_state(Circuit(1).h(0).rz(0, pi / 2));
  EXPECT_NEAR(std::arg(s[1] / s[0]), pi / 2, 1e-12);
}

TEST(Gates, NormPreservedUnderRandomCircuits) {
  Rng rng(2024);
  for (int trial = 0; trial < 200; ++trial) {
    int n = 1 + static_cast<int>(rng.next_u64() % 3);
    Circuit c(n);
    for (int g = 0; g < 30; ++g) {
      int q = static_cast<int>(rng.next_u64() % n);
      switch (rng.next_u64() % 6) {
        case 0: c.h(q); break;
        case 1: c.x(q); break;
        case 2: c.z(q); break;
        case 3: c.ry(q, 2 * pi * rng.uniform()); break;
        case 4: c.rz(q, 2 * pi * rng.uniform()); break;
        default:
          if (n > 1) c.cnot(q, (q + 1) % n);
      }
    }
    EXPECT_NEAR(prepare_state(c).norm_squared(), 1.0, 1e-10);
  }
}

TEST(Circuit, ValidatesIndices) {
  EXPECT_THROW(Circuit(2).h(2), ConfigError);
  EXPECT_THROW(Circuit(2).cnot(1, 1), ConfigError);
  EXPECT_THROW(Circuit(2).measure_z(0, 0).measure_z(1, 0), ConfigError);
  EXPECT_THROW(Circuit(2).h(-1), ConfigError);
  EXPECT_EQ(Circuit(2).measure_z(1, 3).num_classical_slots(), 4);
}

TEST(RunCircuit, BellOnlyCorrelatedKeys) {
  Counts c = run_circuit(bell().measure_all(), 10000, 42);
  EXPECT_EQ(c.total_shots, 10000u);
  EXPECT_EQ(c.count("01") + c.count("10"), 0u);
  EXPECT_EQ(c.count("00") + c.count("11"), 10000u);
}

TEST(RunCircuit, ZeroStateAlwaysZero) {
  Circuit circ(1);
  circ.measure_z(0, 0);
  Counts c = run_circuit(circ, 500, 1);
  EXPECT_EQ(c.count("0"), 500u);
  EXPECT_EQ(c.table.size(), 1u);
}

TEST(RunCircuit, HadamardFrequencyWithinThreeSigma) {
  Circuit circ(1);
  circ.h(0).measure_z(0, 0);
  Counts c = run_circuit(circ, 10000, 42);
  EXPECT_NEAR(c.frequency("0"), 0.5, 3 * std::sqrt(0.25 / 10000));
}

TEST(RunCircuit, KeyPutsSlotZeroRightmost) {
  Circuit circ(2);
  circ.x(0).measure_z(0, 0).measure_z(1, 1);
  Counts c = run_circuit(circ, 10, 3);
  EXPECT_EQ(c.count("01"), 10u);
  EXPECT_EQ(bit_at("01", 0), 1);
  EXPECT_EQ(bit_at("01", 1), 0);
  EXPECT_EQ(c.count_where(0, 1), 10u);
}

TEST(RunCircuit, ZeroShotsRejected) {
  EXPECT_THROW(run_circuit(bell().measure_all(), 0, 1), ArgumentError);
}

TEST(RunCircuit, Deterministic) {
  Circuit circ = psi(0.3).measure_all();
  EXPECT_EQ(run_circuit(circ, 2000, 99).table, run_circuit(circ, 2000, 99).table);
  EXPECT_NE(run_circuit(circ, 2000, 99).table, run_circuit(circ, 2000, 100).table);
}

TEST(RunCircuit, CountsJson) {
  Circuit circ(1);
  circ.x(0).measure_z(0, 0);
  EXPECT_EQ(run_circuit(circ, 3, 0).to_json(), R"({"shots":3,"counts":{"1":3}})");
}

TEST(RunCircuit, ReadoutFlipShrinksCorrelation) {
  RunOptions opts;
  opts.slot_flip_probability = {0.1, 0.0};
  auto p = exact_probabilities(bell().measure_all(), opts);
  EXPECT_NEAR(p["00"], 0.45, 1e-12);
  EXPECT_NEAR(p["01"], 0.05, 1e-12);
}

TEST(ExactProbabilities, BellZZ) {
  auto p = exact_probabilities(bell().measure_all());
  EXPECT_NEAR(p["00"], 0.5, 1e-12);
  EXPECT_NEAR(p["11"], 0.5, 1e-12);
  EXPECT_NEAR(p["01"] + p["10"], 0.0, 1e-12);
}

TEST(ExactProbabilities, PartiallyEntangled) {
  auto p = exact_probabilities(psi(pi / 8).measure_all());
  EXPECT_NEAR(p["00"], std::pow(std::cos(pi / 8), 2), 1e-12);
  EXPECT_NEAR(p["11"], std::pow(std::sin(pi / 8), 2), 1e-12);
}

TEST(ExactProbabilities, DephasingPreservesZMarginals) {
  Circuit c = bell();
  c.non_selective_z(0).measure_all();
  auto p = exact_probabilities(c);
  EXPECT_NEAR(p["00"], 0.5, 1e-12);
  EXPECT_NEAR(p["11"], 0.5, 1e-12);
  double total = 0;
  for (const auto& [k, v] : p) total += v;
  EXPECT_NEAR(total, 1.0, 1e-10);
}

TEST(ExactProbabilities, DephasingKillsXCoherence) {
  // H after dephasing: without dephasing the outcome is deterministic.
  Circuit c(1);
  c.h(0).non_selective_z(0).h(0).measure_z(0, 0);
  auto p = exact_probabilities(c);
  EXPECT_NEAR(p["0"], 0.5, 1e-12);
}

TEST(ExactProbabilities, ResetChannel) {
  Circuit c(2);
  c.h(0).cnot(0, 1).reset(0).measure_all();
  auto p = exact_probabilities(c);
  EXPECT_NEAR(p["00"], 0.5, 1e-12);
  EXPECT_NEAR(p["10"], 0.5, 1e-12);
}

TEST(ExactProbabilities, MidCircuitMeasurementBranches) {
  Circuit c(1);
  c.h(0).measure_z(0, 0).h(0).measure_z(0, 1);
  auto p = exact_probabilities(c);
  for (const char* k : {"00", "01", "10", "11"}) EXPECT_NEAR(p[k], 0.25, 1e-12);
}

// Sampled frequencies of every outcome within 5 sigma of the oracle, over 20 seeds.
TEST(SamplingConsistency, ExperimentCircuitsWithinFiveSigma) {
  std::vector<Circuit> circuits;
  circuits.push_back(bell().measure_all());
  circuits.push_back(psi(0.4).ry(0, 0.3).ry(1, -0.7).measure_all());
  Circuit dephased = bell();
  dephased.non_selective_z(0).reset(0).x(0).measure_all();
  circuits.push_back(dephased);
  Circuit ghz(3);
  ghz.h(0).cnot(0, 1).cnot(1, 2).ry(0, -pi / 2).ry(1, -pi / 2).ry(2, -pi / 2).measure_all();
  circuits.push_back(ghz);

  const uint64_t shots = 10000;
  for (const Circuit& c : circuits) {
    auto exact = exact_probabilities(c);
    for (uint64_t seed = 0; seed < 20; ++seed) {
      Counts counts = run_circuit(c, shots, derive_seed(77, {seed}));
      for (const auto& [key, p] : exact) {
        double sigma = std::sqrt(p * (1 - p) / shots);
        EXPECT_NEAR(counts.frequency(key), p, 5 * sigma + 1e-12) << key << " seed " << seed;
      }
      for (const auto& [key, n] : counts.table) EXPECT_TRUE(exact.count(key)) << key;
    }
  }
}

TEST(SamplingConsistency, NonSelectiveTrajectoriesMatchChannel) {
  Circuit c(1);
  c.ry(0, 1.1).non_selective_z(0).ry(0, 0.6).measure_z(0, 0);
  double p0 = exact_probabilities(c)["0"];
  uint64_t zeros = 0, total = 0;
  for (uint64_t seed = 0; seed < 20; ++seed) {
    Counts counts = run_circuit(c, 5000, seed);
    zeros += counts.count("0");
    total += counts.total_shots;
  }
  EXPECT_NEAR(static_cast<double>(zeros) / total, p0, 5 * std::sqrt(p0 * (1 - p0) / total));
}

TEST(DensityMatrix, ValidatesInvariants) {
  Eigen::MatrixXcd bad(2, 2);
  bad << 0.5, 0.2, 0.0, 0.5;
  EXPECT_THROW(DensityMatrix{bad}.validate(), NumericalError);
  Eigen::MatrixXcd negative(2, 2);
  negative << 1.5, 0, 0, -0.5;
  EXPECT_THROW(DensityMatrix{negative}.validate(), NumericalError);
  EXPECT_NO_THROW(DensityMatrix::maximally_mixed(2).validate());
}

TEST(ReducedDensityMatrix, BellIsMaximallyMixed) {
  const int keep[] = {0};
  DensityMatrix rho = reduced_density_matrix(prepare_state(bell()), keep);
  EXPECT_NEAR(std::abs(rho(0, 0) - 0.5), 0, 1e-12);
  EXPECT_NEAR(std::abs(rho(1, 1) - 0.5), 0, 1e-12);
  EXPECT_NEAR(std::abs(rho(0, 1)), 0, 1e-12);
}

TEST(ReducedDensityMatrix, ProductKeepsPureFactor) {
  const int keep[] = {1};
  DensityMatrix rho = reduced_density_matrix(StateVector(2), keep);
  EXPECT_NEAR(std::abs(rho(0, 0) - 1.0), 0, 1e-12);
  EXPECT_NEAR(std::abs(rho(1, 1)), 0, 1e-12);
}

TEST(ReducedDensityMatrix, PartiallyEntangledDiagonal) {
  const int keep[] = {0};
  DensityMatrix rho = reduced_density_matrix(prepare_state(psi(pi / 6)), keep);
  EXPECT_NEAR(rho(0, 0).real(), 0.75, 1e-12);
  EXPECT_NEAR(rho(1, 1).real(), 0.25, 1e-12);
  EXPECT_NEAR(std::abs(rho(0, 1)), 0, 1e-12);
}

TEST(ReducedDensityMatrix, KeepOrderSetsBitOrder) {
  // |q0 q1 q2> = |1 0 0>; keeping {2, 0} puts q2 in the low bit.
  const int keep[] = {2, 0};
  DensityMatrix rho = reduced_density_matrix(prepare_state(Circuit(3).x(0)), keep);
  EXPECT_NEAR(rho(2, 2).real(), 1.0, 1e-12);
}

TEST(ReducedDensityMatrix, Errors) {
  std::vector<int> empty;
  EXPECT_THROW(reduced_density_matrix(StateVector(2), empty), ArgumentError);
  const int dup[] = {0, 0};
  EXPECT_THROW(reduced_density_matrix(StateVector(2), dup), ArgumentError);
  const int out[] = {2};
  EXPECT_THROW(reduced_density_matrix(StateVector(2), out), ArgumentError);
}

TEST(Measures, PurityAndEntropy) {
  DensityMatrix mixed = DensityMatrix::maximally_mixed(1);
  EXPECT_NEAR(purity(mixed), 0.5, 1e-12);
  EXPECT_NEAR(von_neumann_entropy(mixed), 1.0, 1e-12);

  DensityMatrix zero = DensityMatrix::pure(StateVector(1));
  EXPECT_NEAR(purity(zero), 1.0, 1e-12);
  EXPECT_NEAR(von_neumann_entropy(zero), 0.0, 1e-12);

  Eigen::MatrixXcd d = Eigen::MatrixXcd::Zero(2, 2);
  d(0, 0) = 0.25;
  d(1, 1) = 0.75;
  EXPECT_NEAR(purity(DensityMatrix{d}), 0.625, 1e-12);
  EXPECT_NEAR(von_neumann_entropy(DensityMatrix{d}), 0.8112781244591328639, 1e-12);
}

TEST(Measures, PurityOfReducedSweepStates) {
  const int keep[] = {0};
  for (double t : sweep_thetas()) {
    DensityMatrix rho = reduced_density_matrix(prepare_state(psi(t)), keep);
    double s2 = std::sin(2 * t);
    EXPECT_NEAR(purity(rho), 1 - s2 * s2 / 2, 1e-10) << t;
    double ent = von_neumann_entropy(rho);
    EXPECT_GE(ent, 0.0);
    EXPECT_LE(ent, 1.0 + 1e-12);
  }
}

TEST(Measures, ConcurrenceSweep) {
  EXPECT_NEAR(concurrence(prepare_state(bell())), 1.0, 1e-12);
  EXPECT_NEAR(concurrence(StateVector(2)), 0.0, 1e-12);
  EXPECT_NEAR(concurrence(prepare_state(psi(pi / 8))), 0.7071067811865476, 1e-12);
  for (double t : sweep_thetas()) {
    EXPECT_NEAR(concurrence(prepare_state(psi(t))), std::abs(std::sin(2 * t)), 1e-12);
  }
  EXPECT_THROW(concurrence(StateVector(3)), ArgumentError);
}

TEST(Measures, PauliExpectations) {
  StateVector phi = prepare_state(bell());
  EXPECT_NEAR(expectation(phi, PauliString::parse("ZZ")), 1.0, 1e-12);
  EXPECT_NEAR(expectation(phi, PauliString::parse("XX")), 1.0, 1e-12);
  EXPECT_NEAR(expectation(phi, PauliString::parse("YY")), -1.0, 1e-12);
  EXPECT_NEAR(expectation(phi, PauliString::parse("ZI")), 0.0, 1e-12);
  EXPECT_NEAR(expectation(StateVector(2), PauliString::parse("XX")), 0.0, 1e-12);
  for (double t : sweep_thetas()) {
    StateVector s = prepare_state(psi(t));
    EXPECT_NEAR(expectation(s, PauliString::parse("XX")), std::sin(2 * t), 1e-12);
    EXPECT_NEAR(expectation(DensityMatrix::pure(s), PauliString::parse("XX")), std::sin(2 * t),
                1e-12);
  }
  EXPECT_THROW(PauliString::parse("XQ"), ArgumentError);
  EXPECT_THROW(expectation(phi, PauliString::parse("XXX")), ArgumentError);
}

TEST(Channel, ApplyChannelMatchesExactFinalState) {
  Circuit c = bell();
  c.non_selective_z(0).reset(0);
  DensityMatrix via_state = exact_final_state(c);
  Circuit tail(2);
  tail.non_selective_z(0).reset(0);
  DensityMatrix via_channel = apply_channel(tail, DensityMatrix::pure(prepare_state(bell())));
  EXPECT_NEAR((via_state.matrix() - via_channel.matrix()).norm(), 0.0, 1e-12);
  via_channel.validate();
}

}  // namespace
}  // namespace bellconf::qsim
