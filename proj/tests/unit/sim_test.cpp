// Copyright 2026 The cvqe Authors
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

#include <gtest/gtest.h>

#include <cmath>

#include "cvqe/errors.h"
#include "cvqe/rng.h"
#include "cvqe/sim/circuit.h"
#include "cvqe/sim/gate.h"
#include "cvqe/sim/matrix.h"
#include "cvqe/sim/noise.h"
#include "cvqe/sim/pauli.h"
#include "cvqe/sim/sampling.h"
#include "cvqe/sim/state_vector.h"
#include "test_util.h"

namespace cvqe {
namespace {

constexpr double kInvSqrt2 = 0.70710678118654752440;

Gate random_gate(int n, Rng& rng) {
  const auto kind = static_cast<GateKind>(rng.below(14));
  const double angle = 2 * M_PI * rng.uniform() - M_PI;
  std::vector<int> qubits(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) qubits[static_cast<std::size_t>(i)] = i;
  for (int i = n - 1; i > 0; --i) std::swap(qubits[static_cast<std::size_t>(i)], qubits[rng.below(static_cast<std::uint64_t>(i) + 1)]);
  const int k = arity(kind);
  if (k > n) return Gate::h(qubits[0]);
  return Gate{kind, std::vector<int>(qubits.begin(), qubits.begin() + k), has_angle(kind) ? angle : 0.0};
}

TEST(StateVector, StartsInAllZeros) {
  StateVector s(3);
  EXPECT_EQ(s.dimension(), 8u);
  EXPECT_EQ(s[0], Complex(1.0));
  EXPECT_DOUBLE_EQ(s.norm_squared(), 1.0);
}

TEST(StateVector, RejectsBadSizes) {
  EXPECT_THROW(StateVector(0), std::invalid_argument);
  EXPECT_THROW(StateVector(kMaxQubits + 1), ResourceError);
  EXPECT_THROW(StateVector::from_amplitudes({1.0, 0.0, 0.0}), DimensionError);
  EXPECT_THROW(StateVector::basis(2, 4), std::out_of_range);
}

TEST(StateVector, BitstringsPutQubitZeroFirst) {
  EXPECT_EQ(to_bitstring(1, 3), "001");
  EXPECT_EQ(to_bitstring(4, 3), "100");
  EXPECT_EQ(from_bitstring("1010"), 10u);
  EXPECT_THROW(from_bitstring("10a"), std::invalid_argument);
  StateVector s(3);
  apply_gate(s, Gate::x(0));
  EXPECT_EQ(s[from_bitstring("100")], Complex(1.0));
}

TEST(Gate, XFlipsZero) {
  StateVector s(1);
  apply_gate(s, Gate::x(0));
  EXPECT_EQ(s[0], Complex(0.0));
  EXPECT_EQ(s[1], Complex(1.0));
}

TEST(Gate, HadamardMakesPlus) {
  StateVector s(1);
  apply_gate(s, Gate::h(0));
  EXPECT_NEAR(s[0].real(), kInvSqrt2, 1e-15);
  EXPECT_NEAR(s[1].real(), kInvSqrt2, 1e-15);
}

TEST(Gate, RyHalfPiGivesRealPlusState) {
  // exp(-i pi/4 Y)|0> = (|0> + |1>)/sqrt2; the negative angle gives |->.
  StateVector s(1);
  apply_gate(s, Gate::ry(0, M_PI / 2));
  EXPECT_NEAR(s[0].real(), kInvSqrt2, 1e-15);
  EXPECT_NEAR(s[1].real(), kInvSqrt2, 1e-15);
  EXPECT_NEAR(s[0].imag(), 0.0, 1e-15);
  StateVector m(1);
  apply_gate(m, Gate::ry(0, -M_PI / 2));
  EXPECT_NEAR(m[1].real(), -kInvSqrt2, 1e-15);
}

TEST(Gate, RotationMatricesFollowHalfAngleConvention) {
  const double a = 0.7;
  const CMatrix rz = gate_matrix(Gate::rz(0, a));
  EXPECT_NEAR(std::abs(rz(0, 0) - std::exp(Complex(0, -a / 2))), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(rz(1, 1) - std::exp(Complex(0, a / 2))), 0.0, 1e-15);
  const CMatrix rx = gate_matrix(Gate::rx(0, a));
  EXPECT_NEAR(std::abs(rx(0, 1) - Complex(0, -std::sin(a / 2))), 0.0, 1e-15);
}

TEST(Gate, ControlledGatesActOnlyWhenControlIsSet) {
  for (const Gate& g : {Gate::cnot(0, 1), Gate::crx(0, 1, 0.3), Gate::cry(0, 1, 0.3), Gate::crz(0, 1, 0.3),
                        Gate::ch(0, 1), Gate::cz(0, 1)}) {
    const CMatrix m = gate_matrix(g);
    for (int r = 0; r < 2; ++r)
      for (int c = 0; c < 4; ++c) EXPECT_EQ(m(r, c), r == c ? Complex(1.0) : Complex(0.0)) << to_string(g.kind);
  }
}

TEST(Gate, CswapExchangesTargetsUnderControl) {
  StateVector s = StateVector::basis(3, from_bitstring("110"));
  apply_gate(s, Gate::cswap(0, 1, 2));
  EXPECT_EQ(s[from_bitstring("101")], Complex(1.0));
  StateVector t = StateVector::basis(3, from_bitstring("010"));
  apply_gate(t, Gate::cswap(0, 1, 2));
  EXPECT_EQ(t[from_bitstring("010")], Complex(1.0));
}

TEST(Gate, EveryKindIsUnitary) {
  Rng rng(5);
  for (int k = 0; k < 14; ++k) {
    const auto kind = static_cast<GateKind>(k);
    std::vector<int> targets;
    for (int i = 0; i < arity(kind); ++i) targets.push_back(i);
    const CMatrix m = gate_matrix(Gate{kind, targets, rng.uniform() * 6});
    EXPECT_LT(unitarity_defect(m), 1e-12) << to_string(kind);
  }
}

TEST(Gate, FastPathsAgreeWithDenseMatrices) {
  Rng rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const StateVector s = testing::random_state(4, rng);
    const Gate g = random_gate(4, rng);
    StateVector fast = s, dense = s;
    apply_gate(fast, g);
    apply_matrix(dense, gate_matrix(g), g.targets);
    for (std::size_t i = 0; i < s.dimension(); ++i) EXPECT_NEAR(std::abs(fast[i] - dense[i]), 0.0, 1e-13);
  }
}

TEST(Gate, RejectsBadTargets) {
  StateVector s(2);
  EXPECT_THROW(apply_gate(s, Gate::x(2)), std::out_of_range);
  EXPECT_THROW(apply_gate(s, Gate::cnot(1, 1)), ValidationError);
  EXPECT_THROW(apply_gate(s, Gate{GateKind::kCNOT, {0}}), ValidationError);
  Circuit c(2);
  EXPECT_THROW(c.add(Gate::h(-1)), std::out_of_range);
}

TEST(Circuit, RandomCircuitsPreserveNorm) {
  Rng rng(2024);
  for (int trial = 0; trial < 1000; ++trial) {
    const int n = 1 + static_cast<int>(rng.below(6));
    Circuit c(n);
    const int gates = 1 + static_cast<int>(rng.below(50));
    for (int g = 0; g < gates; ++g) c.add(random_gate(n, rng));
    const StateVector out = run_circuit(testing::random_state(n, rng), c);
    ASSERT_NEAR(out.norm_squared(), 1.0, 1e-9);
  }
}

TEST(Circuit, UnitaryMatchesRunCircuit) {
  Rng rng(3);
  Circuit c(3);
  for (int g = 0; g < 20; ++g) c.add(random_gate(3, rng));
  const CMatrix u = circuit_unitary(c);
  EXPECT_LT(unitarity_defect(u), 1e-12);
  const StateVector in = testing::random_state(3, rng);
  const StateVector out = run_circuit(in, c);
  const auto expected = matvec(u, in.amplitudes());
  for (std::size_t i = 0; i < 8; ++i) EXPECT_NEAR(std::abs(out[i] - expected[i]), 0.0, 1e-12);
}

TEST(RunCircuit, EmptyCircuitIsIdentity) {
  Rng rng(1);
  const StateVector s = testing::random_state(3, rng);
  const StateVector out = run_circuit(s, Circuit(3));
  for (std::size_t i = 0; i < s.dimension(); ++i) EXPECT_EQ(out[i], s[i]);
}

TEST(RunCircuit, RejectsQubitMismatch) { EXPECT_THROW(run_circuit(StateVector(2), Circuit(3)), DimensionError); }

TEST(RunCircuit, ZeroNoiseModelMatchesNoiselessPath) {
  Rng rng(9);
  Circuit c(3);
  for (int g = 0; g < 30; ++g) c.add(random_gate(3, rng));
  const StateVector in = testing::random_state(3, rng);
  NoiseModel zero;
  zero.readout = {{0.0, 0.0}};
  const StateVector a = run_circuit(in, c), b = run_circuit(in, c, zero, 17);
  for (std::size_t i = 0; i < a.dimension(); ++i) EXPECT_EQ(a[i], b[i]);
  EXPECT_EQ(sample_circuit(in, c, zero, 1000, 5), sample_counts(a, 1000, {}, 5));
}

TEST(RunCircuit, ForcedTwoQubitNoiseIsReproducible) {
  Circuit c(2);
  c.add(Gate::h(0)).add(Gate::cnot(0, 1)).add(Gate::cnot(1, 0));
  NoiseModel noise;
  noise.p2 = 1.0;
  const StateVector a = run_circuit(StateVector(2), c, noise, 42);
  const StateVector b = run_circuit(StateVector(2), c, noise, 42);
  for (std::size_t i = 0; i < 4; ++i) EXPECT_EQ(a[i], b[i]);
  // Some seed must produce a trajectory different from the ideal one.
  const StateVector ideal = run_circuit(StateVector(2), c);
  bool differs = false;
  for (std::uint64_t seed = 0; seed < 20 && !differs; ++seed)
    differs = fidelity(run_circuit(StateVector(2), c, noise, seed), ideal) < 1 - 1e-9;
  EXPECT_TRUE(differs);
}

TEST(RunCircuit, SingleQubitNoiseRateMatchesP1) {
  // X followed by a depolarizing hit: 2 of 3 Paulis flip |1> back to |0>.
  Circuit c(1);
  c.add(Gate::x(0));
  NoiseModel noise;
  noise.p1 = 0.3;
  const std::uint64_t shots = 100000;
  const ShotCounts counts = sample_circuit(StateVector(1), c, noise, shots, 8);
  const double p0 = 0.3 * 2.0 / 3.0;
  EXPECT_NEAR(static_cast<double>(counts.count("0")) / shots, p0, 5 * testing::binomial_sigma(p0, shots));
}

TEST(RunCircuit, RejectsInvalidProbabilities) {
  NoiseModel bad;
  bad.p2 = 1.5;
  EXPECT_THROW(run_circuit(StateVector(1), Circuit(1), bad), ValidationError);
  bad = {};
  bad.readout = {{-0.1, 0.0}};
  EXPECT_THROW(bad.validate(), ValidationError);
}

TEST(Sampling, DeterministicStateGivesOneOutcome) {
  StateVector s(1);
  apply_gate(s, Gate::x(0));
  const ShotCounts c = sample_counts(s, 100, {}, 3);
  EXPECT_EQ(c.to_map(), (std::map<std::string, std::uint64_t>{{"1", 100}}));
}

TEST(Sampling, PlusStateSplitsEvenly) {
  StateVector s(1);
  apply_gate(s, Gate::h(0));
  const std::uint64_t shots = 100000;
  const ShotCounts c = sample_counts(s, shots, {}, 77);
  const double sigma = std::sqrt(shots * 0.25);
  EXPECT_NEAR(static_cast<double>(c.count("0")), 50000.0, 5 * sigma);
  EXPECT_NEAR(static_cast<double>(c.count("1")), 50000.0, 5 * sigma);
}

TEST(Sampling, ReadoutFlipRate) {
  const std::uint64_t shots = 100000;
  const std::vector<ReadoutError> readout = {{0.3, 0.0}};
  const ShotCounts c = sample_counts(StateVector(1), shots, readout, 12);
  EXPECT_NEAR(static_cast<double>(c.count("1")) / shots, 0.3, 5 * testing::binomial_sigma(0.3, shots));
}

TEST(Sampling, RandomStatesMatchBornRule) {
  Rng rng(31);
  const std::uint64_t shots = 1000000;
  for (int trial = 0; trial < 5; ++trial) {
    const StateVector s = testing::random_state(2, rng);
    const auto probs = s.probabilities();
    const ShotCounts c = sample_counts(s, shots, {}, rng.next_u64());
    for (std::uint64_t o = 0; o < 4; ++o)
      EXPECT_NEAR(static_cast<double>(c.count(o)) / shots, probs[o], 5 * testing::binomial_sigma(probs[o], shots) + 1e-12);
  }
}

TEST(Sampling, SameSeedSameCounts) {
  Rng rng(4);
  const StateVector s = testing::random_state(3, rng);
  Circuit c(3);
  for (int g = 0; g < 10; ++g) c.add(random_gate(3, rng));
  NoiseModel noise;
  noise.p1 = 0.05;
  noise.p2 = 0.1;
  noise.readout = {{0.02, 0.05}};
  EXPECT_EQ(sample_circuit(s, c, noise, 5000, 99), sample_circuit(s, c, noise, 5000, 99));
  EXPECT_NE(sample_circuit(s, c, noise, 5000, 99), sample_circuit(s, c, noise, 5000, 100));
}

TEST(Sampling, NoisyTrajectoriesMatchExactChannel) {
  // One CNOT on |+0> with p2 = 1: the output averages over the 15 Pauli
  // strings, which spreads the Bell pair over all four outcomes.
  Circuit c(2);
  c.add(Gate::h(0)).add(Gate::cnot(0, 1));
  NoiseModel noise;
  noise.p2 = 1.0;
  const std::uint64_t shots = 200000;
  const ShotCounts counts = sample_circuit(StateVector(2), c, noise, shots, 6);
  // Of the 15 strings, those with X or Y on exactly one qubit (8) map
  // 00/11 to 01/10.
  const double p_odd = 8.0 / 15.0 / 2.0;
  for (const char* o : {"01", "10"})
    EXPECT_NEAR(static_cast<double>(counts.count(o)) / shots, p_odd, 5 * testing::binomial_sigma(p_odd, shots));
}

TEST(Sampling, RejectsZeroShots) {
  EXPECT_THROW(sample_counts(StateVector(1), 0), std::invalid_argument);
  NoiseModel noise;
  noise.p1 = 0.1;
  EXPECT_THROW(sample_circuit(StateVector(1), Circuit(1), noise, 0, 1), std::invalid_argument);
}

TEST(Sampling, ReadoutChannelIsColumnStochastic) {
  const std::vector<double> p = {0.1, 0.2, 0.3, 0.4};
  const std::vector<ReadoutError> r = {{0.1, 0.2}, {0.05, 0.3}};
  const auto q = apply_readout_channel(p, 2, r);
  double sum = 0.0;
  for (double x : q) sum += x;
  EXPECT_NEAR(sum, 1.0, 1e-15);
  // |00> reads 00 only if neither bit flips.
  const auto z = apply_readout_channel(std::vector<double>{1, 0, 0, 0}, 2, r);
  EXPECT_NEAR(z[0], 0.9 * 0.95, 1e-15);
  EXPECT_NEAR(z[3], 0.1 * 0.05, 1e-15);
}

TEST(ShotCounts, MapRoundTripAndTotals) {
  const ShotCounts c = ShotCounts::from_map(2, {{"01", 3}, {"11", 7}});
  EXPECT_EQ(c.total(), 10u);
  EXPECT_EQ(c.count("01"), 3u);
  EXPECT_EQ(c.to_map().size(), 2u);
  EXPECT_THROW(ShotCounts::from_map(2, {{"1", 1}}), std::invalid_argument);
  EXPECT_THROW(ShotCounts(2).frequencies(), std::invalid_argument);
}

TEST(MeasureQubit, CollapsesState) {
  StateVector s(2);
  apply_gate(s, Gate::h(0));
  apply_gate(s, Gate::cnot(0, 1));
  Rng rng(5);
  const int m = measure_qubit(s, 0, rng);
  EXPECT_NEAR(probability_of_one(s, 1), m, 1e-15);
  EXPECT_NEAR(s.norm_squared(), 1.0, 1e-15);
}

TEST(Expectation, PauliBasics) {
  PauliSum z(1);
  z.add(1.0, "Z");
  EXPECT_DOUBLE_EQ(expectation(StateVector(1), z), 1.0);
  PauliSum x(1);
  x.add(1.0, "X");
  StateVector plus(1);
  apply_gate(plus, Gate::h(0));
  EXPECT_NEAR(expectation(plus, x), 1.0, 1e-15);
}

TEST(Expectation, DenseAndPauliAgree) {
  Rng rng(8);
  PauliSum h(3);
  h.add(0.5, "XYZ").add(-1.2, "ZZI").add(0.3, "IXX").add(2.0, "III").add(0.7, "YIY");
  const CMatrix dense = to_dense(h);
  EXPECT_TRUE(is_hermitian(dense));
  for (int trial = 0; trial < 20; ++trial) {
    const StateVector s = testing::random_state(3, rng);
    EXPECT_NEAR(expectation(s, h), expectation(s, dense), 1e-12);
  }
}

TEST(Expectation, CompressedGroundStateEnergy) {
  // H^C of the 2x1 lattice at U = 2, t = 1 and its closed-form ground vector.
  CMatrix h(4, 4);
  const double entries[4][4] = {{2, -1, -1, 0}, {-1, 0, 0, -1}, {-1, 0, 0, -1}, {0, -1, -1, 2}};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) h(i, j) = entries[i][j];
  const double beta = 2 + std::sqrt(20.0), norm = std::sqrt(16 + beta * beta);
  const double a = 4 / (norm * std::sqrt(2.0)), b = beta / (norm * std::sqrt(2.0));
  const StateVector g = StateVector::from_amplitudes({a, b, b, a});
  EXPECT_NEAR(expectation(g, h), -1.23607, 5e-6);
}

TEST(Expectation, RejectsNonHermitianAndMismatch) {
  CMatrix m(2, 2);
  m(0, 1) = 1.0;
  EXPECT_THROW(expectation(StateVector(1), m), ValidationError);
  EXPECT_THROW(expectation(StateVector(2), CMatrix::identity(2)), DimensionError);
  PauliSum h(2);
  h.add(1.0, "ZZ");
  EXPECT_THROW(expectation(StateVector(1), h), DimensionError);
  EXPECT_THROW(h.add(1.0, "ZQ"), ValidationError);
}

TEST(Rng, DeriveSeedSeparatesStreams) {
  EXPECT_NE(derive_seed(1, 0), derive_seed(1, 1));
  EXPECT_NE(derive_seed(1, 0), derive_seed(2, 0));
  EXPECT_EQ(derive_seed(7, 3), derive_seed(7, 3));
  Rng a(1), b(1);
  for (int i = 0; i < 100; ++i) EXPECT_EQ(a.next_u64(), b.next_u64());
}

TEST(Rng, BelowIsInRangeAndCoversIt) {
  Rng rng(3);
  std::vector<int> seen(7, 0);
  for (int i = 0; i < 7000; ++i) {
    const auto v = rng.below(7);
    ASSERT_LT(v, 7u);
    ++seen[v];
  }
  for (int c : seen) EXPECT_GT(c, 800);
}

}  // namespace
}  // namespace cvqe
