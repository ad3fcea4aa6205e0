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

#include <algorithm>
#include <cmath>
#include <set>

#include "cvqe/compressed/analytic.h"
#include "cvqe/compressed/compressed_hamiltonian.h"
#include "cvqe/compressed/estimator.h"
#include "cvqe/compressed/evolution.h"
#include "cvqe/compressed/matching.h"
#include "cvqe/compressed/subspace_hadamard.h"
#include "cvqe/errors.h"
#include "cvqe/hubbard/eigensolver.h"
#include "cvqe/hubbard/jordan_wigner.h"
#include "cvqe/hubbard/sector.h"
#include "cvqe/sim/pauli.h"
#include "test_util.h"

namespace cvqe {
namespace {

HubbardSpec spec_of(const std::string& lattice, double u, double t = 1.0) { return {lattice_preset(lattice), t, u, {}}; }

// Random state supported on register values 0..n-1 of each of `regs` registers.
StateVector random_register_state(int n, int regs, Rng& rng) {
  const int p = register_qubits(n);
  const std::size_t side = std::size_t{1} << p;
  std::size_t dim = 1, valid = 1;
  for (int r = 0; r < regs; ++r) {
    dim *= side;
    valid *= static_cast<std::size_t>(n);
  }
  const auto a = testing::random_amplitudes(valid, rng);
  std::vector<Complex> amps(dim);
  for (std::size_t k = 0; k < valid; ++k) {
    std::size_t rest = k, idx = 0;
    for (int r = 0; r < regs; ++r) {
      idx = idx * side + rest % static_cast<std::size_t>(n);
      rest /= static_cast<std::size_t>(n);
    }
    amps[idx] = a[k];
  }
  return StateVector::from_amplitudes(amps);
}

// <psi| H_M (x) I |psi> on register `reg` of a two-register state.
double exact_matching_expectation(const StateVector& s, int n, const Matching& m, int reg) {
  const RMatrix hm = matching_operator(n, m);
  const int p = register_qubits(n);
  const std::size_t side = std::size_t{1} << p;
  double acc = 0.0;
  for (std::size_t i = 0; i < side; ++i)
    for (std::size_t j = 0; j < side; ++j)
      for (std::size_t k = 0; k < static_cast<std::size_t>(n); ++k) {
        if (i >= static_cast<std::size_t>(n) || j >= static_cast<std::size_t>(n)) continue;
        // reg 0: <i j| H (x) I |k j>; reg 1: <i j| I (x) H |i k>.
        const std::size_t row = i * side + j;
        const std::size_t col = reg == 0 ? k * side + j : i * side + k;
        const double h = reg == 0 ? hm(i, k) : hm(j, k);
        acc += (std::conj(s[row]) * h * s[col]).real();
      }
  return acc;
}

TEST(CompressedHopping, TwoByOneIsPauliX) {
  const RMatrix h = compressed_hopping_matrix(lattice_preset("2x1"));
  EXPECT_EQ(h(0, 0), 0.0);
  EXPECT_EQ(h(0, 1), 1.0);
  EXPECT_EQ(h(1, 0), 1.0);
  EXPECT_EQ(h(1, 1), 0.0);
}

TEST(CompressedHopping, EmptyGraphIsZero) {
  const RMatrix h = compressed_hopping_matrix(Graph{3, {}});
  for (double x : h.data()) EXPECT_EQ(x, 0.0);
}

TEST(CompressedHopping, MatchesBruteForceProjection) {
  // Project the dense single-spin JW hopping operator onto the weight-1 states.
  for (const char* name : {"line:3", "line:4", "grid:2x2", "grid:3x2"}) {
    const Graph g = lattice_preset(name);
    const int n = g.n;
    PauliSum hop(n);
    for (const Edge& e : g.edges) hop.add(jordan_wigner_hopping(n, e.i - 1, e.j - 1));
    const CMatrix dense = dense_hamiltonian(hop);
    const RMatrix h = compressed_hopping_matrix(g);
    for (int k = 0; k < n; ++k)
      for (int l = 0; l < n; ++l) {
        const std::uint64_t ek = std::uint64_t{1} << (n - 1 - k), el = std::uint64_t{1} << (n - 1 - l);
        EXPECT_NEAR(h(static_cast<std::size_t>(k), static_cast<std::size_t>(l)), dense(ek, el).real(), 1e-15) << name;
        EXPECT_NEAR(dense(ek, el).imag(), 0.0, 1e-15);
      }
    // Off-diagonal pattern is the adjacency matrix.
    for (const Edge& e : g.edges) EXPECT_EQ(h(static_cast<std::size_t>(e.i - 1), static_cast<std::size_t>(e.j - 1)), 1.0);
  }
}

TEST(CompressedHamiltonian, TwoByOneMatrix) {
  const CMatrix h = compressed_hamiltonian(spec_of("2x1", 2.0)).dense();
  const double expected[4][4] = {{2, -1, -1, 0}, {-1, 0, 0, -1}, {-1, 0, 0, -1}, {0, -1, -1, 2}};
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) EXPECT_EQ(h(i, j), Complex(expected[i][j]));
}

TEST(CompressedHamiltonian, OnsiteBlockFiresOnlyOnEqualPositions) {
  const CMatrix os = compressed_hamiltonian(spec_of("line:3", 1.0)).onsite_projector();
  for (std::size_t a = 0; a < 9; ++a)
    for (std::size_t b = 0; b < 9; ++b) {
      const bool fire = a == b && a / 3 == a % 3;
      EXPECT_EQ(os(a, b), Complex(fire ? 1.0 : 0.0));
    }
}

TEST(CompressedHamiltonian, ZeroUHasOnlyHopping) {
  const CompressedHamiltonian c = compressed_hamiltonian(spec_of("grid:2x2", 0.0));
  const CMatrix h = c.dense();
  const CMatrix hop = to_complex(c.hop());
  const CMatrix id = CMatrix::identity(4);
  CMatrix expected = kron(hop, id);
  const CMatrix right = kron(id, hop);
  for (std::size_t i = 0; i < expected.data().size(); ++i) expected.data()[i] = -(expected.data()[i] + right.data()[i]);
  EXPECT_LT(distance(h, expected), 1e-15);
}

TEST(CompressedHamiltonian, WeightsAreDiagonalOnEachRegister) {
  HubbardSpec spec = spec_of("line:3", 1.0);
  spec.weights = {0.5, -1.0, 2.0};
  const CMatrix h = compressed_hamiltonian(spec).dense();
  const CMatrix h0 = compressed_hamiltonian(spec_of("line:3", 1.0)).dense();
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j)
      EXPECT_NEAR((h(i * 3 + j, i * 3 + j) - h0(i * 3 + j, i * 3 + j)).real(), spec.weights[i] + spec.weights[j], 1e-15);
}

TEST(CompressedHamiltonian, RegisterOperatorEmbedsWithZeroPadding) {
  const CompressedHamiltonian c = compressed_hamiltonian(spec_of("line:3", 2.0));
  const CMatrix r = c.register_operator();
  ASSERT_EQ(r.rows(), 16u);
  const CMatrix d = c.dense();
  for (std::size_t a = 0; a < 16; ++a)
    for (std::size_t b = 0; b < 16; ++b) {
      const std::size_t ia = a / 4, ja = a % 4, ib = b / 4, jb = b % 4;
      const bool inside = ia < 3 && ja < 3 && ib < 3 && jb < 3;
      const Complex want = inside ? d(ia * 3 + ja, ib * 3 + jb) : Complex(0.0);
      EXPECT_EQ(r(a, b), want);
    }
}

TEST(CompressedHamiltonian, SpectrumEqualsJordanWignerSector) {
  for (const char* name : {"2x1", "line:3", "line:4", "grid:2x2"}) {
    for (double u : {0.0, 2.0, 4.0}) {
      const HubbardSpec spec = spec_of(name, u);
      const auto compressed = eigenvalues(compressed_hamiltonian(spec).dense());
      const CMatrix jw = dense_hamiltonian(jordan_wigner_hamiltonian(spec));
      const auto sector = eigenvalues(sector_restrict(jw, spec.n(), 1, 1).matrix);
      ASSERT_EQ(compressed.size(), sector.size());
      for (std::size_t k = 0; k < sector.size(); ++k) EXPECT_NEAR(compressed[k], sector[k], 1e-9) << name << " U=" << u;
    }
  }
}

TEST(CompressedHamiltonian, TwoRegisterEmbeddingRoundTrips) {
  Rng rng(2);
  const auto amps = testing::random_amplitudes(9, rng);
  const StateVector s = embed_two_registers(amps, 3);
  EXPECT_EQ(s.num_qubits(), 4);
  const auto back = extract_two_registers(s, 3);
  for (std::size_t i = 0; i < 9; ++i) EXPECT_EQ(back[i], amps[i]);
  EXPECT_EQ(register_qubits(1), 1);
  EXPECT_EQ(register_qubits(2), 1);
  EXPECT_EQ(register_qubits(5), 3);
}

TEST(Analytic, KnownPoints) {
  const GroundState2x1 g2 = analytic_ground_2x1(2.0, 1.0);
  EXPECT_NEAR(g2.energy, -1.23607, 5e-6);
  EXPECT_NEAR(g2.optimal_phi, 0.46365, 5e-6);
  EXPECT_NEAR(g2.optimal_theta, M_PI / 4, 1e-15);
  EXPECT_NEAR(g2.double_occupancy, 0.13820, 5e-6);
  const GroundState2x1 g0 = analytic_ground_2x1(0.0, 1.0);
  EXPECT_DOUBLE_EQ(g0.energy, -2.0);
  EXPECT_DOUBLE_EQ(g0.double_occupancy, 0.25);
  EXPECT_DOUBLE_EQ(g0.beta, 4.0);
  const GroundState2x1 g4 = analytic_ground_2x1(4.0, 1.0);
  EXPECT_NEAR(g4.energy, -0.82843, 5e-6);
  EXPECT_NEAR(g4.double_occupancy, 0.07322, 5e-6);
  EXPECT_THROW(analytic_ground_2x1(1.0, 0.0), std::invalid_argument);
}

TEST(Analytic, ClosedFormIsAnEigenvectorOverAGrid) {
  for (int k = 0; k < 40; ++k) {
    for (double t : {0.5, 1.0, 2.0}) {
      const double u = 0.1 * k;
      const GroundState2x1 g = analytic_ground_2x1(u, t);
      EXPECT_NEAR(g.alpha * g.alpha + g.beta * g.beta, g.normalization * g.normalization, 1e-10);
      const CMatrix h = compressed_hamiltonian(spec_of("2x1", u, t)).dense();
      const auto a = g.amplitudes();
      const std::vector<Complex> v(a.begin(), a.end());
      EXPECT_LT(eigen_residual(h, v, g.energy), 1e-10);
      EXPECT_NEAR(ground_state_dense(h).energy, u / 2 - std::sqrt(u * u / 4 + 4 * t * t), 1e-10);
    }
  }
}

TEST(Analytic, DoubleOccupancyDecreasesWithU) {
  double prev = 1.0;
  for (int k = 0; k <= 40; ++k) {
    const double d = analytic_ground_2x1(0.1 * k, 1.0).double_occupancy;
    EXPECT_LT(d, prev);
    EXPECT_GT(d, 0.0);
    EXPECT_LE(d, 0.25);
    prev = d;
  }
}

TEST(Matching, Examples) {
  const auto line = matching_decomposition(lattice_preset("line:4"));
  ASSERT_EQ(line.size(), 2u);
  EXPECT_EQ(line[0].edges, (std::vector<Edge>{{1, 2}, {3, 4}}));
  EXPECT_EQ(line[1].edges, (std::vector<Edge>{{2, 3}}));
  const auto square = matching_decomposition(lattice_preset("grid:2x2"));
  ASSERT_EQ(square.size(), 2u);
  for (const Matching& m : square) EXPECT_EQ(m.edges.size(), 2u);
  EXPECT_EQ(matching_decomposition(lattice_preset("2x1")).size(), 1u);
}

TEST(Matching, DecompositionPartitionsEdges) {
  for (const char* name : {"2x1", "line:5", "grid:2x2", "grid:3x3", "grid:4x2"}) {
    const Graph g = lattice_preset(name);
    const auto ms = matching_decomposition(g);
    std::multiset<Edge> seen;
    for (const Matching& m : ms) {
      EXPECT_TRUE(is_matching(m));
      seen.insert(m.edges.begin(), m.edges.end());
    }
    EXPECT_EQ(seen, std::multiset<Edge>(g.edges.begin(), g.edges.end())) << name;
    EXPECT_LE(static_cast<int>(ms.size()), 2 * g.max_degree() - 1);
  }
  EXPECT_FALSE(is_matching(Matching{{{1, 2}, {2, 3}}}));
}

TEST(Matching, OperatorSquaresToProjector) {
  const Matching m{{{1, 3}, {2, 4}}};
  const RMatrix h = matching_operator(5, m);
  const CMatrix c = to_complex(h);
  const CMatrix sq = matmul(c, c);
  for (std::size_t i = 0; i < 5; ++i)
    for (std::size_t j = 0; j < 5; ++j) EXPECT_EQ(sq(i, j), Complex(i == j && i < 4 ? 1.0 : 0.0));
  const auto partners = m.partners(5);
  EXPECT_EQ(partners[1], 3);
  EXPECT_EQ(partners[5], 5);
  EXPECT_TRUE(m.covers(4));
  EXPECT_FALSE(m.covers(5));
}

TEST(Evolution, MatchingClosedFormEqualsMatrixExponential) {
  // exp(i tau H_M) from the eigendecomposition of H_M.
  Rng rng(5);
  const int n = 4;
  const Matching m{{{1, 2}, {3, 4}}};
  const double tau = 0.37;
  const auto amps0 = testing::random_amplitudes(16, rng);
  std::vector<Complex> closed = amps0;
  apply_matching_evolution(closed, n, 1, m, tau);
  const EigenDecomposition d = eigh(to_complex(matching_operator(n, m)));
  CMatrix u(4, 4);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j)
      for (std::size_t k = 0; k < 4; ++k)
        u(i, j) += d.vectors(i, k) * std::exp(Complex(0, tau * d.values[k])) * std::conj(d.vectors(j, k));
  const CMatrix full = kron(CMatrix::identity(4), u);
  const auto expected = matvec(full, amps0);
  for (std::size_t i = 0; i < 16; ++i) EXPECT_NEAR(std::abs(closed[i] - expected[i]), 0.0, 1e-13);
}

TEST(Evolution, OnsitePhasesDiagonal) {
  std::vector<Complex> a(9, Complex(1.0 / 3.0));
  apply_onsite_evolution(a, 3, 0.5);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) {
      const Complex want = i == j ? std::exp(Complex(0, 0.5)) / 3.0 : Complex(1.0 / 3.0);
      EXPECT_NEAR(std::abs(a[i * 3 + j] - want), 0.0, 1e-15);
    }
}

TEST(SubspaceHadamard, AcceptanceIsExactlyHalf) {
  Rng rng(17);
  for (int n : {2, 3, 4}) {
    const Graph g = n == 2 ? lattice_preset("2x1") : n == 3 ? lattice_preset("line:3") : lattice_preset("grid:2x2");
    for (const Matching& m : matching_decomposition(g)) {
      for (int trial = 0; trial < 50; ++trial) {
        const StateVector s = random_register_state(n, 1, rng);
        EXPECT_NEAR(acceptance_probability(prepare_subspace_hadamard(s, n, m)), 0.5, 1e-12);
      }
    }
  }
}

TEST(SubspaceHadamard, MatchedBasisStateResidual) {
  // |i> with (i, j) in M, i < j: residual (|i>|j> + |j>|i>)/sqrt2.
  const int n = 4;
  const Matching m{{{2, 3}}};
  const StateVector in = StateVector::basis(2, 1);  // site 2
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const SubspaceHadamardResult r = subspace_hadamard(in, n, m, seed);
    if (!r.accepted) continue;
    // Layout: target (2 qubits), partner (2 qubits), ancilla.
    const std::uint64_t ij = (1U << 3) | (2U << 1), ji = (2U << 3) | (1U << 1);
    EXPECT_NEAR(std::abs(r.state[ij] - Complex(M_SQRT1_2)), 0.0, 1e-12);
    EXPECT_NEAR(std::abs(r.state[ji] - Complex(M_SQRT1_2)), 0.0, 1e-12);
    return;
  }
  FAIL() << "no accepted trial in 50 seeds";
}

TEST(SubspaceHadamard, EmpiricalAcceptanceRate) {
  Rng rng(4);
  const StateVector s = random_register_state(3, 1, rng);
  const Matching m{{{1, 2}}};
  int accepted = 0;
  const int trials = 10000;
  for (int k = 0; k < trials; ++k) accepted += subspace_hadamard(s, 3, m, static_cast<std::uint64_t>(k)).accepted;
  EXPECT_NEAR(accepted / static_cast<double>(trials), 0.5, 5 * testing::binomial_sigma(0.5, trials));
}

TEST(SubspaceHadamard, OutcomesEncodeMatchingEigenvalues) {
  // Eigenvalue-weighted accepted probability mass, divided by the acceptance
  // probability, is exactly <H_M>.
  Rng rng(23);
  for (int n : {2, 3, 4}) {
    const Graph g = n == 3 ? lattice_preset("line:3") : n == 2 ? lattice_preset("2x1") : lattice_preset("line:4");
    const int p = register_qubits(n);
    for (const Matching& m : matching_decomposition(g)) {
      for (int trial = 0; trial < 10; ++trial) {
        const StateVector s = random_register_state(n, 1, rng);
        const StateVector prepared = prepare_subspace_hadamard(s, n, m);
        double acc = 0.0;
        const auto probs = prepared.probabilities();
        for (std::uint64_t o = 0; o < probs.size(); ++o) {
          if (o & 1U) continue;
          const std::uint64_t target = o >> (p + 1), partner = (o >> 1) & ((1U << p) - 1);
          acc += probs[o] * matching_eigenvalue(target, partner);
        }
        const RMatrix hm = matching_operator(n, m);
        double exact = 0.0;
        for (int i = 0; i < n; ++i)
          for (int j = 0; j < n; ++j) exact += (std::conj(s[static_cast<std::size_t>(i)]) * hm(i, j) * s[static_cast<std::size_t>(j)]).real();
        EXPECT_NEAR(acc / 0.5, exact, 1e-12);
      }
    }
  }
}

TEST(SubspaceHadamard, UnmatchedSitePassesThrough) {
  const Matching m{{{1, 2}}};
  const StateVector in = StateVector::basis(2, 2);  // site 3, unmatched
  const StateVector prepared = prepare_subspace_hadamard(in, 3, m);
  // Target 2, partner 2; ancilla in |+> after H, so both ancilla values carry 1/2.
  const std::uint64_t base = (2U << 3) | (2U << 1);
  EXPECT_NEAR(std::norm(prepared[base]), 0.5, 1e-12);
  EXPECT_NEAR(std::norm(prepared[base | 1U]), 0.5, 1e-12);
}

TEST(SubspaceHadamard, RejectsSupportOutsideSites) {
  const StateVector bad = StateVector::basis(2, 3);  // value 3 >= n
  EXPECT_THROW(prepare_subspace_hadamard(bad, 3, Matching{{{1, 2}}}), ValidationError);
}

TEST(Estimator, BothOnSiteOne) {
  const HubbardSpec spec = spec_of("2x1", 2.0);
  const StateVector s = StateVector::basis(2, 0);  // |1>|1>
  const CompressedEnergyReport r = estimate_compressed_energy(s, spec, 30000, 3);
  EXPECT_DOUBLE_EQ(r.energy.onsite_component, 1.0);
  EXPECT_EQ(r.settings, 3);
  // Each H_M setting sees a uniformly random +-1 after acceptance.
  const double sigma = std::sqrt(2.0 / (r.accepted_shots / 2.0));
  EXPECT_NEAR(r.energy.hopping_component, 0.0, 5 * sigma);
  EXPECT_NEAR(r.energy.value, 2.0 - spec.t * r.energy.hopping_component, 1e-12);
}

TEST(Estimator, GroundStateWithinThreeSigma) {
  const HubbardSpec spec = spec_of("2x1", 2.0);
  const GroundState2x1 g = analytic_ground_2x1(2.0, 1.0);
  const auto a = g.amplitudes();
  const StateVector s = StateVector::from_amplitudes({a[0], a[1], a[2], a[3]});
  const std::uint64_t shots = 1000000;
  const CompressedEnergyReport r = estimate_compressed_energy(s, spec, shots, 11);
  // Variance bound: U^2 P(1-P)/N_0 + t^2 sum_M Var/N_M with Var <= 1 and N_M ~ shots/6 accepted.
  const double n0 = shots / 3.0, nm = shots / 6.0;
  const double p = 2 * g.double_occupancy;
  const double sigma = std::sqrt(4 * p * (1 - p) / n0 + 2.0 / nm);
  EXPECT_NEAR(r.energy.value, -1.23607, 3 * sigma);
  EXPECT_TRUE(r.energy.reliable);
}

TEST(Estimator, RandomStatesUnbiased) {
  Rng rng(77);
  for (const char* name : {"2x1", "line:3"}) {
    const HubbardSpec spec = spec_of(name, 1.5);
    const int n = spec.n();
    const CMatrix h = compressed_hamiltonian(spec).register_operator();
    const auto ms = matching_decomposition(spec.graph);
    for (int trial = 0; trial < 20; ++trial) {
      const StateVector s = random_register_state(n, 2, rng);
      const std::uint64_t shots = 100000;
      const CompressedEnergyReport r = estimate_compressed_energy(s, spec, shots, rng.next_u64());
      const double n0 = static_cast<double>(shots) / r.settings, nm = n0 / 2;
      const double sigma = std::sqrt((spec.u * spec.u + 4.0) / n0 + 2.0 * ms.size() / nm);
      EXPECT_NEAR(r.energy.value, expectation(s, h), 5 * sigma) << name;
    }
  }
}

TEST(Estimator, SettingsMatchExactMatchingExpectations) {
  Rng rng(5);
  const HubbardSpec spec = spec_of("line:3", 0.0);
  const StateVector s = random_register_state(3, 2, rng);
  double exact = 0.0;
  for (const Matching& m : matching_decomposition(spec.graph))
    for (int reg = 0; reg < 2; ++reg) exact += exact_matching_expectation(s, 3, m, reg);
  const CompressedEnergyReport r = estimate_compressed_energy(s, spec, 500000, 8);
  const double nm = 500000.0 / 5 / 2;
  EXPECT_NEAR(r.energy.hopping_component, exact, 5 * std::sqrt(4.0 / nm));
}

TEST(Estimator, DeterministicAndValidated) {
  Rng rng(5);
  const HubbardSpec spec = spec_of("line:3", 1.0);
  const StateVector s = random_register_state(3, 2, rng);
  const auto a = estimate_compressed_energy(s, spec, 1000, 4), b = estimate_compressed_energy(s, spec, 1000, 4);
  EXPECT_EQ(a.energy.value, b.energy.value);
  EXPECT_THROW(estimate_compressed_energy(s, spec, 0, 4), std::invalid_argument);
  EXPECT_THROW(estimate_compressed_energy(StateVector(3), spec, 10, 4), DimensionError);
  const auto tiny = estimate_compressed_energy(s, spec, 2, 4);
  EXPECT_FALSE(tiny.energy.reliable);
}

}  // namespace
}  // namespace cvqe
