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

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <sstream>

#include "cvqe/errors.h"
#include "cvqe/hubbard/eigensolver.h"
#include "cvqe/hubbard/jordan_wigner.h"
#include "cvqe/hubbard/lattice.h"
#include "cvqe/hubbard/sector.h"
#include "cvqe/sim/pauli.h"
#include "test_util.h"

namespace cvqe {
namespace {

std::vector<double> eigen_oracle(const CMatrix& m) {
  Eigen::MatrixXcd e(static_cast<Eigen::Index>(m.rows()), static_cast<Eigen::Index>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) e(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = m(i, j);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(e);
  const auto& v = solver.eigenvalues();
  return {v.data(), v.data() + v.size()};
}

CMatrix random_hermitian(std::size_t n, Rng& rng) {
  CMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    m(i, i) = 4 * rng.uniform() - 2;
    for (std::size_t j = i + 1; j < n; ++j) {
      m(i, j) = Complex(2 * rng.uniform() - 1, 2 * rng.uniform() - 1);
      m(j, i) = std::conj(m(i, j));
    }
  }
  return m;
}

TEST(Lattice, Presets) {
  EXPECT_EQ(lattice_preset("2x1").edges, (std::vector<Edge>{{1, 2}}));
  EXPECT_EQ(lattice_preset("line:4").edges, (std::vector<Edge>{{1, 2}, {2, 3}, {3, 4}}));
  const Graph g = lattice_preset("grid:2x2");
  EXPECT_EQ(g.n, 4);
  auto edges = g.edges;
  std::sort(edges.begin(), edges.end());
  EXPECT_EQ(edges, (std::vector<Edge>{{1, 2}, {1, 3}, {2, 4}, {3, 4}}));
  EXPECT_EQ(lattice_preset("grid:3x2").edges.size(), 7u);
  EXPECT_THROW(lattice_preset("ring:4"), std::invalid_argument);
  EXPECT_THROW(lattice_preset("line:0"), std::invalid_argument);
  EXPECT_THROW(lattice_preset("grid:2"), std::invalid_argument);
}

TEST(Lattice, ValidationCatchesBadGraphs) {
  EXPECT_THROW((Graph{3, {{1, 1}}}.validate()), ValidationError);
  EXPECT_THROW((Graph{3, {{1, 4}}}.validate()), ValidationError);
  EXPECT_THROW((Graph{3, {{1, 2}, {1, 2}}}.validate()), ValidationError);
  EXPECT_THROW((Graph{3, {{2, 1}}}.validate()), ValidationError);
  HubbardSpec spec{lattice_preset("2x1"), 1.0, 2.0, {0.5}};
  EXPECT_THROW(spec.validate(), ValidationError);
}

TEST(Lattice, EdgeListParsing) {
  std::istringstream in(
      "# triangle with a pendant\n"
      "n 4\n"
      "1 2\n"
      "3 2   # reversed pair is normalized\n"
      "\n"
      "1 3\n"
      "w 4 0.25\n");
  const EdgeListFile f = parse_edge_list(in);
  EXPECT_EQ(f.graph.n, 4);
  EXPECT_EQ(f.graph.edges, (std::vector<Edge>{{1, 2}, {2, 3}, {1, 3}}));
  EXPECT_EQ(f.weights, (std::vector<double>{0, 0, 0, 0.25}));

  std::istringstream implicit_n("1 2\n2 5\n");
  EXPECT_EQ(parse_edge_list(implicit_n).graph.n, 5);
  std::istringstream bad("1 x\n");
  EXPECT_THROW(parse_edge_list(bad), std::invalid_argument);
  std::istringstream trailing("1 2 3\n");
  EXPECT_THROW(parse_edge_list(trailing), std::invalid_argument);
  std::istringstream loop("2 2\n");
  EXPECT_THROW(parse_edge_list(loop), std::invalid_argument);
}

TEST(JordanWigner, AdjacentHoppingHasNoZString) {
  const PauliSum h = jordan_wigner_hopping(4, 1, 2).simplified();
  ASSERT_EQ(h.terms().size(), 2u);
  EXPECT_EQ(h.terms()[0].ops, "IXXI");
  EXPECT_EQ(h.terms()[1].ops, "IYYI");
  EXPECT_DOUBLE_EQ(h.terms()[0].coefficient, 0.5);
}

TEST(JordanWigner, DistantHoppingCarriesZString) {
  const PauliSum h = jordan_wigner_hopping(4, 3, 0).simplified();
  ASSERT_EQ(h.terms().size(), 2u);
  EXPECT_EQ(h.terms()[0].ops, "XZZX");
  EXPECT_EQ(h.terms()[1].ops, "YZZY");
}

TEST(JordanWigner, HoppingIsFermionicOnTwoModes) {
  // 1/2 (XX + YY) couples |01> and |10> with amplitude 1 and nothing else.
  const CMatrix m = dense_hamiltonian(jordan_wigner_hopping(2, 0, 1));
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) {
      const bool coupled = (i == 1 && j == 2) || (i == 2 && j == 1);
      EXPECT_NEAR(std::abs(m(i, j) - Complex(coupled ? 1.0 : 0.0)), 0.0, 1e-15);
    }
}

TEST(JordanWigner, SingleZDense) {
  PauliSum z(1);
  z.add(1.0, "Z");
  const CMatrix m = dense_hamiltonian(z);
  EXPECT_EQ(m(0, 0), Complex(1.0));
  EXPECT_EQ(m(1, 1), Complex(-1.0));
  EXPECT_EQ(m(0, 1), Complex(0.0));
}

TEST(JordanWigner, TwoByOneTermsByHand) {
  // -t/2 (XX + YY) per spin, U/4 (I - Z_k,up)(I - Z_k,down) per site, t = 1, U = 2.
  const PauliSum h = jordan_wigner_hamiltonian({lattice_preset("2x1"), 1.0, 2.0, {}});
  std::map<std::string, double> got;
  for (const PauliTerm& t : h.terms()) got[t.ops] = t.coefficient;
  const std::map<std::string, double> expected = {
      {"IIII", 1.0},  {"XXII", -0.5}, {"YYII", -0.5}, {"IIXX", -0.5}, {"IIYY", -0.5}, {"ZIII", -0.5},
      {"IZII", -0.5}, {"IIZI", -0.5}, {"IIIZ", -0.5}, {"ZIZI", 0.5},  {"IZIZ", 0.5}};
  ASSERT_EQ(got.size(), expected.size());
  for (const auto& [ops, c] : expected) EXPECT_NEAR(got[ops], c, 1e-15) << ops;
}

TEST(JordanWigner, WeightsEnterAsNumberOperators) {
  const PauliSum h = jordan_wigner_hamiltonian({Graph{1, {}}, 1.0, 0.0, {0.8}});
  std::map<std::string, double> got;
  for (const PauliTerm& t : h.terms()) got[t.ops] = t.coefficient;
  EXPECT_NEAR(got["II"], 0.8, 1e-15);
  EXPECT_NEAR(got["ZI"], -0.4, 1e-15);
  EXPECT_NEAR(got["IZ"], -0.4, 1e-15);
}

TEST(JordanWigner, DenseIsHermitianWithGroundEnergy) {
  const CMatrix m = dense_hamiltonian(jordan_wigner_hamiltonian({lattice_preset("2x1"), 1.0, 2.0, {}}));
  EXPECT_EQ(m.rows(), 16u);
  EXPECT_TRUE(is_hermitian(m));
  EXPECT_NEAR(ground_state_dense(m).energy, -1.23607, 5e-6);
}

TEST(JordanWigner, RejectsBadOrderingAndSize) {
  const HubbardSpec spec{lattice_preset("2x1"), 1.0, 2.0, {}};
  EXPECT_THROW(jordan_wigner_hamiltonian(spec, ModeOrdering{{0, 1, 1, 3}}), ValidationError);
  EXPECT_THROW(jordan_wigner_hamiltonian(spec, ModeOrdering{{0, 1, 2}}), ValidationError);
  PauliSum big(kMaxDenseQubits + 1);
  EXPECT_THROW(dense_hamiltonian(big), ResourceError);
}

TEST(JordanWigner, OrderingChangesOperatorButNotSectorSpectrum) {
  const HubbardSpec spec{lattice_preset("line:3"), 1.0, 2.0, {}};
  const ModeOrdering interleaved{{0, 2, 4, 1, 3, 5}};
  const CMatrix a = dense_hamiltonian(jordan_wigner_hamiltonian(spec));
  const CMatrix b = dense_hamiltonian(jordan_wigner_hamiltonian(spec, interleaved));
  const auto ea = eigenvalues(sector_restrict(a, 3, 1, 1).matrix);
  const auto eb = eigenvalues(sector_restrict(b, 3, 1, 1, interleaved).matrix);
  ASSERT_EQ(ea.size(), eb.size());
  for (std::size_t i = 0; i < ea.size(); ++i) EXPECT_NEAR(ea[i], eb[i], 1e-10);
}

TEST(Sector, Dimensions) {
  const CMatrix m = dense_hamiltonian(jordan_wigner_hamiltonian({lattice_preset("2x1"), 1.0, 2.0, {}}));
  const SectorMatrix s11 = sector_restrict(m, 2, 1, 1);
  EXPECT_EQ(s11.dimension(), 4u);
  EXPECT_TRUE(is_hermitian(s11.matrix));
  EXPECT_EQ(s11.labels.size(), 4u);
  const SectorMatrix vac = sector_restrict(m, 2, 0, 0);
  ASSERT_EQ(vac.dimension(), 1u);
  EXPECT_NEAR(std::abs(vac.matrix(0, 0)), 0.0, 1e-15);
  EXPECT_THROW(sector_restrict(m, 2, 3, 0), EmptySectorError);
  EXPECT_THROW(sector_restrict(CMatrix::identity(8), 2, 1, 1), DimensionError);
}

TEST(Sector, TwoByOneMatchesCompressedMatrixUpToPermutation) {
  const CMatrix m = dense_hamiltonian(jordan_wigner_hamiltonian({lattice_preset("2x1"), 1.0, 2.0, {}}));
  const SectorMatrix s = sector_restrict(m, 2, 1, 1);
  // Relabel by (up site, down site) -> (i-1)*2 + (j-1).
  const double expected[4][4] = {{2, -1, -1, 0}, {-1, 0, 0, -1}, {-1, 0, 0, -1}, {0, -1, -1, 2}};
  std::vector<std::size_t> slot(4);
  for (std::size_t k = 0; k < 4; ++k)
    slot[k] = static_cast<std::size_t>((s.labels[k].up.at(0) - 1) * 2 + (s.labels[k].down.at(0) - 1));
  for (std::size_t a = 0; a < 4; ++a)
    for (std::size_t b = 0; b < 4; ++b)
      EXPECT_NEAR(std::abs(s.matrix(a, b)), std::abs(expected[slot[a]][slot[b]]), 1e-15);
  const auto e = eigenvalues(s.matrix);
  EXPECT_NEAR(e.front(), 1.0 - std::sqrt(5.0), 1e-12);
}

TEST(Sector, ProjectorIsDiagonalIdempotent) {
  const CMatrix p = sector_projector(2, 1, 1, ModeOrdering::natural(2));
  double trace = 0.0;
  for (std::size_t i = 0; i < p.rows(); ++i) trace += p(i, i).real();
  EXPECT_DOUBLE_EQ(trace, 4.0);
  EXPECT_LT(distance(matmul(p, p), p), 1e-15);
}

TEST(Eigensolver, DiagonalExample) {
  CMatrix m(2, 2);
  m(0, 0) = 3.0;
  m(1, 1) = -5.0;
  const GroundState g = ground_state_dense(m);
  EXPECT_DOUBLE_EQ(g.energy, -5.0);
  EXPECT_NEAR(std::abs(g.vector[1]), 1.0, 1e-15);
  EXPECT_NEAR(std::abs(g.vector[0]), 0.0, 1e-15);
}

TEST(Eigensolver, MatchesEigenOracleOnRandomHermitianMatrices) {
  Rng rng(123);
  for (std::size_t n : {1u, 2u, 3u, 5u, 8u, 16u, 33u}) {
    const CMatrix m = random_hermitian(n, rng);
    const EigenDecomposition d = eigh(m);
    const auto oracle = eigen_oracle(m);
    ASSERT_EQ(d.values.size(), n);
    for (std::size_t k = 0; k < n; ++k) {
      EXPECT_NEAR(d.values[k], oracle[k], 1e-10) << "n=" << n;
      std::vector<Complex> v(n);
      for (std::size_t i = 0; i < n; ++i) v[i] = d.vectors(i, k);
      EXPECT_LT(eigen_residual(m, v, d.values[k]), 1e-9);
    }
  }
}

TEST(Eigensolver, HandlesDegenerateSpectra) {
  const CMatrix m = dense_hamiltonian(jordan_wigner_hamiltonian({lattice_preset("grid:2x2"), 1.0, 0.0, {}}));
  const SectorMatrix s = sector_restrict(m, 4, 1, 1);
  const auto mine = eigenvalues(s.matrix);
  const auto oracle = eigen_oracle(s.matrix);
  for (std::size_t k = 0; k < mine.size(); ++k) EXPECT_NEAR(mine[k], oracle[k], 1e-10);
  const GroundState g = ground_state_dense(s.matrix);
  EXPECT_LT(eigen_residual(s.matrix, g.vector, g.energy), 1e-9);
}

TEST(Eigensolver, RejectsNonHermitian) {
  CMatrix m(2, 2);
  m(0, 1) = 1.0;
  EXPECT_THROW(eigh(m), ValidationError);
}

TEST(Eigensolver, FullSpectrumOfTwoByOneMatchesEigen) {
  for (double u : {0.0, 2.0, 4.0}) {
    const CMatrix m = dense_hamiltonian(jordan_wigner_hamiltonian({lattice_preset("2x1"), 1.0, u, {}}));
    const auto mine = eigenvalues(m);
    const auto oracle = eigen_oracle(m);
    for (std::size_t k = 0; k < mine.size(); ++k) EXPECT_NEAR(mine[k], oracle[k], 1e-10);
  }
}

}  // namespace
}  // namespace cvqe
