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

#pragma once

#include <span>
#include <vector>

#include "cvqe/hubbard/jordan_wigner.h"
#include "cvqe/hubbard/lattice.h"
#include "cvqe/sim/matrix.h"
#include "cvqe/sim/state_vector.h"

namespace cvqe {

// Qubits per position register: max(1, ceil(log2 n)). Site k is stored as the
// register value k - 1.
int register_qubits(int n);

// Projection of the single-spin JW hopping operator sum_{(i,j) in E} h_ij onto
// span{|e_k>}, evaluated term by term on the weight-1 basis states. The
// off-diagonal pattern is the adjacency matrix of `graph`.
RMatrix compressed_hopping_matrix(const Graph& graph, const SiteOrdering& ordering);
RMatrix compressed_hopping_matrix(const Graph& graph);

// The Hubbard Hamiltonian restricted to one spin-up and one spin-down fermion,
// acting on |i>|j> (i = up position, j = down position):
//   H^C = -t (hop (x) I + I (x) hop) + U sum_k |k><k| (x) |k><k|
//         + diag(w) (x) I + I (x) diag(w).
class CompressedHamiltonian {
 public:
  CompressedHamiltonian(int n, RMatrix hop, double t, double u, std::vector<double> weights);

  int n() const { return n_; }
  const RMatrix& hop() const { return hop_; }
  double t() const { return t_; }
  double u() const { return u_; }
  const std::vector<double>& weights() const { return weights_; }

  // n^2 x n^2 matrix, row index (i-1) * n + (j-1).
  CMatrix dense() const;
  // Same operator on the 2p-qubit register space (2^(2p) square). Register
  // values outside 0..n-1 span a zero block.
  CMatrix register_operator() const;

  // Onsite projector sum_k |k><k| (x) |k><k| on the n^2 space.
  CMatrix onsite_projector() const;

 private:
  int n_;
  RMatrix hop_;
  double t_, u_;
  std::vector<double> weights_;
};

CompressedHamiltonian compressed_hamiltonian(const HubbardSpec& spec, const SiteOrdering& ordering);
CompressedHamiltonian compressed_hamiltonian(const HubbardSpec& spec);

// Embeds n^2 amplitudes (index (i-1)*n + (j-1)) into a 2p-qubit state and back.
StateVector embed_two_registers(std::span<const Complex> amplitudes, int n);
std::vector<Complex> extract_two_registers(const StateVector& state, int n);

}  // namespace cvqe
