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

#include <vector>

#include "cvqe/hubbard/lattice.h"
#include "cvqe/sim/matrix.h"
#include "cvqe/sim/pauli.h"

namespace cvqe {

// Position of each site inside its spin block: position[k-1] in [0, n).
struct SiteOrdering {
  std::vector<int> position;

  static SiteOrdering natural(int n);
  // Throws ValidationError unless `position` is a permutation of 0..n-1.
  void validate(int n) const;
};

// Qubit assigned to each of the 2n fermionic modes. Mode k-1 is site k spin up,
// mode n+k-1 is site k spin down.
struct ModeOrdering {
  std::vector<int> qubit_of_mode;

  // Spin-up modes 1..n on qubits 0..n-1, then spin-down on n..2n-1.
  static ModeOrdering natural(int n);
  // Spin-up block first, sites placed by `sites` inside each block.
  static ModeOrdering blocked(const SiteOrdering& sites);

  int up(int site) const { return qubit_of_mode.at(static_cast<std::size_t>(site - 1)); }
  int down(int site) const { return qubit_of_mode.at(qubit_of_mode.size() / 2 + static_cast<std::size_t>(site - 1)); }

  // Throws ValidationError unless this is a permutation of 0..2n-1.
  void validate(int n) const;
};

// 1/2 (X_a X_b + Y_a Y_b) Z_{min+1} ... Z_{max-1}: the image of
// a+_a a_b + a+_b a_a.
PauliSum jordan_wigner_hopping(int num_qubits, int qubit_a, int qubit_b);
// 1/2 (I - Z_q): the image of n_q.
PauliSum jordan_wigner_number(int num_qubits, int qubit);

// Qubit Hamiltonian of `spec` on 2n qubits: each edge and spin contributes
// -t * jordan_wigner_hopping, each site U/4 (I - Z_up)(I - Z_down), each
// weight w_k/2 (I - Z) per spin. Returned simplified (equal strings merged).
PauliSum jordan_wigner_hamiltonian(const HubbardSpec& spec, const ModeOrdering& ordering);
PauliSum jordan_wigner_hamiltonian(const HubbardSpec& spec);

// Largest register dense_hamiltonian will build.
inline constexpr int kMaxDenseQubits = 12;

// Dense matrix of `h`; ResourceError above kMaxDenseQubits qubits.
CMatrix dense_hamiltonian(const PauliSum& h);

}  // namespace cvqe
