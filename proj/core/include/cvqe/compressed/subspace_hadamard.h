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

#include <cstdint>

#include "cvqe/compressed/matching.h"
#include "cvqe/sim/state_vector.h"

namespace cvqe {

// Measurement of H_M on one position register via an ancilla.
//
// The input holds one or more p-qubit registers; `target_register` selects the
// register the procedure acts on. The output appends a p-qubit partner
// register and one ancilla (the last qubit):
//   1. partner <- partner XOR pi(i), where pi(i) is i's partner in M (or i);
//   2. for matched i the ancilla becomes (|0> + (-1)^[pi(i) < i] |1>)/sqrt2,
//      for unmatched i it stays |0>;
//   3. controlled on the ancilla, swap the target and partner registers;
//   4. Hadamard on the ancilla.
// Steps 1-2 act as classical oracles on basis states; 3-4 are CSWAP and H
// gates. Measuring the ancilla gives 0 with probability exactly 1/2 for every
// input. On outcome 0 a matched pair i < j leaves the registers in the
// (target, partner) basis where reading (larger, smaller) means H_M = +1 and
// (smaller, larger) means -1; an unmatched site reads (k, k), eigenvalue 0.
//
// ValidationError if the target register has amplitude on a value >= n.
StateVector prepare_subspace_hadamard(const StateVector& input, int n, const Matching& m, int target_register = 0);

// Probability that the ancilla of a prepared state reads 0.
double acceptance_probability(const StateVector& prepared);

struct SubspaceHadamardResult {
  StateVector state;  // post-measurement, ancilla collapsed
  bool accepted = false;
};

SubspaceHadamardResult subspace_hadamard(const StateVector& input, int n, const Matching& m, std::uint64_t seed,
                                         int target_register = 0);

// H_M eigenvalue read from (target register value, partner register value).
inline int matching_eigenvalue(std::uint64_t target_value, std::uint64_t partner_value) {
  if (target_value == partner_value) return 0;
  return target_value > partner_value ? 1 : -1;
}

}  // namespace cvqe
