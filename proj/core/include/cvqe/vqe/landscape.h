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
#include "cvqe/sim/state_vector.h"
#include "cvqe/vqe/ansatz.h"

namespace cvqe {

// Noiseless output of ansatz_circuit on |0...0> (2x1 lattice only).
StateVector ansatz_state(const AnsatzParams& params, Representation rep);

// One ansatz layer on the compressed n^2 space for any lattice, built from
// exact evolutions instead of gates:
//   |ini>  = |g> (x) |g>, g the ground vector of -t*hop + diag(w) with
//            positive component sum
//   then   exp(i phi H_os), then prod_M exp(-i theta/2 H_M) on each register.
// On 2x1 this coincides with the compressed gate circuit.
std::vector<Complex> compressed_ansatz_amplitudes(const HubbardSpec& spec, const AnsatzParams& params);

// The same state on 2p qubits.
StateVector compressed_ansatz_state(const HubbardSpec& spec, const AnsatzParams& params);

// Exact energy of the ansatz state, no shots. On 2x1 the gate circuit is
// evaluated against the compressed (register) or JW Hamiltonian; for larger
// lattices only the compressed representation is available
// (std::invalid_argument otherwise).
double exact_landscape(const AnsatzParams& params, const HubbardSpec& spec, Representation rep);

// Exact sum_k <n_k,up n_k,down> / n of the ansatz state.
double exact_double_occupancy(const AnsatzParams& params, const HubbardSpec& spec, Representation rep);

}  // namespace cvqe
