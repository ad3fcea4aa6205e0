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
#include <string>
#include <utility>
#include <vector>

#include "cvqe/sim/matrix.h"
#include "cvqe/sim/state_vector.h"

namespace cvqe {

// coefficient * P_0 (x) P_1 (x) ... with ops[q] in {I, X, Y, Z} acting on qubit q.
struct PauliTerm {
  double coefficient = 0.0;
  std::string ops;
};

// Real-weighted sum of Pauli strings, hence Hermitian by construction.
class PauliSum {
 public:
  explicit PauliSum(int num_qubits) : num_qubits_(num_qubits) {}

  int num_qubits() const { return num_qubits_; }
  const std::vector<PauliTerm>& terms() const { return terms_; }

  // Throws ValidationError for wrong length or letters outside IXYZ.
  PauliSum& add(double coefficient, std::string ops);
  PauliSum& add(const PauliSum& other);

  // Merges equal strings, drops |coefficient| <= tol, sorts by string.
  PauliSum simplified(double tol = 1e-15) const;

 private:
  int num_qubits_;
  std::vector<PauliTerm> terms_;
};

// P|index> = phase * |new_index> for a Pauli string (no coefficient).
std::pair<Complex, std::uint64_t> apply_pauli_string(const std::string& ops, std::uint64_t index);

CMatrix to_dense(const PauliSum& h);

// <psi|H|psi>. DimensionError on qubit mismatch.
double expectation(const StateVector& state, const PauliSum& h);
// <psi|M|psi>. DimensionError on size mismatch, ValidationError if M is not
// Hermitian within 1e-12.
double expectation(const StateVector& state, const CMatrix& m);
double expectation(std::span<const Complex> amplitudes, const CMatrix& m);

}  // namespace cvqe
