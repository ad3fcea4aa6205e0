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

#include "cvqe/sim/circuit.h"

#include <stdexcept>

#include "cvqe/errors.h"

namespace cvqe {

Circuit::Circuit(int num_qubits) : num_qubits_(num_qubits) {
  if (num_qubits < 1) throw std::invalid_argument("Circuit: num_qubits must be >= 1");
}

Circuit& Circuit::add(Gate gate) {
  validate_gate(gate, num_qubits_);
  gates_.push_back(std::move(gate));
  return *this;
}

Circuit& Circuit::append(const Circuit& other) {
  if (other.num_qubits_ != num_qubits_) throw DimensionError("Circuit::append: qubit counts differ");
  gates_.insert(gates_.end(), other.gates_.begin(), other.gates_.end());
  return *this;
}

CMatrix circuit_unitary(const Circuit& circuit) {
  const std::size_t dim = std::size_t{1} << circuit.num_qubits();
  CMatrix u(dim, dim);
  for (std::size_t col = 0; col < dim; ++col) {
    StateVector s = StateVector::basis(circuit.num_qubits(), col);
    for (const Gate& g : circuit.gates()) apply_gate(s, g);
    for (std::size_t row = 0; row < dim; ++row) u(row, col) = s[row];
  }
  return u;
}

}  // namespace cvqe
