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
#include <vector>

#include "cvqe/sim/gate.h"
#include "cvqe/sim/state_vector.h"

namespace cvqe {

class Circuit {
 public:
  explicit Circuit(int num_qubits);

  int num_qubits() const { return num_qubits_; }
  const std::vector<Gate>& gates() const { return gates_; }
  std::size_t size() const { return gates_.size(); }
  bool empty() const { return gates_.empty(); }

  // Validates targets against num_qubits().
  Circuit& add(Gate gate);
  Circuit& append(const Circuit& other);

 private:
  int num_qubits_;
  std::vector<Gate> gates_;
};

// Dense unitary of the whole circuit (for small registers).
CMatrix circuit_unitary(const Circuit& circuit);

}  // namespace cvqe
