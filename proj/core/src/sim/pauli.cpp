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

#include "cvqe/sim/pauli.h"

#include <algorithm>
#include <cmath>
#include <map>

#include "cvqe/errors.h"

namespace cvqe {

PauliSum& PauliSum::add(double coefficient, std::string ops) {
  if (static_cast<int>(ops.size()) != num_qubits_) throw ValidationError("PauliSum: string '" + ops + "' has wrong length");
  for (char c : ops)
    if (c != 'I' && c != 'X' && c != 'Y' && c != 'Z') throw ValidationError("PauliSum: bad letter in '" + ops + "'");
  terms_.push_back({coefficient, std::move(ops)});
  return *this;
}

PauliSum& PauliSum::add(const PauliSum& other) {
  if (other.num_qubits_ != num_qubits_) throw DimensionError("PauliSum::add: qubit counts differ");
  terms_.insert(terms_.end(), other.terms_.begin(), other.terms_.end());
  return *this;
}

PauliSum PauliSum::simplified(double tol) const {
  std::map<std::string, double> merged;
  for (const PauliTerm& t : terms_) merged[t.ops] += t.coefficient;
  PauliSum out(num_qubits_);
  for (const auto& [ops, c] : merged)
    if (std::abs(c) > tol) out.terms_.push_back({c, ops});
  return out;
}

std::pair<Complex, std::uint64_t> apply_pauli_string(const std::string& ops, std::uint64_t index) {
  const int width = static_cast<int>(ops.size());
  Complex phase{1.0};
  std::uint64_t out = index;
  for (int q = 0; q < width; ++q) {
    const std::uint64_t m = std::uint64_t{1} << (width - 1 - q);
    const bool bit = index & m;
    switch (ops[static_cast<std::size_t>(q)]) {
      case 'X':
        out ^= m;
        break;
      case 'Y':
        out ^= m;
        phase *= bit ? Complex{0.0, -1.0} : Complex{0.0, 1.0};
        break;
      case 'Z':
        if (bit) phase = -phase;
        break;
      default:
        break;
    }
  }
  return {phase, out};
}

CMatrix to_dense(const PauliSum& h) {
  const std::size_t dim = std::size_t{1} << h.num_qubits();
  CMatrix m(dim, dim);
  for (const PauliTerm& t : h.terms())
    for (std::uint64_t col = 0; col < dim; ++col) {
      const auto [phase, row] = apply_pauli_string(t.ops, col);
      m(row, col) += t.coefficient * phase;
    }
  return m;
}

double expectation(const StateVector& state, const PauliSum& h) {
  if (state.num_qubits() != h.num_qubits()) throw DimensionError("expectation: qubit counts differ");
  Complex acc{};
  for (const PauliTerm& t : h.terms()) {
    Complex term{};
    for (std::uint64_t i = 0; i < state.dimension(); ++i) {
      const auto [phase, j] = apply_pauli_string(t.ops, i);
      term += std::conj(state[j]) * phase * state[i];
    }
    acc += t.coefficient * term;
  }
  return acc.real();
}

double expectation(std::span<const Complex> amplitudes, const CMatrix& m) {
  if (!m.square() || m.rows() != amplitudes.size()) throw DimensionError("expectation: operator size mismatch");
  if (!is_hermitian(m, 1e-12)) throw ValidationError("expectation: operator is not Hermitian");
  const auto mv = matvec(m, amplitudes);
  Complex acc{};
  for (std::size_t i = 0; i < mv.size(); ++i) acc += std::conj(amplitudes[i]) * mv[i];
  return acc.real();
}

double expectation(const StateVector& state, const CMatrix& m) { return expectation(state.amplitudes(), m); }

}  // namespace cvqe
