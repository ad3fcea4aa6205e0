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
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cvqe/sim/matrix.h"

namespace cvqe {

// Maximum register width the dense simulator accepts.
inline constexpr int kMaxQubits = 24;

// Pure state over the computational basis of `num_qubits` qubits.
//
// Bit ordering: qubit 0 is the most significant bit of the amplitude index,
// so the bitstring of index k (qubit 0 first, leftmost) is k written in
// binary with num_qubits digits. Every outcome string in the project uses
// this ordering.
class StateVector {
 public:
  // |0...0>.
  explicit StateVector(int num_qubits);

  static StateVector basis(int num_qubits, std::uint64_t index);
  // Takes ownership of `amplitudes`; length must be a power of two. Not
  // renormalized.
  static StateVector from_amplitudes(std::vector<Complex> amplitudes);

  int num_qubits() const { return num_qubits_; }
  std::size_t dimension() const { return amplitudes_.size(); }

  std::span<const Complex> amplitudes() const { return amplitudes_; }
  std::span<Complex> amplitudes() { return amplitudes_; }
  Complex operator[](std::size_t i) const { return amplitudes_[i]; }
  Complex& operator[](std::size_t i) { return amplitudes_[i]; }

  double norm_squared() const;
  void normalize();
  std::vector<double> probabilities() const;

  // Bit mask of qubit q inside an amplitude index.
  std::uint64_t mask(int qubit) const { return std::uint64_t{1} << (num_qubits_ - 1 - qubit); }

 private:
  StateVector(int num_qubits, std::vector<Complex> amplitudes);

  int num_qubits_;
  std::vector<Complex> amplitudes_;
};

// |<a|b>|^2.
double fidelity(const StateVector& a, const StateVector& b);

std::string to_bitstring(std::uint64_t index, int width);
// Inverse of to_bitstring; throws std::invalid_argument on characters other than 0/1.
std::uint64_t from_bitstring(std::string_view bits);

}  // namespace cvqe
