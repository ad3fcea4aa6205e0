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
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cvqe/rng.h"
#include "cvqe/sim/circuit.h"
#include "cvqe/sim/noise.h"
#include "cvqe/sim/state_vector.h"

namespace cvqe {

// Histogram of measurement outcomes over `num_bits` measured qubits. Outcomes
// are stored densely by integer value; bitstrings use the StateVector ordering
// (qubit 0 leftmost).
class ShotCounts {
 public:
  explicit ShotCounts(int num_bits);
  static ShotCounts from_map(int num_bits, const std::map<std::string, std::uint64_t>& counts);

  int num_bits() const { return num_bits_; }
  std::uint64_t total() const { return total_; }
  std::size_t outcomes() const { return counts_.size(); }

  std::uint64_t count(std::uint64_t outcome) const { return counts_.at(outcome); }
  std::uint64_t count(std::string_view bits) const;
  void add(std::uint64_t outcome, std::uint64_t n = 1);

  std::span<const std::uint64_t> dense() const { return counts_; }
  // Nonzero entries only.
  std::map<std::string, std::uint64_t> to_map() const;
  // Empirical distribution; throws std::invalid_argument when total() == 0.
  std::vector<double> frequencies() const;

  friend bool operator==(const ShotCounts&, const ShotCounts&) = default;

 private:
  int num_bits_;
  std::uint64_t total_ = 0;
  std::vector<std::uint64_t> counts_;
};

// Draws `shots` computational-basis outcomes from |amplitude|^2, then flips
// each bit independently according to `readout` (one entry per qubit, or
// empty). Deterministic in `seed`.
ShotCounts sample_counts(const StateVector& state, std::uint64_t shots, std::span<const ReadoutError> readout = {},
                         std::uint64_t seed = 0);

// Runs `circuit` on `input` and measures every qubit, `shots` times. With gate
// noise each shot is its own trajectory; shots whose trajectory draws no error
// reuse the noiseless output distribution.
ShotCounts sample_circuit(const StateVector& input, const Circuit& circuit, const NoiseModel& noise,
                          std::uint64_t shots, std::uint64_t seed);

// Exact output distribution after independent readout flips.
std::vector<double> apply_readout_channel(std::span<const double> probabilities, int num_bits,
                                          std::span<const ReadoutError> readout);

double probability_of_one(const StateVector& state, int qubit);

// Projective Z measurement of one qubit; collapses and renormalizes `state`.
int measure_qubit(StateVector& state, int qubit, Rng& rng);

}  // namespace cvqe
