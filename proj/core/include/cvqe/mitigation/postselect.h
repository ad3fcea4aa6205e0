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

#include "cvqe/sim/sampling.h"

namespace cvqe {

// Which measured bits hold spin-up / spin-down occupations, and the required
// fermion count of each species.
struct OccupationFilter {
  std::vector<int> up_qubits;
  std::vector<int> down_qubits;
  int n_up = 1;
  int n_down = 1;

  // Disjoint index sets covering every one of `num_bits` bits.
  void validate(int num_bits) const;
  bool accepts(std::uint64_t outcome, int num_bits) const;

  // Spin-up qubits 0..n-1, spin-down n..2n-1, one fermion each.
  static OccupationFilter one_up_one_down(int n);
};

struct PostselectResult {
  ShotCounts kept;
  std::uint64_t discarded = 0;
};

// Keeps outcomes whose spin-up and spin-down Hamming weights match the filter.
PostselectResult postselect_occupation(const ShotCounts& counts, const OccupationFilter& filter);

}  // namespace cvqe
