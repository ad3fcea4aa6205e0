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

#include "cvqe/hubbard/jordan_wigner.h"
#include "cvqe/sim/matrix.h"

namespace cvqe {

// Occupied sites (1-based, ascending) of each spin species.
struct SectorLabel {
  std::vector<int> up;
  std::vector<int> down;

  friend bool operator==(const SectorLabel&, const SectorLabel&) = default;
};

struct SectorMatrix {
  CMatrix matrix;
  std::vector<std::uint64_t> basis;  // computational indices, ascending
  std::vector<SectorLabel> labels;   // parallel to basis

  std::size_t dimension() const { return basis.size(); }
};

// Principal submatrix of a 2^(2n) x 2^(2n) operator on basis states with
// `n_up` spin-up and `n_down` spin-down fermions under `ordering`.
// EmptySectorError when no such state exists, DimensionError when the matrix
// size does not match 2n qubits.
SectorMatrix sector_restrict(const CMatrix& matrix, int n, int n_up, int n_down, const ModeOrdering& ordering);
SectorMatrix sector_restrict(const CMatrix& matrix, int n, int n_up, int n_down);

// Diagonal projector onto the (n_up, n_down) sector as a dense 2^(2n) matrix.
CMatrix sector_projector(int n, int n_up, int n_down, const ModeOrdering& ordering);

}  // namespace cvqe
