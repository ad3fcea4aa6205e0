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

#include <span>

#include "cvqe/compressed/matching.h"
#include "cvqe/sim/matrix.h"

namespace cvqe {

// Exact evolutions on the n^2 two-register amplitude vector (index
// (i-1)*n + (j-1)); `reg` is 0 for the spin-up register, 1 for spin-down.

// exp(i tau H_M) on one register. Because H_M^2 = P_M (projector onto matched
// sites), exp(i tau H_M) = I + (cos tau - 1) P_M + i sin tau H_M.
void apply_matching_evolution(std::span<Complex> amplitudes, int n, int reg, const Matching& m, double tau);

// exp(i tau H_os): phase e^{i tau} on every |k>|k>.
void apply_onsite_evolution(std::span<Complex> amplitudes, int n, double tau);

}  // namespace cvqe
