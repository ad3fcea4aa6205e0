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

#include "cvqe/sim/matrix.h"

namespace cvqe {

// Eigenvalues ascending; column k of `vectors` is the unit eigenvector of
// values[k].
struct EigenDecomposition {
  std::vector<double> values;
  CMatrix vectors;
};

// Cyclic complex Jacobi diagonalization of a Hermitian matrix. Each rotation
// first removes the phase of the pivot element, then applies the real Jacobi
// rotation that zeroes it. Converges quadratically; at the sizes used here
// (<= 256) a handful of sweeps suffice.
//
// Throws ValidationError if `h` is not Hermitian within 1e-12 * max(1, |h|).
EigenDecomposition eigh(const CMatrix& h);

std::vector<double> eigenvalues(const CMatrix& h);

struct GroundState {
  double energy = 0.0;
  std::vector<Complex> vector;
};

// Largest dimension ground_state_dense accepts.
inline constexpr std::size_t kMaxDenseDimension = 4096;

// Minimum eigenpair. ResourceError above kMaxDenseDimension.
GroundState ground_state_dense(const CMatrix& h);

// ||h v - e v||_2.
double eigen_residual(const CMatrix& h, std::span<const Complex> v, double e);

}  // namespace cvqe
