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

#include <array>

namespace cvqe {

// Closed-form ground state of the 2x1 compressed Hamiltonian,
//   (alpha / (N sqrt2)) (|00> + |11>) + (beta / (N sqrt2)) (|01> + |10>),
// with alpha = 4, beta = u + sqrt(u^2 + 16), u = U / t, N^2 = alpha^2 + beta^2.
struct GroundState2x1 {
  double u = 0.0;
  double t = 1.0;
  double alpha = 4.0;
  double beta = 0.0;
  double normalization = 0.0;
  double energy = 0.0;            // U/2 - sqrt(U^2/4 + 4 t^2)
  double double_occupancy = 0.0;  // 8 / N^2
  // Ansatz angles reaching this state from |++>: phi = atan(U / 4t), theta = pi/4.
  double optimal_phi = 0.0;
  double optimal_theta = 0.0;

  // Amplitudes on |00>, |01>, |10>, |11>.
  std::array<double, 4> amplitudes() const;
};

// std::invalid_argument unless t > 0.
GroundState2x1 analytic_ground_2x1(double u, double t);

}  // namespace cvqe
