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

#include "cvqe/compressed/analytic.h"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace cvqe {

GroundState2x1 analytic_ground_2x1(double u, double t) {
  if (!(t > 0.0)) throw std::invalid_argument("analytic_ground_2x1: t must be positive");
  GroundState2x1 g;
  g.u = u;
  g.t = t;
  const double ratio = u / t;
  g.alpha = 4.0;
  g.beta = ratio + std::sqrt(ratio * ratio + 16.0);
  g.normalization = std::hypot(g.alpha, g.beta);
  g.energy = u / 2.0 - std::sqrt(u * u / 4.0 + 4.0 * t * t);
  g.double_occupancy = 8.0 / (g.normalization * g.normalization);
  g.optimal_phi = std::atan(ratio / 4.0);
  g.optimal_theta = std::numbers::pi / 4.0;
  return g;
}

std::array<double, 4> GroundState2x1::amplitudes() const {
  const double s = normalization * std::numbers::sqrt2;
  return {alpha / s, beta / s, beta / s, alpha / s};
}

}  // namespace cvqe
