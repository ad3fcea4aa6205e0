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

#include "cvqe/compressed/evolution.h"

#include <cmath>

#include "cvqe/errors.h"

namespace cvqe {
namespace {

void check_size(std::span<Complex> amplitudes, int n) {
  if (amplitudes.size() != static_cast<std::size_t>(n) * static_cast<std::size_t>(n))
    throw DimensionError("compressed evolution: expected n^2 amplitudes");
}

}  // namespace

void apply_matching_evolution(std::span<Complex> amplitudes, int n, int reg, const Matching& m, double tau) {
  check_size(amplitudes, n);
  if (reg != 0 && reg != 1) throw std::out_of_range("apply_matching_evolution: register must be 0 or 1");
  const std::size_t nn = static_cast<std::size_t>(n);
  const Complex c{std::cos(tau), 0.0}, is{0.0, std::sin(tau)};
  for (const Edge& e : m.edges) {
    const std::size_t a = static_cast<std::size_t>(e.i - 1), b = static_cast<std::size_t>(e.j - 1);
    for (std::size_t other = 0; other < nn; ++other) {
      const std::size_t ia = reg == 0 ? a * nn + other : other * nn + a;
      const std::size_t ib = reg == 0 ? b * nn + other : other * nn + b;
      const Complex xa = amplitudes[ia], xb = amplitudes[ib];
      amplitudes[ia] = c * xa + is * xb;
      amplitudes[ib] = c * xb + is * xa;
    }
  }
}

void apply_onsite_evolution(std::span<Complex> amplitudes, int n, double tau) {
  check_size(amplitudes, n);
  const std::size_t nn = static_cast<std::size_t>(n);
  const Complex phase = std::polar(1.0, tau);
  for (std::size_t k = 0; k < nn; ++k) amplitudes[k * nn + k] *= phase;
}

}  // namespace cvqe
