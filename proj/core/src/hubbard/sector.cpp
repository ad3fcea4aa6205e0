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

#include "cvqe/hubbard/sector.h"


#include "cvqe/errors.h"

namespace cvqe {
namespace {

SectorLabel label_of(std::uint64_t index, int n, const ModeOrdering& ordering) {
  const int q = 2 * n;
  auto occupied = [&](int qubit) { return (index >> (q - 1 - qubit)) & 1U; };
  SectorLabel label;
  for (int k = 1; k <= n; ++k) {
    if (occupied(ordering.up(k))) label.up.push_back(k);
    if (occupied(ordering.down(k))) label.down.push_back(k);
  }
  return label;
}

std::vector<std::uint64_t> sector_basis(int n, int n_up, int n_down, const ModeOrdering& ordering,
                                        std::vector<SectorLabel>* labels) {
  if (n_up < 0 || n_down < 0 || n_up > n || n_down > n)
    throw EmptySectorError("sector (" + std::to_string(n_up) + "," + std::to_string(n_down) + ") is empty for " +
                           std::to_string(n) + " sites");
  ordering.validate(n);
  std::vector<std::uint64_t> basis;
  const std::uint64_t dim = std::uint64_t{1} << (2 * n);
  for (std::uint64_t i = 0; i < dim; ++i) {
    SectorLabel label = label_of(i, n, ordering);
    if (static_cast<int>(label.up.size()) != n_up || static_cast<int>(label.down.size()) != n_down) continue;
    basis.push_back(i);
    if (labels) labels->push_back(std::move(label));
  }
  return basis;
}

}  // namespace

SectorMatrix sector_restrict(const CMatrix& matrix, int n, int n_up, int n_down, const ModeOrdering& ordering) {
  if (n < 1 || n > 16 || !matrix.square() || matrix.rows() != (std::size_t{1} << (2 * n)))
    throw DimensionError("sector_restrict: matrix is not 2^(2n) square");
  SectorMatrix out;
  out.basis = sector_basis(n, n_up, n_down, ordering, &out.labels);
  const std::size_t d = out.basis.size();
  out.matrix = CMatrix(d, d);
  for (std::size_t r = 0; r < d; ++r)
    for (std::size_t c = 0; c < d; ++c) out.matrix(r, c) = matrix(out.basis[r], out.basis[c]);
  return out;
}

SectorMatrix sector_restrict(const CMatrix& matrix, int n, int n_up, int n_down) {
  return sector_restrict(matrix, n, n_up, n_down, ModeOrdering::natural(n));
}

CMatrix sector_projector(int n, int n_up, int n_down, const ModeOrdering& ordering) {
  const std::size_t dim = std::size_t{1} << (2 * n);
  CMatrix p(dim, dim);
  for (std::uint64_t i : sector_basis(n, n_up, n_down, ordering, nullptr)) p(i, i) = 1.0;
  return p;
}

}  // namespace cvqe
