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

#include "cvqe/mitigation/postselect.h"

#include <algorithm>

#include "cvqe/errors.h"

namespace cvqe {
namespace {

int weight(std::uint64_t outcome, int num_bits, const std::vector<int>& qubits) {
  int w = 0;
  for (int q : qubits) w += static_cast<int>((outcome >> (num_bits - 1 - q)) & 1U);
  return w;
}

}  // namespace

void OccupationFilter::validate(int num_bits) const {
  std::vector<int> seen(static_cast<std::size_t>(num_bits), 0);
  for (const auto* set : {&up_qubits, &down_qubits})
    for (int q : *set) {
      if (q < 0 || q >= num_bits) throw ValidationError("OccupationFilter: qubit outside the measured register");
      ++seen[static_cast<std::size_t>(q)];
    }
  if (std::any_of(seen.begin(), seen.end(), [](int c) { return c != 1; }))
    throw ValidationError("OccupationFilter: index sets must be disjoint and cover every measured qubit");
}

bool OccupationFilter::accepts(std::uint64_t outcome, int num_bits) const {
  return weight(outcome, num_bits, up_qubits) == n_up && weight(outcome, num_bits, down_qubits) == n_down;
}

OccupationFilter OccupationFilter::one_up_one_down(int n) {
  OccupationFilter f;
  for (int k = 0; k < n; ++k) {
    f.up_qubits.push_back(k);
    f.down_qubits.push_back(n + k);
  }
  return f;
}

PostselectResult postselect_occupation(const ShotCounts& counts, const OccupationFilter& filter) {
  const int bits = counts.num_bits();
  filter.validate(bits);
  PostselectResult out{ShotCounts(bits), 0};
  const auto dense = counts.dense();
  for (std::uint64_t outcome = 0; outcome < dense.size(); ++outcome) {
    if (dense[outcome] == 0) continue;
    if (filter.accepts(outcome, bits))
      out.kept.add(outcome, dense[outcome]);
    else
      out.discarded += dense[outcome];
  }
  return out;
}

}  // namespace cvqe
