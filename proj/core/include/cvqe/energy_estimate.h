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

namespace cvqe {

// Shot-based energy estimate split by Hamiltonian part. By construction
//   value = -t * hopping_component + U * onsite_component + local_component
// where onsite_component is the summed double occupancy sum_k <n_k,up n_k,down>
// and hopping_component is <H_hop (x) I + I (x) H_hop> (compressed) or the
// summed JW hopping expectation (uncompressed).
struct EnergyEstimate {
  double value = 0.0;
  double onsite_component = 0.0;
  double hopping_component = 0.0;
  double local_component = 0.0;
  std::uint64_t shots_used = 0;
  bool corrected = false;
  bool reliable = true;
};

}  // namespace cvqe
