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

#include "cvqe/hubbard/lattice.h"
#include "cvqe/sim/matrix.h"

namespace cvqe {

// Vertex-disjoint set of edges.
struct Matching {
  std::vector<Edge> edges;

  // Partner of each site (index 1..n), or the site itself when unmatched.
  // Entry 0 is unused.
  std::vector<int> partners(int n) const;
  bool covers(int site) const;
};

bool is_matching(const Matching& m);

// Greedy edge colouring: edges in input order take the lowest colour unused at
// both endpoints. The colour classes partition E into at most
// 2 * max_degree - 1 matchings.
std::vector<Matching> matching_decomposition(const Graph& graph);

// H_M = sum_{(i,j) in M} (|i><j| + |j><i|) on the n-dimensional site space.
RMatrix matching_operator(int n, const Matching& m);

}  // namespace cvqe
