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

#include <istream>
#include <string>
#include <string_view>
#include <vector>

namespace cvqe {

// Undirected edge between 1-based sites, stored with i < j.
struct Edge {
  int i = 0;
  int j = 0;

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Interaction graph on sites 1..n.
struct Graph {
  int n = 0;
  std::vector<Edge> edges;

  // Throws ValidationError on self-loops, i > j, out-of-range sites or
  // duplicate edges.
  void validate() const;
  int max_degree() const;
  std::vector<std::vector<int>> adjacency_lists() const;
};

// Open-boundary lattices: "2x1", "line:n", "grid:WxH" (sites numbered row
// major, 1-based). Throws std::invalid_argument for unknown names.
Graph lattice_preset(std::string_view name);

// Problem instance for H = -t sum_{<ij>,s} (a+_is a_js + h.c.) + U sum_k n_k,up n_k,down
//                        + sum_k w_k (n_k,up + n_k,down).
struct HubbardSpec {
  Graph graph;
  double t = 1.0;
  double u = 0.0;
  std::vector<double> weights;  // empty means all zero

  int n() const { return graph.n; }
  double weight(int site) const;  // 1-based
  bool has_weights() const;
  void validate() const;
};

// Edge-list text format:
//   # comment
//   n <sites>            optional; otherwise the largest site index
//   <i> <j>              one edge per line
//   w <site> <value>     optional site weight
// Blank lines are ignored. Throws std::invalid_argument with the line number
// on malformed input. Returned weights are empty if no "w" lines appear.
struct EdgeListFile {
  Graph graph;
  std::vector<double> weights;
};
EdgeListFile parse_edge_list(std::istream& in);

}  // namespace cvqe
