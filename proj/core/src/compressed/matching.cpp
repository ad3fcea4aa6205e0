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

#include "cvqe/compressed/matching.h"

#include <algorithm>
#include <set>

namespace cvqe {

std::vector<int> Matching::partners(int n) const {
  std::vector<int> p(static_cast<std::size_t>(n) + 1);
  for (int k = 0; k <= n; ++k) p[static_cast<std::size_t>(k)] = k;
  for (const Edge& e : edges) {
    p.at(static_cast<std::size_t>(e.i)) = e.j;
    p.at(static_cast<std::size_t>(e.j)) = e.i;
  }
  return p;
}

bool Matching::covers(int site) const {
  return std::any_of(edges.begin(), edges.end(), [site](const Edge& e) { return e.i == site || e.j == site; });
}

bool is_matching(const Matching& m) {
  std::set<int> used;
  for (const Edge& e : m.edges)
    if (e.i == e.j || !used.insert(e.i).second || !used.insert(e.j).second) return false;
  return true;
}

std::vector<Matching> matching_decomposition(const Graph& graph) {
  graph.validate();
  // colours_at[v] holds the colours already incident to v.
  std::vector<std::vector<bool>> colours_at(static_cast<std::size_t>(graph.n) + 1);
  std::vector<Matching> out;
  for (const Edge& e : graph.edges) {
    auto& a = colours_at[static_cast<std::size_t>(e.i)];
    auto& b = colours_at[static_cast<std::size_t>(e.j)];
    std::size_t colour = 0;
    while ((colour < a.size() && a[colour]) || (colour < b.size() && b[colour])) ++colour;
    if (colour >= out.size()) out.resize(colour + 1);
    out[colour].edges.push_back(e);
    a.resize(std::max(a.size(), colour + 1), false);
    b.resize(std::max(b.size(), colour + 1), false);
    a[colour] = b[colour] = true;
  }
  return out;
}

RMatrix matching_operator(int n, const Matching& m) {
  RMatrix h(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
  for (const Edge& e : m.edges) {
    h(static_cast<std::size_t>(e.i - 1), static_cast<std::size_t>(e.j - 1)) = 1.0;
    h(static_cast<std::size_t>(e.j - 1), static_cast<std::size_t>(e.i - 1)) = 1.0;
  }
  return h;
}

}  // namespace cvqe
