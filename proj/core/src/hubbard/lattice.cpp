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

#include "cvqe/hubbard/lattice.h"

#include <algorithm>
#include <charconv>
#include <set>
#include <sstream>
#include <stdexcept>

#include "cvqe/errors.h"

namespace cvqe {
namespace {

int parse_positive(std::string_view text, std::string_view what) {
  int v = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc{} || ptr != text.data() + text.size() || v < 1)
    throw std::invalid_argument("lattice preset: bad " + std::string(what) + " '" + std::string(text) + "'");
  return v;
}

}  // namespace

void Graph::validate() const {
  if (n < 1) throw ValidationError("Graph: need at least one site");
  std::set<Edge> seen;
  for (const Edge& e : edges) {
    if (e.i == e.j) throw ValidationError("Graph: self-loop at site " + std::to_string(e.i));
    if (e.i > e.j) throw ValidationError("Graph: edges must be stored with i < j");
    if (e.i < 1 || e.j > n) throw ValidationError("Graph: edge references a site outside 1..n");
    if (!seen.insert(e).second)
      throw ValidationError("Graph: duplicate edge (" + std::to_string(e.i) + "," + std::to_string(e.j) + ")");
  }
}

int Graph::max_degree() const {
  std::vector<int> degree(static_cast<std::size_t>(n) + 1, 0);
  for (const Edge& e : edges) {
    ++degree[static_cast<std::size_t>(e.i)];
    ++degree[static_cast<std::size_t>(e.j)];
  }
  return *std::max_element(degree.begin(), degree.end());
}

std::vector<std::vector<int>> Graph::adjacency_lists() const {
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(n) + 1);
  for (const Edge& e : edges) {
    adj[static_cast<std::size_t>(e.i)].push_back(e.j);
    adj[static_cast<std::size_t>(e.j)].push_back(e.i);
  }
  return adj;
}

Graph lattice_preset(std::string_view name) {
  if (name == "2x1") return Graph{2, {{1, 2}}};
  if (name.starts_with("line:")) {
    const int n = parse_positive(name.substr(5), "line length");
    Graph g{n, {}};
    for (int i = 1; i < n; ++i) g.edges.push_back({i, i + 1});
    return g;
  }
  if (name.starts_with("grid:")) {
    const auto dims = name.substr(5);
    const auto x = dims.find('x');
    if (x == std::string_view::npos) throw std::invalid_argument("lattice preset: grid needs WxH");
    const int w = parse_positive(dims.substr(0, x), "grid width");
    const int h = parse_positive(dims.substr(x + 1), "grid height");
    Graph g{w * h, {}};
    auto site = [w](int col, int row) { return row * w + col + 1; };
    for (int row = 0; row < h; ++row)
      for (int col = 0; col < w; ++col) {
        if (col + 1 < w) g.edges.push_back({site(col, row), site(col + 1, row)});
        if (row + 1 < h) g.edges.push_back({site(col, row), site(col, row + 1)});
      }
    return g;
  }
  throw std::invalid_argument("unknown lattice '" + std::string(name) + "' (expected 2x1, line:n or grid:WxH)");
}

double HubbardSpec::weight(int site) const {
  if (weights.empty()) return 0.0;
  return weights.at(static_cast<std::size_t>(site - 1));
}

bool HubbardSpec::has_weights() const {
  return std::any_of(weights.begin(), weights.end(), [](double w) { return w != 0.0; });
}

void HubbardSpec::validate() const {
  graph.validate();
  if (!weights.empty() && static_cast<int>(weights.size()) != graph.n)
    throw ValidationError("HubbardSpec: need one weight per site");
}

EdgeListFile parse_edge_list(std::istream& in) {
  EdgeListFile out;
  std::vector<std::pair<int, double>> weight_lines;
  int declared_n = 0, max_site = 0;
  std::string line;
  for (int lineno = 1; std::getline(in, line); ++lineno) {
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    std::string first;
    if (!(fields >> first)) continue;
    auto fail = [lineno](const std::string& why) {
      throw std::invalid_argument("edge list line " + std::to_string(lineno) + ": " + why);
    };
    if (first == "n") {
      if (!(fields >> declared_n) || declared_n < 1) fail("expected 'n <sites>'");
    } else if (first == "w") {
      int site = 0;
      double value = 0.0;
      if (!(fields >> site >> value) || site < 1) fail("expected 'w <site> <value>'");
      weight_lines.emplace_back(site, value);
      max_site = std::max(max_site, site);
    } else {
      int i = 0, j = 0;
      try {
        i = std::stoi(first);
      } catch (const std::exception&) {
        fail("expected an edge '<i> <j>'");
      }
      if (!(fields >> j)) fail("expected an edge '<i> <j>'");
      if (i < 1 || j < 1) fail("site indices are 1-based");
      if (i > j) std::swap(i, j);
      out.graph.edges.push_back({i, j});
      max_site = std::max(max_site, j);
    }
    std::string extra;
    if (fields >> extra) fail("unexpected trailing field '" + extra + "'");
  }
  out.graph.n = declared_n > 0 ? declared_n : max_site;
  if (!weight_lines.empty()) {
    out.weights.assign(static_cast<std::size_t>(out.graph.n), 0.0);
    for (const auto& [site, value] : weight_lines) {
      if (site > out.graph.n) throw std::invalid_argument("edge list: weight for site beyond n");
      out.weights[static_cast<std::size_t>(site - 1)] = value;
    }
  }
  out.graph.validate();
  return out;
}

}  // namespace cvqe
