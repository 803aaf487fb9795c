// Copyright 2026 The pmgraph Authors
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

#include "pmgraph/adjacency.hpp"

#include <algorithm>
#include <queue>
#include <string>

#include "pmgraph/error.hpp"

namespace pmgraph {

AdjacencyMatrix adjacency(const ExperimentGraph& g) {
  AdjacencyMatrix m{IntMatrix(g.vertex_count(), g.vertex_count(), 0)};
  for (const auto& e : g.edges()) {
    ++m.entries(e.u, e.v);
    ++m.entries(e.v, e.u);
  }
  return m;
}

namespace {

std::vector<std::size_t> path_to_root(std::size_t v, const std::vector<std::size_t>& parent) {
  std::vector<std::size_t> path{v};
  while (parent[v] != v) {
    v = parent[v];
    path.push_back(v);
  }
  return path;
}

std::vector<std::size_t> odd_cycle(std::size_t a, std::size_t b, const std::vector<std::size_t>& parent) {
  auto pa = path_to_root(a, parent);
  auto pb = path_to_root(b, parent);
  // strip the common tail above the lowest common ancestor
  while (pa.size() > 1 && pb.size() > 1 && pa[pa.size() - 2] == pb[pb.size() - 2]) {
    pa.pop_back();
    pb.pop_back();
  }
  std::vector<std::size_t> cycle = pa;  // a .. lca
  for (std::size_t i = pb.size() - 1; i-- > 0;) cycle.push_back(pb[i]);  // .. b
  return cycle;
}

}  // namespace

Bipartition two_color(const ExperimentGraph& g) {
  const std::size_t n = g.vertex_count();
  const auto inc = g.incidence();
  std::vector<int> color(n, -1);
  std::vector<std::size_t> parent(n);
  for (std::size_t root = 0; root < n; ++root) {
    if (color[root] != -1) continue;
    color[root] = 0;
    parent[root] = root;
    std::queue<std::size_t> queue;
    queue.push(root);
    while (!queue.empty()) {
      const std::size_t v = queue.front();
      queue.pop();
      for (std::size_t ei : inc[v]) {
        const std::size_t w = g.edge(ei).other(v);
        if (color[w] == -1) {
          color[w] = 1 - color[v];
          parent[w] = v;
          queue.push(w);
        } else if (color[w] == color[v]) {
          auto cycle = odd_cycle(v, w, parent);
          std::string names;
          for (std::size_t c : cycle) names += (names.empty() ? "" : "-") + g.vertex_name(c);
          throw NotBipartiteError(std::move(cycle), "graph is not bipartite: odd cycle " + names);
        }
      }
    }
  }
  Bipartition parts;
  for (std::size_t v = 0; v < n; ++v) (color[v] == 0 ? parts.x : parts.y).push_back(v);
  return parts;
}

void check_bipartition(const ExperimentGraph& g, const Bipartition& parts) {
  std::vector<int> side(g.vertex_count(), -1);
  for (std::size_t v : parts.x) side.at(v) = 0;
  for (std::size_t v : parts.y) {
    if (side.at(v) != -1) throw DomainError("vertex '" + g.vertex_name(v) + "' is in both parts");
    side[v] = 1;
  }
  if (std::find(side.begin(), side.end(), -1) != side.end()) {
    throw DomainError("bipartition does not cover every vertex");
  }
  for (const auto& e : g.edges()) {
    if (side[e.u] == side[e.v]) {
      throw DomainError("not_bipartite", "edge '" + e.id + "' lies inside one part");
    }
  }
}

Bipartition bipartition_by_order(const ExperimentGraph& g) {
  const std::size_t n = g.vertex_count();
  if (n % 2 != 0) throw DomainError("cannot split an odd vertex count into equal parts");
  Bipartition parts;
  for (std::size_t v = 0; v < n; ++v) (v < n / 2 ? parts.x : parts.y).push_back(v);
  check_bipartition(g, parts);
  return parts;
}

BiadjacencyMatrix biadjacency(const ExperimentGraph& g, const Bipartition& parts) {
  check_bipartition(g, parts);
  std::vector<std::size_t> pos(g.vertex_count());
  for (std::size_t i = 0; i < parts.x.size(); ++i) pos[parts.x[i]] = i;
  for (std::size_t i = 0; i < parts.y.size(); ++i) pos[parts.y[i]] = i;
  std::vector<bool> in_x(g.vertex_count(), false);
  for (std::size_t v : parts.x) in_x[v] = true;
  BiadjacencyMatrix m{parts, IntMatrix(parts.x.size(), parts.y.size(), 0)};
  for (const auto& e : g.edges()) {
    const std::size_t x = in_x[e.u] ? e.u : e.v;
    const std::size_t y = e.other(x);
    ++m.entries(pos[x], pos[y]);
  }
  return m;
}

BiadjacencyMatrix biadjacency(const ExperimentGraph& g) { return biadjacency(g, two_color(g)); }

}  // namespace pmgraph
