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

#include "fixtures.hpp"

#include <algorithm>
#include <numbers>
#include <random>

namespace pmgraph::testing {

namespace {

void add_layer(ExperimentGraph& g, std::initializer_list<const char*> pairs, std::uint32_t layer) {
  for (const char* pair : pairs) {
    const std::string id(pair);
    g.add_edge(EdgeSpec{.id = id,
                        .u = id.substr(0, 1),
                        .v = id.substr(1, 1),
                        .mode_u = layer,
                        .mode_v = layer,
                        .layer = layer});
  }
}

}  // namespace

ExperimentGraph k4_ghz() {
  ExperimentGraph g{"a", "b", "c", "d"};
  add_layer(g, {"ab", "cd"}, 0);
  add_layer(g, {"ac", "bd"}, 1);
  add_layer(g, {"ad", "bc"}, 2);
  return g;
}

ExperimentGraph three_layer() {
  ExperimentGraph g{"a", "b", "c", "d", "e", "f"};
  add_layer(g, {"ab", "cd", "ef"}, 0);
  add_layer(g, {"ac", "be", "df"}, 1);
  add_layer(g, {"bd", "ae", "cf"}, 2);
  return g;
}

ExperimentGraph four_layer() {
  ExperimentGraph g = three_layer();
  add_layer(g, {"ad", "bf", "ce"}, 3);
  return g;
}

ExperimentGraph k6_five_layer() {
  ExperimentGraph g = four_layer();
  add_layer(g, {"af", "bc", "de"}, 4);
  return g;
}

ExperimentGraph double_edge(double phase) {
  ExperimentGraph g{"a", "b"};
  g.add_edge(EdgeSpec{.id = "I", .u = "a", .v = "b"});
  g.add_edge(EdgeSpec{.id = "II", .u = "a", .v = "b", .amp_phase = phase});
  return g;
}

ExperimentGraph hall_fixture() {
  ExperimentGraph g{"a", "b", "c", "d", "e", "f", "g", "h", "i", "j"};
  for (const char* pair : {"ab", "ah", "cd", "cf", "ed", "ef", "gd", "gf", "ih", "ij"}) {
    const std::string id(pair);
    g.add_edge(EdgeSpec{.id = id, .u = id.substr(0, 1), .v = id.substr(1, 1)});
  }
  return g;
}

ExperimentGraph spider() {
  ExperimentGraph g{"a", "b", "c", "d", "e", "f", "g", "h", "i", "j"};
  for (const char* pair : {"ab", "bc", "ac", "ef", "fg", "eg", "hi", "ij", "hj", "cd", "ed", "hd"}) {
    const std::string id(pair);
    g.add_edge(EdgeSpec{.id = id, .u = id.substr(0, 1), .v = id.substr(1, 1)});
  }
  return g;
}

ExperimentGraph cycle(std::size_t n) {
  ExperimentGraph g;
  for (std::size_t i = 0; i < n; ++i) g.add_vertex(default_vertex_name(i));
  for (std::size_t i = 0; i < n; ++i) {
    g.add_edge(EdgeSpec{.u = default_vertex_name(i), .v = default_vertex_name((i + 1) % n)});
  }
  return g;
}

ExperimentGraph two_triangles() {
  ExperimentGraph g{"a", "b", "c", "d", "e", "f"};
  for (const char* pair : {"ab", "bc", "ac", "de", "ef", "df"}) {
    const std::string id(pair);
    g.add_edge(EdgeSpec{.id = id, .u = id.substr(0, 1), .v = id.substr(1, 1)});
  }
  return g;
}

ExperimentGraph merged_double_k4() {
  ExperimentGraph second{"e", "f", "g", "h"};
  const ExperimentGraph first = k4_ghz();
  const std::string rename = "efgh";
  for (const Edge& e : first.edges()) {
    second.add_edge(EdgeSpec{.id = std::string(1, rename[e.u]) + rename[e.v],
                             .u = std::string(1, rename[e.u]),
                             .v = std::string(1, rename[e.v]),
                             .mode_u = e.mode_u,
                             .mode_v = e.mode_v});
  }
  const std::vector<MergePair> pairs{{"d", "e"}};
  return merge_graphs(first, second, pairs);
}

ExperimentGraph random_bipartite(std::size_t k, double p, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(p);
  ExperimentGraph g;
  for (std::size_t i = 0; i < k; ++i) g.add_vertex("x" + std::to_string(i));
  for (std::size_t i = 0; i < k; ++i) g.add_vertex("y" + std::to_string(i));
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      if (coin(rng)) g.add_edge(EdgeSpec{.u = "x" + std::to_string(i), .v = "y" + std::to_string(j)});
    }
  }
  return g;
}

ExperimentGraph random_multigraph(std::size_t n, std::size_t edges, Mode max_mode, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> vertex(0, n - 1);
  std::uniform_int_distribution<Mode> mode(0, max_mode);
  std::uniform_real_distribution<double> mag(0.25, 2.0);
  std::uniform_real_distribution<double> phase(0.0, 2.0 * std::numbers::pi);
  ExperimentGraph g;
  for (std::size_t i = 0; i < n; ++i) g.add_vertex(default_vertex_name(i));
  while (g.edge_count() < edges) {
    const std::size_t u = vertex(rng);
    const std::size_t v = vertex(rng);
    if (u == v) continue;
    g.add_edge(EdgeSpec{.u = default_vertex_name(u),
                        .v = default_vertex_name(v),
                        .mode_u = mode(rng),
                        .mode_v = mode(rng),
                        .amp_mag = mag(rng),
                        .amp_phase = phase(rng)});
  }
  return g;
}

ExperimentGraph graph_from_mask(std::size_t n, std::uint64_t mask) {
  ExperimentGraph g;
  for (std::size_t i = 0; i < n; ++i) g.add_vertex(default_vertex_name(i));
  std::size_t bit = 0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j, ++bit) {
      if ((mask >> bit) & 1U) g.add_edge(EdgeSpec{.u = default_vertex_name(i), .v = default_vertex_name(j)});
    }
  }
  return g;
}

ExperimentGraph shuffled(const ExperimentGraph& g, std::uint64_t seed) {
  std::vector<Edge> edges(g.edges().begin(), g.edges().end());
  std::mt19937_64 rng(seed);
  std::shuffle(edges.begin(), edges.end(), rng);
  ExperimentGraph out(g.vertex_names());
  for (std::size_t v = 0; v < g.vertex_count(); ++v) out.set_measured(v, g.is_measured(v));
  for (Edge& e : edges) out.add_edge(std::move(e));
  return out;
}

ExperimentGraph without_layers(const ExperimentGraph& g) {
  ExperimentGraph out(g.vertex_names());
  for (std::size_t v = 0; v < g.vertex_count(); ++v) out.set_measured(v, g.is_measured(v));
  for (Edge e : g.edges()) {
    e.layer.reset();
    out.add_edge(std::move(e));
  }
  return out;
}

}  // namespace pmgraph::testing
