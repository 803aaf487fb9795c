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

#pragma once

#include <pmgraph/pmgraph.hpp>

namespace pmgraph::testing {

/// K4 with three mode-uniform layers: {ab,cd} 0, {ac,bd} 1, {ad,bc} 2.
ExperimentGraph k4_ghz();

/// Six vertices, three layers of three crystals each.
ExperimentGraph three_layer();

/// three_layer() plus a fourth layer {ad,bf,ce} with modes 3.
ExperimentGraph four_layer();

/// K6 with a five-layer 1-factorization, modes equal to the layer index.
ExperimentGraph k6_five_layer();

/// Two crystals between a and b, both modes 0; the second one carries `phase`.
ExperimentGraph double_edge(double phase);

/// Bipartite graph with X = {a,c,e,g,i} in which N({c,e,g}) = {d,f}.
ExperimentGraph hall_fixture();

/// Triangles abc, efg, hij each joined to hub d.
ExperimentGraph spider();

ExperimentGraph cycle(std::size_t n);
ExperimentGraph two_triangles();

/// Two copies of k4_ghz() (the second on e,f,g,h) merged at (d,e).
ExperimentGraph merged_double_k4();

/// Random bipartite graph with parts x0..x(k-1) and y0..y(k-1), declared X first.
ExperimentGraph random_bipartite(std::size_t k, double p, std::uint64_t seed);

/// Random multigraph with random modes, magnitudes and phases.
ExperimentGraph random_multigraph(std::size_t n, std::size_t edges, Mode max_mode, std::uint64_t seed);

/// Simple graph on n vertices whose edges are the set bits of `mask` over lexicographic pairs.
ExperimentGraph graph_from_mask(std::size_t n, std::uint64_t mask);

/// Same graph with edges appended in a shuffled order.
ExperimentGraph shuffled(const ExperimentGraph& g, std::uint64_t seed);

/// Copy with every layer tag cleared.
ExperimentGraph without_layers(const ExperimentGraph& g);

}  // namespace pmgraph::testing
