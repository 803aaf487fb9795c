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

#include <cstddef>
#include <optional>
#include <variant>
#include <vector>

#include "pmgraph/adjacency.hpp"
#include "pmgraph/graph.hpp"
#include "pmgraph/matching.hpp"

namespace pmgraph {

/// A subset W of part X whose neighbourhood N(W) in Y is smaller than W.
struct HallWitness {
  std::vector<std::size_t> subset_w;
  std::vector<std::size_t> neighborhood;
};

/// A vertex set U whose removal leaves more than |U| odd components.
struct TutteWitness {
  std::vector<std::size_t> subset_u;
  /// Each component sorted; components ordered by their smallest vertex.
  std::vector<std::vector<std::size_t>> odd_components;
};

using HallResult = std::variant<PerfectMatching, HallWitness>;
using TutteResult = std::variant<PerfectMatching, TutteWitness>;

/// Bipartite matchability by augmenting paths. When no perfect matching
/// exists the witness is read off the alternating tree grown from an
/// unmatched X vertex: W is the X side of the tree, N(W) its Y side.
/// Parts come from two_color unless `parts` is given. Throws DomainError
/// for non-bipartite graphs, unequal parts or measured vertices.
HallResult hall_check(const ExperimentGraph& g, const std::optional<Bipartition>& parts = std::nullopt);

/// General matchability: a perfect matching by backtracking, or the first
/// Tutte set in order of increasing |U| then lexicographic vertex order.
/// Refuses graphs above `max_vertices` (20) with ScaleLimitError.
TutteResult tutte_check(const ExperimentGraph& g, std::size_t max_vertices = 20, bool override_limits = false);

/// Vertex sets of the connected components of G - removed, each with odd size.
std::vector<std::vector<std::size_t>> odd_components(const ExperimentGraph& g,
                                                     const std::vector<bool>& removed);

/// Neighbourhood of a vertex set, ascending.
std::vector<std::size_t> neighborhood(const ExperimentGraph& g, const std::vector<std::size_t>& vertices);

}  // namespace pmgraph
