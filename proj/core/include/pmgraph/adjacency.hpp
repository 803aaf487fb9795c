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
#include <vector>

#include "pmgraph/graph.hpp"
#include "pmgraph/matrix.hpp"

namespace pmgraph {

/// Symmetric edge-multiplicity matrix with zero diagonal.
struct AdjacencyMatrix {
  IntMatrix entries;
  std::size_t order() const noexcept { return entries.rows(); }
};

/// The two parts of a bipartite graph, vertex indices ascending.
struct Bipartition {
  std::vector<std::size_t> x;
  std::vector<std::size_t> y;
};

/// Multiplicity matrix between the parts: rows follow `parts.x`, columns `parts.y`.
struct BiadjacencyMatrix {
  Bipartition parts;
  IntMatrix entries;
};

AdjacencyMatrix adjacency(const ExperimentGraph& g);

/// 2-colors each component by BFS from its lowest-index vertex, which goes
/// to part X. Throws NotBipartiteError carrying an odd cycle.
Bipartition two_color(const ExperimentGraph& g);

/// Bipartition with X = the first half of the vertices in declaration order.
/// Throws DomainError if |V| is odd or an edge stays inside a part.
Bipartition bipartition_by_order(const ExperimentGraph& g);

/// Throws DomainError unless every edge joins X and Y and the parts cover V.
void check_bipartition(const ExperimentGraph& g, const Bipartition& parts);

BiadjacencyMatrix biadjacency(const ExperimentGraph& g);
BiadjacencyMatrix biadjacency(const ExperimentGraph& g, const Bipartition& parts);

}  // namespace pmgraph
