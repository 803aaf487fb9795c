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
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "pmgraph/graph.hpp"
#include "pmgraph/matrix.hpp"

namespace pmgraph {

/// Enumeration guard. Counting perfect matchings is #P-complete, so inputs
/// beyond these sizes are refused with ScaleLimitError unless `override_limits`.
struct MatchingLimits {
  std::size_t max_vertices = 24;
  std::size_t max_edges = 60;
  /// Vertex bound for exhaustive subgraph scans (2^(n(n-1)/2) graphs).
  std::size_t max_scan_vertices = 10;
  bool override_limits = false;
};

void check_enumeration_limits(const ExperimentGraph& g, const MatchingLimits& limits);

/// An edge subset covering each non-measured vertex once and each measured
/// vertex twice (a coincidence cover). Ids sorted ascending; `edge_indices`
/// are the matching graph positions in the same order.
struct PerfectMatching {
  std::vector<std::string> edge_ids;
  std::vector<std::size_t> edge_indices;

  bool operator==(const PerfectMatching& other) const { return edge_ids == other.edge_ids; }
  auto operator<=>(const PerfectMatching& other) const { return edge_ids <=> other.edge_ids; }
};

PerfectMatching make_matching(const ExperimentGraph& g, std::vector<std::size_t> edge_indices);

/// True iff the edges cover every vertex exactly as often as its demand.
bool is_cover(const ExperimentGraph& g, const std::vector<std::size_t>& edge_indices);

/// Visits every coincidence cover as a list of edge indices (selection order,
/// not sorted). Return false from the visitor to stop early. Branches on the
/// lowest-index vertex with unmet demand. No limit check.
void visit_covers(const ExperimentGraph& g,
                  const std::function<bool(const std::vector<std::size_t>&)>& visit);

/// All perfect matchings (coincidence covers), sorted by edge-id sets.
std::vector<PerfectMatching> enumerate_pm(const ExperimentGraph& g, const MatchingLimits& limits = {});

/// First cover in search order, if any.
std::optional<PerfectMatching> find_pm(const ExperimentGraph& g, const MatchingLimits& limits = {});

std::uint64_t count_pm(const ExperimentGraph& g, const MatchingLimits& limits = {});

/// (2n)! / (n! 2^n), the perfect-matching count of K_{2n}. Requires n >= 1.
BigInt count_pm_formula(std::size_t n);

struct DisjointMatchings {
  std::size_t d = 0;
  std::vector<PerfectMatching> witness;
};

/// Largest pairwise edge-disjoint family of perfect matchings (exact
/// backtracking). Among maximum families the lexicographically first in
/// enumeration order is returned.
DisjointMatchings max_disjoint_pms(const ExperimentGraph& g, const MatchingLimits& limits = {});

struct SubgraphScan {
  std::size_t vertices = 0;
  std::uint64_t subgraphs = 0;
  /// Largest d over graphs whose perfect matchings are all pairwise disjoint
  /// (every term of the state is a GHZ term).
  std::size_t max_d = 0;
  /// Largest max_disjoint_pms(g).d over all graphs, Maverick terms allowed.
  std::size_t max_d_any = 0;
  /// Lowest edge mask of K_n (bit k = k-th pair in lexicographic order) attaining max_d.
  std::uint64_t argmax_mask = 0;
  ExperimentGraph argmax;
};

/// Disjoint perfect matchings over all 2^(n(n-1)/2) simple graphs on n vertices.
/// Mask ranges are split across `threads` workers; the result does not
/// depend on the thread count.
SubgraphScan max_disjoint_over_subgraphs(std::size_t n, unsigned threads = 1,
                                         const MatchingLimits& limits = {});

/// Largest d for which an n-photon d-dimensional GHZ state comes from a
/// simple graph: 3 for n = 4, else 2. Requires n even and >= 4.
std::size_t ghz_dimension_bound(std::size_t n);

}  // namespace pmgraph
