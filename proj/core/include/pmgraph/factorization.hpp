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

#include <cstdint>
#include <vector>

#include "pmgraph/graph.hpp"
#include "pmgraph/matching.hpp"

namespace pmgraph {

/// A partition of all edges into perfect matchings (1-factors).
struct Factorization {
  std::vector<PerfectMatching> factors;
  bool operator==(const Factorization&) const = default;
};

/// Every 1-factorization of a regular graph, as unordered partitions.
/// Factors inside one factorization are ordered by their smallest edge id;
/// factorizations come out in depth-first order over that choice.
/// Throws DomainError for non-regular graphs.
std::vector<Factorization> enumerate_factorizations(const ExperimentGraph& g,
                                                    const MatchingLimits& limits = {});

/// Perfect matchings split by whether they coincide with one crystal layer.
struct LayerReport {
  std::vector<PerfectMatching> layer_matchings;
  /// Layer tag of each entry of `layer_matchings`.
  std::vector<std::uint32_t> layer_tags;
  std::vector<PerfectMatching> maverick_matchings;
};

/// Requires every edge to carry a layer tag and every layer to be a
/// perfect matching on its own; throws DomainError naming the first
/// offending layer otherwise.
LayerReport classify_layers(const ExperimentGraph& g, const MatchingLimits& limits = {});

}  // namespace pmgraph
