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

#include <complex>
#include <cstddef>
#include <optional>

#include "pmgraph/graph.hpp"
#include "pmgraph/matrix.hpp"

namespace pmgraph {

/// Order limits for the exact kernels; exceeding them throws ScaleLimitError.
struct CounterLimits {
  std::size_t max_hafnian_order = 24;
  std::size_t max_permanent_order = 20;
  bool override_limits = false;
};

/// Tolerance used when comparing complex kernel results.
inline constexpr double kComplexTolerance = 1e-9;

/// Sum over all perfect pairings of the product of paired entries.
/// Expands along the lowest remaining row and memoizes on the set of
/// remaining indices. Requires an even-order symmetric matrix with zero
/// diagonal (exact comparison).
BigInt hafnian(const IntMatrix& m, const CounterLimits& limits = {});
std::complex<double> hafnian(const ComplexMatrix& m, const CounterLimits& limits = {});

/// Ryser's inclusion-exclusion formula, walking column subsets in Gray-code
/// order so each step adds or removes one column from the row sums.
BigInt permanent(const IntMatrix& m, const CounterLimits& limits = {});
std::complex<double> permanent(const ComplexMatrix& m, const CounterLimits& limits = {});

struct MatrixCount {
  BigInt hafnian;
  /// Present when the graph is bipartite with equal parts.
  std::optional<BigInt> permanent;
};

/// Perfect-matching count via the hafnian of the adjacency matrix and, for
/// balanced bipartite graphs, the permanent of the biadjacency matrix.
/// Throws std::logic_error if the two disagree. Measured vertices are not
/// supported (DomainError).
MatrixCount count_pm_via_matrix(const ExperimentGraph& g, const CounterLimits& limits = {});

}  // namespace pmgraph
