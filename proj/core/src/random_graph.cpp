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

#include <cmath>
#include <random>

#include "pmgraph/error.hpp"
#include "pmgraph/graph.hpp"
#include "pmgraph/rng.hpp"

namespace pmgraph {

ExperimentGraph random_graph(std::size_t n, double p, std::uint64_t seed) {
  if (!(p >= 0.0 && p <= 1.0)) throw DomainError("edge probability must lie in [0, 1]");
  ExperimentGraph g;
  for (std::size_t i = 0; i < n; ++i) g.add_vertex("v" + std::to_string(i));
  std::mt19937_64 engine(seed);
  std::size_t k = 0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      // one draw per pair regardless of p, so graphs for different p are nested
      if (uniform01(engine) < p) {
        Edge e;
        e.id = "e" + std::to_string(k++);
        e.u = i;
        e.v = j;
        g.add_edge(std::move(e));
      }
    }
  }
  return g;
}

}  // namespace pmgraph
