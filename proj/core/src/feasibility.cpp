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

#include "pmgraph/feasibility.hpp"

#include <algorithm>
#include <functional>
#include <queue>
#include <set>

#include "pmgraph/error.hpp"

namespace pmgraph {

namespace {

constexpr std::size_t kUnmatched = static_cast<std::size_t>(-1);

class Augmenter {
 public:
  Augmenter(const ExperimentGraph& g, const Bipartition& parts) : g_(g), parts_(parts) {
    const auto inc = g.incidence();
    neighbors_.resize(g.vertex_count());
    for (std::size_t x : parts.x) {
      std::set<std::size_t> ys;
      for (std::size_t ei : inc[x]) ys.insert(g.edge(ei).other(x));
      neighbors_[x].assign(ys.begin(), ys.end());
    }
    mate_.assign(g.vertex_count(), kUnmatched);
  }

  /// Index into parts.x of the first vertex left unmatched, if any.
  std::optional<std::size_t> run() {
    std::optional<std::size_t> first_free;
    for (std::size_t x : parts_.x) {
      visited_.assign(g_.vertex_count(), false);
      if (!augment(x) && !first_free) first_free = x;
    }
    return first_free;
  }

  std::size_t mate(std::size_t v) const { return mate_[v]; }
  const std::vector<std::size_t>& neighbors(std::size_t x) const { return neighbors_[x]; }

 private:
  bool augment(std::size_t x) {
    for (std::size_t y : neighbors_[x]) {
      if (visited_[y]) continue;
      visited_[y] = true;
      if (mate_[y] == kUnmatched || augment(mate_[y])) {
        mate_[y] = x;
        mate_[x] = y;
        return true;
      }
    }
    return false;
  }

  const ExperimentGraph& g_;
  const Bipartition& parts_;
  std::vector<std::vector<std::size_t>> neighbors_;
  std::vector<std::size_t> mate_;
  std::vector<bool> visited_;
};

}  // namespace

std::vector<std::size_t> neighborhood(const ExperimentGraph& g, const std::vector<std::size_t>& vertices) {
  std::vector<bool> in(g.vertex_count(), false);
  for (std::size_t v : vertices) in[v] = true;
  std::set<std::size_t> out;
  for (const auto& e : g.edges()) {
    if (in[e.u]) out.insert(e.v);
    if (in[e.v]) out.insert(e.u);
  }
  return {out.begin(), out.end()};
}

HallResult hall_check(const ExperimentGraph& g, const std::optional<Bipartition>& pinned) {
  if (g.measured_count() != 0) throw DomainError("Hall check does not model measured vertices");
  Bipartition parts = pinned ? *pinned : two_color(g);
  check_bipartition(g, parts);
  if (parts.x.size() != parts.y.size()) {
    throw DomainError("unequal_parts", "bipartition has unequal parts (" + std::to_string(parts.x.size()) +
                                           " vs " + std::to_string(parts.y.size()) + ")");
  }
  Augmenter aug(g, parts);
  const auto free_x = aug.run();
  if (!free_x) {
    std::vector<std::size_t> edges;
    for (std::size_t x : parts.x) {
      const std::size_t y = aug.mate(x);
      // lowest-id edge between the matched pair
      std::optional<std::size_t> pick;
      for (std::size_t i = 0; i < g.edge_count(); ++i) {
        const auto& e = g.edge(i);
        if (e.touches(x) && e.touches(y) && (!pick || e.id < g.edge(*pick).id)) pick = i;
      }
      edges.push_back(*pick);
    }
    return make_matching(g, std::move(edges));
  }
  // Alternating tree from the free vertex: every Y vertex reached is matched
  // (the matching is maximum), and its mate joins W.
  std::set<std::size_t> w{*free_x};
  std::set<std::size_t> n_w;
  std::queue<std::size_t> queue;
  queue.push(*free_x);
  while (!queue.empty()) {
    const std::size_t x = queue.front();
    queue.pop();
    for (std::size_t y : aug.neighbors(x)) {
      if (!n_w.insert(y).second) continue;
      const std::size_t x2 = aug.mate(y);
      if (x2 != kUnmatched && w.insert(x2).second) queue.push(x2);
    }
  }
  return HallWitness{{w.begin(), w.end()}, {n_w.begin(), n_w.end()}};
}

std::vector<std::vector<std::size_t>> odd_components(const ExperimentGraph& g, const std::vector<bool>& removed) {
  const auto inc = g.incidence();
  std::vector<bool> seen = removed;
  std::vector<std::vector<std::size_t>> out;
  for (std::size_t root = 0; root < g.vertex_count(); ++root) {
    if (seen[root]) continue;
    std::vector<std::size_t> component{root};
    seen[root] = true;
    for (std::size_t k = 0; k < component.size(); ++k) {
      for (std::size_t ei : inc[component[k]]) {
        const std::size_t w = g.edge(ei).other(component[k]);
        if (!seen[w]) {
          seen[w] = true;
          component.push_back(w);
        }
      }
    }
    if (component.size() % 2 == 1) {
      std::sort(component.begin(), component.end());
      out.push_back(std::move(component));
    }
  }
  return out;
}

TutteResult tutte_check(const ExperimentGraph& g, std::size_t max_vertices, bool override_limits) {
  if (g.measured_count() != 0) throw DomainError("Tutte check does not model measured vertices");
  if (!override_limits && g.vertex_count() > max_vertices) {
    throw ScaleLimitError("Tutte check on " + std::to_string(g.vertex_count()) +
                          " vertices exceeds the limit of " + std::to_string(max_vertices));
  }
  MatchingLimits unlimited;
  unlimited.override_limits = true;
  if (auto pm = find_pm(g, unlimited)) return *pm;

  const std::size_t n = g.vertex_count();
  for (std::size_t size = 0; size <= n; ++size) {
    // subsets of this size in lexicographic order
    std::vector<bool> pick(n, false);
    std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(size), true);
    do {
      auto odd = odd_components(g, pick);
      if (odd.size() > size) {
        TutteWitness witness;
        for (std::size_t v = 0; v < n; ++v) {
          if (pick[v]) witness.subset_u.push_back(v);
        }
        witness.odd_components = std::move(odd);
        return witness;
      }
    } while (std::prev_permutation(pick.begin(), pick.end()));
  }
  throw std::logic_error("no perfect matching and no Tutte set found");
}

}  // namespace pmgraph
