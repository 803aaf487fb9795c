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

#include "pmgraph/matching.hpp"

#include <algorithm>
#include <thread>

#include <boost/dynamic_bitset.hpp>

#include "pmgraph/error.hpp"

namespace pmgraph {

void check_enumeration_limits(const ExperimentGraph& g, const MatchingLimits& limits) {
  if (limits.override_limits) return;
  if (g.vertex_count() > limits.max_vertices || g.edge_count() > limits.max_edges) {
    throw ScaleLimitError("graph with " + std::to_string(g.vertex_count()) + " vertices and " +
                          std::to_string(g.edge_count()) + " edges exceeds the enumeration limit (" +
                          std::to_string(limits.max_vertices) + " vertices, " +
                          std::to_string(limits.max_edges) + " edges)");
  }
}

PerfectMatching make_matching(const ExperimentGraph& g, std::vector<std::size_t> edge_indices) {
  std::sort(edge_indices.begin(), edge_indices.end(),
            [&](std::size_t a, std::size_t b) { return g.edge(a).id < g.edge(b).id; });
  PerfectMatching pm;
  pm.edge_ids.reserve(edge_indices.size());
  for (std::size_t i : edge_indices) pm.edge_ids.push_back(g.edge(i).id);
  pm.edge_indices = std::move(edge_indices);
  return pm;
}

bool is_cover(const ExperimentGraph& g, const std::vector<std::size_t>& edge_indices) {
  auto demand = g.cover_demand();
  std::vector<bool> seen(g.edge_count(), false);
  for (std::size_t i : edge_indices) {
    if (i >= g.edge_count() || seen[i]) return false;
    seen[i] = true;
    --demand[g.edge(i).u];
    --demand[g.edge(i).v];
  }
  return std::all_of(demand.begin(), demand.end(), [](int d) { return d == 0; });
}

namespace {

class CoverSearch {
 public:
  CoverSearch(const ExperimentGraph& g,
              const std::function<bool(const std::vector<std::size_t>&)>& visit)
      : g_(g), visit_(visit), incident_(g.incidence()), demand_(g.cover_demand()) {}

  void run() {
    int total = 0;
    for (int d : demand_) total += d;
    if (total % 2 != 0) return;
    descend(0);
  }

 private:
  // Returns false once the visitor asked to stop.
  bool descend(std::size_t from) {
    std::size_t v = from;
    while (v < demand_.size() && demand_[v] == 0) ++v;
    if (v == demand_.size()) return visit_(chosen_);
    return choose(v, 0);
  }

  // Picks the remaining demand of v from incident_[v][start..] in index order.
  bool choose(std::size_t v, std::size_t start) {
    if (demand_[v] == 0) return descend(v + 1);
    const auto& edges = incident_[v];
    for (std::size_t i = start; i < edges.size(); ++i) {
      const std::size_t w = g_.edge(edges[i]).other(v);
      if (demand_[w] == 0) continue;
      --demand_[v];
      --demand_[w];
      chosen_.push_back(edges[i]);
      const bool go_on = choose(v, i + 1);
      chosen_.pop_back();
      ++demand_[v];
      ++demand_[w];
      if (!go_on) return false;
    }
    return true;
  }

  const ExperimentGraph& g_;
  const std::function<bool(const std::vector<std::size_t>&)>& visit_;
  std::vector<std::vector<std::size_t>> incident_;
  std::vector<int> demand_;
  std::vector<std::size_t> chosen_;
};

}  // namespace

void visit_covers(const ExperimentGraph& g,
                  const std::function<bool(const std::vector<std::size_t>&)>& visit) {
  CoverSearch(g, visit).run();
}

std::vector<PerfectMatching> enumerate_pm(const ExperimentGraph& g, const MatchingLimits& limits) {
  check_enumeration_limits(g, limits);
  std::vector<PerfectMatching> out;
  visit_covers(g, [&](const std::vector<std::size_t>& cover) {
    out.push_back(make_matching(g, cover));
    return true;
  });
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<PerfectMatching> find_pm(const ExperimentGraph& g, const MatchingLimits& limits) {
  check_enumeration_limits(g, limits);
  std::optional<PerfectMatching> found;
  visit_covers(g, [&](const std::vector<std::size_t>& cover) {
    found = make_matching(g, cover);
    return false;
  });
  return found;
}

std::uint64_t count_pm(const ExperimentGraph& g, const MatchingLimits& limits) {
  check_enumeration_limits(g, limits);
  std::uint64_t count = 0;
  visit_covers(g, [&](const std::vector<std::size_t>&) {
    ++count;
    return true;
  });
  return count;
}

BigInt count_pm_formula(std::size_t n) {
  if (n == 0) throw DomainError("count_pm_formula needs n >= 1");
  // (2n)!/(n! 2^n) = 1 * 3 * 5 * ... * (2n-1)
  BigInt result = 1;
  for (std::size_t k = 1; k <= n; ++k) result *= 2 * k - 1;
  return result;
}

namespace {

using EdgeMask = boost::dynamic_bitset<>;

class DisjointSearch {
 public:
  DisjointSearch(std::vector<EdgeMask> masks, std::size_t upper_bound)
      : masks_(std::move(masks)), bound_(upper_bound) {}

  std::vector<std::size_t> run(std::size_t edge_count) {
    if (!masks_.empty()) descend(0, EdgeMask(edge_count));
    return best_;
  }

 private:
  // Returns true once the family reached the degree bound and search can stop.
  bool descend(std::size_t start, const EdgeMask& used) {
    if (current_.size() > best_.size()) {
      best_ = current_;
      if (best_.size() >= bound_) return true;
    }
    for (std::size_t i = start; i < masks_.size(); ++i) {
      if (current_.size() + (masks_.size() - i) <= best_.size()) break;
      if (masks_[i].intersects(used)) continue;
      current_.push_back(i);
      const bool done = descend(i + 1, used | masks_[i]);
      current_.pop_back();
      if (done) return true;
    }
    return false;
  }

  std::vector<EdgeMask> masks_;
  std::size_t bound_;
  std::vector<std::size_t> current_;
  std::vector<std::size_t> best_;
};

}  // namespace

DisjointMatchings max_disjoint_pms(const ExperimentGraph& g, const MatchingLimits& limits) {
  auto pms = enumerate_pm(g, limits);
  std::vector<EdgeMask> masks;
  masks.reserve(pms.size());
  for (const auto& pm : pms) {
    EdgeMask m(g.edge_count());
    for (std::size_t i : pm.edge_indices) m.set(i);
    masks.push_back(std::move(m));
  }
  // Disjoint covers use distinct edges at every vertex.
  std::size_t bound = pms.size();
  const auto deg = g.degrees();
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    bound = std::min(bound, g.is_measured(v) ? deg[v] / 2 : deg[v]);
  }
  const auto chosen = DisjointSearch(std::move(masks), bound).run(g.edge_count());
  DisjointMatchings out;
  out.d = chosen.size();
  for (std::size_t i : chosen) out.witness.push_back(pms[i]);
  return out;
}

namespace {

ExperimentGraph subgraph_of_complete(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& pairs,
                                     std::uint64_t mask) {
  ExperimentGraph g;
  for (std::size_t i = 0; i < n; ++i) g.add_vertex(default_vertex_name(i));
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    if ((mask >> k) & 1U) {
      Edge e;
      e.id = g.vertex_name(pairs[k].first) + g.vertex_name(pairs[k].second);
      e.u = pairs[k].first;
      e.v = pairs[k].second;
      g.add_edge(std::move(e));
    }
  }
  return g;
}

}  // namespace

SubgraphScan max_disjoint_over_subgraphs(std::size_t n, unsigned threads, const MatchingLimits& limits) {
  if (!limits.override_limits && n > limits.max_scan_vertices) {
    throw ScaleLimitError("exhaustive subgraph scan on " + std::to_string(n) +
                          " vertices exceeds the limit of " + std::to_string(limits.max_scan_vertices));
  }
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
  }
  if (pairs.size() >= 64) throw ScaleLimitError("subgraph scan needs fewer than 64 vertex pairs");
  const std::uint64_t total = std::uint64_t{1} << pairs.size();
  threads = std::max(1U, threads);

  struct Partial {
    std::size_t d = 0;
    std::uint64_t mask = 0;
    std::size_t d_any = 0;
  };
  std::vector<Partial> partial(threads);
  MatchingLimits inner = limits;
  inner.override_limits = true;
  auto work = [&](unsigned t) {
    const std::uint64_t begin = total * t / threads;
    const std::uint64_t end = total * (t + 1) / threads;
    Partial best{0, begin, 0};
    std::vector<int> uses(pairs.size());
    for (std::uint64_t mask = begin; mask < end; ++mask) {
      const auto g = subgraph_of_complete(n, pairs, mask);
      const auto pms = enumerate_pm(g, inner);
      std::fill(uses.begin(), uses.end(), 0);
      bool disjoint = true;
      for (const auto& pm : pms) {
        for (std::size_t e : pm.edge_indices) disjoint = disjoint && ++uses[e] == 1;
      }
      if (disjoint && pms.size() > best.d) {
        best.d = pms.size();
        best.mask = mask;
      }
      if (!pms.empty()) best.d_any = std::max(best.d_any, max_disjoint_pms(g, inner).d);
    }
    partial[t] = best;
  };
  if (threads == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work, t);
    for (auto& th : pool) th.join();
  }
  // Ranges are ordered, so the first strict improvement keeps the lowest mask.
  Partial best{0, 0, 0};
  for (const auto& p : partial) {
    if (p.d > best.d) {
      best.d = p.d;
      best.mask = p.mask;
    }
    best.d_any = std::max(best.d_any, p.d_any);
  }
  SubgraphScan scan;
  scan.vertices = n;
  scan.subgraphs = total;
  scan.max_d = best.d;
  scan.max_d_any = best.d_any;
  scan.argmax_mask = best.mask;
  scan.argmax = subgraph_of_complete(n, pairs, best.mask);
  return scan;
}

std::size_t ghz_dimension_bound(std::size_t n) {
  if (n < 4 || n % 2 != 0) {
    throw DomainError("GHZ dimension bound needs an even photon count >= 4, got " + std::to_string(n));
  }
  return n == 4 ? 3 : 2;
}

}  // namespace pmgraph
