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

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <set>
#include <stdexcept>
#include <tuple>

#include "pmgraph/error.hpp"
#include "pmgraph/state.hpp"

namespace pmgraph {

namespace {

struct EdgeType {
  std::size_t u;
  std::size_t v;
  Mode mode_u;
  Mode mode_v;
  auto operator<=>(const EdgeType&) const = default;
};

// Depth-first search over edge multisets drawn from target-compatible edge
// types. With unit amplitudes nothing can cancel, which gives two monotone
// prunes: every perfect matching of a partial graph must already produce a
// target ket, and every (vertex, mode) pair used by a target ket needs an
// edge carrying that mode at that vertex.
class StateSearch {
 public:
  StateSearch(const QuantumState& target, const SearchBounds& bounds)
      : target_(normalize(target)), bounds_(bounds), n_(target.ket_length()) {
    for (const auto& [ket, amp] : target_.terms) support_.insert(ket);
    std::map<std::pair<std::size_t, Mode>, std::size_t> req_index;
    for (const auto& ket : support_) {
      for (std::size_t v = 0; v < n_; ++v) {
        if (ket[v] > bounds_.max_mode) feasible_ = false;
        req_index.try_emplace({v, ket[v]}, req_index.size());
      }
    }
    requirements_ = req_index.size();
    std::set<EdgeType> types;
    for (const auto& ket : support_) {
      for (std::size_t u = 0; u < n_; ++u) {
        for (std::size_t v = u + 1; v < n_; ++v) types.insert({u, v, ket[u], ket[v]});
      }
    }
    types_.assign(types.begin(), types.end());
    for (const auto& t : types_) {
      type_reqs_.push_back({req_index.at({t.u, t.mode_u}), req_index.at({t.v, t.mode_v})});
    }
    // suffix_[i][r]: some type at index >= i meets requirement r
    suffix_.assign(types_.size() + 1, std::vector<bool>(requirements_, false));
    for (std::size_t i = types_.size(); i-- > 0;) {
      suffix_[i] = suffix_[i + 1];
      suffix_[i][type_reqs_[i].first] = true;
      suffix_[i][type_reqs_[i].second] = true;
    }
    met_.assign(requirements_, 0);
    pair_count_.assign(n_ * n_, 0);
  }

  std::optional<std::vector<EdgeType>> run() {
    if (!feasible_ || n_ == 0 || n_ % 2 != 0) return std::nullopt;
    const std::size_t lower = (requirements_ + 1) / 2;
    for (std::size_t k = std::max<std::size_t>(lower, n_ / 2); k <= bounds_.max_edges; ++k) {
      budget_ = k;
      if (descend(0)) {
        std::vector<EdgeType> out;
        for (std::size_t i : chosen_) out.push_back(types_[i]);
        return out;
      }
    }
    return std::nullopt;
  }

 private:
  bool descend(std::size_t start) {
    const std::size_t left = budget_ - chosen_.size();
    std::size_t unmet = 0;
    for (std::size_t r = 0; r < requirements_; ++r) {
      if (met_[r] != 0) continue;
      ++unmet;
      if (!suffix_[start][r]) return false;
    }
    if (unmet > 2 * left) return false;
    if (left == 0) return matches_target();
    for (std::size_t i = start; i < types_.size(); ++i) {
      const auto& t = types_[i];
      auto& pc = pair_count_[t.u * n_ + t.v];
      if (pc >= bounds_.max_parallel) continue;
      ++pc;
      ++met_[type_reqs_[i].first];
      ++met_[type_reqs_[i].second];
      chosen_.push_back(i);
      const bool found = support_closed() && descend(i);
      if (found) return true;
      chosen_.pop_back();
      --met_[type_reqs_[i].second];
      --met_[type_reqs_[i].first];
      --pc;
    }
    return false;
  }

  // Calls visit(ket) for every perfect matching of the chosen edges.
  template <class Visit>
  bool each_matching(Visit&& visit) {
    std::vector<std::size_t> stack;
    Ket ket(n_);
    std::uint32_t covered = 0;
    const std::uint32_t full = n_ == 32 ? ~0U : (1U << n_) - 1;
    auto rec = [&](auto& self) -> bool {
      if (covered == full) return visit(ket);
      const std::size_t v = static_cast<std::size_t>(std::countr_one(covered));
      for (std::size_t i : chosen_) {
        const auto& t = types_[i];
        if (t.u != v) continue;  // v is the lowest uncovered vertex, so it is t.u
        if (covered & (1U << t.v)) continue;
        covered |= (1U << t.u) | (1U << t.v);
        ket[t.u] = t.mode_u;
        ket[t.v] = t.mode_v;
        const bool go_on = self(self);
        covered &= ~((1U << t.u) | (1U << t.v));
        if (!go_on) return false;
      }
      return true;
    };
    return rec(rec);
  }

  bool support_closed() {
    return each_matching([&](const Ket& ket) { return support_.contains(ket); });
  }

  bool matches_target() {
    QuantumState produced;
    each_matching([&](const Ket& ket) {
      produced.terms[ket] += 1.0;
      return true;
    });
    if (produced.terms.size() != support_.size()) return false;
    return equal_up_to_global_phase(normalize(std::move(produced)), target_);
  }

  QuantumState target_;
  SearchBounds bounds_;
  std::size_t n_;
  bool feasible_ = true;
  std::set<Ket> support_;
  std::size_t requirements_ = 0;
  std::vector<EdgeType> types_;
  std::vector<std::pair<std::size_t, std::size_t>> type_reqs_;
  std::vector<std::vector<bool>> suffix_;
  std::vector<int> met_;
  std::vector<std::size_t> pair_count_;
  std::size_t budget_ = 0;
  std::vector<std::size_t> chosen_;
};

}  // namespace

std::optional<ExperimentGraph> search_graph_for_state(const QuantumState& target, const SearchBounds& bounds) {
  if (target.terms.empty()) return std::nullopt;
  if (target.ket_length() > 24) throw ScaleLimitError("state search supports at most 24 photons");
  auto edges = StateSearch(target, bounds).run();
  if (!edges) return std::nullopt;
  ExperimentGraph g;
  for (std::size_t v = 0; v < target.ket_length(); ++v) g.add_vertex(default_vertex_name(v));
  for (const auto& t : *edges) {
    Edge e;
    e.u = t.u;
    e.v = t.v;
    e.mode_u = t.mode_u;
    e.mode_v = t.mode_v;
    g.add_edge(std::move(e));
  }
  if (!verify_target(g, target)) throw std::logic_error("state search returned a non-matching graph");
  return g;
}

}  // namespace pmgraph
