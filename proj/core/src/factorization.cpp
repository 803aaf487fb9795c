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

#include "pmgraph/factorization.hpp"

#include <algorithm>
#include <map>

#include <boost/dynamic_bitset.hpp>

#include "pmgraph/error.hpp"

namespace pmgraph {

namespace {

using EdgeMask = boost::dynamic_bitset<>;

class ExactCover {
 public:
  ExactCover(const ExperimentGraph& g, const std::vector<PerfectMatching>& pms)
      : pms_(pms), covered_(g.edge_count()) {
    order_.resize(g.edge_count());
    for (std::size_t i = 0; i < order_.size(); ++i) order_[i] = i;
    std::sort(order_.begin(), order_.end(),
              [&](std::size_t a, std::size_t b) { return g.edge(a).id < g.edge(b).id; });
    containing_.resize(g.edge_count());
    for (std::size_t k = 0; k < pms.size(); ++k) {
      EdgeMask m(g.edge_count());
      for (std::size_t e : pms[k].edge_indices) {
        m.set(e);
        containing_[e].push_back(k);
      }
      masks_.push_back(std::move(m));
    }
  }

  std::vector<Factorization> run() {
    descend(0);
    return std::move(found_);
  }

 private:
  void descend(std::size_t pos) {
    while (pos < order_.size() && covered_.test(order_[pos])) ++pos;
    if (pos == order_.size()) {
      Factorization f;
      for (std::size_t k : chosen_) f.factors.push_back(pms_[k]);
      found_.push_back(std::move(f));
      return;
    }
    // The lowest uncovered edge must lie in exactly one factor.
    for (std::size_t k : containing_[order_[pos]]) {
      if (masks_[k].intersects(covered_)) continue;
      covered_ |= masks_[k];
      chosen_.push_back(k);
      descend(pos + 1);
      chosen_.pop_back();
      covered_ ^= masks_[k];
    }
  }

  const std::vector<PerfectMatching>& pms_;
  std::vector<std::size_t> order_;
  std::vector<std::vector<std::size_t>> containing_;
  std::vector<EdgeMask> masks_;
  EdgeMask covered_;
  std::vector<std::size_t> chosen_;
  std::vector<Factorization> found_;
};

}  // namespace

std::vector<Factorization> enumerate_factorizations(const ExperimentGraph& g, const MatchingLimits& limits) {
  const auto deg = g.degrees();
  if (!deg.empty() && std::any_of(deg.begin(), deg.end(), [&](std::size_t d) { return d != deg[0]; })) {
    throw DomainError("not_regular", "1-factorizations need a regular graph");
  }
  const auto pms = enumerate_pm(g, limits);
  return ExactCover(g, pms).run();
}

LayerReport classify_layers(const ExperimentGraph& g, const MatchingLimits& limits) {
  std::map<std::uint32_t, std::vector<std::size_t>> layers;
  for (std::size_t i = 0; i < g.edge_count(); ++i) {
    const auto& e = g.edge(i);
    if (!e.layer) throw DomainError("edge '" + e.id + "' has no layer tag");
    layers[*e.layer].push_back(i);
  }
  std::map<std::vector<std::string>, std::uint32_t> layer_by_ids;
  for (const auto& [tag, edges] : layers) {
    if (!is_cover(g, edges)) {
      throw DomainError("bad_layer", "layer " + std::to_string(tag) + " is not a perfect matching");
    }
    layer_by_ids.emplace(make_matching(g, edges).edge_ids, tag);
  }

  LayerReport report;
  for (auto& pm : enumerate_pm(g, limits)) {
    auto it = layer_by_ids.find(pm.edge_ids);
    if (it != layer_by_ids.end()) {
      report.layer_tags.push_back(it->second);
      report.layer_matchings.push_back(std::move(pm));
    } else {
      report.maverick_matchings.push_back(std::move(pm));
    }
  }
  return report;
}

}  // namespace pmgraph
