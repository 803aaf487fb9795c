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
#include <map>
#include <span>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "pmgraph/graph.hpp"
#include "pmgraph/state.hpp"

namespace pmgraph {

/// Perfect-matching statistics of G(n, p) samples.
struct EnsembleReport {
  std::size_t n = 0;
  double p = 0.0;
  std::uint64_t trials = 0;
  std::uint64_t seed = 0;
  double pm_exists_fraction = 0.0;
  /// perfect-matching count -> number of trials with that count
  std::map<std::uint64_t, std::uint64_t> pm_count_histogram;
  bool operator==(const EnsembleReport&) const = default;
};

/// Samples `trials` graphs per p. Trial t uses derive_seed(seed, t) for every
/// p, so samples for different p are nested edge sets and the fraction is
/// non-decreasing in p. Trials are split across `threads` workers without
/// affecting the result.
std::vector<EnsembleReport> ensemble_scan(std::size_t n, std::span<const double> p_values,
                                          std::uint64_t trials, std::uint64_t seed, unsigned threads = 1);

/// Lowest-order 2n-fold coincidence amplitude: p^(edges per cover) times
/// the sum over covers of the product of edge amplitudes. Requires
/// 0 < p <= 1 and an even cover demand (DomainError otherwise).
Amplitude network_amplitude(const ExperimentGraph& g, double p, const MatchingLimits& limits = {});

/// The same expansion resolved per ket: state_from_graph(g, false) with
/// every amplitude scaled by p^(edges per cover).
QuantumState network_terms(const ExperimentGraph& g, double p, const MatchingLimits& limits = {});

nlohmann::ordered_json ensemble_to_json(std::span<const EnsembleReport> reports);
std::vector<EnsembleReport> ensemble_from_json(const nlohmann::json& doc);
/// Columns p,fraction,count,frequency; one row per histogram bin.
std::string ensemble_to_csv(std::span<const EnsembleReport> reports);

}  // namespace pmgraph
