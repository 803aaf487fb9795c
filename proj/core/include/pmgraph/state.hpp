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
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "pmgraph/graph.hpp"
#include "pmgraph/matching.hpp"

namespace pmgraph {

/// Mode of each non-measured vertex, in declaration order.
using Ket = std::vector<Mode>;

/// Pruning and comparison tolerance for amplitudes.
inline constexpr double kAmplitudeTolerance = 1e-9;

struct QuantumState {
  std::map<Ket, Amplitude> terms;
  bool normalized = false;

  double norm_squared() const;
  std::size_t ket_length() const { return terms.empty() ? 0 : terms.begin()->first.size(); }
  bool operator==(const QuantumState&) const = default;
};

/// Scales to unit norm. Throws FrustratedError for an empty state.
QuantumState normalize(QuantumState s);

/// Rotates the global phase so the first term (in ket order) is positive real.
QuantumState fix_global_phase(QuantumState s);

/// Term-by-term comparison after global-phase fixing; kets must match exactly
/// and amplitudes within `tolerance`. Neither state is rescaled.
bool equal_up_to_global_phase(const QuantumState& a, const QuantumState& b,
                              double tolerance = kAmplitudeTolerance);

/// Post-selected state of the experiment: the coherent sum over coincidence
/// covers of the product of edge amplitudes, keyed by the modes the cover
/// assigns to each non-measured vertex. A measured vertex only admits covers
/// whose two edges give it the same mode (projection onto sum_i |i,i>).
/// Terms below kAmplitudeTolerance are dropped. With `normalize_state` the
/// result has unit norm; throws DomainError if no cover exists and
/// FrustratedError if every amplitude cancels.
QuantumState state_from_graph(const ExperimentGraph& g, bool normalize_state,
                              const MatchingLimits& limits = {});

/// All magnitudes equal and every pair of kets differs at every position.
bool is_ghz_like(const QuantumState& s);

/// Normalized state of `g` equals the normalized target up to a global phase.
bool verify_target(const ExperimentGraph& g, const QuantumState& target,
                   const MatchingLimits& limits = {});

/// Bounds for search_graph_for_state.
struct SearchBounds {
  std::size_t max_edges = 8;
  Mode max_mode = 3;
  /// Maximum number of edges between one vertex pair (1 = simple graphs).
  std::size_t max_parallel = 4;
};

/// Exhaustive search for a multigraph with unit-amplitude edges whose
/// normalized state equals `target`. Edge counts are tried in increasing
/// order and, within a count, edge multisets in canonical order, so the
/// result is the first minimum-size graph. Returns nullopt once exhausted.
std::optional<ExperimentGraph> search_graph_for_state(const QuantumState& target,
                                                      const SearchBounds& bounds = {});

struct FrustrationPoint {
  double phase = 0.0;
  double intensity = 0.0;
};

/// Total unnormalized intensity sum |amp|^2 as one edge's phase is swept.
/// Throws DomainError("unknown_edge") if the id does not exist.
std::vector<FrustrationPoint> frustration_scan(const ExperimentGraph& g, std::string_view edge_id,
                                               std::span<const double> phases,
                                               const MatchingLimits& limits = {});

/// "|0,1,2>" style.
std::string format_ket(const Ket& ket);
/// One "amplitude |ket>" line per term.
std::string format_state(const QuantumState& s);

/// State document: [{"modes": [0, 0], "amp_mag": 1.0, "amp_phase_rad": 0.0}, ...]
QuantumState parse_state(std::string_view text);
std::string serialize_state(const QuantumState& s);
nlohmann::ordered_json state_to_json(const QuantumState& s);
QuantumState state_from_json(const nlohmann::json& doc);

}  // namespace pmgraph
