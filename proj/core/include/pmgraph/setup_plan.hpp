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

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "pmgraph/graph.hpp"

namespace pmgraph {

/// One crystal placed in a layer.
struct Crystal {
  std::string edge_id;
  std::string path_u;
  std::string path_v;
  Mode mode_u = 0;
  Mode mode_v = 0;
  double amp_mag = 1.0;
  double amp_phase = 0.0;
  bool operator==(const Crystal&) const = default;
};

/// A buildable arrangement: detectors (one per path), layers of crystals in
/// which no two crystals share a path, and for every path the crystals it
/// passes through in layer order.
struct SetupPlan {
  std::vector<std::string> detectors;
  std::vector<std::vector<Crystal>> layers;
  std::map<std::string, std::vector<std::string>> wiring;
  bool operator==(const SetupPlan&) const = default;
};

/// Assigns crystals to layers. Pre-tagged edges keep their tag (layers are
/// ordered by tag value); untagged edges are placed greedily in edge-id order
/// into the first layer where both paths are free, opening a new layer when
/// none is. Throws DomainError("layer_conflict") if two edges with the same
/// tag share a path, and DomainError for measured vertices.
SetupPlan synthesize_setup(const ExperimentGraph& g);

/// Inverse of synthesize_setup: edges carry their layer index as tag.
/// Throws DomainError("wiring_mismatch") when the wiring or layers are
/// inconsistent.
ExperimentGraph plan_to_graph(const SetupPlan& plan);

/// Per-path crystal order implied by the layers.
std::map<std::string, std::vector<std::string>> derive_wiring(const SetupPlan& plan);

nlohmann::ordered_json plan_to_json(const SetupPlan& plan);
SetupPlan plan_from_json(const nlohmann::json& doc);
std::string serialize_plan(const SetupPlan& plan);
SetupPlan parse_plan(std::string_view text);

/// Human-readable layer-by-layer listing.
std::string format_plan(const SetupPlan& plan);

}  // namespace pmgraph
