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

#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "pmgraph/graph.hpp"

namespace pmgraph {

/// Parses a graph document:
///
///   {"vertices": ["a", "b"], "measured": [],
///    "edges": [{"id": "I", "u": "a", "v": "b", "mode_u": 0, "mode_v": 0,
///               "amp_mag": 1.0, "amp_phase_rad": 0.0, "layer": 0}]}
///
/// `measured`, edge `id`, modes, amplitude fields and `layer` are optional.
/// Throws ParseError with a JSON-pointer location on any violation.
ExperimentGraph parse_graph(std::string_view text);

/// Canonical document text: vertices in declaration order, edges sorted by
/// id, two-space indentation, trailing newline.
std::string serialize_graph(const ExperimentGraph& g);

nlohmann::ordered_json graph_to_json(const ExperimentGraph& g);
/// `where` prefixes error locations when the graph is embedded in a larger document.
ExperimentGraph graph_from_json(const nlohmann::json& doc, const std::string& where = "");

nlohmann::ordered_json edge_to_json(const ExperimentGraph& g, const Edge& e);
/// Reads one edge object into `g`.
void add_edge_from_json(ExperimentGraph& g, const nlohmann::json& obj, const std::string& where);

/// Graphviz rendering, one statement per edge labelled "id:(mode_u,mode_v)".
std::string to_dot(const ExperimentGraph& g);

/// Reads a whole file; throws Error("io_error") on failure.
std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, std::string_view text);

}  // namespace pmgraph
