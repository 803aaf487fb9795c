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

#include "pmgraph/setup_plan.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "pmgraph/error.hpp"
#include "pmgraph/graph_io.hpp"

namespace pmgraph {

using nlohmann::json;
using nlohmann::ordered_json;

SetupPlan synthesize_setup(const ExperimentGraph& g) {
  if (g.measured_count() != 0) {
    throw DomainError("measured vertices need one plan per merged experiment plus a joint measurement");
  }
  const ExperimentGraph canon = g.canonical();

  // occupied[layer][vertex]
  std::vector<std::vector<bool>> occupied;
  std::vector<std::vector<std::size_t>> members;
  std::vector<std::uint32_t> tags;
  for (const auto& e : canon.edges()) {
    if (e.layer) tags.push_back(*e.layer);
  }
  std::sort(tags.begin(), tags.end());
  tags.erase(std::unique(tags.begin(), tags.end()), tags.end());
  occupied.assign(tags.size(), std::vector<bool>(canon.vertex_count(), false));
  members.assign(tags.size(), {});

  for (std::size_t i = 0; i < canon.edge_count(); ++i) {
    const auto& e = canon.edge(i);
    if (!e.layer) continue;
    const auto layer = static_cast<std::size_t>(std::lower_bound(tags.begin(), tags.end(), *e.layer) - tags.begin());
    if (occupied[layer][e.u] || occupied[layer][e.v]) {
      throw DomainError("layer_conflict", "edge '" + e.id + "' shares a path with another crystal in layer " +
                                              std::to_string(*e.layer));
    }
    occupied[layer][e.u] = occupied[layer][e.v] = true;
    members[layer].push_back(i);
  }
  for (std::size_t i = 0; i < canon.edge_count(); ++i) {
    const auto& e = canon.edge(i);
    if (e.layer) continue;
    std::size_t layer = 0;
    while (layer < occupied.size() && (occupied[layer][e.u] || occupied[layer][e.v])) ++layer;
    if (layer == occupied.size()) {
      occupied.emplace_back(canon.vertex_count(), false);
      members.emplace_back();
    }
    occupied[layer][e.u] = occupied[layer][e.v] = true;
    members[layer].push_back(i);
  }

  SetupPlan plan;
  plan.detectors = canon.vertex_names();
  for (auto& layer : members) {
    std::sort(layer.begin(), layer.end());  // canonical edges are already id-ordered
    std::vector<Crystal> crystals;
    for (std::size_t i : layer) {
      const auto& e = canon.edge(i);
      crystals.push_back({e.id, canon.vertex_name(e.u), canon.vertex_name(e.v), e.mode_u, e.mode_v, e.amp_mag,
                          e.amp_phase});
    }
    plan.layers.push_back(std::move(crystals));
  }
  plan.wiring = derive_wiring(plan);
  return plan;
}

std::map<std::string, std::vector<std::string>> derive_wiring(const SetupPlan& plan) {
  std::map<std::string, std::vector<std::string>> wiring;
  for (const auto& path : plan.detectors) wiring[path];
  for (const auto& layer : plan.layers) {
    for (const auto& c : layer) {
      wiring[c.path_u].push_back(c.edge_id);
      wiring[c.path_v].push_back(c.edge_id);
    }
  }
  return wiring;
}

ExperimentGraph plan_to_graph(const SetupPlan& plan) {
  ExperimentGraph g;
  for (const auto& d : plan.detectors) g.add_vertex(d);
  for (std::size_t l = 0; l < plan.layers.size(); ++l) {
    std::set<std::string> used;
    for (const auto& c : plan.layers[l]) {
      if (!used.insert(c.path_u).second || !used.insert(c.path_v).second) {
        throw DomainError("wiring_mismatch", "layer " + std::to_string(l) + " uses path twice at crystal '" +
                                                 c.edge_id + "'");
      }
      g.add_edge(EdgeSpec{c.edge_id, c.path_u, c.path_v, c.mode_u, c.mode_v, c.amp_mag, c.amp_phase,
                          static_cast<std::uint32_t>(l)});
    }
  }
  if (derive_wiring(plan) != plan.wiring) {
    throw DomainError("wiring_mismatch", "path wiring disagrees with the crystal layers");
  }
  return g;
}

ordered_json plan_to_json(const SetupPlan& plan) {
  ordered_json doc;
  doc["detectors"] = plan.detectors;
  ordered_json layers = ordered_json::array();
  for (const auto& layer : plan.layers) {
    ordered_json crystals = ordered_json::array();
    for (const auto& c : layer) {
      ordered_json obj;
      obj["id"] = c.edge_id;
      obj["u"] = c.path_u;
      obj["v"] = c.path_v;
      obj["mode_u"] = c.mode_u;
      obj["mode_v"] = c.mode_v;
      obj["amp_mag"] = c.amp_mag;
      obj["amp_phase_rad"] = c.amp_phase;
      crystals.push_back(std::move(obj));
    }
    layers.push_back(std::move(crystals));
  }
  doc["layers"] = std::move(layers);
  ordered_json wiring = ordered_json::object();
  for (const auto& path : plan.detectors) {
    auto it = plan.wiring.find(path);
    wiring[path] = it == plan.wiring.end() ? std::vector<std::string>{} : it->second;
  }
  doc["wiring"] = std::move(wiring);
  return doc;
}

SetupPlan plan_from_json(const json& doc) {
  if (!doc.is_object()) throw ParseError("/", "expected an object");
  SetupPlan plan;
  auto detectors = doc.find("detectors");
  if (detectors == doc.end() || !detectors->is_array()) throw ParseError("/detectors", "expected a list");
  // Reuse the graph reader for names and crystals; it validates endpoints and ids.
  ExperimentGraph scratch;
  for (std::size_t i = 0; i < detectors->size(); ++i) {
    const auto& d = (*detectors)[i];
    const std::string at = "/detectors/" + std::to_string(i);
    if (!d.is_string() || d.get<std::string>().empty()) throw ParseError(at, "expected a name");
    if (scratch.find_vertex(d.get<std::string>())) throw ParseError(at, "duplicate detector");
    scratch.add_vertex(d.get<std::string>());
    plan.detectors.push_back(d.get<std::string>());
  }
  auto layers = doc.find("layers");
  if (layers == doc.end() || !layers->is_array()) throw ParseError("/layers", "expected a list");
  for (std::size_t l = 0; l < layers->size(); ++l) {
    const auto& layer = (*layers)[l];
    const std::string at = "/layers/" + std::to_string(l);
    if (!layer.is_array()) throw ParseError(at, "expected a list of crystals");
    std::vector<Crystal> crystals;
    for (std::size_t k = 0; k < layer.size(); ++k) {
      const std::string where = at + "/" + std::to_string(k);
      if (!layer[k].contains("id")) throw ParseError(where, "missing field 'id'");
      add_edge_from_json(scratch, layer[k], where);
      const Edge& e = scratch.edge(scratch.edge_count() - 1);
      // keep the document's orientation
      const bool flipped = scratch.vertex_name(e.u) != layer[k]["u"].get<std::string>();
      crystals.push_back({e.id, scratch.vertex_name(flipped ? e.v : e.u), scratch.vertex_name(flipped ? e.u : e.v),
                          flipped ? e.mode_v : e.mode_u, flipped ? e.mode_u : e.mode_v, e.amp_mag, e.amp_phase});
    }
    plan.layers.push_back(std::move(crystals));
  }
  auto wiring = doc.find("wiring");
  if (wiring == doc.end() || !wiring->is_object()) throw ParseError("/wiring", "expected an object");
  for (const auto& [path, ids] : wiring->items()) {
    if (!scratch.find_vertex(path)) throw ParseError("/wiring/" + path, "unknown path");
    if (!ids.is_array()) throw ParseError("/wiring/" + path, "expected a list");
    auto& list = plan.wiring[path];
    for (const auto& id : ids) {
      if (!id.is_string()) throw ParseError("/wiring/" + path, "expected crystal ids");
      list.push_back(id.get<std::string>());
    }
  }
  return plan;
}

std::string serialize_plan(const SetupPlan& plan) { return plan_to_json(plan).dump(2) + "\n"; }

SetupPlan parse_plan(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError("byte " + std::to_string(e.byte), "malformed document");
  }
  return plan_from_json(doc);
}

std::string format_plan(const SetupPlan& plan) {
  std::ostringstream out;
  out << "detectors:";
  for (const auto& d : plan.detectors) out << ' ' << d;
  out << '\n';
  for (std::size_t l = 0; l < plan.layers.size(); ++l) {
    out << "layer " << l << ":";
    for (const auto& c : plan.layers[l]) {
      out << "  " << c.edge_id << "[" << c.path_u << "-" << c.path_v << " (" << c.mode_u << "," << c.mode_v
          << ")]";
    }
    out << '\n';
  }
  for (const auto& [path, ids] : plan.wiring) {
    out << "path " << path << ":";
    for (const auto& id : ids) out << ' ' << id;
    out << '\n';
  }
  return out.str();
}

}  // namespace pmgraph
