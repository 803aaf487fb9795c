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

#include "pmgraph/graph_io.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>

#include "pmgraph/error.hpp"

namespace pmgraph {

using nlohmann::json;
using nlohmann::ordered_json;

namespace {

const json& require(const json& obj, const char* key, const std::string& where) {
  auto it = obj.find(key);
  if (it == obj.end()) throw ParseError(where, std::string("missing field '") + key + "'");
  return *it;
}

std::string read_string(const json& value, const std::string& where) {
  if (!value.is_string()) throw ParseError(where, "expected a string");
  return value.get<std::string>();
}

std::uint32_t read_count(const json& value, const std::string& where) {
  if (value.is_number_integer()) {
    const auto raw = value.get<std::int64_t>();
    if (raw < 0) throw ParseError(where, "must be nonnegative");
    if (raw > std::numeric_limits<std::uint32_t>::max()) throw ParseError(where, "out of range");
    return static_cast<std::uint32_t>(raw);
  }
  if (value.is_number_unsigned()) {
    const auto raw = value.get<std::uint64_t>();
    if (raw > std::numeric_limits<std::uint32_t>::max()) throw ParseError(where, "out of range");
    return static_cast<std::uint32_t>(raw);
  }
  throw ParseError(where, "expected a nonnegative integer");
}

double read_real(const json& value, const std::string& where) {
  if (!value.is_number()) throw ParseError(where, "expected a number");
  const double x = value.get<double>();
  if (!std::isfinite(x)) throw ParseError(where, "must be finite");
  return x;
}

}  // namespace

void add_edge_from_json(ExperimentGraph& g, const json& obj, const std::string& where) {
  if (!obj.is_object()) throw ParseError(where, "expected an edge object");
  Edge e;
  if (auto it = obj.find("id"); it != obj.end()) e.id = read_string(*it, where + "/id");
  const std::string u = read_string(require(obj, "u", where), where + "/u");
  const std::string v = read_string(require(obj, "v", where), where + "/v");
  auto iu = g.find_vertex(u);
  if (!iu) throw ParseError(where + "/u", "unknown endpoint '" + u + "'");
  auto iv = g.find_vertex(v);
  if (!iv) throw ParseError(where + "/v", "unknown endpoint '" + v + "'");
  if (*iu == *iv) throw ParseError(where, "self-loop on '" + u + "'");
  e.u = *iu;
  e.v = *iv;
  if (auto it = obj.find("mode_u"); it != obj.end()) e.mode_u = read_count(*it, where + "/mode_u");
  if (auto it = obj.find("mode_v"); it != obj.end()) e.mode_v = read_count(*it, where + "/mode_v");
  if (auto it = obj.find("amp_mag"); it != obj.end()) {
    e.amp_mag = read_real(*it, where + "/amp_mag");
    if (e.amp_mag < 0.0) throw ParseError(where + "/amp_mag", "must be nonnegative");
  }
  if (auto it = obj.find("amp_phase_rad"); it != obj.end()) {
    e.amp_phase = read_real(*it, where + "/amp_phase_rad");
  }
  if (auto it = obj.find("layer"); it != obj.end() && !it->is_null()) {
    e.layer = read_count(*it, where + "/layer");
  }
  if (!e.id.empty() && g.find_edge(e.id)) {
    throw ParseError(where + "/id", "duplicate edge id '" + e.id + "'");
  }
  g.add_edge(std::move(e));
}

ExperimentGraph graph_from_json(const json& doc, const std::string& where) {
  if (!doc.is_object()) throw ParseError(where.empty() ? "/" : where, "expected an object");
  ExperimentGraph g;
  const json& vertices = require(doc, "vertices", where.empty() ? "/" : where);
  if (!vertices.is_array()) throw ParseError(where + "/vertices", "expected a list");
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    const std::string at = where + "/vertices/" + std::to_string(i);
    std::string name = read_string(vertices[i], at);
    if (name.empty()) throw ParseError(at, "empty vertex name");
    if (g.find_vertex(name)) throw ParseError(at, "duplicate vertex '" + name + "'");
    g.add_vertex(std::move(name));
  }
  if (auto it = doc.find("measured"); it != doc.end()) {
    if (!it->is_array()) throw ParseError(where + "/measured", "expected a list");
    for (std::size_t i = 0; i < it->size(); ++i) {
      const std::string at = where + "/measured/" + std::to_string(i);
      const std::string name = read_string((*it)[i], at);
      auto idx = g.find_vertex(name);
      if (!idx) throw ParseError(at, "unknown vertex '" + name + "'");
      g.set_measured(*idx);
    }
  }
  if (auto it = doc.find("edges"); it != doc.end()) {
    if (!it->is_array()) throw ParseError(where + "/edges", "expected a list");
    for (std::size_t i = 0; i < it->size(); ++i) {
      add_edge_from_json(g, (*it)[i], where + "/edges/" + std::to_string(i));
    }
  }
  return g;
}

ExperimentGraph parse_graph(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError("byte " + std::to_string(e.byte), "malformed document");
  }
  return graph_from_json(doc);
}

ordered_json edge_to_json(const ExperimentGraph& g, const Edge& e) {
  ordered_json obj;
  obj["id"] = e.id;
  obj["u"] = g.vertex_name(e.u);
  obj["v"] = g.vertex_name(e.v);
  obj["mode_u"] = e.mode_u;
  obj["mode_v"] = e.mode_v;
  obj["amp_mag"] = e.amp_mag;
  obj["amp_phase_rad"] = e.amp_phase;
  if (e.layer) obj["layer"] = *e.layer;
  return obj;
}

ordered_json graph_to_json(const ExperimentGraph& g) {
  ordered_json doc;
  doc["vertices"] = g.vertex_names();
  ordered_json measured = ordered_json::array();
  for (std::size_t i = 0; i < g.vertex_count(); ++i) {
    if (g.is_measured(i)) measured.push_back(g.vertex_name(i));
  }
  doc["measured"] = std::move(measured);
  std::vector<const Edge*> order;
  for (const auto& e : g.edges()) order.push_back(&e);
  std::sort(order.begin(), order.end(), [](const Edge* a, const Edge* b) { return a->id < b->id; });
  ordered_json edges = ordered_json::array();
  for (const Edge* e : order) edges.push_back(edge_to_json(g, *e));
  doc["edges"] = std::move(edges);
  return doc;
}

std::string serialize_graph(const ExperimentGraph& g) { return graph_to_json(g).dump(2) + "\n"; }

std::string to_dot(const ExperimentGraph& g) {
  std::ostringstream out;
  out << "graph experiment {\n";
  for (std::size_t i = 0; i < g.vertex_count(); ++i) {
    out << "  \"" << g.vertex_name(i) << "\"";
    if (g.is_measured(i)) out << " [shape=doublecircle]";
    out << ";\n";
  }
  const ExperimentGraph canon = g.canonical();
  for (const auto& e : canon.edges()) {
    out << "  \"" << g.vertex_name(e.u) << "\" -- \"" << g.vertex_name(e.v) << "\" [label=\"" << e.id
        << ":(" << e.mode_u << "," << e.mode_v << ")\"];\n";
  }
  out << "}\n";
  return out.str();
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("io_error", "cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_text_file(const std::string& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("io_error", "cannot write '" + path + "'");
  out << text;
}

}  // namespace pmgraph
