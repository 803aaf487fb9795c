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

#include "pmgraph/graph.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "pmgraph/error.hpp"
#include "pmgraph/rng.hpp"

namespace pmgraph {

ExperimentGraph::ExperimentGraph(std::span<const std::string> names) {
  for (const auto& name : names) add_vertex(name);
}

ExperimentGraph::ExperimentGraph(std::initializer_list<std::string_view> names) {
  for (auto name : names) add_vertex(std::string(name));
}

std::size_t ExperimentGraph::add_vertex(std::string name) {
  if (name.empty()) throw DomainError("vertex name must be non-empty");
  if (index_.contains(name)) throw DomainError("duplicate vertex '" + name + "'");
  const std::size_t index = names_.size();
  index_.emplace(name, index);
  names_.push_back(std::move(name));
  measured_.push_back(false);
  return index;
}

void ExperimentGraph::set_measured(std::size_t vertex, bool measured) {
  if (vertex >= names_.size()) throw DomainError("vertex index out of range");
  measured_[vertex] = measured;
}

void ExperimentGraph::set_measured(std::string_view name, bool measured) {
  set_measured(vertex_index(name), measured);
}

std::string ExperimentGraph::next_edge_id() const {
  std::size_t k = edges_.size();
  std::string id = "e" + std::to_string(k);
  while (edge_index_.contains(id)) id = "e" + std::to_string(++k);
  return id;
}

std::size_t ExperimentGraph::add_edge(const EdgeSpec& spec) {
  Edge edge;
  edge.id = spec.id;
  edge.u = vertex_index(spec.u);
  edge.v = vertex_index(spec.v);
  edge.mode_u = spec.mode_u;
  edge.mode_v = spec.mode_v;
  edge.amp_mag = spec.amp_mag;
  edge.amp_phase = spec.amp_phase;
  edge.layer = spec.layer;
  return add_edge(std::move(edge));
}

std::size_t ExperimentGraph::add_edge(Edge edge) {
  if (edge.u >= names_.size() || edge.v >= names_.size()) {
    throw DomainError("edge '" + edge.id + "' has an unknown endpoint");
  }
  if (edge.u == edge.v) {
    throw DomainError("self_loop", "edge '" + edge.id + "' is a self-loop on '" + names_[edge.u] + "'");
  }
  if (!std::isfinite(edge.amp_mag) || !std::isfinite(edge.amp_phase) || edge.amp_mag < 0.0) {
    throw DomainError("edge '" + edge.id + "' has a non-finite or negative amplitude");
  }
  if (edge.id.empty()) edge.id = next_edge_id();
  if (edge_index_.contains(edge.id)) throw DomainError("duplicate edge id '" + edge.id + "'");
  if (edge.u > edge.v) {
    std::swap(edge.u, edge.v);
    std::swap(edge.mode_u, edge.mode_v);
  }
  const std::size_t index = edges_.size();
  edge_index_.emplace(edge.id, index);
  edges_.push_back(std::move(edge));
  return index;
}

std::optional<std::size_t> ExperimentGraph::find_vertex(std::string_view name) const {
  auto it = index_.find(std::string(name));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t ExperimentGraph::vertex_index(std::string_view name) const {
  if (auto found = find_vertex(name)) return *found;
  throw DomainError("unknown_vertex", "unknown vertex '" + std::string(name) + "'");
}

std::optional<std::size_t> ExperimentGraph::find_edge(std::string_view id) const {
  auto it = edge_index_.find(std::string(id));
  if (it == edge_index_.end()) return std::nullopt;
  return it->second;
}

std::size_t ExperimentGraph::measured_count() const noexcept {
  return static_cast<std::size_t>(std::count(measured_.begin(), measured_.end(), true));
}

std::vector<int> ExperimentGraph::cover_demand() const {
  std::vector<int> demand(names_.size());
  for (std::size_t i = 0; i < names_.size(); ++i) demand[i] = measured_[i] ? 2 : 1;
  return demand;
}

std::vector<std::size_t> ExperimentGraph::degrees() const {
  std::vector<std::size_t> deg(names_.size(), 0);
  for (const auto& e : edges_) {
    ++deg[e.u];
    ++deg[e.v];
  }
  return deg;
}

std::vector<std::vector<std::size_t>> ExperimentGraph::incidence() const {
  std::vector<std::vector<std::size_t>> inc(names_.size());
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    inc[edges_[i].u].push_back(i);
    inc[edges_[i].v].push_back(i);
  }
  return inc;
}

ExperimentGraph ExperimentGraph::canonical() const {
  ExperimentGraph out;
  out.names_ = names_;
  out.measured_ = measured_;
  out.index_ = index_;
  std::vector<Edge> sorted = edges_;
  std::sort(sorted.begin(), sorted.end(), [](const Edge& a, const Edge& b) { return a.id < b.id; });
  for (auto& e : sorted) out.add_edge(std::move(e));
  return out;
}

ExperimentGraph ExperimentGraph::with_edge_phase(std::size_t edge, double phase) const {
  if (edge >= edges_.size()) throw DomainError("edge index out of range");
  ExperimentGraph out = *this;
  out.edges_[edge].amp_phase = phase;
  return out;
}

namespace {

std::string unique_name(std::string name, const std::set<std::string>& taken) {
  while (taken.contains(name)) name += '\'';
  return name;
}

}  // namespace

ExperimentGraph merge_graphs(const ExperimentGraph& first, const ExperimentGraph& second,
                             std::span<const MergePair> pairs) {
  // second-graph vertex -> first-graph vertex it is identified with
  std::vector<std::optional<std::size_t>> identified(second.vertex_count());
  std::vector<bool> first_used(first.vertex_count(), false);
  for (const auto& [a, b] : pairs) {
    const std::size_t ia = first.vertex_index(a);
    const std::size_t ib = second.vertex_index(b);
    if (first_used[ia] || identified[ib]) {
      throw DomainError("vertex named in two merge pairs ('" + a + "', '" + b + "')");
    }
    if (first.is_measured(ia) || second.is_measured(ib)) {
      throw DomainError("cannot merge already-measured vertex ('" + a + "', '" + b + "')");
    }
    first_used[ia] = true;
    identified[ib] = ia;
  }

  ExperimentGraph out;
  std::set<std::string> names;
  for (std::size_t i = 0; i < first.vertex_count(); ++i) {
    out.add_vertex(first.vertex_name(i));
    names.insert(first.vertex_name(i));
    if (first.is_measured(i) || first_used[i]) out.set_measured(i);
  }
  std::vector<std::size_t> second_to_out(second.vertex_count());
  for (std::size_t i = 0; i < second.vertex_count(); ++i) {
    if (identified[i]) {
      second_to_out[i] = *identified[i];
      continue;
    }
    std::string name = unique_name(second.vertex_name(i), names);
    names.insert(name);
    second_to_out[i] = out.add_vertex(std::move(name));
    if (second.is_measured(i)) out.set_measured(second_to_out[i]);
  }

  std::set<std::string> ids;
  for (const auto& e : first.edges()) {
    out.add_edge(e);
    ids.insert(e.id);
  }
  for (Edge e : second.edges()) {
    e.id = unique_name(e.id, ids);
    ids.insert(e.id);
    e.u = second_to_out[e.u];
    e.v = second_to_out[e.v];
    out.add_edge(std::move(e));
  }
  return out;
}

std::string default_vertex_name(std::size_t k) {
  if (k < 26) return std::string(1, static_cast<char>('a' + k));
  return "v" + std::to_string(k);
}

ExperimentGraph complete_graph(std::size_t n) {
  ExperimentGraph g;
  for (std::size_t i = 0; i < n; ++i) g.add_vertex(default_vertex_name(i));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      Edge e;
      e.id = g.vertex_name(i) + g.vertex_name(j);
      e.u = i;
      e.v = j;
      g.add_edge(std::move(e));
    }
  }
  return g;
}

}  // namespace pmgraph
