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

#include <complex>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace pmgraph {

using Amplitude = std::complex<double>;
using Mode = std::uint32_t;

/// A crystal: one photon-pair source between two distinct paths.
///
/// Endpoints are stored with `u <= v` (by vertex index); `mode_u` and
/// `mode_v` follow their endpoints. The amplitude is kept in polar form so
/// that documents round-trip without floating-point drift.
struct Edge {
  std::string id;
  std::size_t u = 0;
  std::size_t v = 0;
  Mode mode_u = 0;
  Mode mode_v = 0;
  double amp_mag = 1.0;
  double amp_phase = 0.0;
  std::optional<std::uint32_t> layer;

  Amplitude amplitude() const { return std::polar(amp_mag, amp_phase); }
  bool touches(std::size_t vertex) const noexcept { return u == vertex || v == vertex; }
  std::size_t other(std::size_t vertex) const noexcept { return vertex == u ? v : u; }
  Mode mode_at(std::size_t vertex) const noexcept { return vertex == u ? mode_u : mode_v; }

  bool operator==(const Edge&) const = default;
};

/// Name-based edge description used to build graphs.
struct EdgeSpec {
  std::string id;  // empty -> generated "e<k>"
  std::string u;
  std::string v;
  Mode mode_u = 0;
  Mode mode_v = 0;
  double amp_mag = 1.0;
  double amp_phase = 0.0;
  std::optional<std::uint32_t> layer;
};

/// An experiment: optical paths (vertices) joined by crystals (edges).
///
/// Parallel edges are allowed, self-loops are not. Measured vertices are
/// merge points that absorb two photons and are excluded from kets.
class ExperimentGraph {
 public:
  ExperimentGraph() = default;

  /// Creates a graph with the given vertex names, no edges.
  explicit ExperimentGraph(std::span<const std::string> names);
  ExperimentGraph(std::initializer_list<std::string_view> names);

  std::size_t add_vertex(std::string name);
  void set_measured(std::size_t vertex, bool measured = true);
  void set_measured(std::string_view name, bool measured = true);

  /// Validates and appends an edge; returns its index.
  std::size_t add_edge(const EdgeSpec& spec);
  std::size_t add_edge(Edge edge);

  std::size_t vertex_count() const noexcept { return names_.size(); }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  bool empty() const noexcept { return names_.empty(); }

  const std::vector<std::string>& vertex_names() const noexcept { return names_; }
  const std::string& vertex_name(std::size_t vertex) const { return names_.at(vertex); }
  std::optional<std::size_t> find_vertex(std::string_view name) const;
  /// Throws DomainError for unknown names.
  std::size_t vertex_index(std::string_view name) const;

  std::span<const Edge> edges() const noexcept { return edges_; }
  const Edge& edge(std::size_t index) const { return edges_.at(index); }
  std::optional<std::size_t> find_edge(std::string_view id) const;

  bool is_measured(std::size_t vertex) const { return measured_.at(vertex); }
  std::size_t measured_count() const noexcept;
  /// Number of photons in a ket: |V| - |measured|.
  std::size_t ket_length() const noexcept { return vertex_count() - measured_count(); }
  /// Photons each vertex must receive in a coincidence cover (1, or 2 if measured).
  std::vector<int> cover_demand() const;

  std::vector<std::size_t> degrees() const;
  /// Incident edge indices per vertex, ascending.
  std::vector<std::vector<std::size_t>> incidence() const;

  /// Same graph with edges sorted by id.
  ExperimentGraph canonical() const;
  /// Copy with one edge's amplitude phase replaced.
  ExperimentGraph with_edge_phase(std::size_t edge, double phase) const;

  bool operator==(const ExperimentGraph& other) const {
    return names_ == other.names_ && measured_ == other.measured_ && edges_ == other.edges_;
  }

 private:
  std::string next_edge_id() const;

  std::vector<std::string> names_;
  std::vector<bool> measured_;
  std::unordered_map<std::string, std::size_t> index_;
  std::vector<Edge> edges_;
  std::unordered_map<std::string, std::size_t> edge_index_;
};

/// Vertex pair (name in the first graph, name in the second) to identify.
using MergePair = std::pair<std::string, std::string>;

/// Disjoint union of `first` and `second` with each pair identified into a
/// single measured vertex. The merged vertex keeps the first graph's name
/// and position. Names and edge ids of `second` that collide are suffixed
/// with `'` until unique.
ExperimentGraph merge_graphs(const ExperimentGraph& first, const ExperimentGraph& second,
                             std::span<const MergePair> pairs);

/// G(n, p) sample: each of the n(n-1)/2 vertex pairs gets an edge
/// independently with probability p. Vertices are "v0".."v{n-1}", edges
/// "e0", "e1", ... in pair order. Bit-reproducible for a fixed seed.
ExperimentGraph random_graph(std::size_t n, double p, std::uint64_t seed);

/// Complete graph on n vertices named a, b, c, ... (v<k> beyond 26).
ExperimentGraph complete_graph(std::size_t n);

/// Default vertex label for position k: "a".."z", then "v<k>".
std::string default_vertex_name(std::size_t k);

}  // namespace pmgraph
