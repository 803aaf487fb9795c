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

#include "pmgraph/state.hpp"

#include <cmath>
#include <iomanip>
#include <sstream>

#include "pmgraph/error.hpp"

namespace pmgraph {

double QuantumState::norm_squared() const {
  double total = 0.0;
  for (const auto& [ket, amp] : terms) total += std::norm(amp);
  return total;
}

QuantumState normalize(QuantumState s) {
  const double norm = std::sqrt(s.norm_squared());
  if (s.terms.empty() || norm == 0.0) throw FrustratedError("cannot normalize an empty state");
  for (auto& [ket, amp] : s.terms) amp /= norm;
  s.normalized = true;
  return s;
}

QuantumState fix_global_phase(QuantumState s) {
  if (s.terms.empty()) return s;
  const Amplitude first = s.terms.begin()->second;
  if (std::abs(first) == 0.0) return s;
  const Amplitude rotate = std::conj(first) / std::abs(first);
  for (auto& [ket, amp] : s.terms) amp *= rotate;
  s.terms.begin()->second = std::abs(first);
  return s;
}

bool equal_up_to_global_phase(const QuantumState& a, const QuantumState& b, double tolerance) {
  if (a.terms.size() != b.terms.size()) return false;
  const auto fa = fix_global_phase(a);
  const auto fb = fix_global_phase(b);
  auto ia = fa.terms.begin();
  auto ib = fb.terms.begin();
  for (; ia != fa.terms.end(); ++ia, ++ib) {
    if (ia->first != ib->first) return false;
    if (std::abs(ia->second - ib->second) > tolerance) return false;
  }
  return true;
}

QuantumState state_from_graph(const ExperimentGraph& g, bool normalize_state, const MatchingLimits& limits) {
  check_enumeration_limits(g, limits);
  // ket slot of each vertex, or npos for measured vertices
  constexpr std::size_t npos = static_cast<std::size_t>(-1);
  std::vector<std::size_t> slot(g.vertex_count(), npos);
  std::size_t next = 0;
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    if (!g.is_measured(v)) slot[v] = next++;
  }

  QuantumState s;
  std::size_t covers = 0;
  Ket ket(next);
  std::vector<std::optional<Mode>> measured_mode(g.vertex_count());
  visit_covers(g, [&](const std::vector<std::size_t>& cover) {
    ++covers;
    std::fill(measured_mode.begin(), measured_mode.end(), std::nullopt);
    Amplitude amp(1.0, 0.0);
    for (std::size_t ei : cover) {
      const Edge& e = g.edge(ei);
      for (std::size_t v : {e.u, e.v}) {
        const Mode m = e.mode_at(v);
        if (slot[v] != npos) {
          ket[slot[v]] = m;
        } else if (!measured_mode[v]) {
          measured_mode[v] = m;
        } else if (*measured_mode[v] != m) {
          return true;  // orthogonal to the Bell projection
        }
      }
      amp *= e.amplitude();
    }
    s.terms[ket] += amp;
    return true;
  });

  std::erase_if(s.terms, [](const auto& term) { return std::abs(term.second) < kAmplitudeTolerance; });
  if (normalize_state) {
    if (covers == 0) throw DomainError("no_cover", "graph has no perfect matching");
    if (s.terms.empty()) throw FrustratedError("all amplitudes cancel: fully frustrated");
    return normalize(std::move(s));
  }
  return s;
}

bool is_ghz_like(const QuantumState& s) {
  if (s.terms.empty()) return false;
  const double magnitude = std::abs(s.terms.begin()->second);
  for (const auto& [ket, amp] : s.terms) {
    if (std::abs(std::abs(amp) - magnitude) > kAmplitudeTolerance) return false;
  }
  for (auto a = s.terms.begin(); a != s.terms.end(); ++a) {
    for (auto b = std::next(a); b != s.terms.end(); ++b) {
      if (a->first.size() != b->first.size()) return false;
      for (std::size_t i = 0; i < a->first.size(); ++i) {
        if (a->first[i] == b->first[i]) return false;
      }
    }
  }
  return true;
}

bool verify_target(const ExperimentGraph& g, const QuantumState& target, const MatchingLimits& limits) {
  if (target.terms.empty()) return false;
  QuantumState produced;
  try {
    produced = state_from_graph(g, true, limits);
  } catch (const DomainError&) {
    return false;
  }
  return equal_up_to_global_phase(produced, normalize(target));
}

std::vector<FrustrationPoint> frustration_scan(const ExperimentGraph& g, std::string_view edge_id,
                                               std::span<const double> phases,
                                               const MatchingLimits& limits) {
  const auto edge = g.find_edge(edge_id);
  if (!edge) throw DomainError("unknown_edge", "unknown edge id '" + std::string(edge_id) + "'");
  std::vector<FrustrationPoint> out;
  out.reserve(phases.size());
  for (double phase : phases) {
    const auto s = state_from_graph(g.with_edge_phase(*edge, phase), false, limits);
    out.push_back({phase, s.norm_squared()});
  }
  return out;
}

std::string format_ket(const Ket& ket) {
  std::string out = "|";
  for (std::size_t i = 0; i < ket.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(ket[i]);
  }
  return out + "⟩";
}

std::string format_state(const QuantumState& s) {
  std::ostringstream out;
  out << std::setprecision(6);
  for (const auto& [ket, amp] : s.terms) {
    const double re = std::abs(amp.real()) < kAmplitudeTolerance ? 0.0 : amp.real();
    const double im = std::abs(amp.imag()) < kAmplitudeTolerance ? 0.0 : amp.imag();
    if (im == 0.0) {
      out << re;
    } else {
      out << "(" << re << (im < 0 ? "-" : "+") << std::abs(im) << "i)";
    }
    out << " " << format_ket(ket) << "\n";
  }
  return out.str();
}

}  // namespace pmgraph
