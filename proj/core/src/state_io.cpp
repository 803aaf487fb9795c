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

#include <cmath>
#include <limits>

#include "pmgraph/error.hpp"
#include "pmgraph/state.hpp"

namespace pmgraph {

using nlohmann::json;
using nlohmann::ordered_json;

ordered_json state_to_json(const QuantumState& s) {
  ordered_json doc = ordered_json::array();
  for (const auto& [ket, amp] : s.terms) {
    ordered_json term;
    term["modes"] = ket;
    term["amp_mag"] = std::abs(amp);
    term["amp_phase_rad"] = std::arg(amp);
    doc.push_back(std::move(term));
  }
  return doc;
}

std::string serialize_state(const QuantumState& s) { return state_to_json(s).dump(2) + "\n"; }

QuantumState state_from_json(const json& doc) {
  if (!doc.is_array()) throw ParseError("/", "expected a list of terms");
  QuantumState s;
  std::size_t length = 0;
  for (std::size_t i = 0; i < doc.size(); ++i) {
    const std::string where = "/" + std::to_string(i);
    const json& term = doc[i];
    if (!term.is_object()) throw ParseError(where, "expected a term object");
    auto modes = term.find("modes");
    if (modes == term.end() || !modes->is_array()) throw ParseError(where + "/modes", "expected a list");
    Ket ket;
    for (std::size_t k = 0; k < modes->size(); ++k) {
      const json& m = (*modes)[k];
      if (!m.is_number_integer() || m.get<std::int64_t>() < 0 ||
          m.get<std::int64_t>() > std::numeric_limits<Mode>::max()) {
        throw ParseError(where + "/modes/" + std::to_string(k), "expected a nonnegative integer");
      }
      ket.push_back(static_cast<Mode>(m.get<std::int64_t>()));
    }
    if (i == 0) length = ket.size();
    if (ket.size() != length) throw ParseError(where + "/modes", "ket length differs from the first term");
    double mag = 1.0;
    double phase = 0.0;
    if (auto it = term.find("amp_mag"); it != term.end()) {
      if (!it->is_number() || !std::isfinite(it->get<double>()) || it->get<double>() < 0.0) {
        throw ParseError(where + "/amp_mag", "expected a finite nonnegative number");
      }
      mag = it->get<double>();
    }
    if (auto it = term.find("amp_phase_rad"); it != term.end()) {
      if (!it->is_number() || !std::isfinite(it->get<double>())) {
        throw ParseError(where + "/amp_phase_rad", "expected a finite number");
      }
      phase = it->get<double>();
    }
    if (s.terms.contains(ket)) throw ParseError(where + "/modes", "duplicate ket " + format_ket(ket));
    if (mag >= kAmplitudeTolerance) s.terms.emplace(std::move(ket), std::polar(mag, phase));
  }
  s.normalized = !s.terms.empty() && std::abs(s.norm_squared() - 1.0) <= kAmplitudeTolerance;
  return s;
}

QuantumState parse_state(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError("byte " + std::to_string(e.byte), "malformed document");
  }
  return state_from_json(doc);
}

}  // namespace pmgraph
