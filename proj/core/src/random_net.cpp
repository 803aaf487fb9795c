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

#include "pmgraph/random_net.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <thread>

#include "pmgraph/adjacency.hpp"
#include "pmgraph/counting.hpp"
#include "pmgraph/error.hpp"
#include "pmgraph/rng.hpp"

namespace pmgraph {

namespace {

std::uint64_t matching_count(const ExperimentGraph& g) {
  if (g.vertex_count() % 2 != 0) return 0;
  CounterLimits limits;
  limits.override_limits = true;
  return hafnian(adjacency(g).entries, limits).convert_to<std::uint64_t>();
}

std::size_t cover_edges(const ExperimentGraph& g) {
  std::size_t demand = 0;
  for (int d : g.cover_demand()) demand += static_cast<std::size_t>(d);
  if (demand % 2 != 0) throw DomainError("odd photon count: no 2n-fold coincidence exists");
  return demand / 2;
}

void check_probability(double p) {
  if (!(p > 0.0 && p <= 1.0)) throw DomainError("SPDC probability must lie in (0, 1]");
}

}  // namespace

std::vector<EnsembleReport> ensemble_scan(std::size_t n, std::span<const double> p_values, std::uint64_t trials,
                                          std::uint64_t seed, unsigned threads) {
  if (trials == 0) throw DomainError("ensemble needs at least one trial");
  if (n > 24) throw ScaleLimitError("ensemble scan supports at most 24 vertices");
  threads = std::max(1U, threads);
  std::vector<EnsembleReport> reports;
  for (double p : p_values) {
    if (!(p >= 0.0 && p <= 1.0)) throw DomainError("edge probability must lie in [0, 1]");
    std::vector<std::map<std::uint64_t, std::uint64_t>> partial(threads);
    auto work = [&](unsigned t) {
      const std::uint64_t begin = trials * t / threads;
      const std::uint64_t end = trials * (t + 1) / threads;
      for (std::uint64_t trial = begin; trial < end; ++trial) {
        ++partial[t][matching_count(random_graph(n, p, derive_seed(seed, trial)))];
      }
    };
    if (threads == 1) {
      work(0);
    } else {
      std::vector<std::thread> pool;
      for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work, t);
      for (auto& th : pool) th.join();
    }
    EnsembleReport report{n, p, trials, seed, 0.0, {}};
    for (const auto& hist : partial) {
      for (const auto& [count, freq] : hist) report.pm_count_histogram[count] += freq;
    }
    std::uint64_t with_pm = 0;
    for (const auto& [count, freq] : report.pm_count_histogram) {
      if (count > 0) with_pm += freq;
    }
    report.pm_exists_fraction = static_cast<double>(with_pm) / static_cast<double>(trials);
    reports.push_back(std::move(report));
  }
  return reports;
}

Amplitude network_amplitude(const ExperimentGraph& g, double p, const MatchingLimits& limits) {
  check_probability(p);
  const std::size_t order = cover_edges(g);
  check_enumeration_limits(g, limits);
  Amplitude sum(0.0, 0.0);
  visit_covers(g, [&](const std::vector<std::size_t>& cover) {
    Amplitude amp(1.0, 0.0);
    for (std::size_t ei : cover) amp *= g.edge(ei).amplitude();
    sum += amp;
    return true;
  });
  return sum * std::pow(p, static_cast<double>(order));
}

QuantumState network_terms(const ExperimentGraph& g, double p, const MatchingLimits& limits) {
  check_probability(p);
  const double scale = std::pow(p, static_cast<double>(cover_edges(g)));
  QuantumState s = state_from_graph(g, false, limits);
  for (auto& [ket, amp] : s.terms) amp *= scale;
  return s;
}

nlohmann::ordered_json ensemble_to_json(std::span<const EnsembleReport> reports) {
  nlohmann::ordered_json doc = nlohmann::ordered_json::array();
  for (const auto& r : reports) {
    nlohmann::ordered_json obj;
    obj["n"] = r.n;
    obj["p"] = r.p;
    obj["trials"] = r.trials;
    obj["seed"] = r.seed;
    obj["pm_exists_fraction"] = r.pm_exists_fraction;
    nlohmann::ordered_json hist = nlohmann::ordered_json::array();
    for (const auto& [count, freq] : r.pm_count_histogram) hist.push_back({{"count", count}, {"frequency", freq}});
    obj["pm_count_histogram"] = std::move(hist);
    doc.push_back(std::move(obj));
  }
  return doc;
}

std::vector<EnsembleReport> ensemble_from_json(const nlohmann::json& doc) {
  if (!doc.is_array()) throw ParseError("/", "expected a list of reports");
  std::vector<EnsembleReport> out;
  for (std::size_t i = 0; i < doc.size(); ++i) {
    const auto& obj = doc[i];
    try {
      EnsembleReport r;
      r.n = obj.at("n").get<std::size_t>();
      r.p = obj.at("p").get<double>();
      r.trials = obj.at("trials").get<std::uint64_t>();
      r.seed = obj.at("seed").get<std::uint64_t>();
      r.pm_exists_fraction = obj.at("pm_exists_fraction").get<double>();
      for (const auto& bin : obj.at("pm_count_histogram")) {
        r.pm_count_histogram[bin.at("count").get<std::uint64_t>()] = bin.at("frequency").get<std::uint64_t>();
      }
      out.push_back(std::move(r));
    } catch (const nlohmann::json::exception& e) {
      throw ParseError("/" + std::to_string(i), e.what());
    }
  }
  return out;
}

std::string ensemble_to_csv(std::span<const EnsembleReport> reports) {
  std::ostringstream out;
  out.precision(17);
  out << "p,fraction,count,frequency\n";
  for (const auto& r : reports) {
    for (const auto& [count, freq] : r.pm_count_histogram) {
      out << r.p << ',' << r.pm_exists_fraction << ',' << count << ',' << freq << '\n';
    }
  }
  return out.str();
}

}  // namespace pmgraph
