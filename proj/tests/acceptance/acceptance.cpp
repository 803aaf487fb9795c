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

// Acceptance suite: one line per criterion, PASS only when the check holds
// and the measured wall time stays inside the pinned budget.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "fixtures.hpp"
#include "oracles.hpp"

namespace {

using namespace pmgraph;

constexpr double kAmplitudeTol = 1e-9;
constexpr double kIntensityTol = 1e-9;
constexpr double kSigmaBand = 3.0;

struct Outcome {
  bool ok = true;
  std::string detail;

  void require(bool condition, const std::string& what) {
    if (!condition && ok) {
      ok = false;
      detail = what;
    }
  }
};

struct Criterion {
  int number;
  const char* name;
  double budget_seconds;
  std::function<Outcome()> check;
};

QuantumState uniform(std::initializer_list<Ket> kets) {
  QuantumState s;
  for (const Ket& k : kets) s.terms[k] = 1.0;
  return normalize(s);
}

bool state_near(const QuantumState& got, const QuantumState& want, double tol) {
  if (got.terms.size() != want.terms.size()) return false;
  for (const auto& [ket, amp] : want.terms) {
    const auto it = got.terms.find(ket);
    if (it == got.terms.end() || std::abs(it->second - amp) > tol) return false;
  }
  return true;
}

Outcome k4_fixture() {
  Outcome o;
  const auto g = testing::k4_ghz();
  o.require(enumerate_pm(g).size() == 3, "K4 does not have 3 perfect matchings");
  o.require(state_near(state_from_graph(g, true), uniform({{0, 0, 0, 0}, {1, 1, 1, 1}, {2, 2, 2, 2}}), kAmplitudeTol),
            "K4 state differs from the 3-dimensional GHZ state");
  return o;
}

Outcome three_layer_fixture() {
  Outcome o;
  const auto g = testing::three_layer();
  o.require(g.vertex_count() == 6 && g.edge_count() == 9, "fixture shape");
  o.require(enumerate_pm(g).size() == 4, "expected 4 perfect matchings");
  const auto want = uniform({{0, 0, 0, 0, 0, 0}, {1, 1, 1, 1, 1, 1}, {2, 2, 2, 2, 2, 2}, {1, 2, 1, 2, 0, 0}});
  o.require(state_near(state_from_graph(g, true), want, kAmplitudeTol), "state differs from the four-term target");
  const auto report = classify_layers(g);
  o.require(report.layer_matchings.size() == 3 && report.maverick_matchings.size() == 1, "expected 3 layer + 1 maverick");
  return o;
}

Outcome complete_graphs() {
  Outcome o;
  // n = 1..6 covers both the formula range and every listed value (3 ... 10395).
  // K12 has 66 edges, above the default 60-edge guard.
  MatchingLimits limits;
  limits.override_limits = true;
  const std::vector<std::uint64_t> listed{1, 3, 15, 105, 945, 10395};
  for (std::size_t n = 1; n <= 6; ++n) {
    const auto count = count_pm(complete_graph(2 * n), limits);
    o.require(BigInt(count) == count_pm_formula(n), "enumeration differs from formula at n=" + std::to_string(n));
    o.require(count == listed[n - 1], "unexpected count at n=" + std::to_string(n));
  }
  const auto report = classify_layers(testing::k6_five_layer());
  o.require(report.layer_matchings.size() == 5 && report.maverick_matchings.size() == 10, "K6 split is not 5 + 10");
  return o;
}

Outcome four_layer_fixture() {
  Outcome o;
  const auto g = testing::four_layer();
  o.require(enumerate_pm(g).size() == 8, "expected 8 perfect matchings");
  const auto report = classify_layers(g);
  o.require(report.layer_matchings.size() == 4 && report.maverick_matchings.size() == 4, "expected 4 layer + 4 maverick");
  o.require(state_from_graph(g, true).terms.size() == 8, "expected 8 state terms");
  return o;
}

Outcome ghz_theorem() {
  Outcome o;
  const auto scan = max_disjoint_over_subgraphs(6, 1);
  o.require(scan.subgraphs == 32768, "scan did not visit all 2^15 subgraphs");
  o.require(scan.max_d <= 2, "a 6-vertex graph has more than 2 pairwise disjoint perfect matchings and no others");
  o.require(scan.max_d == 2, "no 6-vertex graph reaches d = 2");
  o.require(max_disjoint_pms(complete_graph(4)).d == 3, "K4 does not attain 3");
  o.require(max_disjoint_over_subgraphs(4, 1).max_d == 3, "4-vertex scan does not reach 3");
  return o;
}

Outcome oracle_equivalence() {
  Outcome o;
  std::mt19937_64 rng(20260101);
  for (int i = 0; i < 200; ++i) {
    const std::size_t n = 2 * std::uniform_int_distribution<std::size_t>(1, 6)(rng);
    const double p = std::uniform_real_distribution<double>(0.2, 0.9)(rng);
    const auto g = random_graph(n, p, rng());
    o.require(hafnian(adjacency(g).entries) == BigInt(count_pm(g)), "hafnian mismatch at graph " + std::to_string(i));
  }
  for (int i = 0; i < 200; ++i) {
    const std::size_t k = std::uniform_int_distribution<std::size_t>(1, 7)(rng);
    const double p = std::uniform_real_distribution<double>(0.2, 0.9)(rng);
    const auto g = testing::random_bipartite(k, p, rng());
    o.require(permanent(biadjacency(g, bipartition_by_order(g)).entries) == BigInt(count_pm(g)),
              "permanent mismatch at graph " + std::to_string(i));
  }
  return o;
}

void check_verdicts(Outcome& o, const ExperimentGraph& g, const std::string& label) {
  const bool exists = count_pm(g) > 0;
  const auto tutte = tutte_check(g);
  o.require(std::holds_alternative<PerfectMatching>(tutte) == exists, "Tutte verdict disagrees on " + label);
  if (const auto* w = std::get_if<TutteWitness>(&tutte)) {
    o.require(oracle::tutte_witness_valid(g, *w), "invalid Tutte witness on " + label);
  }
  Bipartition parts;
  try {
    parts = two_color(g);
  } catch (const NotBipartiteError&) {
    return;
  }
  if (parts.x.size() != parts.y.size()) return;
  const auto hall = hall_check(g, parts);
  o.require(std::holds_alternative<PerfectMatching>(hall) == exists, "Hall verdict disagrees on " + label);
  if (const auto* w = std::get_if<HallWitness>(&hall)) {
    o.require(oracle::hall_witness_valid(g, *w), "invalid Hall witness on " + label);
  }
}

Outcome hall_tutte() {
  Outcome o;
  for (std::size_t n = 1; n <= 6; ++n) {
    const std::uint64_t pairs = n * (n - 1) / 2;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs); ++mask) {
      check_verdicts(o, testing::graph_from_mask(n, mask), "n=" + std::to_string(n) + " mask=" + std::to_string(mask));
    }
  }
  std::mt19937_64 rng(14);
  for (int i = 0; i < 500; ++i) {
    const std::size_t n = std::uniform_int_distribution<std::size_t>(2, 14)(rng);
    const double p = std::uniform_real_distribution<double>(0.05, 0.5)(rng);
    check_verdicts(o, random_graph(n, p, rng()), "random graph " + std::to_string(i));
  }
  const auto spider = testing::spider();
  const auto r = tutte_check(spider);
  const auto* w = std::get_if<TutteWitness>(&r);
  o.require(w != nullptr, "spider has a perfect matching");
  if (w != nullptr) {
    o.require(w->subset_u == std::vector<std::size_t>{spider.vertex_index("d")}, "witness U is not {d}");
    o.require(w->odd_components.size() == 3, "witness does not have 3 odd components");
  }
  return o;
}

Outcome frustration() {
  Outcome o;
  const std::vector<double> phases{0.0, std::numbers::pi / 2, std::numbers::pi};
  const std::vector<double> expected{4.0, 2.0, 0.0};
  const auto points = frustration_scan(testing::double_edge(0.0), "II", phases);
  for (std::size_t i = 0; i < phases.size(); ++i) {
    o.require(std::abs(points[i].intensity - expected[i]) <= kIntensityTol,
              "intensity at phase index " + std::to_string(i));
  }
  return o;
}

Outcome merge_swap() {
  Outcome o;
  const auto g = testing::merged_double_k4();
  const auto s = state_from_graph(g, true);
  o.require(s.terms.size() == 3, "merged state does not have 3 terms");
  o.require(state_near(s, uniform({{0, 0, 0, 0, 0, 0}, {1, 1, 1, 1, 1, 1}, {2, 2, 2, 2, 2, 2}}), kAmplitudeTol),
            "merged state is not the 6-photon 3-dimensional GHZ state");
  return o;
}

Outcome factorizations() {
  Outcome o;
  const auto k4 = complete_graph(4);
  const auto k6 = complete_graph(6);
  o.require(enumerate_factorizations(k4).size() == 1, "K4 factorization count");
  o.require(enumerate_factorizations(k6).size() == 6, "K6 factorization count");
  o.require(oracle::factorization_count(k6) == 6, "oracle disagrees on K6");
  return o;
}

Outcome round_trips() {
  Outcome o;
  for (std::uint64_t seed = 0; seed < 1000; ++seed) {
    const auto g = testing::random_multigraph(2 + seed % 11, seed % 30, 5, seed);
    const auto text = serialize_graph(g);
    o.require(parse_graph(text) == g.canonical() && serialize_graph(parse_graph(text)) == text,
              "serialization round trip at seed " + std::to_string(seed));
  }
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const auto g = testing::random_multigraph(2 + seed % 9, seed % 25, 3, seed + 5000);
    const auto plan = synthesize_setup(g);
    o.require(testing::without_layers(plan_to_graph(plan)).canonical() == g.canonical(),
              "plan round trip at seed " + std::to_string(seed));
    std::size_t crystals = 0;
    for (const auto& layer : plan.layers) {
      std::set<std::string> paths;
      for (const auto& c : layer) {
        o.require(paths.insert(c.path_u).second && paths.insert(c.path_v).second,
                  "layer is not a matching at seed " + std::to_string(seed));
      }
      crystals += layer.size();
    }
    o.require(crystals == g.edge_count(), "plan does not cover every edge");
  }
  return o;
}

Outcome random_networks() {
  Outcome o;
  const std::uint64_t trials = 10000;
  const double exact = oracle::pm_probability(6, 0.5);
  const std::vector<double> ps{0.0, 0.5, 1.0};
  const auto reports = ensemble_scan(6, ps, trials, 12);
  const double sigma = std::sqrt(exact * (1 - exact) / static_cast<double>(trials));
  o.require(std::abs(reports[1].pm_exists_fraction - exact) <= kSigmaBand * sigma,
            "fraction " + std::to_string(reports[1].pm_exists_fraction) + " vs exact " + std::to_string(exact));
  o.require(reports[0].pm_exists_fraction == 0.0, "p=0 fraction");
  o.require(reports[2].pm_exists_fraction == 1.0, "p=1 fraction");
  o.require(reports[2].pm_count_histogram.size() == 1 && reports[2].pm_count_histogram.begin()->first == 15,
            "p=1 histogram");
  return o;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "K4 matchings and GHZ state", 1.0, k4_fixture},
      {2, "six-vertex three-layer fixture with Maverick term", 1.0, three_layer_fixture},
      {3, "complete-graph counts and K6 layer split", 30.0, complete_graphs},
      {4, "four-layer fixture 4 + 4", 1.0, four_layer_fixture},
      {5, "GHZ dimension bound by exhaustive scan", 300.0, ghz_theorem},
      {6, "hafnian and permanent equal enumeration", 120.0, oracle_equivalence},
      {7, "Hall and Tutte verdicts and witnesses", 180.0, hall_tutte},
      {8, "frustrated double edge intensities", 1.0, frustration},
      {9, "merged double K4 gives 6-photon GHZ", 1.0, merge_swap},
      {10, "1-factorization counts", 60.0, factorizations},
      {11, "graph and plan round trips", 60.0, round_trips},
      {12, "random-network PM probability", 60.0, random_networks},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome outcome;
    try {
      outcome = c.check();
    } catch (const std::exception& e) {
      outcome = {false, std::string("exception: ") + e.what()};
    }
    const double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (outcome.ok && elapsed > c.budget_seconds) outcome = {false, "over time budget"};
    if (!outcome.ok) ++failures;
    std::printf("criterion %2d: %s  %s (%.3f s / %.0f s)%s%s\n", c.number, outcome.ok ? "PASS" : "FAIL", c.name,
                elapsed, c.budget_seconds, outcome.ok ? "" : "  ", outcome.detail.c_str());
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
