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

#include <gtest/gtest.h>

#include <set>

#include "fixtures.hpp"

namespace pmgraph {
namespace {

void expect_layers_are_matchings(const SetupPlan& plan, std::size_t edges) {
  std::set<std::string> seen;
  for (const auto& layer : plan.layers) {
    std::set<std::string> paths;
    for (const auto& c : layer) {
      EXPECT_TRUE(paths.insert(c.path_u).second);
      EXPECT_TRUE(paths.insert(c.path_v).second);
      EXPECT_TRUE(seen.insert(c.edge_id).second);
    }
  }
  EXPECT_EQ(seen.size(), edges);
}

TEST(Synthesize, K4HasThreePerfectLayers) {
  const auto g = complete_graph(4);
  const auto plan = synthesize_setup(g);
  ASSERT_EQ(plan.layers.size(), 3U);
  for (const auto& layer : plan.layers) EXPECT_EQ(layer.size(), 2U);
  expect_layers_are_matchings(plan, 6);
  EXPECT_EQ(plan.detectors, g.vertex_names());
}

TEST(Synthesize, SingleEdgeOneLayer) {
  ExperimentGraph g{"a", "b"};
  g.add_edge(EdgeSpec{.u = "a", .v = "b"});
  EXPECT_EQ(synthesize_setup(g).layers.size(), 1U);
}

TEST(Synthesize, RandomEightVertexGraph) {
  // Any 8-vertex graph with 14 edges stands in for a random network instance.
  for (std::uint64_t seed = 0;; ++seed) {
    const auto g = random_graph(8, 0.5, seed);
    if (g.edge_count() != 14) continue;
    const auto plan = synthesize_setup(g);
    expect_layers_are_matchings(plan, 14);
    const auto degrees = g.degrees();
    const std::size_t delta = *std::max_element(degrees.begin(), degrees.end());
    EXPECT_LE(plan.layers.size(), 2 * delta - 1);
    break;
  }
}

TEST(Synthesize, PreservesFactorizationTags) {
  for (const auto& g : {testing::k4_ghz(), testing::three_layer(), testing::four_layer(), testing::k6_five_layer()}) {
    const auto plan = synthesize_setup(g);
    EXPECT_EQ(plan_to_graph(plan).canonical(), g.canonical());
    const auto report = classify_layers(g);
    ASSERT_EQ(plan.layers.size(), report.layer_matchings.size());
    for (std::size_t k = 0; k < report.layer_tags.size(); ++k) {
      std::vector<std::string> ids;
      for (const auto& c : plan.layers.at(report.layer_tags[k])) ids.push_back(c.edge_id);
      EXPECT_EQ(ids, report.layer_matchings[k].edge_ids);
    }
  }
}

TEST(Synthesize, ConflictingTags) {
  ExperimentGraph g{"a", "b", "c"};
  g.add_edge(EdgeSpec{.u = "a", .v = "b", .layer = 0});
  g.add_edge(EdgeSpec{.u = "b", .v = "c", .layer = 0});
  try {
    synthesize_setup(g);
    FAIL();
  } catch (const DomainError& e) {
    EXPECT_EQ(e.code(), "layer_conflict");
  }
}

TEST(Synthesize, MeasuredRejected) { EXPECT_THROW(synthesize_setup(testing::merged_double_k4()), DomainError); }

TEST(RoundTrip, K6) {
  const auto g = complete_graph(6);
  EXPECT_EQ(testing::without_layers(plan_to_graph(synthesize_setup(g))).canonical(), g.canonical());
}

TEST(RoundTrip, DoubleEdgeNeedsTwoLayers) {
  const auto g = testing::double_edge(0.4);
  const auto plan = synthesize_setup(g);
  EXPECT_EQ(plan.layers.size(), 2U);
  EXPECT_EQ(testing::without_layers(plan_to_graph(plan)).canonical(), g.canonical());
}

TEST(RoundTrip, EmptyGraph) {
  const auto plan = synthesize_setup(ExperimentGraph{});
  EXPECT_TRUE(plan.layers.empty());
  EXPECT_TRUE(plan_to_graph(plan).empty());
}

TEST(RoundTrip, Serialization) {
  const auto plan = synthesize_setup(testing::random_multigraph(7, 15, 3, 4));
  EXPECT_EQ(parse_plan(serialize_plan(plan)), plan);
  EXPECT_EQ(serialize_plan(parse_plan(serialize_plan(plan))), serialize_plan(plan));
}

TEST(RoundTrip, WiringIsChronological) {
  const auto plan = synthesize_setup(complete_graph(4));
  for (const auto& [path, crystals] : plan.wiring) {
    EXPECT_EQ(crystals.size(), 3U);
    std::size_t last_layer = 0;
    for (const auto& id : crystals) {
      std::size_t layer = 0;
      while (std::none_of(plan.layers[layer].begin(), plan.layers[layer].end(),
                          [&](const Crystal& c) { return c.edge_id == id; })) {
        ++layer;
      }
      EXPECT_GE(layer, last_layer);
      last_layer = layer;
    }
  }
}

TEST(RoundTrip, WiringMismatchDetected) {
  auto plan = synthesize_setup(complete_graph(4));
  std::swap(plan.wiring["a"][0], plan.wiring["a"][1]);
  try {
    plan_to_graph(plan);
    FAIL();
  } catch (const DomainError& e) {
    EXPECT_EQ(e.code(), "wiring_mismatch");
  }
  auto bad = synthesize_setup(complete_graph(4));
  bad.layers[0].push_back(bad.layers[1][0]);
  bad.layers[1].erase(bad.layers[1].begin());
  EXPECT_THROW(plan_to_graph(bad), DomainError);
}

TEST(PlanText, ListsCrystalsByLayer) {
  const auto text = format_plan(synthesize_setup(testing::k4_ghz()));
  EXPECT_NE(text.find("layer 0"), std::string::npos);
  EXPECT_NE(text.find("ab"), std::string::npos);
}

}  // namespace
}  // namespace pmgraph
