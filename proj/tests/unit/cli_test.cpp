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

#include <filesystem>

#include <nlohmann/json.hpp>

#include "cli.hpp"
#include "fixtures.hpp"

namespace pmgraph {
namespace {

using cli::CommandResult;
using cli::dispatch;
using nlohmann::json;

std::string data(const std::string& name) { return std::string(PMGRAPH_TEST_DATA_DIR) + "/" + name; }

std::string temp_path(const std::string& name) {
  return (std::filesystem::temp_directory_path() / ("pmgraph_cli_test_" + name)).string();
}

CommandResult run(std::vector<std::string> args) { return dispatch(args); }

json structured(std::vector<std::string> args) {
  args.insert(args.begin(), {"--format", "structured"});
  const auto r = dispatch(args);
  EXPECT_EQ(r.exit_code, 0) << r.err;
  return json::parse(r.out);
}

std::string reason_code(const CommandResult& r) {
  const auto first = r.err.substr(0, r.err.find('\n'));
  const auto start = first.find(": ");
  const auto end = first.find(": ", start + 2);
  return first.substr(start + 2, end - start - 2);
}

TEST(Cli, MatchingsK4) {
  const auto r = run({"matchings", data("k4.graph")});
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_EQ(r.out.rfind("3 perfect matchings", 0), 0U);
  const auto doc = structured({"matchings", data("k4.graph")});
  ASSERT_EQ(doc.size(), 3U);
  EXPECT_EQ(doc[0], json({"ab", "cd"}));
}

TEST(Cli, CountK6) {
  const auto r = run({"count", data("k6.graph")});
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_NE(r.out.find("(enumeration): 15"), std::string::npos);
  EXPECT_NE(r.out.find("(hafnian): 15"), std::string::npos);
  const auto doc = structured({"count", data("k6.graph")});
  EXPECT_EQ(doc["enumeration"], 15);
  EXPECT_EQ(doc["hafnian"], 15);
}

TEST(Cli, StateThreeLayer) {
  const auto r = run({"state", data("three_layer.graph"), "--normalize"});
  EXPECT_EQ(r.exit_code, 0) << r.err;
  EXPECT_EQ(r.out, "0.5 |0,0,0,0,0,0⟩\n0.5 |1,1,1,1,1,1⟩\n0.5 |1,2,1,2,0,0⟩\n0.5 |2,2,2,2,2,2⟩\n");
  const auto doc = structured({"--normalize", "state", data("three_layer.graph")});
  const auto back = state_from_json(doc);
  EXPECT_EQ(back.terms.size(), 4U);
  EXPECT_TRUE(back.normalized);
}

TEST(Cli, VerifyAndSearch) {
  EXPECT_EQ(run({"verify", data("k4.graph"), data("ghz3_4.state")}).out, "match\n");
  EXPECT_EQ(run({"verify", data("three_layer.graph"), data("ghz3_4.state")}).out, "no match\n");
  EXPECT_EQ(structured({"verify", data("k4.graph"), data("ghz3_4.state")}), json({{"match", true}}));
  const auto found = structured({"search", data("w.state")});
  const auto g = graph_from_json(found);
  EXPECT_TRUE(verify_target(g, parse_state(read_text_file(data("w.state")))));
  const auto none = run({"search", data("w.state"), "--max-parallel", "1"});
  EXPECT_EQ(none.exit_code, 0);
  EXPECT_EQ(none.out, "no graph found within bounds\n");
}

TEST(Cli, Frustrate) {
  const auto doc = structured({"frustrate", data("double_edge.graph"), "--edge", "II", "--steps", "2"});
  ASSERT_EQ(doc.size(), 3U);
  EXPECT_NEAR(doc[0]["intensity"].get<double>(), 4.0, 1e-9);
  EXPECT_NEAR(doc[1]["intensity"].get<double>(), 0.0, 1e-9);
  const auto explicit_phases = structured({"frustrate", data("double_edge.graph"), "--edge", "II", "--phases", "1.5707963267948966"});
  EXPECT_NEAR(explicit_phases[0]["intensity"].get<double>(), 2.0, 1e-9);
}

TEST(Cli, GhzMax) {
  EXPECT_EQ(structured({"ghz-max", data("k4.graph")})["d"], 3);
  EXPECT_EQ(structured({"ghz-max", "--bound", "6"})["max_dimension"], 2);
  EXPECT_EQ(structured({"ghz-max", "--exhaustive", "4"})["max_d"], 3);
  EXPECT_EQ(run({"ghz-max"}).exit_code, cli::kUsageError);
  EXPECT_EQ(run({"ghz-max", "--bound", "5"}).exit_code, cli::kDomainError);
}

TEST(Cli, FactorizeAndLayers) {
  EXPECT_EQ(structured({"factorize", data("k6.graph")}).size(), 6U);
  const auto layers = structured({"layers", data("three_layer.graph")});
  EXPECT_EQ(layers["layer"].size(), 3U);
  EXPECT_EQ(layers["maverick"].size(), 1U);
  EXPECT_EQ(run({"layers", data("three_layer.graph")}).out.rfind("3 layer + 1 maverick", 0), 0U);
}

TEST(Cli, Checks) {
  const auto hall = structured({"check", "hall", data("hall.graph")});
  EXPECT_EQ(hall["witness"]["subset_w"], json({"c", "e", "g"}));
  EXPECT_EQ(hall["witness"]["neighborhood"], json({"d", "f"}));
  const auto tutte = structured({"check", "tutte", data("spider.graph")});
  EXPECT_EQ(tutte["witness"]["subset_u"], json({"d"}));
  EXPECT_EQ(tutte["witness"]["odd_components"].size(), 3U);
  EXPECT_FALSE(structured({"check", "tutte", data("k4.graph")})["perfect_matching"].is_null());
  const auto not_bipartite = run({"check", "hall", data("k4.graph")});
  EXPECT_EQ(not_bipartite.exit_code, cli::kDomainError);
  EXPECT_EQ(reason_code(not_bipartite), "not_bipartite");
  EXPECT_EQ(run({"check", "hall", data("hall.graph"), "--parts-by-order"}).exit_code, cli::kDomainError);
}

TEST(Cli, MatrixFunctions) {
  EXPECT_EQ(run({"permanent", data("ones4.matrix")}).out, "24\n");
  EXPECT_EQ(run({"hafnian", data("k6.graph")}).out, "15\n");
  EXPECT_EQ(structured({"hafnian", data("k6.graph")})["value"], 15);
  const auto odd = run({"hafnian", data("ones3.matrix")});
  EXPECT_EQ(odd.exit_code, cli::kDomainError);
}

TEST(Cli, MergeSynthUnsynth) {
  const auto merged = temp_path("merged.graph");
  EXPECT_EQ(run({"merge", data("k4.graph"), data("k4.graph"), "--pair", "d:a", "-o", merged}).exit_code, 0);
  const auto g = parse_graph(read_text_file(merged));
  EXPECT_EQ(g.vertex_count(), 7U);
  EXPECT_EQ(run({"state", merged, "--normalize"}).out, run({"state", data("ghz3_6.graph"), "--normalize"}).out);

  const auto plan = temp_path("k6.plan");
  const auto dot = temp_path("k6.dot");
  EXPECT_EQ(run({"synth", data("k6.graph"), "-o", plan, "--dot", dot}).exit_code, 0);
  EXPECT_TRUE(std::filesystem::exists(dot));
  const auto back = parse_graph(run({"unsynth", plan}).out);
  EXPECT_EQ(testing::without_layers(back).canonical(), parse_graph(read_text_file(data("k6.graph"))));
  EXPECT_EQ(run({"synth", merged}).exit_code, cli::kDomainError);
  EXPECT_EQ(run({"merge", data("k4.graph"), data("k4.graph"), "--pair", "da"}).exit_code, cli::kDomainError);
}

TEST(Cli, RandomDeterministic) {
  const auto a = run({"--format", "structured", "random", "--n", "6", "--p", "0.3,0.7", "--trials", "50", "--seed", "5"});
  const auto b = run({"--format", "structured", "random", "--n", "6", "--p", "0.3,0.7", "--trials", "50", "--seed", "5"});
  EXPECT_EQ(a.exit_code, 0) << a.err;
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(ensemble_from_json(json::parse(a.out)).size(), 2U);
  const auto graph = run({"random", "--n", "8", "--p", "0.5", "--seed", "42", "--emit-graph"});
  EXPECT_EQ(graph.out, read_text_file(data("random_n8_p0.5_seed42.json")));
  const auto csv = temp_path("ens.csv");
  EXPECT_EQ(run({"random", "--n", "4", "--p", "1", "--trials", "3", "--seed", "0", "--csv", csv}).exit_code, 0);
  EXPECT_EQ(read_text_file(csv), "p,fraction,count,frequency\n1,1,3,3\n");
  EXPECT_EQ(run({"random", "--n", "4", "--p", "2", "--seed", "0"}).exit_code, cli::kUsageError);
}

TEST(Cli, Dot) {
  EXPECT_EQ(run({"dot", data("k4.graph")}).out, to_dot(parse_graph(read_text_file(data("k4.graph")))));
  EXPECT_TRUE(structured({"dot", data("k4.graph")})["dot"].is_string());
}

TEST(Cli, ExitCodes) {
  const auto unknown = run({"frobnicate"});
  EXPECT_EQ(unknown.exit_code, cli::kUsageError);
  EXPECT_NE(unknown.err.find("Subcommands:"), std::string::npos);
  EXPECT_EQ(run({}).exit_code, cli::kUsageError);
  EXPECT_EQ(run({"--help"}).exit_code, 0);

  const auto missing = run({"count", data("does_not_exist.graph")});
  EXPECT_EQ(missing.exit_code, cli::kDomainError);
  EXPECT_EQ(reason_code(missing), "io_error");

  const auto bad = run({"count", data("self_loop.graph")});
  EXPECT_EQ(bad.exit_code, cli::kDomainError);
  EXPECT_EQ(reason_code(bad), "parse_error");

  const auto frustrated = run({"state", data("double_edge_pi.graph"), "--normalize"});
  EXPECT_EQ(frustrated.exit_code, cli::kDomainError);
  EXPECT_EQ(reason_code(frustrated), "fully_frustrated");

  const auto big = run({"ghz-max", "--exhaustive", "12"});
  EXPECT_EQ(big.exit_code, cli::kScaleLimit);
  EXPECT_EQ(reason_code(big), "scale_limit");

  for (const auto& r : {missing, bad, frustrated, big}) {
    EXPECT_EQ(r.err.find('\n'), r.err.size() - 1) << r.err;
  }
}

TEST(Cli, StructuredOutputParses) {
  const std::vector<std::vector<std::string>> commands{
      {"matchings", data("k4.graph")},
      {"count", data("k4.graph")},
      {"state", data("k4.graph")},
      {"verify", data("k4.graph"), data("ghz3_4.state")},
      {"search", data("ghz3_4.state")},
      {"frustrate", data("double_edge.graph"), "--edge", "I"},
      {"ghz-max", data("k4.graph")},
      {"factorize", data("k4.graph")},
      {"layers", data("k4.graph")},
      {"check", "tutte", data("k4.graph")},
      {"hafnian", data("k4.graph")},
      {"permanent", data("ones4.matrix")},
      {"merge", data("k4.graph"), data("k4.graph"), "--pair", "d:a"},
      {"synth", data("k4.graph")},
      {"random", "--n", "4", "--p", "0.5", "--trials", "5", "--seed", "1"},
      {"dot", data("k4.graph")}};
  for (const auto& args : commands) {
    EXPECT_NO_THROW(structured(args)) << args.front();
  }
}

}  // namespace
}  // namespace pmgraph
