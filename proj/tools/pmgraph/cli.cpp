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

#include "cli.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numbers>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "pmgraph/pmgraph.hpp"

namespace pmgraph::cli {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

struct GlobalOptions {
  std::string format = "text";
  bool limit_override = false;
  bool normalize = false;
  unsigned threads = 1;

  bool structured() const { return format == "structured"; }

  MatchingLimits matching_limits() const {
    MatchingLimits l;
    l.override_limits = limit_override;
    return l;
  }
  CounterLimits counter_limits() const {
    CounterLimits l;
    l.override_limits = limit_override;
    return l;
  }
};

ordered_json ids_json(const PerfectMatching& pm) { return pm.edge_ids; }

std::string ids_text(const PerfectMatching& pm) {
  std::string out = "{";
  for (std::size_t i = 0; i < pm.edge_ids.size(); ++i) out += (i ? ", " : "") + pm.edge_ids[i];
  return out + "}";
}

ordered_json names_json(const ExperimentGraph& g, const std::vector<std::size_t>& vertices) {
  ordered_json out = ordered_json::array();
  for (std::size_t v : vertices) out.push_back(g.vertex_name(v));
  return out;
}

std::string names_text(const ExperimentGraph& g, const std::vector<std::size_t>& vertices) {
  std::string out = "{";
  for (std::size_t i = 0; i < vertices.size(); ++i) out += (i ? ", " : "") + g.vertex_name(vertices[i]);
  return out + "}";
}

/// Exact counts as JSON numbers when they fit, decimal strings otherwise.
ordered_json bigint_json(const BigInt& value) {
  if (value >= 0 && value <= std::numeric_limits<std::uint64_t>::max()) {
    return value.convert_to<std::uint64_t>();
  }
  if (value < 0 && value >= std::numeric_limits<std::int64_t>::min()) return value.convert_to<std::int64_t>();
  return value.str();
}

ExperimentGraph load_graph(const std::string& path) { return parse_graph(read_text_file(path)); }

std::string dump(const ordered_json& doc) { return doc.dump(2) + "\n"; }

// Matrix document: list of rows, entries integers, reals or [re, im].
struct MatrixInput {
  bool exact = true;
  IntMatrix ints;
  ComplexMatrix complex;
};

MatrixInput matrix_from_json(const json& doc) {
  if (!doc.is_array()) throw ParseError("/", "expected a list of rows");
  const std::size_t rows = doc.size();
  const std::size_t cols = rows == 0 ? 0 : (doc[0].is_array() ? doc[0].size() : 0);
  MatrixInput in;
  in.ints = IntMatrix(rows, cols, 0);
  in.complex = ComplexMatrix(rows, cols, 0.0);
  for (std::size_t r = 0; r < rows; ++r) {
    const std::string at = "/" + std::to_string(r);
    if (!doc[r].is_array() || doc[r].size() != cols) throw ParseError(at, "rows must be lists of equal length");
    for (std::size_t c = 0; c < cols; ++c) {
      const json& x = doc[r][c];
      const std::string where = at + "/" + std::to_string(c);
      if (x.is_number_integer()) {
        in.ints(r, c) = x.get<std::int64_t>();
        in.complex(r, c) = static_cast<double>(x.get<std::int64_t>());
      } else if (x.is_number()) {
        in.exact = false;
        in.complex(r, c) = x.get<double>();
      } else if (x.is_array() && x.size() == 2 && x[0].is_number() && x[1].is_number()) {
        in.exact = false;
        in.complex(r, c) = {x[0].get<double>(), x[1].get<double>()};
      } else {
        throw ParseError(where, "expected a number or [re, im]");
      }
    }
  }
  return in;
}

ordered_json complex_json(std::complex<double> z) { return {{"re", z.real()}, {"im", z.imag()}}; }

std::string complex_text(std::complex<double> z) {
  std::ostringstream out;
  out.precision(12);
  out << z.real() << (z.imag() < 0 ? " - " : " + ") << std::abs(z.imag()) << "i";
  return out.str();
}

std::vector<double> phase_grid(std::size_t steps) {
  std::vector<double> phases;
  for (std::size_t k = 0; k <= steps; ++k) {
    phases.push_back(2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(steps));
  }
  return phases;
}

class Commands {
 public:
  explicit Commands(const GlobalOptions& opt) : opt_(opt) {}

  std::string matchings(const std::string& path) {
    const auto g = load_graph(path);
    const auto pms = enumerate_pm(g, opt_.matching_limits());
    if (opt_.structured()) {
      ordered_json doc = ordered_json::array();
      for (const auto& pm : pms) doc.push_back(ids_json(pm));
      return dump(doc);
    }
    std::ostringstream out;
    out << pms.size() << " perfect matching" << (pms.size() == 1 ? "" : "s") << "\n";
    for (const auto& pm : pms) out << ids_text(pm) << "\n";
    return out.str();
  }

  std::string count(const std::string& path) {
    const auto g = load_graph(path);
    const std::uint64_t enumerated = count_pm(g, opt_.matching_limits());
    std::optional<MatrixCount> via_matrix;
    if (g.measured_count() == 0) via_matrix = count_pm_via_matrix(g, opt_.counter_limits());
    if (opt_.structured()) {
      ordered_json doc;
      doc["enumeration"] = enumerated;
      doc["hafnian"] = via_matrix ? bigint_json(via_matrix->hafnian) : ordered_json();
      doc["permanent"] = via_matrix && via_matrix->permanent ? bigint_json(*via_matrix->permanent) : ordered_json();
      return dump(doc);
    }
    std::ostringstream out;
    out << "perfect matchings (enumeration): " << enumerated << "\n";
    if (via_matrix) {
      out << "perfect matchings (hafnian): " << via_matrix->hafnian << "\n";
      if (via_matrix->permanent) out << "perfect matchings (permanent): " << *via_matrix->permanent << "\n";
    } else {
      out << "hafnian: not applicable to graphs with measured vertices\n";
    }
    return out.str();
  }

  std::string state(const std::string& path) {
    const auto s = state_from_graph(load_graph(path), opt_.normalize, opt_.matching_limits());
    if (opt_.structured()) return dump(state_to_json(s));
    if (s.terms.empty()) return "(no terms)\n";
    return format_state(s);
  }

  std::string verify(const std::string& graph_path, const std::string& state_path) {
    const bool ok = verify_target(load_graph(graph_path), parse_state(read_text_file(state_path)),
                                  opt_.matching_limits());
    if (opt_.structured()) return dump({{"match", ok}});
    return ok ? "match\n" : "no match\n";
  }

  std::string search(const std::string& path, const SearchBounds& bounds) {
    const auto found = search_graph_for_state(parse_state(read_text_file(path)), bounds);
    if (opt_.structured()) return dump(found ? graph_to_json(*found) : ordered_json());
    if (!found) return "no graph found within bounds\n";
    return serialize_graph(*found);
  }

  std::string frustrate(const std::string& path, const std::string& edge, const std::vector<double>& phases) {
    const auto points = frustration_scan(load_graph(path), edge, phases, opt_.matching_limits());
    if (opt_.structured()) {
      ordered_json doc = ordered_json::array();
      for (const auto& p : points) doc.push_back({{"phase", p.phase}, {"intensity", p.intensity}});
      return dump(doc);
    }
    std::ostringstream out;
    out.precision(10);
    out << "phase_rad intensity\n";
    for (const auto& p : points) out << p.phase << " " << p.intensity << "\n";
    return out.str();
  }

  std::string ghz_max(const std::string& path) {
    const auto g = load_graph(path);
    const auto result = max_disjoint_pms(g, opt_.matching_limits());
    if (opt_.structured()) {
      ordered_json witness = ordered_json::array();
      for (const auto& pm : result.witness) witness.push_back(ids_json(pm));
      return dump({{"d", result.d}, {"witness", witness}});
    }
    std::ostringstream out;
    out << "disjoint perfect matchings: " << result.d << "\n";
    for (const auto& pm : result.witness) out << ids_text(pm) << "\n";
    return out.str();
  }

  std::string ghz_scan(std::size_t n) {
    const auto scan = max_disjoint_over_subgraphs(n, opt_.threads, opt_.matching_limits());
    if (opt_.structured()) {
      ordered_json doc;
      doc["vertices"] = scan.vertices;
      doc["subgraphs"] = scan.subgraphs;
      doc["max_d"] = scan.max_d;
      doc["max_d_with_maverick"] = scan.max_d_any;
      doc["argmax"] = graph_to_json(scan.argmax);
      return dump(doc);
    }
    std::ostringstream out;
    out << "scanned " << scan.subgraphs << " simple graphs on " << n << " vertices\n";
    out << "maximum GHZ dimension (all perfect matchings disjoint): " << scan.max_d << "\n";
    out << "maximum disjoint perfect matchings (Maverick terms allowed): " << scan.max_d_any << "\n";
    return out.str();
  }

  std::string ghz_bound(std::size_t n) {
    const std::size_t d = ghz_dimension_bound(n);
    if (opt_.structured()) return dump({{"photons", n}, {"max_dimension", d}});
    return "maximum GHZ dimension for " + std::to_string(n) + " photons (simple graphs): " + std::to_string(d) + "\n";
  }

  std::string factorize(const std::string& path) {
    const auto fs = enumerate_factorizations(load_graph(path), opt_.matching_limits());
    if (opt_.structured()) {
      ordered_json doc = ordered_json::array();
      for (const auto& f : fs) {
        ordered_json factors = ordered_json::array();
        for (const auto& pm : f.factors) factors.push_back(ids_json(pm));
        doc.push_back(std::move(factors));
      }
      return dump(doc);
    }
    std::ostringstream out;
    out << fs.size() << " 1-factorization" << (fs.size() == 1 ? "" : "s") << "\n";
    for (const auto& f : fs) {
      for (std::size_t i = 0; i < f.factors.size(); ++i) out << (i ? " " : "") << ids_text(f.factors[i]);
      out << "\n";
    }
    return out.str();
  }

  std::string layers(const std::string& path) {
    const auto report = classify_layers(load_graph(path), opt_.matching_limits());
    if (opt_.structured()) {
      ordered_json layer = ordered_json::array();
      for (std::size_t i = 0; i < report.layer_matchings.size(); ++i) {
        layer.push_back({{"layer", report.layer_tags[i]}, {"matching", ids_json(report.layer_matchings[i])}});
      }
      ordered_json maverick = ordered_json::array();
      for (const auto& pm : report.maverick_matchings) maverick.push_back(ids_json(pm));
      return dump({{"layer", layer}, {"maverick", maverick}});
    }
    std::ostringstream out;
    out << report.layer_matchings.size() << " layer + " << report.maverick_matchings.size() << " maverick\n";
    for (std::size_t i = 0; i < report.layer_matchings.size(); ++i) {
      out << "layer " << report.layer_tags[i] << ": " << ids_text(report.layer_matchings[i]) << "\n";
    }
    for (const auto& pm : report.maverick_matchings) out << "maverick: " << ids_text(pm) << "\n";
    return out.str();
  }

  std::string hall(const std::string& path, bool parts_by_order) {
    const auto g = load_graph(path);
    std::optional<Bipartition> parts;
    if (parts_by_order) parts = bipartition_by_order(g);
    const auto result = hall_check(g, parts);
    if (const auto* pm = std::get_if<PerfectMatching>(&result)) return matching_result(*pm);
    const auto& w = std::get<HallWitness>(result);
    if (opt_.structured()) {
      return dump({{"perfect_matching", nullptr},
                   {"witness", {{"subset_w", names_json(g, w.subset_w)}, {"neighborhood", names_json(g, w.neighborhood)}}}});
    }
    return "no perfect matching: W = " + names_text(g, w.subset_w) + " has N(W) = " + names_text(g, w.neighborhood) +
           "\n";
  }

  std::string tutte(const std::string& path) {
    const auto g = load_graph(path);
    const auto result = tutte_check(g, 20, opt_.limit_override);
    if (const auto* pm = std::get_if<PerfectMatching>(&result)) return matching_result(*pm);
    const auto& w = std::get<TutteWitness>(result);
    if (opt_.structured()) {
      ordered_json comps = ordered_json::array();
      for (const auto& c : w.odd_components) comps.push_back(names_json(g, c));
      return dump({{"perfect_matching", nullptr},
                   {"witness", {{"subset_u", names_json(g, w.subset_u)}, {"odd_components", comps}}}});
    }
    std::ostringstream out;
    out << "no perfect matching: U = " << names_text(g, w.subset_u) << " leaves " << w.odd_components.size()
        << " odd components";
    for (const auto& c : w.odd_components) out << " " << names_text(g, c);
    out << "\n";
    return out.str();
  }

  std::string matrix_function(const std::string& path, bool is_hafnian) {
    const json doc = parse_json(read_text_file(path));
    MatrixInput in;
    if (doc.is_object()) {
      const auto g = graph_from_json(doc);
      in.ints = is_hafnian ? adjacency(g).entries : biadjacency(g).entries;
    } else {
      in = matrix_from_json(doc);
    }
    const auto limits = opt_.counter_limits();
    if (in.exact) {
      const BigInt value = is_hafnian ? hafnian(in.ints, limits) : permanent(in.ints, limits);
      if (opt_.structured()) return dump({{"value", bigint_json(value)}});
      return value.str() + "\n";
    }
    const auto value = is_hafnian ? hafnian(in.complex, limits) : permanent(in.complex, limits);
    if (opt_.structured()) return dump({{"value", complex_json(value)}});
    return complex_text(value) + "\n";
  }

  std::string merge(const std::string& first, const std::string& second, const std::vector<std::string>& pair_args,
                    const std::string& output) {
    std::vector<MergePair> pairs;
    for (const auto& arg : pair_args) {
      const auto colon = arg.find(':');
      if (colon == std::string::npos || colon == 0 || colon + 1 == arg.size()) {
        throw DomainError("bad_pair", "merge pair '" + arg + "' must look like first:second");
      }
      pairs.emplace_back(arg.substr(0, colon), arg.substr(colon + 1));
    }
    const auto merged = merge_graphs(load_graph(first), load_graph(second), pairs);
    return emit_graph(merged, output);
  }

  std::string synth(const std::string& path, const std::string& output, const std::string& dot_path) {
    const auto plan = synthesize_setup(load_graph(path));
    if (!dot_path.empty()) write_text_file(dot_path, to_dot(plan_to_graph(plan)));
    if (!output.empty()) {
      write_text_file(output, serialize_plan(plan));
      return opt_.structured() ? dump({{"written", output}}) : "plan written to " + output + "\n";
    }
    return opt_.structured() ? serialize_plan(plan) : format_plan(plan);
  }

  std::string unsynth(const std::string& path, const std::string& output) {
    return emit_graph(plan_to_graph(parse_plan(read_text_file(path))), output);
  }

  std::string random(std::size_t n, const std::vector<double>& ps, std::uint64_t trials, std::uint64_t seed,
                     const std::string& csv, bool emit_graph_only) {
    if (ps.empty()) throw DomainError("at least one --p value is required");
    if (emit_graph_only) return serialize_graph(random_graph(n, ps.front(), seed));
    const auto reports = ensemble_scan(n, ps, trials, seed, opt_.threads);
    if (!csv.empty()) write_text_file(csv, ensemble_to_csv(reports));
    if (opt_.structured()) return dump(ensemble_to_json(reports));
    std::ostringstream out;
    out.precision(6);
    for (const auto& r : reports) {
      out << "n=" << r.n << " p=" << r.p << " trials=" << r.trials << " pm_exists_fraction=" << r.pm_exists_fraction
          << "\n";
    }
    return out.str();
  }

  std::string dot(const std::string& path) {
    const std::string text = to_dot(load_graph(path));
    return opt_.structured() ? dump({{"dot", text}}) : text;
  }

 private:
  static json parse_json(const std::string& text) {
    try {
      return json::parse(text);
    } catch (const json::parse_error& e) {
      throw ParseError("byte " + std::to_string(e.byte), "malformed document");
    }
  }

  std::string matching_result(const PerfectMatching& pm) const {
    if (opt_.structured()) return dump({{"perfect_matching", ids_json(pm)}, {"witness", nullptr}});
    return "perfect matching: " + ids_text(pm) + "\n";
  }

  std::string emit_graph(const ExperimentGraph& g, const std::string& output) const {
    if (!output.empty()) {
      write_text_file(output, serialize_graph(g));
      return opt_.structured() ? dump({{"written", output}}) : "graph written to " + output + "\n";
    }
    return serialize_graph(g);
  }

  const GlobalOptions& opt_;
};

std::string error_line(const std::string& code, const std::string& message) {
  std::string flat = message;
  std::replace(flat.begin(), flat.end(), '\n', ' ');
  return "error: " + code + ": " + flat + "\n";
}

}  // namespace

CommandResult dispatch(const std::vector<std::string>& args) {
  GlobalOptions opt;
  CLI::App app{"pmgraph: quantum-optics experiments as perfect-matching graphs", "pmgraph"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--format", opt.format, "Output format")->check(CLI::IsMember({"text", "structured"}));
  app.add_flag("--limit-override", opt.limit_override, "Lift enumeration and kernel size limits");
  app.add_flag("--normalize", opt.normalize, "Normalize computed states");
  app.add_option("--threads", opt.threads, "Worker threads for scans")->check(CLI::Range(1U, 256U));

  Commands run(opt);
  std::function<std::string()> action;
  std::string graph, other, output, dot_path, edge;

  auto graph_command = [&](const char* name, const char* help, std::string (Commands::*fn)(const std::string&)) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("graph", graph, "Graph document")->required();
    sub->callback([&, fn] { action = [&, fn] { return (run.*fn)(graph); }; });
    return sub;
  };
  graph_command("matchings", "List perfect matchings", &Commands::matchings);
  graph_command("count", "Count perfect matchings by enumeration and by matrix functions", &Commands::count);
  graph_command("state", "Post-selected quantum state", &Commands::state);
  graph_command("factorize", "Enumerate 1-factorizations", &Commands::factorize);
  graph_command("layers", "Split perfect matchings into layer and Maverick terms", &Commands::layers);
  graph_command("dot", "Graphviz export", &Commands::dot);

  auto* verify = app.add_subcommand("verify", "Compare a graph's state with a target state");
  verify->add_option("graph", graph, "Graph document")->required();
  verify->add_option("state", other, "State document")->required();
  verify->callback([&] { action = [&] { return run.verify(graph, other); }; });

  SearchBounds bounds;
  auto* search = app.add_subcommand("search", "Search small multigraphs producing a target state");
  search->add_option("state", other, "State document")->required();
  search->add_option("--max-edges", bounds.max_edges)->capture_default_str();
  search->add_option("--max-mode", bounds.max_mode)->capture_default_str();
  search->add_option("--max-parallel", bounds.max_parallel)->capture_default_str()->check(CLI::PositiveNumber);
  search->callback([&] { action = [&] { return run.search(other, bounds); }; });

  std::vector<double> phases;
  std::size_t steps = 8;
  auto* frustrate = app.add_subcommand("frustrate", "Intensity while sweeping one crystal's phase");
  frustrate->add_option("graph", graph, "Graph document")->required();
  frustrate->add_option("--edge", edge, "Edge id")->required();
  auto* phase_opt = frustrate->add_option("--phases", phases, "Phases in radians")->delimiter(',');
  frustrate->add_option("--steps", steps, "Evenly spaced phases over [0, 2pi]")
      ->excludes(phase_opt)
      ->check(CLI::PositiveNumber);
  frustrate->callback([&] {
    action = [&] { return run.frustrate(graph, edge, phases.empty() ? phase_grid(steps) : phases); };
  });

  std::size_t exhaustive = 0;
  std::size_t bound = 0;
  auto* ghz = app.add_subcommand("ghz-max", "Maximum number of disjoint perfect matchings");
  auto* ghz_graph = ghz->add_option("graph", graph, "Graph document");
  auto* ghz_scan = ghz->add_option("--exhaustive", exhaustive, "Scan every simple graph on N vertices");
  auto* ghz_bound = ghz->add_option("--bound", bound, "Closed-form GHZ dimension bound for N photons");
  ghz_graph->excludes(ghz_scan)->excludes(ghz_bound);
  ghz_scan->excludes(ghz_bound);
  ghz->callback([&] {
    if (ghz_scan->count() > 0) {
      action = [&] { return run.ghz_scan(exhaustive); };
    } else if (ghz_bound->count() > 0) {
      action = [&] { return run.ghz_bound(bound); };
    } else if (ghz_graph->count() > 0) {
      action = [&] { return run.ghz_max(graph); };
    } else {
      throw CLI::RequiredError("ghz-max needs a graph, --exhaustive N or --bound N");
    }
  });

  bool parts_by_order = false;
  auto* check = app.add_subcommand("check", "Matchability with Hall or Tutte witnesses");
  check->require_subcommand(1);
  auto* hall = check->add_subcommand("hall", "Hall's condition (bipartite graphs)");
  hall->add_option("graph", graph, "Graph document")->required();
  hall->add_flag("--parts-by-order", parts_by_order, "X = first half of the declared vertices");
  hall->callback([&] { action = [&] { return run.hall(graph, parts_by_order); }; });
  auto* tutte = check->add_subcommand("tutte", "Tutte's condition (general graphs)");
  tutte->add_option("graph", graph, "Graph document")->required();
  tutte->callback([&] { action = [&] { return run.tutte(graph); }; });

  for (bool is_hafnian : {true, false}) {
    auto* sub = app.add_subcommand(is_hafnian ? "hafnian" : "permanent",
                                   is_hafnian ? "Hafnian of a matrix or a graph's adjacency matrix"
                                              : "Permanent of a matrix or a graph's biadjacency matrix");
    sub->add_option("file", other, "Matrix or graph document")->required();
    sub->callback([&, is_hafnian] { action = [&, is_hafnian] { return run.matrix_function(other, is_hafnian); }; });
  }

  std::vector<std::string> pairs;
  auto* merge = app.add_subcommand("merge", "Merge two graphs at vertex pairs (measured vertices)");
  merge->add_option("first", graph, "First graph")->required();
  merge->add_option("second", other, "Second graph")->required();
  merge->add_option("--pair", pairs, "first:second vertex pair")->take_all();
  merge->add_option("-o,--output", output, "Write the merged graph here");
  merge->callback([&] { action = [&] { return run.merge(graph, other, pairs, output); }; });

  auto* synth = app.add_subcommand("synth", "Compile a graph into a layered setup plan");
  synth->add_option("graph", graph, "Graph document")->required();
  synth->add_option("-o,--output", output, "Write the plan document here");
  synth->add_option("--dot", dot_path, "Also write a Graphviz file");
  synth->callback([&] { action = [&] { return run.synth(graph, output, dot_path); }; });

  auto* unsynth = app.add_subcommand("unsynth", "Recover the graph from a setup plan");
  unsynth->add_option("plan", other, "Plan document")->required();
  unsynth->add_option("-o,--output", output, "Write the graph document here");
  unsynth->callback([&] { action = [&] { return run.unsynth(other, output); }; });

  std::size_t n = 0;
  std::vector<double> ps;
  std::uint64_t trials = 1000;
  std::uint64_t seed = 0;
  std::string csv;
  bool emit_graph_only = false;
  auto* random = app.add_subcommand("random", "Perfect-matching statistics of random networks G(n, p)");
  random->add_option("--n", n, "Vertex count")->required();
  random->add_option("--p", ps, "Edge probabilities")->required()->delimiter(',')->check(CLI::Range(0.0, 1.0));
  random->add_option("--trials", trials, "Samples per p")->capture_default_str()->check(CLI::PositiveNumber);
  random->add_option("--seed", seed, "Base seed")->required();
  random->add_option("--csv", csv, "Also write a CSV report");
  random->add_flag("--emit-graph", emit_graph_only, "Print one sampled graph (first p) instead of statistics");
  random->callback([&] { action = [&] { return run.random(n, ps, trials, seed, csv, emit_graph_only); }; });

  CommandResult result;
  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    result.out = app.help();
    return result;
  } catch (const CLI::ParseError& e) {
    result.exit_code = kUsageError;
    result.err = error_line("usage", e.what()) + app.help();
    return result;
  }
  if (!action) {
    result.exit_code = kUsageError;
    result.err = error_line("usage", "no command given") + app.help();
    return result;
  }

  try {
    result.out = action();
  } catch (const ScaleLimitError& e) {
    result.exit_code = kScaleLimit;
    result.err = error_line(e.code(), e.what());
  } catch (const Error& e) {
    result.exit_code = kDomainError;
    result.err = error_line(e.code(), e.what());
  } catch (const std::exception& e) {
    result.exit_code = kDomainError;
    result.err = error_line("internal", e.what());
  }
  return result;
}

}  // namespace pmgraph::cli
