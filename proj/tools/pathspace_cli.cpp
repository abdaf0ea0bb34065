// Copyright 2026 The pathspace Authors
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

// Command-line front end for u-v path graphs and their restricted subgraphs.

#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "pathspace/cycle_space.hpp"
#include "pathspace/delta_star.hpp"
#include "pathspace/io.hpp"
#include "pathspace/path_space.hpp"
#include "pathspace/verify.hpp"

namespace {

using namespace pathspace;

struct Options {
  std::string graph_file;
  std::string u;
  std::string v;
  std::string cycles_file;
  std::string embedding_file;
  std::uint64_t seed = kDefaultSeed;
  std::size_t max_paths = kDefaultMaxPaths;
  std::string out_file;
  bool dot = false;
  bool edge_labels = false;
  bool show_removed = false;

  // Command-specific.
  std::vector<std::string> positional;
  std::string sigma;
  std::string corpus;
  std::size_t max_n = 5;
  std::size_t count = 50;
  std::size_t route_samples = 20;
  std::vector<std::string> theorems;
  bool no_duration = false;
};

int g_exit = 0;

void emit(const Options& o, const std::string& text) {
  if (o.out_file.empty()) {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << '\n';
  } else {
    write_text_file(o.out_file, text.back() == '\n' ? text : text + "\n");
  }
}

void emit(const Options& o, const Json& j) { emit(o, j.dump(2)); }

Graph load_graph(const Options& o) {
  if (o.graph_file.empty()) throw Error("--graph FILE is required for this command");
  return graph_from_json(read_json_file(o.graph_file));
}

std::optional<CycleSet> load_cycles(const Graph& g, const Options& o) {
  if (o.cycles_file.empty()) return std::nullopt;
  return cycle_set_from_json(g, read_json_file(o.cycles_file));
}

CycleSet require_cycles(const Graph& g, const Options& o) {
  auto c = load_cycles(g, o);
  if (!c) throw Error("--cycles FILE is required for this command");
  return *std::move(c);
}

std::pair<Vertex, Vertex> endpoints(const Graph& g, const Options& o) {
  if (o.u.empty() || o.v.empty()) throw Error("--u ID and --v ID are required for this command");
  return {parse_vertex(g, o.u), parse_vertex(g, o.v)};
}

Json paths_json(const Graph& g, const std::vector<Path>& paths) {
  Json j = Json::array();
  for (const auto& p : paths) j.push_back(path_json(g, p));
  return j;
}

PathGraph load_path_graph(const Graph& g, const Options& o) {
  auto [u, v] = endpoints(g, o);
  auto c = load_cycles(g, o);
  if (!is_two_connected(g)) std::cerr << "warning: graph is not 2-connected\n";
  return build_path_graph(g, u, v, c ? &*c : nullptr, o.max_paths);
}

void cmd_paths(const Options& o) {
  Graph g = load_graph(o);
  auto [u, v] = endpoints(g, o);
  auto paths = enumerate_uv_paths(g, u, v, o.max_paths);
  Json j;
  j["count"] = paths.size();
  j["paths"] = paths_json(g, paths);
  emit(o, j);
}

void cmd_pathgraph(const Options& o) {
  Graph g = load_graph(o);
  PathGraph pg = load_path_graph(g, o);
  if (o.dot) {
    emit(o, export_dot(g, pg, {o.edge_labels, o.show_removed}));
    return;
  }
  Json j;
  j["u"] = g.label(pg.u());
  j["v"] = g.label(pg.v());
  j["restricted"] = pg.restricted();
  j["paths"] = paths_json(g, pg.paths());
  j["edges"] = Json::array();
  for (const auto& link : pg.links())
    j["edges"].push_back({{"a", link.a}, {"b", link.b}, {"cycle", edge_list_json(link.cycle)}});
  emit(o, j);
}

void cmd_components(const Options& o) {
  Graph g = load_graph(o);
  PathGraph pg = load_path_graph(g, o);
  auto comps = components(pg);
  if (o.dot) {
    emit(o, export_dot(g, pg, {o.edge_labels, o.show_removed}));
    return;
  }
  Json j;
  j["count"] = comps.count();
  j["connected"] = comps.count() == 1;
  j["components"] = Json::array();
  for (const auto& m : comps.members) {
    Json part = Json::array();
    for (std::size_t i : m) part.push_back(format_path(g, pg.paths()[i]));
    j["components"].push_back(part);
  }
  emit(o, j);
}

void cmd_diameter(const Options& o) {
  Graph g = load_graph(o);
  PathGraph pg = load_path_graph(g, o);
  auto diam = path_graph_diameter(pg);
  const auto d = bfs_distances(g, pg.u())[pg.v()];
  Json j;
  j["diameter"] = diam ? Json(*diam) : Json("disconnected");
  j["distance"] = d;
  j["bound"] = 2 * d;
  emit(o, j);
}

void cmd_route(const Options& o) {
  Graph g = load_graph(o);
  if (o.positional.size() != 2) throw Error("route needs two paths: route S T");
  Path s = parse_path(g, o.positional[0]);
  Path t = parse_path(g, o.positional[1]);
  auto route = bounded_route(g, s.front(), s.back(), s, t);
  const auto d = bfs_distances(g, s.front())[s.back()];
  Json j;
  j["route"] = paths_json(g, route);
  j["length"] = route.size() - 1;
  j["bound"] = 2 * d;
  emit(o, j);
}

void cmd_span_check(const Options& o) {
  Graph g = load_graph(o);
  CycleSet c = require_cycles(g, o);
  auto r = spans_cycle_space(c, g);
  Json j;
  j["spans"] = r.spans;
  j["rank"] = r.rank;
  j["dimension"] = r.dimension;
  emit(o, j);
}

void cmd_cycles(const Options& o) {
  Graph g = load_graph(o);
  const std::string mode = o.positional.empty() ? "all" : o.positional[0];
  CycleSet out;
  if (mode == "all") {
    out = enumerate_all_cycles(g);
  } else if (mode == "edge") {
    if (o.positional.size() != 2) throw Error("usage: cycles edge E");
    out = cycles_through_edge(g, parse_edge_set(g, o.positional[1]).first());
  } else if (mode == "vertex") {
    if (o.positional.size() != 2) throw Error("usage: cycles vertex W");
    out = cycles_through_vertex(g, parse_vertex(g, o.positional[1]));
  } else if (mode == "faces") {
    if (o.embedding_file.empty()) throw Error("cycles faces needs --embedding FILE");
    out = internal_faces(g, embedding_from_json(g, read_json_file(o.embedding_file)));
  } else {
    throw Error("unknown cycles mode '" + mode + "' (all|edge E|vertex W|faces)");
  }
  emit(o, to_json(out));
}

void cmd_delta_star(const Options& o) {
  Graph g = load_graph(o);
  CycleSet c = require_cycles(g, o);
  if (o.sigma.empty()) throw Error("delta-star needs --sigma EDGES");
  Cycle sigma = require_cycle(g, parse_edge_set(g, o.sigma));
  auto report = has_property_delta_star(g, sigma, c);
  Json j;
  j["sigma"] = edge_list_json(sigma.edges());
  j["holds"] = report.holds;
  j["witnesses"] = Json::array();
  for (const auto& w : report.witnesses) j["witnesses"].push_back(to_json(w));
  if (report.failing_unicycle) j["failing_unicycle"] = edge_list_json(*report.failing_unicycle);
  emit(o, j);
}

void cmd_closure(const Options& o) {
  Graph g = load_graph(o);
  emit(o, to_json(delta_star_closure(require_cycles(g, o), g)));
}

void cmd_dense(const Options& o) {
  Graph g = load_graph(o);
  CycleSet c = require_cycles(g, o);
  auto closure = delta_star_closure(c, g);
  const auto total = enumerate_all_cycles(g).size();
  Json j;
  j["dense"] = closure.size() == total;
  j["closure_size"] = closure.size();
  j["cycle_count"] = total;
  emit(o, j);
}

void cmd_interpolate(const Options& o) {
  Graph g = load_graph(o);
  CycleSet c = require_cycles(g, o);
  if (o.positional.size() != 2) throw Error("interpolate needs two paths: interpolate S T");
  Path s = parse_path(g, o.positional[0]);
  Path t = parse_path(g, o.positional[1]);
  auto r = interpolate(g, s, t, c);
  Json j;
  j["Q"] = path_json(g, r.q);
  j["direct"] = r.direct;
  j["walk"] = r.direct ? paths_json(g, {s, t}) : paths_json(g, {s, r.q, t});
  if (r.witness) j["witness"] = to_json(*r.witness);
  emit(o, j);
}

void cmd_verify(const Options& o) {
  SuiteOptions suite;
  suite.max_paths = o.max_paths;
  suite.route_samples = o.route_samples;
  suite.seed = o.seed;

  std::vector<TheoremReport> reports;
  auto run = [&](const Corpus& corpus, std::vector<std::string> defaults) {
    auto ids = o.theorems.empty() ? defaults : o.theorems;
    std::cerr << "verifying " << corpus.generator << " (" << corpus.instances.size() << " instances)\n";
    auto part = run_theorem_suite(corpus, ids, suite);
    reports.insert(reports.end(), part.begin(), part.end());
  };

  if (!o.graph_file.empty()) {
    Graph g = load_graph(o);
    Instance inst{o.graph_file, g, load_cycles(g, o), std::nullopt};
    if (!o.embedding_file.empty()) inst.embedding = embedding_from_json(g, read_json_file(o.embedding_file));
    std::vector<std::string> ids{"T1", "T2", "C2", "C3"};
    if (inst.cycles) ids.insert(ids.end(), {"T3", "T4", "L1"});
    if (inst.embedding) ids.insert(ids.end(), {"T5", "C1"});
    run(Corpus{"graph " + o.graph_file, {std::move(inst)}}, ids);
  } else {
    const std::string which = o.corpus.empty() ? "default" : o.corpus;
    if (o.max_n > 7 || (o.max_n == 7 && which != "exhaustive"))
      throw Error("--max-n above 6 is opt-in for the exhaustive corpus only (limit 7)");
    const std::size_t random_n = std::min<std::size_t>(o.max_n, 6);
    if (which == "k4" || which == "default") run(k4_corpus(), {"T3-counterexample", "T3"});
    if (which == "exhaustive" || which == "default")
      run(exhaustive_corpus(o.max_n), {"T1", "T2", "T6", "C2", "C3"});
    if (which == "plane" || which == "default") run(plane_corpus(), {"T5", "C1"});
    if (which == "random" || which == "default") run(random_corpus(o.count, random_n, o.seed), {"T3", "T4", "L1"});
    if (which != "default" && which != "k4" && which != "exhaustive" && which != "plane" && which != "random")
      throw Error("unknown corpus '" + which + "' (k4|exhaustive|plane|random)");
  }
  Json j = reports_json(reports, !o.no_duration);
  emit(o, j);
  if (!all_passed(reports)) g_exit = 1;
}

void cmd_search_tightness(const Options& o) {
  if (o.max_n > 8) throw Error("search-tightness supports --max-n up to 8");
  auto r = search_tightness_witness(o.max_n);
  emit(o, to_json(r));
}

void cmd_k4_demo(const Options& o) {
  auto f = k4_fixture();
  auto pg = build_path_graph(f.graph, f.u, f.v, &f.cycles);
  if (o.dot) {
    emit(o, export_dot(f.graph, pg, {o.edge_labels, o.show_removed}));
    return;
  }
  auto span = spans_cycle_space(f.cycles, f.graph);
  auto comps = components(pg);
  Json j;
  j["graph"] = to_json(f.graph);
  j["cycles"] = to_json(f.cycles);
  j["paths"] = paths_json(f.graph, pg.paths());
  j["rank"] = span.rank;
  j["dimension"] = span.dimension;
  j["spans"] = span.spans;
  j["components"] = comps.count();
  j["isolated"] = Json::array();
  for (const auto& m : comps.members)
    if (m.size() == 1) j["isolated"].push_back(format_path(f.graph, pg.paths()[m.front()]));
  emit(o, j);
  if (!(span.spans && comps.count() > 1)) g_exit = 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"pathspace: u-v path graphs, restricted path graphs and Δ*-closures"};
  app.require_subcommand(1);
  Options o;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--graph", o.graph_file, "Graph JSON file");
    sub->add_option("--u", o.u, "Start vertex (label or index)");
    sub->add_option("--v", o.v, "End vertex (label or index)");
    sub->add_option("--cycles", o.cycles_file, "Cycle set JSON file");
    sub->add_option("--embedding", o.embedding_file, "Plane embedding JSON file");
    sub->add_option("--seed", o.seed, "Random seed");
    sub->add_option("--max-paths", o.max_paths, "Abort path enumeration beyond this many paths");
    sub->add_option("--out", o.out_file, "Write output to FILE instead of stdout");
    sub->add_flag("--dot", o.dot, "Emit Graphviz DOT instead of JSON");
    sub->add_flag("--edge-labels", o.edge_labels, "Label DOT edges by exchange-cycle edge indices");
    sub->add_flag("--show-removed", o.show_removed, "Draw exchanges excluded by --cycles as dashed edges");
    return sub;
  };

  struct Command {
    const char* name;
    const char* help;
    void (*fn)(const Options&);
  };
  const std::vector<Command> commands{
      {"paths", "List all u-v paths", cmd_paths},
      {"pathgraph", "Build the (restricted) u-v path graph", cmd_pathgraph},
      {"components", "Connected components of the path graph", cmd_components},
      {"diameter", "Path graph diameter against 2 d(u,v)", cmd_diameter},
      {"route", "Walk between two paths of length <= 2 d(u,v)", cmd_route},
      {"span-check", "GF(2) rank of a cycle set against the cycle space", cmd_span_check},
      {"cycles", "Enumerate cycles: all | edge E | vertex W | faces", cmd_cycles},
      {"delta-star", "Check Property Δ* of --sigma relative to --cycles", cmd_delta_star},
      {"closure", "Δ*-closure of a cycle set", cmd_closure},
      {"dense", "Whether a cycle set is Δ*-dense", cmd_dense},
      {"interpolate", "Two-step walk inside P_C for adjacent S, T", cmd_interpolate},
      {"verify", "Run the theorem suite on corpora or on --graph", cmd_verify},
      {"search-tightness", "Search small graphs for diameter = 2 d(u,v)", cmd_search_tightness},
      {"k4-demo", "Spanning but disconnecting cycle set on K4", cmd_k4_demo},
  };
  void (*selected)(const Options&) = nullptr;
  for (const auto& c : commands) {
    auto* sub = common(app.add_subcommand(c.name, c.help));
    sub->callback([&selected, fn = c.fn] { selected = fn; });
    const std::string name = c.name;
    if (name == "route" || name == "interpolate")
      sub->add_option("paths", o.positional, "S T as vertex sequences, e.g. u-x-v")->expected(2);
    if (name == "cycles") sub->add_option("mode", o.positional, "all | edge E | vertex W | faces");
    if (name == "delta-star") sub->add_option("--sigma", o.sigma, "Cycle as edge indices, e.g. 1,3,4,2");
    if (name == "verify") {
      sub->add_option("--corpus", o.corpus, "k4 | exhaustive | plane | random (default: all)");
      sub->add_option("--max-n", o.max_n, "Largest order for the exhaustive corpus (7 is opt-in)");
      sub->add_option("--count", o.count, "Instances in the random corpus");
      sub->add_option("--route-samples", o.route_samples, "Random path pairs per (u, v)");
      sub->add_option("--theorems", o.theorems, "Subset of T1 T2 T3 T3-counterexample T4 T5 T6 C1 C2 C3 L1")
          ->delimiter(',');
      sub->add_flag("--no-duration", o.no_duration, "Omit timings for byte-identical reports");
    }
    if (name == "search-tightness") sub->add_option("--max-n", o.max_n, "Largest order scanned (<= 8)");
  }

  CLI11_PARSE(app, argc, argv);
  try {
    if (selected) selected(o);
  } catch (const std::exception& ex) {
    std::cerr << "error: " << ex.what() << '\n';
    return 2;
  }
  return g_exit;
}
