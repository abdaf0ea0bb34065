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

#include "pathspace/verify.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <limits>
#include <map>
#include <sstream>

#include "pathspace/delta_star.hpp"

namespace pathspace {
namespace {

constexpr auto kUnreached = std::numeric_limits<std::size_t>::max();

std::vector<std::pair<Vertex, Vertex>> vertex_pairs(const Graph& g) {
  std::vector<std::pair<Vertex, Vertex>> out;
  for (Vertex u = 0; u < g.vertex_count(); ++u)
    for (Vertex v = u + 1; v < g.vertex_count(); ++v) out.emplace_back(u, v);
  return out;
}

Json paths_json(const Graph& g, const std::vector<Path>& paths) {
  Json j = Json::array();
  for (const auto& p : paths) j.push_back(path_json(g, p));
  return j;
}

void fail(TheoremReport& r, const Graph& g, Json detail) {
  r.verdict = Verdict::kFail;
  if (r.counterexample.is_null()) {
    r.counterexample = Json::object();
    r.counterexample["graph"] = to_json(g);
    r.counterexample["detail"] = std::move(detail);
  }
}

void fail_pair(TheoremReport& r, const Graph& g, Vertex u, Vertex v, Json detail) {
  detail["u"] = u;
  detail["v"] = v;
  fail(r, g, std::move(detail));
}

bool walk_is_valid(const Graph& g, const std::vector<Path>& walk, const Path& from, const Path& to) {
  if (walk.empty() || !(walk.front() == from) || !(walk.back() == to)) return false;
  for (std::size_t i = 1; i < walk.size(); ++i)
    if (!are_adjacent(g, walk[i - 1], walk[i])) return false;
  return true;
}

struct Checker {
  const Instance& inst;
  const SuiteOptions& opt;
  Rng& rng;
  TheoremReport& r;

  const Graph& g() const { return inst.graph; }

  bool need_cycles() {
    if (inst.cycles) return true;
    r.verdict = Verdict::kSkipped;
    r.metrics["notice"] = "instance carries no cycle set";
    return false;
  }
  bool need_embedding() {
    if (inst.embedding) return true;
    r.verdict = Verdict::kSkipped;
    r.metrics["notice"] = "instance carries no plane embedding";
    return false;
  }

  // Every pair connected in P_C; returns false and records on the first failure.
  bool all_pairs_connected(const CycleSet* c, const char* what) {
    for (auto [u, v] : vertex_pairs(g())) {
      auto pg = build_path_graph(g(), u, v, c, opt.max_paths);
      auto comps = components(pg);
      if (comps.count() == 1) continue;
      Json d;
      d["check"] = what;
      d["components"] = comps.count();
      d["isolated_or_split"] = paths_json(g(), [&] {
        std::vector<Path> part;
        for (std::size_t i : comps.members.back()) part.push_back(pg.paths()[i]);
        return part;
      }());
      if (c) d["cycles"] = to_json(*c);
      fail_pair(r, g(), u, v, std::move(d));
      return false;
    }
    return true;
  }

  void all_connected() {
    std::size_t pairs = 0;
    std::size_t samples = 0;
    std::size_t max_paths = 0;
    for (auto [u, v] : vertex_pairs(g())) {
      auto pg = build_path_graph(g(), u, v, nullptr, opt.max_paths);
      ++pairs;
      max_paths = std::max(max_paths, pg.size());
      auto comps = components(pg);
      if (comps.count() != 1) {
        Json d;
        d["components"] = comps.count();
        fail_pair(r, g(), u, v, std::move(d));
        return;
      }
      for (std::size_t k = 0; k < opt.route_samples; ++k) {
        const Path& s = pg.paths()[rng.below(pg.size())];
        const Path& t = pg.paths()[rng.below(pg.size())];
        auto walk = merge_walk(g(), s, t);
        ++samples;
        if (!walk_is_valid(g(), walk, s, t) || walk.size() - 1 > t.length()) {
          Json d;
          d["S"] = path_json(g(), s);
          d["T"] = path_json(g(), t);
          d["walk"] = paths_json(g(), walk);
          fail_pair(r, g(), u, v, std::move(d));
          return;
        }
      }
    }
    r.metrics["pairs"] = pairs;
    r.metrics["max_paths"] = max_paths;
    r.metrics["merge_walk_samples"] = samples;
  }

  void diameter_bound() {
    std::size_t max_diameter = 0;
    long worst_slack = std::numeric_limits<long>::min();
    for (auto [u, v] : vertex_pairs(g())) {
      auto pg = build_path_graph(g(), u, v, nullptr, opt.max_paths);
      const std::size_t d = bfs_distances(g(), u)[v];
      auto diam = path_graph_diameter(pg);
      if (!diam || *diam > 2 * d) {
        Json det;
        det["distance"] = d;
        det["diameter"] = diam ? Json(*diam) : Json("disconnected");
        fail_pair(r, g(), u, v, std::move(det));
        return;
      }
      max_diameter = std::max(max_diameter, *diam);
      worst_slack = std::max(worst_slack, static_cast<long>(*diam) - 2 * static_cast<long>(d));
      for (std::size_t k = 0; k < opt.route_samples; ++k) {
        const Path& s = pg.paths()[rng.below(pg.size())];
        const Path& t = pg.paths()[rng.below(pg.size())];
        auto route = bounded_route(g(), u, v, s, t);
        if (!walk_is_valid(g(), route, s, t) || route.size() - 1 > 2 * d) {
          Json det;
          det["S"] = path_json(g(), s);
          det["T"] = path_json(g(), t);
          det["route"] = paths_json(g(), route);
          fail_pair(r, g(), u, v, std::move(det));
          return;
        }
      }
    }
    r.metrics["max_diameter"] = max_diameter;
    r.metrics["max_diameter_minus_bound"] = worst_slack;
  }

  void spanning_necessary() {
    if (!need_cycles()) return;
    const auto span = spans_cycle_space(*inst.cycles, g());
    std::size_t connected_pairs = 0;
    for (auto [u, v] : vertex_pairs(g())) {
      auto pg = build_path_graph(g(), u, v, &*inst.cycles, opt.max_paths);
      if (components(pg).count() != 1) continue;
      ++connected_pairs;
      if (!span.spans) {
        Json d;
        d["cycles"] = to_json(*inst.cycles);
        d["rank"] = span.rank;
        d["dimension"] = span.dimension;
        fail_pair(r, g(), u, v, std::move(d));
        return;
      }
    }
    r.metrics["spans"] = span.spans;
    r.metrics["rank"] = span.rank;
    r.metrics["dimension"] = span.dimension;
    r.metrics["connected_pairs"] = connected_pairs;
  }

  void spanning_not_sufficient() {
    if (!need_cycles()) return;
    const auto span = spans_cycle_space(*inst.cycles, g());
    r.metrics["spans"] = span.spans;
    r.metrics["rank"] = span.rank;
    r.metrics["dimension"] = span.dimension;
    Json disconnected = Json::array();
    for (auto [u, v] : vertex_pairs(g())) {
      auto pg = build_path_graph(g(), u, v, &*inst.cycles, opt.max_paths);
      auto comps = components(pg);
      if (comps.count() == 1) continue;
      Json entry;
      entry["u"] = g().label(u);
      entry["v"] = g().label(v);
      entry["paths"] = pg.size();
      Json isolated = Json::array();
      for (const auto& m : comps.members)
        if (m.size() == 1) isolated.push_back(format_path(g(), pg.paths()[m.front()]));
      entry["isolated"] = isolated;
      disconnected.push_back(entry);
    }
    r.metrics["disconnected_pairs"] = disconnected;
    if (!span.spans || disconnected.empty()) {
      Json d;
      d["reason"] = "cycle set does not both span and disconnect";
      d["cycles"] = to_json(*inst.cycles);
      fail(r, g(), std::move(d));
    }
  }

  void dense_sufficient() {
    if (!need_cycles()) return;
    const auto closure = delta_star_closure(*inst.cycles, g());
    const auto total = enumerate_all_cycles(g()).size();
    const bool dense = closure.size() == total;
    r.metrics["dense"] = dense;
    r.metrics["closure_size"] = closure.size();
    r.metrics["cycle_count"] = total;
    if (dense) all_pairs_connected(&*inst.cycles, "dense set must connect");
  }

  void faces_dense() {
    if (!need_embedding()) return;
    const auto faces = internal_faces(g(), *inst.embedding);
    const bool dense = is_delta_star_dense(faces, g());
    r.metrics["internal_faces"] = faces.size();
    r.metrics["dense"] = dense;
    if (!dense) {
      Json d;
      d["faces"] = to_json(faces);
      d["embedding"] = to_json(*inst.embedding);
      fail(r, g(), std::move(d));
    }
  }

  void faces_connected() {
    if (!need_embedding()) return;
    const auto faces = internal_faces(g(), *inst.embedding);
    r.metrics["internal_faces"] = faces.size();
    all_pairs_connected(&faces, "internal faces must connect");
  }

  void edge_cycles_dense() {
    for (EdgeId e = 0; e < g().edge_count(); ++e) {
      const auto c = cycles_through_edge(g(), e);
      if (is_delta_star_dense(c, g())) continue;
      Json d;
      d["edge"] = e;
      fail(r, g(), std::move(d));
      return;
    }
    r.metrics["edges"] = g().edge_count();
  }

  void edge_cycles_connected() {
    for (EdgeId e = 0; e < g().edge_count(); ++e) {
      const auto c = cycles_through_edge(g(), e);
      if (!all_pairs_connected(&c, "cycles through an edge must connect")) {
        r.counterexample["detail"]["edge"] = e;
        return;
      }
    }
    r.metrics["edges"] = g().edge_count();
  }

  void vertex_cycles_connected() {
    for (Vertex u = 0; u < g().vertex_count(); ++u) {
      const auto c = cycles_through_vertex(g(), u);
      for (Vertex v = 0; v < g().vertex_count(); ++v) {
        if (u == v) continue;
        auto pg = build_path_graph(g(), u, v, &c, opt.max_paths);
        if (components(pg).count() == 1) continue;
        Json d;
        d["cycles"] = to_json(c);
        fail_pair(r, g(), u, v, std::move(d));
        return;
      }
    }
    r.metrics["ordered_pairs"] = g().vertex_count() * (g().vertex_count() - 1);
  }

  void interpolation_steps() {
    if (!need_cycles()) return;
    const CycleSet& c = *inst.cycles;
    std::size_t sigmas = 0;
    std::size_t interpolations = 0;
    for (const auto& sigma : enumerate_all_cycles(g())) {
      if (c.contains(sigma)) continue;
      if (!has_property_delta_star(g(), sigma, c).holds) continue;
      ++sigmas;
      CycleSet extended = c;
      extended.insert(sigma);
      for (auto [u, v] : vertex_pairs(g())) {
        auto paths = enumerate_uv_paths(g(), u, v, opt.max_paths);
        auto pc = build_path_graph(g(), u, v, paths, &c);
        auto pcs = build_path_graph(g(), u, v, paths, &extended);
        if ((components(pc).count() == 1) != (components(pcs).count() == 1)) {
          Json d;
          d["sigma"] = edge_list_json(sigma.edges());
          d["cycles"] = to_json(c);
          fail_pair(r, g(), u, v, std::move(d));
          return;
        }
        for (const auto& link : pcs.links()) {
          if (link.cycle != sigma.edges()) continue;
          const Path& s = pcs.paths()[link.a];
          const Path& t = pcs.paths()[link.b];
          ++interpolations;
          Json d;
          d["sigma"] = edge_list_json(sigma.edges());
          d["S"] = path_json(g(), s);
          d["T"] = path_json(g(), t);
          d["cycles"] = to_json(c);
          try {
            auto q = interpolate(g(), s, t, c).q;
            auto in = find_exchange(g(), s, q);
            auto out = find_exchange(g(), q, t);
            const bool ok = in && out && c.contains(in->cycle) && c.contains(out->cycle) &&
                            path_graph_distances(pc, link.a)[link.b] <= 2;
            if (!ok) {
              d["Q"] = path_json(g(), q);
              fail_pair(r, g(), u, v, std::move(d));
              return;
            }
          } catch (const PathLimitExceeded&) {
            throw;
          } catch (const Error& ex) {
            d["error"] = ex.what();
            fail_pair(r, g(), u, v, std::move(d));
            return;
          }
        }
      }
    }
    r.metrics["delta_star_cycles"] = sigmas;
    r.metrics["interpolations"] = interpolations;
  }
};

using CheckFn = void (Checker::*)();

const std::map<std::string, CheckFn>& registry() {
  static const std::map<std::string, CheckFn> table{
      {"T1", &Checker::all_connected},
      {"T2", &Checker::diameter_bound},
      {"T3", &Checker::spanning_necessary},
      {"T3-counterexample", &Checker::spanning_not_sufficient},
      {"T4", &Checker::dense_sufficient},
      {"T5", &Checker::faces_dense},
      {"T6", &Checker::edge_cycles_dense},
      {"C1", &Checker::faces_connected},
      {"C2", &Checker::edge_cycles_connected},
      {"C3", &Checker::vertex_cycles_connected},
      {"L1", &Checker::interpolation_steps},
  };
  return table;
}

}  // namespace

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::kPass: return "pass";
    case Verdict::kFail: return "fail";
    case Verdict::kWitness: return "witness";
    case Verdict::kSkipped: return "skipped";
  }
  return "unknown";
}

Json to_json(const TheoremReport& r, bool with_duration) {
  Json j;
  j["theorem"] = r.theorem;
  j["instance"] = {{"name", r.instance},
                   {"graph_hash", r.graph_hash},
                   {"u", r.u ? Json(*r.u) : Json(nullptr)},
                   {"v", r.v ? Json(*r.v) : Json(nullptr)},
                   {"cycles_hash", r.cycles_hash.empty() ? Json(nullptr) : Json(r.cycles_hash)}};
  j["verdict"] = to_string(r.verdict);
  j["metrics"] = r.metrics;
  if (!r.counterexample.is_null()) j["counterexample"] = r.counterexample;
  if (with_duration) j["duration_ms"] = r.duration_ms;
  return j;
}

Json reports_json(const std::vector<TheoremReport>& reports, bool with_duration) {
  Json j;
  j["schema"] = kReportSchema;
  j["reports"] = Json::array();
  std::size_t pass = 0, failed = 0, skipped = 0;
  for (const auto& r : reports) {
    j["reports"].push_back(to_json(r, with_duration));
    if (r.verdict == Verdict::kFail)
      ++failed;
    else if (r.verdict == Verdict::kSkipped)
      ++skipped;
    else
      ++pass;
  }
  j["summary"] = {{"pass", pass}, {"fail", failed}, {"skipped", skipped}};
  return j;
}

Corpus exhaustive_corpus(std::size_t max_n) {
  Corpus corpus{"all 2-connected graphs with n <= " + std::to_string(max_n), {}};
  std::size_t i = 0;
  for (auto& g : all_two_connected_graphs(max_n)) {
    std::string name = "n" + std::to_string(g.vertex_count()) + "-m" + std::to_string(g.edge_count()) +
                       "-#" + std::to_string(i++);
    corpus.instances.push_back({std::move(name), std::move(g), std::nullopt, std::nullopt});
  }
  return corpus;
}

Corpus random_corpus(std::size_t count, std::size_t max_n, std::uint64_t seed) {
  Corpus corpus{"random 2-connected graphs with n <= " + std::to_string(max_n) + ", seed " +
                    std::to_string(seed),
                {}};
  Rng rng(seed);
  for (std::size_t i = 0; i < count; ++i) {
    Graph g = random_two_connected(max_n, rng);
    const auto all = enumerate_all_cycles(g);
    const double p = 0.2 + 0.6 * static_cast<double>(rng.below(1000)) / 1000.0;
    CycleSet c = random_cycle_subset(g, all, p, rng);
    corpus.instances.push_back({"random-" + std::to_string(i), std::move(g), std::move(c), std::nullopt});
  }
  return corpus;
}

Corpus plane_corpus() {
  Corpus corpus{"plane fixtures", {}};
  for (auto& f : plane_fixtures())
    corpus.instances.push_back({f.name, std::move(f.graph), std::nullopt, std::move(f.embedding)});
  return corpus;
}

Corpus k4_corpus() {
  auto f = k4_fixture();
  Corpus corpus{"K4 fixture", {}};
  corpus.instances.push_back({"k4", std::move(f.graph), std::move(f.cycles), std::nullopt});
  return corpus;
}

const std::vector<std::string>& theorem_ids() {
  static const std::vector<std::string> ids = [] {
    std::vector<std::string> out;
    for (const auto& [id, fn] : registry()) out.push_back(id);
    return out;
  }();
  return ids;
}

std::vector<TheoremReport> run_theorem_suite(const Corpus& corpus, const std::vector<std::string>& which,
                                             const SuiteOptions& options) {
  for (const auto& id : which)
    if (!registry().count(id)) throw Error("unknown theorem id '" + id + "'");
  std::vector<TheoremReport> reports;
  Rng rng(options.seed);
  for (const auto& inst : corpus.instances) {
    for (const auto& id : which) {
      TheoremReport r;
      r.theorem = id;
      r.instance = inst.name;
      r.graph_hash = graph_hash(inst.graph);
      if (inst.cycles) r.cycles_hash = cycle_set_hash(*inst.cycles);
      const auto start = std::chrono::steady_clock::now();
      Checker checker{inst, options, rng, r};
      try {
        (checker.*registry().at(id))();
      } catch (const PathLimitExceeded& ex) {
        r.verdict = Verdict::kSkipped;
        r.metrics["notice"] = ex.what();
      }
      r.duration_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
      reports.push_back(std::move(r));
    }
  }
  return reports;
}

bool all_passed(const std::vector<TheoremReport>& reports) {
  return std::none_of(reports.begin(), reports.end(),
                      [](const TheoremReport& r) { return r.verdict == Verdict::kFail; });
}

TightnessResult search_tightness_witness(std::size_t max_n) {
  if (max_n > 8) throw Error("tightness search is limited to 8 vertices");
  TightnessResult best;
  auto better = [&](std::size_t diam, std::size_t d) {
    if (!best.graph) return true;
    const bool tight = diam == 2 * d && d >= 2;
    if (tight != best.tight) return tight;
    if (tight) return d > best.distance;
    const long slack = static_cast<long>(diam) - 2 * static_cast<long>(d);
    const long best_slack = static_cast<long>(best.diameter) - 2 * static_cast<long>(best.distance);
    if (slack != best_slack) return slack > best_slack;
    if (d != best.distance) return d > best.distance;
    return diam > best.diameter;
  };
  for (const auto& g : all_two_connected_graphs(max_n)) {
    ++best.instances_scanned;
    for (auto [u, v] : vertex_pairs(g)) {
      auto pg = build_path_graph(g, u, v);
      const std::size_t d = bfs_distances(g, u)[v];
      std::size_t diam = 0;
      std::size_t sa = 0, tb = 0;
      for (std::size_t a = 0; a < pg.size(); ++a) {
        auto dist = path_graph_distances(pg, a);
        for (std::size_t b = 0; b < dist.size(); ++b)
          if (dist[b] != kUnreached && dist[b] > diam) {
            diam = dist[b];
            sa = a;
            tb = b;
          }
      }
      if (!better(diam, d)) continue;
      best.tight = diam == 2 * d && d >= 2;
      best.diameter = diam;
      best.distance = d;
      best.graph = g;
      best.u = u;
      best.v = v;
      best.s = pg.paths()[sa];
      best.t = pg.paths()[tb];
    }
  }
  return best;
}

Json to_json(const TightnessResult& r) {
  Json j;
  j["tight"] = r.tight;
  j["diameter"] = r.diameter;
  j["distance"] = r.distance;
  j["bound"] = 2 * r.distance;
  j["instances_scanned"] = r.instances_scanned;
  if (r.graph) {
    j["graph"] = to_json(*r.graph);
    j["u"] = r.u;
    j["v"] = r.v;
    j["S"] = path_json(*r.graph, *r.s);
    j["T"] = path_json(*r.graph, *r.t);
  }
  return j;
}

std::string export_dot(const Graph& g, const PathGraph& pg, const DotOptions& options) {
  auto quote = [](const std::string& s) {
    std::string out = "\"";
    for (char ch : s) {
      if (ch == '"' || ch == '\\') out += '\\';
      out += ch;
    }
    return out + "\"";
  };
  auto cycle_label = [](const EdgeSet& es) {
    std::string s;
    for (EdgeId e : es.to_vector()) s += (s.empty() ? "" : ",") + std::to_string(e);
    return s;
  };
  std::ostringstream out;
  out << "graph " << quote("P(" + g.label(pg.u()) + "," + g.label(pg.v()) + ")") << " {\n";
  out << "  node [shape=box];\n";
  for (std::size_t i = 0; i < pg.size(); ++i)
    out << "  p" << i << " [label=" << quote(format_path(g, pg.paths()[i])) << "];\n";
  for (std::size_t a = 0; a < pg.size(); ++a) {
    for (std::size_t b = a + 1; b < pg.size(); ++b) {
      if (const EdgeSet* cyc = pg.link_cycle(a, b)) {
        out << "  p" << a << " -- p" << b;
        if (options.edge_labels) out << " [label=" << quote(cycle_label(*cyc)) << "]";
        out << ";\n";
      } else if (options.show_removed && pg.restricted()) {
        auto ex = find_exchange(g, pg.paths()[a], pg.paths()[b]);
        if (!ex) continue;
        out << "  p" << a << " -- p" << b << " [style=dashed";
        if (options.edge_labels) out << ", label=" << quote(cycle_label(ex->cycle));
        out << "];\n";
      }
    }
  }
  out << "}\n";
  return out.str();
}

}  // namespace pathspace
