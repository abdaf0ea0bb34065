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

// Python surface. Paths travel as vertex lists, cycles as sorted edge-index
// lists, and structured reports as JSON text decoded on the Python side.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>

#include "pathspace/corpus.hpp"
#include "pathspace/delta_star.hpp"
#include "pathspace/io.hpp"
#include "pathspace/path_space.hpp"
#include "pathspace/verify.hpp"

namespace py = pybind11;
using namespace pathspace;

namespace {

using EdgeList = std::vector<EdgeId>;
using VertexList = std::vector<Vertex>;

EdgeSet mask(const Graph& g, const EdgeList& edges) {
  EdgeSet es = g.empty_edge_set();
  for (EdgeId e : edges) es.insert(e);
  return es;
}

std::vector<EdgeList> lists(const CycleSet& c) {
  std::vector<EdgeList> out;
  for (const auto& cyc : c) out.push_back(cyc.edges().to_vector());
  return out;
}

CycleSet cycle_set(const Graph& g, const std::vector<EdgeList>& cycles) {
  std::vector<EdgeSet> sets;
  for (const auto& c : cycles) sets.push_back(mask(g, c));
  return CycleSet(g, sets);
}

std::vector<VertexList> vertex_lists(const std::vector<Path>& paths) {
  std::vector<VertexList> out;
  for (const auto& p : paths) out.push_back(p.vertices());
  return out;
}

PlaneEmbedding embedding(const Graph& g, const std::vector<EdgeList>& rotation, EdgeId outer_edge,
                         bool outer_forward) {
  Json j;
  j["rotation"] = rotation;
  j["outer"] = Json::array({outer_edge, outer_forward ? "fwd" : "rev"});
  return embedding_from_json(g, j);
}

// Path graph bundled with its ambient graph so Python needs one handle.
struct PyPathGraph {
  Graph graph;
  PathGraph pg;
};

PyPathGraph make_path_graph(const Graph& g, Vertex u, Vertex v,
                            const std::optional<std::vector<EdgeList>>& cycles, std::size_t max_paths) {
  if (cycles) {
    CycleSet c = cycle_set(g, *cycles);
    return {g, build_path_graph(g, u, v, &c, max_paths)};
  }
  return {g, build_path_graph(g, u, v, nullptr, max_paths)};
}

Corpus corpus_by_name(const std::string& name, std::size_t max_n, std::size_t count, std::uint64_t seed) {
  if (name == "k4") return k4_corpus();
  if (name == "exhaustive") return exhaustive_corpus(max_n);
  if (name == "plane") return plane_corpus();
  if (name == "random") return random_corpus(count, max_n, seed);
  throw Error("unknown corpus '" + name + "'");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Path graphs of 2-connected graphs and their cycle-restricted subgraphs";

  // Translators run newest first, so the subclass goes last.
  auto base = py::register_exception<Error>(m, "PathspaceError", PyExc_ValueError);
  py::register_exception<PathLimitExceeded>(m, "PathLimitExceeded", base.ptr());

  py::class_<Graph>(m, "Graph")
      .def(py::init([](std::size_t n, std::vector<std::pair<Vertex, Vertex>> edges,
                       std::vector<std::string> labels) {
             return Graph::build(n, std::move(edges), std::move(labels));
           }),
           py::arg("n"), py::arg("edges"), py::arg("labels") = std::vector<std::string>{})
      .def_static("from_json", [](const std::string& text) { return graph_from_json(Json::parse(text)); })
      .def("to_json", [](const Graph& g) { return to_json(g).dump(); })
      .def_property_readonly("vertex_count", &Graph::vertex_count)
      .def_property_readonly("edge_count", &Graph::edge_count)
      .def_property_readonly("edges", &Graph::pairs)
      .def("label", &Graph::label)
      .def("edge_between", &Graph::edge_between)
      .def("is_two_connected", [](const Graph& g) { return is_two_connected(g); })
      .def("__repr__", [](const Graph& g) {
        return "<Graph n=" + std::to_string(g.vertex_count()) + " m=" + std::to_string(g.edge_count()) + ">";
      });

  py::class_<PyPathGraph>(m, "PathGraph")
      .def_property_readonly("paths", [](const PyPathGraph& p) { return vertex_lists(p.pg.paths()); })
      .def_property_readonly("links", [](const PyPathGraph& p) {
        std::vector<std::tuple<std::size_t, std::size_t, EdgeList>> out;
        for (const auto& l : p.pg.links()) out.emplace_back(l.a, l.b, l.cycle.to_vector());
        return out;
      })
      .def("index_of", [](const PyPathGraph& p, const VertexList& path) {
        std::size_t i = p.pg.index_of(Path(p.graph, path));
        return i == p.pg.size() ? std::optional<std::size_t>() : std::optional<std::size_t>(i);
      })
      .def("neighbors", [](const PyPathGraph& p, std::size_t i) { return p.pg.neighbors(i); })
      .def("components", [](const PyPathGraph& p) { return components(p.pg).members; })
      .def("diameter", [](const PyPathGraph& p) { return path_graph_diameter(p.pg); })
      .def("to_dot",
           [](const PyPathGraph& p, bool edge_labels, bool show_removed) {
             return export_dot(p.graph, p.pg, DotOptions{edge_labels, show_removed});
           },
           py::arg("edge_labels") = false, py::arg("show_removed") = false)
      .def("__len__", [](const PyPathGraph& p) { return p.pg.size(); });

  m.def("k4_fixture", [] {
    auto fx = k4_fixture();
    return py::make_tuple(fx.graph, fx.u, fx.v, lists(fx.cycles));
  });
  m.def("complete_graph", &complete_graph);
  m.def("cycle_graph", &cycle_graph);

  m.def("is_cycle", [](const Graph& g, const EdgeList& edges) {
    return static_cast<bool>(as_cycle(g, mask(g, edges)));
  });
  m.def("cycle_space_dimension", &cycle_space_dimension);
  m.def("spans_cycle_space", [](const Graph& g, const std::vector<EdgeList>& cycles) {
    auto r = spans_cycle_space(cycle_set(g, cycles), g);
    return py::make_tuple(r.spans, r.rank, r.dimension);
  });
  m.def("enumerate_all_cycles", [](const Graph& g) { return lists(enumerate_all_cycles(g)); });
  m.def("cycles_through_edge", [](const Graph& g, EdgeId e) { return lists(cycles_through_edge(g, e)); });
  m.def("cycles_through_vertex", [](const Graph& g, Vertex w) { return lists(cycles_through_vertex(g, w)); });
  m.def("internal_faces",
        [](const Graph& g, const std::vector<EdgeList>& rotation, EdgeId outer_edge, bool outer_forward) {
          return lists(internal_faces(g, embedding(g, rotation, outer_edge, outer_forward)));
        },
        py::arg("graph"), py::arg("rotation"), py::arg("outer_edge") = 0, py::arg("outer_forward") = true);

  m.def("enumerate_uv_paths",
        [](const Graph& g, Vertex u, Vertex v, std::size_t max_paths) {
          return vertex_lists(enumerate_uv_paths(g, u, v, max_paths));
        },
        py::arg("graph"), py::arg("u"), py::arg("v"), py::arg("max_paths") = kDefaultMaxPaths);
  m.def("are_adjacent", [](const Graph& g, const VertexList& s, const VertexList& t) {
    return are_adjacent(g, Path(g, s), Path(g, t));
  });
  m.def("path_graph", &make_path_graph, py::arg("graph"), py::arg("u"), py::arg("v"),
        py::arg("cycles") = std::nullopt, py::arg("max_paths") = kDefaultMaxPaths);
  m.def("merge_walk", [](const Graph& g, const VertexList& s, const VertexList& t) {
    return vertex_lists(merge_walk(g, Path(g, s), Path(g, t)));
  });
  m.def("bounded_route", [](const Graph& g, const VertexList& s, const VertexList& t) {
    Path ps(g, s), pt(g, t);
    return vertex_lists(bounded_route(g, ps.front(), ps.back(), ps, pt));
  });

  m.def("has_property_delta_star",
        [](const Graph& g, const EdgeList& sigma, const std::vector<EdgeList>& cycles) {
          auto r = has_property_delta_star(g, require_cycle(g, mask(g, sigma)), cycle_set(g, cycles));
          Json witnesses = Json::array();
          for (const auto& w : r.witnesses) witnesses.push_back(to_json(w));
          return py::make_tuple(r.holds, witnesses.dump());
        });
  m.def("delta_star_closure", [](const Graph& g, const std::vector<EdgeList>& cycles) {
    return lists(delta_star_closure(cycle_set(g, cycles), g));
  });
  m.def("is_delta_star_dense", [](const Graph& g, const std::vector<EdgeList>& cycles) {
    return is_delta_star_dense(cycle_set(g, cycles), g);
  });
  m.def("interpolate",
        [](const Graph& g, const VertexList& s, const VertexList& t, const std::vector<EdgeList>& cycles) {
          return interpolate(g, Path(g, s), Path(g, t), cycle_set(g, cycles)).q.vertices();
        });

  m.def("run_theorem_suite",
        [](const std::string& corpus, const std::vector<std::string>& theorems, std::size_t max_n,
           std::size_t count, std::uint64_t seed) {
          SuiteOptions opts;
          opts.seed = seed;
          auto reports = run_theorem_suite(corpus_by_name(corpus, max_n, count, seed),
                                           theorems.empty() ? theorem_ids() : theorems, opts);
          return reports_json(reports, false).dump();
        },
        py::arg("corpus") = "k4", py::arg("theorems") = std::vector<std::string>{}, py::arg("max_n") = 5,
        py::arg("count") = 50, py::arg("seed") = kDefaultSeed);
  m.def("theorem_ids", &theorem_ids);
  m.def("search_tightness_witness",
        [](std::size_t max_n) { return to_json(search_tightness_witness(max_n)).dump(); });
}
