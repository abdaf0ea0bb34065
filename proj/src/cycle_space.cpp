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

#include "pathspace/cycle_space.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <queue>

namespace pathspace {

CycleSet::CycleSet(const Graph& g, std::span<const EdgeSet> edge_sets)
    : universe_(g.edge_count()) {
  for (const auto& es : edge_sets) {
    if (es.universe() != g.edge_count())
      throw Error("cycle mask has " + std::to_string(es.universe()) + " edges, graph has " +
                  std::to_string(g.edge_count()));
    auto check = as_cycle(g, es);
    if (!check) {
      std::string members;
      for (EdgeId e : es.to_vector()) members += (members.empty() ? "" : ",") + std::to_string(e);
      throw Error("edge set {" + members + "} is not a cycle of the graph: " +
                  to_string(check.defect));
    }
    insert(*std::move(check.cycle));
  }
}

bool CycleSet::insert(Cycle c) {
  if (c.edges().universe() != universe_) throw Error("cycle belongs to a different graph");
  auto [it, inserted] = index_.emplace(c.edges(), cycles_.size());
  if (inserted) cycles_.push_back(std::move(c));
  return inserted;
}

std::size_t CycleSet::index_of(const EdgeSet& es) const {
  auto it = index_.find(es);
  return it == index_.end() ? cycles_.size() : it->second;
}

void CycleSet::sort() {
  std::sort(cycles_.begin(), cycles_.end());
  for (std::size_t i = 0; i < cycles_.size(); ++i) index_[cycles_[i].edges()] = i;
}

bool operator==(const CycleSet& a, const CycleSet& b) {
  if (a.universe_ != b.universe_ || a.size() != b.size()) return false;
  return std::all_of(a.begin(), a.end(), [&](const Cycle& c) { return b.contains(c); });
}

std::size_t cycle_space_dimension(const Graph& g) {
  if (!is_connected(g)) throw Error("cycle space dimension requires a connected graph");
  return g.edge_count() - g.vertex_count() + 1;
}

std::size_t gf2_rank(std::span<const EdgeSet> rows) {
  // Reduced basis keyed by pivot (lowest set edge index).
  std::vector<EdgeSet> basis;
  for (const auto& row : rows) {
    EdgeSet r = row;
    for (const auto& b : basis)
      if (r.contains(b.first())) r ^= b;
    if (r.empty()) continue;
    EdgeId pivot = r.first();
    for (auto& b : basis)
      if (b.contains(pivot)) b ^= r;
    basis.push_back(std::move(r));
  }
  return basis.size();
}

SpanReport spans_cycle_space(const CycleSet& c, const Graph& g) {
  SpanReport report;
  report.dimension = cycle_space_dimension(g);
  std::vector<EdgeSet> rows;
  rows.reserve(c.size());
  for (const auto& cyc : c) rows.push_back(cyc.edges());
  report.rank = gf2_rank(rows);
  report.spans = report.rank == report.dimension;
  return report;
}

EdgeSet bfs_spanning_tree(const Graph& g) {
  EdgeSet tree = g.empty_edge_set();
  if (g.vertex_count() == 0) return tree;
  std::vector<char> seen(g.vertex_count(), 0);
  std::queue<Vertex> queue;
  seen[0] = 1;
  queue.push(0);
  while (!queue.empty()) {
    Vertex w = queue.front();
    queue.pop();
    for (const auto& inc : g.incident(w)) {
      if (seen[inc.neighbor]) continue;
      seen[inc.neighbor] = 1;
      tree.insert(inc.edge);
      queue.push(inc.neighbor);
    }
  }
  return tree;
}

std::vector<Vertex> tree_path(const Graph& g, const EdgeSet& tree, Vertex a, Vertex b) {
  constexpr Vertex kNone = ~Vertex{0};
  std::vector<Vertex> parent(g.vertex_count(), kNone);
  std::queue<Vertex> queue;
  parent[a] = a;
  queue.push(a);
  while (!queue.empty() && parent[b] == kNone) {
    Vertex w = queue.front();
    queue.pop();
    for (const auto& inc : g.incident(w)) {
      if (!tree.contains(inc.edge) || parent[inc.neighbor] != kNone) continue;
      parent[inc.neighbor] = w;
      queue.push(inc.neighbor);
    }
  }
  if (parent[b] == kNone) return {};
  std::vector<Vertex> path{b};
  while (path.back() != a) path.push_back(parent[path.back()]);
  std::reverse(path.begin(), path.end());
  return path;
}

CycleSet fundamental_cycles(const Graph& g, const EdgeSet& tree) {
  if (tree.universe() != g.edge_count()) throw Error("tree mask does not belong to this graph");
  if (g.vertex_count() == 0 || tree.size() + 1 != g.vertex_count())
    throw Error("not a spanning tree: expected " + std::to_string(g.vertex_count() - 1) +
                " edges, got " + std::to_string(tree.size()));
  for (Vertex w = 1; w < g.vertex_count(); ++w)
    if (tree_path(g, tree, 0, w).empty()) throw Error("not a spanning tree: graph part unreached");

  CycleSet out(g);
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (tree.contains(e)) continue;
    EdgeSet cyc = g.empty_edge_set();
    cyc.insert(e);
    auto path = tree_path(g, tree, g.edge(e).a, g.edge(e).b);
    for (std::size_t i = 1; i < path.size(); ++i) cyc.insert(*g.edge_between(path[i - 1], path[i]));
    out.insert(require_cycle(g, cyc));
  }
  return out;
}

CycleSet enumerate_all_cycles(const Graph& g) {
  // Components are handled through a spanning forest so that disconnected
  // inputs still enumerate their cycles.
  EdgeSet forest = g.empty_edge_set();
  {
    std::vector<char> seen(g.vertex_count(), 0);
    for (Vertex root = 0; root < g.vertex_count(); ++root) {
      if (seen[root]) continue;
      seen[root] = 1;
      std::queue<Vertex> queue;
      queue.push(root);
      while (!queue.empty()) {
        Vertex w = queue.front();
        queue.pop();
        for (const auto& inc : g.incident(w)) {
          if (seen[inc.neighbor]) continue;
          seen[inc.neighbor] = 1;
          forest.insert(inc.edge);
          queue.push(inc.neighbor);
        }
      }
    }
  }
  std::vector<EdgeSet> basis;
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (forest.contains(e)) continue;
    EdgeSet cyc = g.empty_edge_set();
    cyc.insert(e);
    auto path = tree_path(g, forest, g.edge(e).a, g.edge(e).b);
    for (std::size_t i = 1; i < path.size(); ++i) cyc.insert(*g.edge_between(path[i - 1], path[i]));
    basis.push_back(std::move(cyc));
  }
  if (basis.size() > kMaxEnumerationDimension)
    throw Error("cycle space dimension " + std::to_string(basis.size()) +
                " is too large for exhaustive cycle enumeration");

  // Gray-code walk over all nonzero combinations of the basis.
  std::vector<Cycle> found;
  EdgeSet acc = g.empty_edge_set();
  const std::uint64_t total = std::uint64_t{1} << basis.size();
  for (std::uint64_t i = 1; i < total; ++i) {
    acc ^= basis[static_cast<std::size_t>(std::countr_zero(i))];
    auto check = as_cycle(g, acc);
    if (check) found.push_back(*std::move(check.cycle));
  }
  std::sort(found.begin(), found.end());
  CycleSet out(g);
  for (auto& c : found) out.insert(std::move(c));
  return out;
}

CycleSet cycles_through_edge(const Graph& g, EdgeId e) {
  if (e >= g.edge_count()) throw Error("unknown edge " + std::to_string(e));
  CycleSet out(g);
  for (const auto& c : enumerate_all_cycles(g))
    if (c.edges().contains(e)) out.insert(c);
  return out;
}

CycleSet cycles_through_vertex(const Graph& g, Vertex w) {
  if (w >= g.vertex_count()) throw Error("unknown vertex " + std::to_string(w));
  CycleSet out(g);
  for (const auto& c : enumerate_all_cycles(g))
    if (c.contains_vertex(w)) out.insert(c);
  return out;
}

std::vector<Face> trace_faces(const Graph& g, const PlaneEmbedding& emb) {
  const std::size_t n = g.vertex_count();
  const std::size_t m = g.edge_count();
  auto fail = [](const std::string& why) { return Error("not a plane embedding: " + why); };
  if (emb.rotation.size() != n) throw fail("rotation must list every vertex");

  // position[w][k]: index of edge rotation[w][k] in w's rotation, looked up by edge.
  std::vector<std::unordered_map<EdgeId, std::size_t>> position(n);
  for (Vertex w = 0; w < n; ++w) {
    const auto& rot = emb.rotation[w];
    if (rot.size() != g.degree(w))
      throw fail("rotation at vertex " + g.label(w) + " is not a permutation of its edges");
    for (std::size_t k = 0; k < rot.size(); ++k) {
      EdgeId e = rot[k];
      if (e >= m || !g.edge(e).has(w) || !position[w].emplace(e, k).second)
        throw fail("rotation at vertex " + g.label(w) + " is not a permutation of its edges");
    }
  }

  auto dart_index = [](const Dart& d) { return 2 * static_cast<std::size_t>(d.edge) + (d.forward ? 0 : 1); };
  std::vector<char> used(2 * m, 0);
  std::vector<Face> faces;
  for (EdgeId e = 0; e < m; ++e) {
    for (bool fwd : {true, false}) {
      Dart start{e, fwd};
      if (used[dart_index(start)]) continue;
      Face face{{}, g.empty_edge_set()};
      Dart d = start;
      do {
        used[dart_index(d)] = 1;
        face.darts.push_back(d);
        face.edges.toggle(d.edge);
        const Edge& ed = g.edge(d.edge);
        Vertex head = d.forward ? ed.b : ed.a;
        const auto& rot = emb.rotation[head];
        EdgeId next = rot[(position[head].at(d.edge) + 1) % rot.size()];
        d = Dart{next, g.edge(next).a == head};
      } while (!(d == start));
      faces.push_back(std::move(face));
    }
  }
  if (!is_connected(g)) throw fail("graph is disconnected");
  const auto euler = static_cast<long>(n) - static_cast<long>(m) + static_cast<long>(faces.size());
  if (euler != 2)
    throw fail("face count " + std::to_string(faces.size()) + " violates Euler's formula");
  return faces;
}

CycleSet internal_faces(const Graph& g, const PlaneEmbedding& emb) {
  if (emb.outer.edge >= g.edge_count()) throw Error("outer face names an unknown edge");
  auto faces = trace_faces(g, emb);
  CycleSet out(g);
  bool outer_seen = false;
  for (const auto& face : faces) {
    if (std::find(face.darts.begin(), face.darts.end(), emb.outer) != face.darts.end()) {
      outer_seen = true;
      continue;
    }
    auto check = as_cycle(g, face.edges);
    if (!check || check.cycle->length() != face.darts.size())
      throw Error("face boundary is not a simple cycle; graph is not 2-connected");
    out.insert(*std::move(check.cycle));
  }
  if (!outer_seen) throw Error("outer dart lies on no face");
  return out;
}

PlaneEmbedding embedding_from_coordinates(const Graph& g,
                                          std::span<const std::pair<double, double>> coords) {
  if (coords.size() != g.vertex_count()) throw Error("need one coordinate per vertex");
  PlaneEmbedding emb;
  emb.rotation.resize(g.vertex_count());
  for (Vertex w = 0; w < g.vertex_count(); ++w) {
    std::vector<std::pair<double, EdgeId>> by_angle;
    for (const auto& inc : g.incident(w)) {
      double dx = coords[inc.neighbor].first - coords[w].first;
      double dy = coords[inc.neighbor].second - coords[w].second;
      by_angle.emplace_back(std::atan2(dy, dx), inc.edge);
    }
    std::sort(by_angle.begin(), by_angle.end());
    for (const auto& [angle, e] : by_angle) emb.rotation[w].push_back(e);
  }
  emb.outer = Dart{0, true};
  // Bounded faces are traced clockwise, so the unbounded face is the only
  // one with positive signed area.
  double best = 0;
  bool found = false;
  for (const auto& face : trace_faces(g, emb)) {
    double area = 0;
    for (const auto& d : face.darts) {
      const Edge& ed = g.edge(d.edge);
      Vertex from = d.forward ? ed.a : ed.b;
      Vertex to = d.forward ? ed.b : ed.a;
      area += coords[from].first * coords[to].second - coords[to].first * coords[from].second;
    }
    if (!found || area > best) {
      best = area;
      emb.outer = face.darts.front();
      found = true;
    }
  }
  if (!found || best <= 0) throw Error("drawing has no face of positive orientation");
  return emb;
}

}  // namespace pathspace
