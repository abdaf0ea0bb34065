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

#include "pathspace/graph.hpp"

#include <algorithm>
#include <charconv>
#include <limits>
#include <queue>

namespace pathspace {
namespace {

std::string pair_name(Vertex a, Vertex b) {
  return "(" + std::to_string(a) + "," + std::to_string(b) + ")";
}

// Connectivity of g with vertex `skip` deleted (skip == n means none).
bool connected_without(const Graph& g, Vertex skip) {
  const std::size_t n = g.vertex_count();
  Vertex start = 0;
  while (start < n && start == skip) ++start;
  if (start >= n) return true;
  std::vector<char> seen(n, 0);
  std::vector<Vertex> stack{start};
  seen[start] = 1;
  std::size_t reached = 1;
  while (!stack.empty()) {
    Vertex w = stack.back();
    stack.pop_back();
    for (const auto& inc : g.incident(w)) {
      if (inc.neighbor == skip || seen[inc.neighbor]) continue;
      seen[inc.neighbor] = 1;
      ++reached;
      stack.push_back(inc.neighbor);
    }
  }
  return reached == n - (skip < n ? 1 : 0);
}

}  // namespace

Graph Graph::build(std::size_t vertex_count, std::vector<std::pair<Vertex, Vertex>> edges,
                   std::vector<std::string> labels) {
  if (!labels.empty() && labels.size() != vertex_count)
    throw Error("expected " + std::to_string(vertex_count) + " labels, got " +
                std::to_string(labels.size()));
  Graph g;
  g.adjacency_.resize(vertex_count);
  g.edges_.reserve(edges.size());
  for (std::size_t k = 0; k < edges.size(); ++k) {
    auto [a, b] = edges[k];
    if (a >= vertex_count || b >= vertex_count)
      throw Error("edge " + std::to_string(k) + " " + pair_name(a, b) +
                  " has an endpoint out of range");
    if (a == b) throw Error("edge " + std::to_string(k) + " " + pair_name(a, b) + " is a self-loop");
    for (const auto& inc : g.adjacency_[a])
      if (inc.neighbor == b)
        throw Error("edge " + std::to_string(k) + " " + pair_name(a, b) + " duplicates edge " +
                    std::to_string(inc.edge));
    auto id = static_cast<EdgeId>(k);
    g.edges_.push_back({a, b});
    g.adjacency_[a].push_back({b, id});
    g.adjacency_[b].push_back({a, id});
  }
  for (auto& list : g.adjacency_)
    std::sort(list.begin(), list.end(),
              [](const Incidence& x, const Incidence& y) { return x.neighbor < y.neighbor; });
  g.labels_ = std::move(labels);
  return g;
}

std::optional<EdgeId> Graph::edge_between(Vertex a, Vertex b) const {
  if (a >= adjacency_.size()) return std::nullopt;
  for (const auto& inc : adjacency_[a])
    if (inc.neighbor == b) return inc.edge;
  return std::nullopt;
}

EdgeSet Graph::all_edges() const {
  EdgeSet all(edges_.size());
  for (EdgeId e = 0; e < edges_.size(); ++e) all.insert(e);
  return all;
}

std::string Graph::label(Vertex w) const {
  if (w < labels_.size()) return labels_[w];
  return std::to_string(w);
}

std::optional<Vertex> Graph::find_vertex(const std::string& name) const {
  for (std::size_t i = 0; i < labels_.size(); ++i)
    if (labels_[i] == name) return static_cast<Vertex>(i);
  Vertex idx = 0;
  auto [ptr, ec] = std::from_chars(name.data(), name.data() + name.size(), idx);
  if (ec == std::errc() && ptr == name.data() + name.size() && idx < vertex_count()) return idx;
  return std::nullopt;
}

std::vector<std::pair<Vertex, Vertex>> Graph::pairs() const {
  std::vector<std::pair<Vertex, Vertex>> out;
  out.reserve(edges_.size());
  for (const auto& e : edges_) out.emplace_back(e.a, e.b);
  return out;
}

bool is_connected(const Graph& g) {
  return connected_without(g, static_cast<Vertex>(g.vertex_count()));
}

bool is_two_connected(const Graph& g) {
  const std::size_t n = g.vertex_count();
  if (n < 3 || !is_connected(g)) return false;
  for (Vertex w = 0; w < n; ++w)
    if (!connected_without(g, w)) return false;
  return true;
}

std::vector<std::size_t> bfs_distances(const Graph& g, Vertex source) {
  constexpr auto kInf = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> dist(g.vertex_count(), kInf);
  std::queue<Vertex> queue;
  dist.at(source) = 0;
  queue.push(source);
  while (!queue.empty()) {
    Vertex w = queue.front();
    queue.pop();
    for (const auto& inc : g.incident(w)) {
      if (dist[inc.neighbor] != kInf) continue;
      dist[inc.neighbor] = dist[w] + 1;
      queue.push(inc.neighbor);
    }
  }
  return dist;
}

Path::Path(const Graph& g, std::vector<Vertex> vertices)
    : vertices_(std::move(vertices)), edges_(g.edge_count()) {
  if (vertices_.empty()) throw Error("a path needs at least one vertex");
  std::vector<char> seen(g.vertex_count(), 0);
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    Vertex w = vertices_[i];
    if (w >= g.vertex_count()) throw Error("path vertex " + std::to_string(w) + " out of range");
    if (seen[w]) throw Error("path repeats vertex " + g.label(w));
    seen[w] = 1;
    if (i == 0) continue;
    auto e = g.edge_between(vertices_[i - 1], w);
    if (!e)
      throw Error("path steps along a non-edge " + pair_name(vertices_[i - 1], w));
    edges_.insert(*e);
  }
}

std::string format_path(const Graph& g, const Path& p, char sep) {
  std::string out;
  for (std::size_t i = 0; i < p.vertices().size(); ++i) {
    if (i) out += sep;
    out += g.label(p.vertices()[i]);
  }
  return out;
}

bool Cycle::contains_vertex(Vertex w) const {
  return std::find(order_.begin(), order_.end(), w) != order_.end();
}

const char* to_string(CycleDefect d) {
  switch (d) {
    case CycleDefect::kNone: return "cycle";
    case CycleDefect::kEmpty: return "empty edge set";
    case CycleDefect::kBadDegree: return "vertex of degree other than 2";
    case CycleDefect::kDisconnected: return "disconnected union of cycles";
  }
  return "unknown";
}

CycleCheck as_cycle(const Graph& g, const EdgeSet& es) {
  if (es.universe() != g.edge_count())
    throw Error("edge set does not belong to this graph");
  if (es.empty()) return {std::nullopt, CycleDefect::kEmpty};

  std::vector<std::uint8_t> deg(g.vertex_count(), 0);
  bool bad_degree = false;
  es.for_each([&](EdgeId e) {
    const Edge& ed = g.edge(e);
    if (++deg[ed.a] > 2 || ++deg[ed.b] > 2) bad_degree = true;
  });
  if (bad_degree) return {std::nullopt, CycleDefect::kBadDegree};
  Vertex start = g.vertex_count();
  for (Vertex w = 0; w < g.vertex_count(); ++w) {
    if (deg[w] == 1) return {std::nullopt, CycleDefect::kBadDegree};
    if (deg[w] == 2 && start == g.vertex_count()) start = w;
  }

  // Walk the cycle from its smallest vertex toward the smaller neighbor.
  std::vector<Vertex> order{start};
  Vertex prev = start;
  Vertex cur = start;
  Vertex first_step = g.vertex_count();
  for (const auto& inc : g.incident(start))
    if (es.contains(inc.edge)) {
      first_step = inc.neighbor;
      break;
    }
  cur = first_step;
  while (cur != start) {
    order.push_back(cur);
    Vertex next = cur;
    for (const auto& inc : g.incident(cur))
      if (es.contains(inc.edge) && inc.neighbor != prev) {
        next = inc.neighbor;
        break;
      }
    prev = cur;
    cur = next;
  }
  if (order.size() != es.size()) return {std::nullopt, CycleDefect::kDisconnected};
  return {Cycle(es, std::move(order)), CycleDefect::kNone};
}

Cycle require_cycle(const Graph& g, const EdgeSet& es) {
  auto check = as_cycle(g, es);
  if (!check) throw Error(std::string("edge set is not a cycle: ") + to_string(check.defect));
  return *std::move(check.cycle);
}

Cycle cycle_from_vertices(const Graph& g, const std::vector<Vertex>& vertices) {
  EdgeSet es = g.empty_edge_set();
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    Vertex a = vertices[i];
    Vertex b = vertices[(i + 1) % vertices.size()];
    auto e = g.edge_between(a, b);
    if (!e) throw Error("cycle steps along a non-edge " + pair_name(a, b));
    es.insert(*e);
  }
  return require_cycle(g, es);
}

EdgeSet Monocle::edges(const Graph& g) const {
  EdgeSet es = cycle.edges();
  for (const auto* attach : {&attach_u, &attach_v})
    for (std::size_t i = 1; i < attach->size(); ++i)
      es.insert(*g.edge_between((*attach)[i - 1], (*attach)[i]));
  return es;
}

std::optional<Monocle> classify_union(const Graph& g, const Path& s, const Path& t) {
  const auto& sv = s.vertices();
  const auto& tv = t.vertices();
  if (sv == tv) throw Error("paths are equal; their union holds no cycle");
  if (sv.front() != tv.front() || sv.back() != tv.back())
    throw Error("paths do not join the same pair of vertices");

  // Longest common prefix ends at x = sv[pre], longest common suffix starts
  // at y. For distinct simple paths with equal ends the two never overlap.
  std::size_t pre = 0;
  while (pre + 1 < sv.size() && pre + 1 < tv.size() && sv[pre + 1] == tv[pre + 1]) ++pre;
  std::size_t suf = 0;
  while (suf + 1 < sv.size() && suf + 1 < tv.size() &&
         sv[sv.size() - 2 - suf] == tv[tv.size() - 2 - suf])
    ++suf;
  const std::size_t s_end = sv.size() - 1 - suf;
  const std::size_t t_end = tv.size() - 1 - suf;

  std::vector<char> in_s_middle(g.vertex_count(), 0);
  for (std::size_t i = pre + 1; i < s_end; ++i) in_s_middle[sv[i]] = 1;
  for (std::size_t i = pre + 1; i < t_end; ++i)
    if (in_s_middle[tv[i]]) return std::nullopt;

  EdgeSet sigma = s.edges() ^ t.edges();
  auto check = as_cycle(g, sigma);
  if (!check) return std::nullopt;

  Monocle m{*std::move(check.cycle),
            std::vector<Vertex>(sv.begin(), sv.begin() + static_cast<std::ptrdiff_t>(pre) + 1),
            std::vector<Vertex>(sv.rbegin(), sv.rbegin() + static_cast<std::ptrdiff_t>(suf) + 1),
            sv[pre], sv[s_end]};
  return m;
}

}  // namespace pathspace
