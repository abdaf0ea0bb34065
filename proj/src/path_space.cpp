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

#include "pathspace/path_space.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <queue>

namespace pathspace {
namespace {

constexpr auto kUnreached = std::numeric_limits<std::size_t>::max();

void check_endpoints(const Graph& g, Vertex u, Vertex v) {
  if (u >= g.vertex_count() || v >= g.vertex_count())
    throw Error("path endpoints must be vertices of the graph");
  if (u == v) throw Error("u and v must be distinct");
}

}  // namespace

std::vector<Path> enumerate_uv_paths(const Graph& g, Vertex u, Vertex v, std::size_t max_paths) {
  check_endpoints(g, u, v);
  std::vector<std::vector<Vertex>> found;
  std::vector<Vertex> stack{u};
  std::vector<char> on_path(g.vertex_count(), 0);
  on_path[u] = 1;

  // Iterative DFS: cursor[i] is the next incidence to try at stack[i].
  std::vector<std::size_t> cursor{0};
  while (!stack.empty()) {
    Vertex w = stack.back();
    auto inc = g.incident(w);
    if (w == v || cursor.back() >= inc.size()) {
      if (w == v) {
        if (found.size() == max_paths) throw PathLimitExceeded(max_paths);
        found.push_back(stack);
      }
      on_path[w] = 0;
      stack.pop_back();
      cursor.pop_back();
      continue;
    }
    Vertex next = inc[cursor.back()++].neighbor;
    if (on_path[next]) continue;
    on_path[next] = 1;
    stack.push_back(next);
    cursor.push_back(0);
  }

  std::vector<Path> paths;
  paths.reserve(found.size());
  for (auto& seq : found) paths.emplace_back(g, std::move(seq));
  std::sort(paths.begin(), paths.end());
  return paths;
}

std::optional<Exchange> find_exchange(const Graph& g, const Path& s, const Path& t) {
  if (s == t) return std::nullopt;
  auto monocle = classify_union(g, s, t);
  if (!monocle) return std::nullopt;
  return Exchange{monocle->u_prime, monocle->v_prime, monocle->cycle.edges()};
}

bool are_adjacent(const Graph& g, const Path& s, const Path& t) {
  return find_exchange(g, s, t).has_value();
}

std::size_t PathGraph::index_of(const Path& p) const {
  auto it = std::lower_bound(paths_.begin(), paths_.end(), p);
  if (it == paths_.end() || !(*it == p)) return paths_.size();
  return static_cast<std::size_t>(it - paths_.begin());
}

std::vector<std::size_t> PathGraph::neighbors(std::size_t a) const {
  std::vector<std::size_t> out;
  const auto& row = rows_.at(a);
  for (std::size_t i = 0; i < row.size(); ++i) {
    std::uint64_t w = row[i];
    while (w) {
      out.push_back(i * 64 + static_cast<std::size_t>(std::countr_zero(w)));
      w &= w - 1;
    }
  }
  return out;
}

const EdgeSet* PathGraph::link_cycle(std::size_t a, std::size_t b) const {
  if (a > b) std::swap(a, b);
  auto it = std::lower_bound(links_.begin(), links_.end(), std::make_pair(a, b),
                             [](const Link& l, const std::pair<std::size_t, std::size_t>& key) {
                               return std::make_pair(l.a, l.b) < key;
                             });
  if (it == links_.end() || it->a != a || it->b != b) return nullptr;
  return &it->cycle;
}

PathGraph build_path_graph(const Graph& g, Vertex u, Vertex v, const CycleSet* restriction,
                           std::size_t max_paths) {
  return build_path_graph(g, u, v, enumerate_uv_paths(g, u, v, max_paths), restriction);
}

PathGraph build_path_graph(const Graph& g, Vertex u, Vertex v, std::vector<Path> paths,
                           const CycleSet* restriction) {
  check_endpoints(g, u, v);
  if (restriction) {
    if (restriction->edge_universe() != g.edge_count())
      throw Error("restriction cycles do not belong to this graph");
    for (const auto& c : *restriction)
      if (!as_cycle(g, c.edges())) throw Error("restriction holds a non-cycle");
  }
  PathGraph pg;
  pg.u_ = u;
  pg.v_ = v;
  pg.paths_ = std::move(paths);
  const std::size_t p = pg.paths_.size();
  const std::size_t words = (p + 63) / 64;
  pg.rows_.assign(p, std::vector<std::uint64_t>(words, 0));
  if (restriction) pg.restriction_ = *restriction;

  for (std::size_t a = 0; a < p; ++a) {
    for (std::size_t b = a + 1; b < p; ++b) {
      const Path& s = pg.paths_[a];
      const Path& t = pg.paths_[b];
      auto ex = find_exchange(g, s, t);
      if (!ex) continue;
      if (restriction && !restriction->contains(ex->cycle)) continue;
      pg.rows_[a][b / 64] |= std::uint64_t{1} << (b % 64);
      pg.rows_[b][a / 64] |= std::uint64_t{1} << (a % 64);
      pg.links_.push_back({a, b, std::move(ex->cycle)});
    }
  }
  return pg;
}

Components components(const PathGraph& pg) {
  Components out;
  out.component_of.assign(pg.size(), kUnreached);
  for (std::size_t root = 0; root < pg.size(); ++root) {
    if (out.component_of[root] != kUnreached) continue;
    const std::size_t id = out.members.size();
    out.members.emplace_back();
    std::vector<std::size_t> stack{root};
    out.component_of[root] = id;
    while (!stack.empty()) {
      std::size_t a = stack.back();
      stack.pop_back();
      out.members[id].push_back(a);
      for (std::size_t b : pg.neighbors(a)) {
        if (out.component_of[b] != kUnreached) continue;
        out.component_of[b] = id;
        stack.push_back(b);
      }
    }
    std::sort(out.members[id].begin(), out.members[id].end());
  }
  return out;
}

std::vector<std::size_t> path_graph_distances(const PathGraph& pg, std::size_t source) {
  std::vector<std::size_t> dist(pg.size(), kUnreached);
  std::queue<std::size_t> queue;
  dist.at(source) = 0;
  queue.push(source);
  while (!queue.empty()) {
    std::size_t a = queue.front();
    queue.pop();
    for (std::size_t b : pg.neighbors(a)) {
      if (dist[b] != kUnreached) continue;
      dist[b] = dist[a] + 1;
      queue.push(b);
    }
  }
  return dist;
}

std::optional<std::size_t> path_graph_diameter(const PathGraph& pg) {
  std::size_t best = 0;
  for (std::size_t a = 0; a < pg.size(); ++a) {
    for (std::size_t d : path_graph_distances(pg, a)) {
      if (d == kUnreached) return std::nullopt;
      best = std::max(best, d);
    }
  }
  return best;
}

std::size_t common_prefix_edges(const Path& a, const Path& b) {
  const auto& x = a.vertices();
  const auto& y = b.vertices();
  std::size_t n = 0;
  while (n + 1 < x.size() && n + 1 < y.size() && x[n + 1] == y[n + 1]) ++n;
  return n;
}

MergeStep merge_step(const Graph& g, const Path& s, const Path& t) {
  if (s == t) throw Error("merge step needs two different paths");
  const auto& x = s.vertices();
  const auto& y = t.vertices();
  if (x.front() != y.front() || x.back() != y.back())
    throw Error("paths do not join the same pair of vertices");

  std::vector<std::size_t> pos_in_s(g.vertex_count(), kUnreached);
  std::vector<std::size_t> pos_in_t(g.vertex_count(), kUnreached);
  for (std::size_t i = 0; i < x.size(); ++i) pos_in_s[x[i]] = i;
  for (std::size_t i = 0; i < y.size(); ++i) pos_in_t[y[i]] = i;

  MergeState st;
  st.common_prefix = common_prefix_edges(s, t);
  const std::size_t n = st.common_prefix;
  st.k = 1;
  while (pos_in_s[y[n + st.k]] == kUnreached) ++st.k;
  st.m = pos_in_s[y[n + st.k]];
  st.j = 1;
  while (pos_in_t[x[n + st.j]] == kUnreached) ++st.j;
  st.l = pos_in_t[x[n + st.j]];

  std::vector<Vertex> next(x.begin(), x.begin() + static_cast<std::ptrdiff_t>(n) + 1);
  next.insert(next.end(), y.begin() + static_cast<std::ptrdiff_t>(n) + 1,
              y.begin() + static_cast<std::ptrdiff_t>(n + st.k) + 1);
  next.insert(next.end(), x.begin() + static_cast<std::ptrdiff_t>(st.m) + 1, x.end());
  return {Path(g, std::move(next)), st};
}

std::vector<Path> merge_walk(const Graph& g, const Path& s, const Path& t) {
  std::vector<Path> walk{s};
  while (!(walk.back() == t)) walk.push_back(merge_step(g, walk.back(), t).next);
  return walk;
}

Path shortest_path(const Graph& g, Vertex u, Vertex v) {
  check_endpoints(g, u, v);
  constexpr Vertex kNone = ~Vertex{0};
  std::vector<Vertex> parent(g.vertex_count(), kNone);
  std::queue<Vertex> queue;
  parent[u] = u;
  queue.push(u);
  while (!queue.empty() && parent[v] == kNone) {
    Vertex w = queue.front();
    queue.pop();
    for (const auto& inc : g.incident(w)) {
      if (parent[inc.neighbor] != kNone) continue;
      parent[inc.neighbor] = w;
      queue.push(inc.neighbor);
    }
  }
  if (parent[v] == kNone) throw Error("u and v are not connected");
  std::vector<Vertex> seq{v};
  while (seq.back() != u) seq.push_back(parent[seq.back()]);
  std::reverse(seq.begin(), seq.end());
  return Path(g, std::move(seq));
}

std::vector<Path> bounded_route(const Graph& g, Vertex u, Vertex v, const Path& s, const Path& t) {
  const Path p = shortest_path(g, u, v);
  auto from_s = merge_walk(g, s, p);
  auto from_t = merge_walk(g, t, p);
  // Join at the first path of the S-walk that the T-walk also visits.
  for (std::size_t i = 0; i < from_s.size(); ++i) {
    auto hit = std::find(from_t.begin(), from_t.end(), from_s[i]);
    if (hit == from_t.end()) continue;
    std::vector<Path> route(from_s.begin(), from_s.begin() + static_cast<std::ptrdiff_t>(i));
    route.insert(route.end(), std::make_reverse_iterator(hit + 1), from_t.rend());
    return route;
  }
  throw Error("merge walks toward the shortest path did not meet");
}

}  // namespace pathspace
