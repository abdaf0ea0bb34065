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

// Slow, literal re-implementations used to cross-check the library. They
// only touch Graph's raw edge list so that a bug in the library's own
// helpers cannot leak into the expected values.

#ifndef PATHSPACE_TESTS_ORACLES_HPP_
#define PATHSPACE_TESTS_ORACLES_HPP_

#include <algorithm>
#include <cstdint>
#include <deque>
#include <functional>
#include <limits>
#include <set>
#include <vector>

#include "pathspace/graph.hpp"

namespace oracle {

using pathspace::EdgeId;
using pathspace::EdgeSet;
using pathspace::Graph;
using pathspace::Vertex;
using VSeq = std::vector<Vertex>;

inline std::vector<std::vector<Vertex>> neighbor_lists(const Graph& g) {
  std::vector<std::vector<Vertex>> adj(g.vertex_count());
  for (const auto& e : g.edges()) {
    adj[e.a].push_back(e.b);
    adj[e.b].push_back(e.a);
  }
  for (auto& row : adj) std::sort(row.begin(), row.end());
  return adj;
}

inline bool has_edge(const Graph& g, Vertex a, Vertex b) {
  for (const auto& e : g.edges())
    if ((e.a == a && e.b == b) || (e.a == b && e.b == a)) return true;
  return false;
}

/// Vertices touched by the set are connected through its edges.
inline bool edges_connected(const Graph& g, const EdgeSet& es) {
  std::vector<Vertex> parent(g.vertex_count());
  for (Vertex i = 0; i < parent.size(); ++i) parent[i] = i;
  std::function<Vertex(Vertex)> find = [&](Vertex x) {
    return parent[x] == x ? x : parent[x] = find(parent[x]);
  };
  std::set<Vertex> touched;
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (!es.contains(e)) continue;
    const auto& ed = g.edges()[e];
    touched.insert(ed.a);
    touched.insert(ed.b);
    parent[find(ed.a)] = find(ed.b);
  }
  std::set<Vertex> roots;
  for (Vertex w : touched) roots.insert(find(w));
  return roots.size() <= 1;
}

/// Non-empty, every touched vertex has degree two, one component.
inline bool is_cycle(const Graph& g, const EdgeSet& es) {
  if (es.empty()) return false;
  std::vector<int> deg(g.vertex_count(), 0);
  for (EdgeId e = 0; e < g.edge_count(); ++e)
    if (es.contains(e)) {
      ++deg[g.edges()[e].a];
      ++deg[g.edges()[e].b];
    }
  for (int d : deg)
    if (d != 0 && d != 2) return false;
  return edges_connected(g, es);
}

inline EdgeSet edges_of(const Graph& g, const VSeq& walk, bool closed = false) {
  EdgeSet es(g.edge_count());
  auto add = [&](Vertex a, Vertex b) {
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
      const auto& ed = g.edges()[e];
      if ((ed.a == a && ed.b == b) || (ed.a == b && ed.b == a)) es.insert(e);
    }
  };
  for (std::size_t i = 1; i < walk.size(); ++i) add(walk[i - 1], walk[i]);
  if (closed && walk.size() > 2) add(walk.back(), walk.front());
  return es;
}

/// Cycle masks by trying every edge subset; only for small edge counts.
inline std::vector<EdgeSet> all_cycles(const Graph& g) {
  std::vector<EdgeSet> out;
  const std::uint64_t total = std::uint64_t{1} << g.edge_count();
  for (std::uint64_t mask = 1; mask < total; ++mask) {
    EdgeSet es(g.edge_count());
    for (EdgeId e = 0; e < g.edge_count(); ++e)
      if ((mask >> e) & 1u) es.insert(e);
    if (is_cycle(g, es)) out.push_back(es);
  }
  return out;
}

/// Simple u-v paths by recursive search, in no particular order.
inline std::vector<VSeq> all_paths(const Graph& g, Vertex u, Vertex v) {
  auto adj = neighbor_lists(g);
  std::vector<VSeq> out;
  VSeq cur{u};
  std::vector<char> used(g.vertex_count(), 0);
  used[u] = 1;
  std::function<void()> go = [&] {
    Vertex w = cur.back();
    if (w == v) {
      out.push_back(cur);
      return;
    }
    for (Vertex x : adj[w]) {
      if (used[x]) continue;
      used[x] = 1;
      cur.push_back(x);
      go();
      cur.pop_back();
      used[x] = 0;
    }
  };
  go();
  return out;
}

/// Literal replacement definition: T arises from S by swapping S[i..j] for
/// T[p..q] where prefixes and suffixes agree and the two middles meet only
/// in their end vertices.
inline bool adjacent_by_replacement(const VSeq& s, const VSeq& t) {
  if (s == t) return false;
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = i + 1; j < s.size(); ++j)
      for (std::size_t p = 0; p < t.size(); ++p)
        for (std::size_t q = p + 1; q < t.size(); ++q) {
          if (s[i] != t[p] || s[j] != t[q]) continue;
          if (!std::equal(s.begin(), s.begin() + i + 1, t.begin(), t.begin() + p + 1)) continue;
          if (!std::equal(s.begin() + j, s.end(), t.begin() + q, t.end())) continue;
          std::set<Vertex> mid_s(s.begin() + i + 1, s.begin() + j);
          bool disjoint = true;
          for (std::size_t k = p + 1; k < q; ++k)
            if (mid_s.count(t[k])) disjoint = false;
          // Both middles equal as sequences would mean S == T.
          if (disjoint && !(j - i == 1 && q - p == 1)) return true;
        }
  return false;
}

/// Spanning connected subsets with |E| = |V| containing sigma.
inline std::vector<EdgeSet> unicycles_containing(const Graph& g, const EdgeSet& sigma) {
  std::vector<EdgeId> rest;
  for (EdgeId e = 0; e < g.edge_count(); ++e)
    if (!sigma.contains(e)) rest.push_back(e);
  const std::size_t need = g.vertex_count() - sigma.size();
  std::vector<EdgeSet> out;
  if (need > rest.size()) return out;
  std::vector<char> pick(rest.size(), 0);
  std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(need), 1);
  // prev_permutation over a sorted-descending selector visits every subset.
  do {
    EdgeSet es = sigma;
    for (std::size_t i = 0; i < rest.size(); ++i)
      if (pick[i]) es.insert(rest[i]);
    std::vector<int> deg(g.vertex_count(), 0);
    es.for_each([&](EdgeId e) {
      ++deg[g.edges()[e].a];
      ++deg[g.edges()[e].b];
    });
    bool spanning = std::all_of(deg.begin(), deg.end(), [](int d) { return d > 0; });
    if (spanning && edges_connected(g, es)) out.push_back(es);
  } while (std::prev_permutation(pick.begin(), pick.end()));
  std::sort(out.begin(), out.end());
  return out;
}

/// Shortest distances from `src` in the graph of paths where `link` decides
/// adjacency.
template <typename Link>
std::vector<std::size_t> bfs(std::size_t count, std::size_t src, Link link) {
  std::vector<std::size_t> dist(count, std::numeric_limits<std::size_t>::max());
  std::deque<std::size_t> queue{src};
  dist[src] = 0;
  while (!queue.empty()) {
    std::size_t a = queue.front();
    queue.pop_front();
    for (std::size_t b = 0; b < count; ++b)
      if (dist[b] == std::numeric_limits<std::size_t>::max() && link(a, b)) {
        dist[b] = dist[a] + 1;
        queue.push_back(b);
      }
  }
  return dist;
}

}  // namespace oracle

#endif  // PATHSPACE_TESTS_ORACLES_HPP_
