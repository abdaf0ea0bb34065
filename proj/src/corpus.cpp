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

#include "pathspace/corpus.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>

namespace pathspace {
namespace {

constexpr std::size_t kMaxCanonicalOrder = 11;

using AdjRows = std::vector<std::uint32_t>;

AdjRows rows_of(const Graph& g) {
  AdjRows rows(g.vertex_count(), 0);
  for (const auto& e : g.edges()) {
    rows[e.a] |= 1u << e.b;
    rows[e.b] |= 1u << e.a;
  }
  return rows;
}

// Colour refinement starting from a single colour; returns cells in colour
// order, which is invariant under relabeling.
std::vector<std::vector<Vertex>> refined_cells(const AdjRows& rows) {
  const std::size_t n = rows.size();
  std::vector<std::size_t> color(n, 0);
  std::size_t classes = 1;
  while (true) {
    std::vector<std::pair<std::vector<std::size_t>, Vertex>> sig(n);
    for (Vertex w = 0; w < n; ++w) {
      std::vector<std::size_t> s{color[w]};
      std::vector<std::size_t> nb;
      for (Vertex x = 0; x < n; ++x)
        if (rows[w] >> x & 1u) nb.push_back(color[x]);
      std::sort(nb.begin(), nb.end());
      s.insert(s.end(), nb.begin(), nb.end());
      sig[w] = {std::move(s), w};
    }
    std::map<std::vector<std::size_t>, std::size_t> ids;
    for (const auto& [s, w] : sig) ids.emplace(s, 0);
    std::size_t next = 0;
    for (auto& [s, id] : ids) id = next++;
    for (const auto& [s, w] : sig) color[w] = ids[s];
    if (ids.size() == classes) break;
    classes = ids.size();
  }
  std::vector<std::vector<Vertex>> cells(classes);
  for (Vertex w = 0; w < n; ++w) cells[color[w]].push_back(w);
  return cells;
}

std::uint64_t encode(const AdjRows& rows, const std::vector<Vertex>& order) {
  std::uint64_t code = 0;
  for (std::size_t i = 0; i < order.size(); ++i)
    for (std::size_t j = i + 1; j < order.size(); ++j)
      code = (code << 1) | ((rows[order[i]] >> order[j]) & 1u);
  return code;
}

Graph decode(std::size_t n, std::uint64_t code) {
  const std::size_t bits = n * (n - 1) / 2;
  std::vector<std::pair<Vertex, Vertex>> edges;
  std::size_t k = 0;
  for (Vertex i = 0; i < n; ++i)
    for (Vertex j = i + 1; j < n; ++j, ++k)
      if ((code >> (bits - 1 - k)) & 1u) edges.emplace_back(i, j);
  return Graph::build(n, std::move(edges));
}

}  // namespace

std::uint64_t canonical_code(const Graph& g) {
  const std::size_t n = g.vertex_count();
  if (n > kMaxCanonicalOrder) throw Error("canonical form supports at most 11 vertices");
  const AdjRows rows = rows_of(g);
  auto cells = refined_cells(rows);
  std::uint64_t best = ~std::uint64_t{0};
  std::vector<Vertex> order;
  order.reserve(n);
  auto recurse = [&](auto&& self, std::size_t cell) -> void {
    if (cell == cells.size()) {
      best = std::min(best, encode(rows, order));
      return;
    }
    std::vector<Vertex> perm = cells[cell];
    std::sort(perm.begin(), perm.end());
    do {
      order.insert(order.end(), perm.begin(), perm.end());
      self(self, cell + 1);
      order.resize(order.size() - perm.size());
    } while (std::next_permutation(perm.begin(), perm.end()));
  };
  recurse(recurse, 0);
  return best;
}

std::vector<Graph> all_graphs(std::size_t n) {
  if (n == 0 || n > 8) throw Error("exhaustive generation supports 1 <= n <= 8");
  std::vector<std::set<std::uint64_t>> levels(1);
  levels[0].insert(0);
  const std::size_t max_edges = n * (n - 1) / 2;
  for (std::size_t m = 0; m < max_edges; ++m) {
    std::set<std::uint64_t> next;
    for (std::uint64_t code : levels[m]) {
      const Graph g = decode(n, code);
      auto pairs = g.pairs();
      for (Vertex i = 0; i < n; ++i)
        for (Vertex j = i + 1; j < n; ++j) {
          if (g.edge_between(i, j)) continue;
          auto extended = pairs;
          extended.emplace_back(i, j);
          next.insert(canonical_code(Graph::build(n, std::move(extended))));
        }
    }
    levels.push_back(std::move(next));
  }
  std::vector<Graph> out;
  for (const auto& level : levels)
    for (std::uint64_t code : level) out.push_back(decode(n, code));
  return out;
}

std::vector<Graph> all_two_connected_graphs(std::size_t max_n) {
  std::vector<Graph> out;
  for (std::size_t n = 3; n <= max_n; ++n)
    for (auto& g : all_graphs(n))
      if (is_two_connected(g)) out.push_back(std::move(g));
  return out;
}

Graph random_two_connected(std::size_t n, std::size_t m, Rng& rng) {
  if (n < 3 || m < n || m > n * (n - 1) / 2)
    throw Error("no 2-connected graph with " + std::to_string(n) + " vertices and " +
                std::to_string(m) + " edges");
  std::vector<std::pair<Vertex, Vertex>> all;
  for (Vertex i = 0; i < n; ++i)
    for (Vertex j = i + 1; j < n; ++j) all.emplace_back(i, j);
  for (int attempt = 0; attempt < 100000; ++attempt) {
    rng.shuffle(all);
    std::vector<std::pair<Vertex, Vertex>> chosen(all.begin(), all.begin() + static_cast<std::ptrdiff_t>(m));
    std::sort(chosen.begin(), chosen.end());
    Graph g = Graph::build(n, std::move(chosen));
    if (is_two_connected(g)) return g;
  }
  throw Error("could not sample a 2-connected graph");
}

Graph random_two_connected(std::size_t max_n, Rng& rng) {
  const auto n = static_cast<std::size_t>(rng.between(3, max_n));
  const auto m = static_cast<std::size_t>(rng.between(n, n * (n - 1) / 2));
  return random_two_connected(n, m, rng);
}

CycleSet random_cycle_subset(const Graph& g, const CycleSet& all, double p, Rng& rng) {
  CycleSet out(g);
  for (const auto& c : all)
    if (rng.coin(p)) out.insert(c);
  return out;
}

Graph complete_graph(std::size_t n) {
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (Vertex i = 0; i < n; ++i)
    for (Vertex j = i + 1; j < n; ++j) edges.emplace_back(i, j);
  return Graph::build(n, std::move(edges));
}

Graph cycle_graph(std::size_t n) {
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (Vertex i = 0; i < n; ++i) edges.emplace_back(i, static_cast<Vertex>((i + 1) % n));
  return Graph::build(n, std::move(edges));
}

K4Fixture k4_fixture() {
  // u=0, x=1, y=2, v=3; edges uv, ux, uy, xv, yv, xy.
  Graph g = Graph::build(4, {{0, 3}, {0, 1}, {0, 2}, {1, 3}, {2, 3}, {1, 2}}, {"u", "x", "y", "v"});
  CycleSet c(g);
  c.insert(cycle_from_vertices(g, {0, 1, 3}));
  c.insert(cycle_from_vertices(g, {0, 2, 3}));
  c.insert(cycle_from_vertices(g, {0, 1, 2, 3}));
  return {std::move(g), 0, 3, std::move(c)};
}

std::vector<PlaneFixture> plane_fixtures() {
  using Coords = std::vector<std::pair<double, double>>;
  using Edges = std::vector<std::pair<Vertex, Vertex>>;
  std::vector<PlaneFixture> out;
  auto add = [&](std::string name, Coords coords, Edges edges) {
    Graph g = Graph::build(coords.size(), std::move(edges));
    PlaneEmbedding emb;
    try {
      emb = embedding_from_coordinates(g, coords);
    } catch (const Error& ex) {
      throw Error("plane fixture " + name + ": " + ex.what());
    }
    out.push_back({std::move(name), std::move(g), std::move(coords), std::move(emb)});
  };
  auto ring = [](std::size_t k, double radius, double phase) {
    Coords pts;
    for (std::size_t i = 0; i < k; ++i) {
      double a = phase + 2 * M_PI * static_cast<double>(i) / static_cast<double>(k);
      pts.emplace_back(radius * std::cos(a), radius * std::sin(a));
    }
    return pts;
  };
  auto ring_edges = [](Vertex first, std::size_t k) {
    Edges e;
    for (Vertex i = 0; i < k; ++i) e.emplace_back(first + i, first + static_cast<Vertex>((i + 1) % k));
    return e;
  };

  add("triangle", ring(3, 1, 0), ring_edges(0, 3));
  add("square", ring(4, 1, 0), ring_edges(0, 4));
  // u, a, v, b around the square with the chord uv.
  add("chorded-square", {{0, 0}, {1, -1}, {2, 0}, {1, 1}}, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 2}});
  {
    Coords c = ring(3, 2, M_PI / 2);
    c.emplace_back(0, 0);
    Edges e = ring_edges(0, 3);
    for (Vertex i = 0; i < 3; ++i) e.emplace_back(i, 3);
    add("k4", c, e);
  }
  for (std::size_t rim : {4u, 5u}) {
    Coords c = ring(rim, 2, 0.1);
    c.emplace_back(0, 0);
    Edges e = ring_edges(0, rim);
    for (Vertex i = 0; i < rim; ++i) e.emplace_back(i, static_cast<Vertex>(rim));
    add("wheel-" + std::to_string(rim), c, e);
  }
  {
    Coords c = ring(3, 3, M_PI / 2);
    Coords inner = ring(3, 1, M_PI / 2);
    c.insert(c.end(), inner.begin(), inner.end());
    Edges e = ring_edges(0, 3);
    Edges e2 = ring_edges(3, 3);
    e.insert(e.end(), e2.begin(), e2.end());
    for (Vertex i = 0; i < 3; ++i) e.emplace_back(i, i + 3);
    add("prism", c, e);
  }
  add("octahedron", {{0, 0}, {10, 0}, {5, 9}, {5, 1}, {6.5, 4.5}, {3.5, 4.5}},
      {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}, {3, 0}, {3, 1}, {4, 1}, {4, 2}, {5, 2}, {5, 0}});
  add("k23", {{0, 0}, {4, 0}, {2, 2}, {2, 0.5}, {2, -2}},
      {{0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}});
  {
    Edges e = ring_edges(0, 6);
    e.insert(e.end(), {{0, 2}, {2, 4}, {4, 0}});
    add("hexagon-triangle", ring(6, 2, 0), e);
  }
  {
    Edges e = ring_edges(0, 5);
    e.insert(e.end(), {{0, 2}, {0, 3}});
    add("pentagon-fan", ring(5, 2, 0.3), e);
  }
  add("house", {{0, 0}, {2, 0}, {2, 2}, {1, 3}, {0, 2}},
      {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {2, 4}});
  {
    Coords c = ring(4, 3, M_PI / 4);
    Coords inner = ring(4, 1, M_PI / 4);
    c.insert(c.end(), inner.begin(), inner.end());
    Edges e = ring_edges(0, 4);
    Edges e2 = ring_edges(4, 4);
    e.insert(e.end(), e2.begin(), e2.end());
    for (Vertex i = 0; i < 4; ++i) e.emplace_back(i, i + 4);
    add("cube", c, e);
  }
  return out;
}

}  // namespace pathspace
