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

#include "pathspace/delta_star.hpp"

#include <algorithm>
#include <numeric>
#include <queue>

namespace pathspace {
namespace {

struct DisjointSets {
  std::vector<std::size_t> parent;

  explicit DisjointSets(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  }
  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[b] = a;
    return true;
  }
};

std::vector<char> vertices_of(const Graph& g, const EdgeSet& es) {
  std::vector<char> on(g.vertex_count(), 0);
  es.for_each([&](EdgeId e) { on[g.edge(e).a] = on[g.edge(e).b] = 1; });
  return on;
}

// Vertex sequence from `from` to the nearest vertex marked in `target`,
// moving along edges of `allowed`.
std::vector<Vertex> walk_to(const Graph& g, const EdgeSet& allowed, Vertex from,
                            const std::vector<char>& target) {
  constexpr Vertex kNone = ~Vertex{0};
  std::vector<Vertex> parent(g.vertex_count(), kNone);
  std::queue<Vertex> queue;
  parent[from] = from;
  queue.push(from);
  while (!queue.empty()) {
    Vertex w = queue.front();
    queue.pop();
    if (target[w]) {
      std::vector<Vertex> seq{w};
      while (seq.back() != from) seq.push_back(parent[seq.back()]);
      std::reverse(seq.begin(), seq.end());
      return seq;
    }
    for (const auto& inc : g.incident(w)) {
      if (!allowed.contains(inc.edge) || parent[inc.neighbor] != kNone) continue;
      parent[inc.neighbor] = w;
      queue.push(inc.neighbor);
    }
  }
  return {};
}

std::vector<Vertex> connector_path(const Graph& g, const Unicycle& u, EdgeId e,
                                   const EdgeSet& core) {
  const auto on_core = vertices_of(g, core);
  const EdgeSet forest = u.edges() - core;
  auto from_x = walk_to(g, forest, g.edge(e).a, on_core);
  auto from_y = walk_to(g, forest, g.edge(e).b, on_core);
  std::vector<Vertex> out(from_x.rbegin(), from_x.rend());
  out.insert(out.end(), from_y.begin(), from_y.end());
  return out;
}

// Closure with per-candidate unicycle lists computed on first use.
class ClosureRun {
 public:
  ClosureRun(const Graph& g, const CycleSet& all) : g_(g), all_(all), unicycles_(all.size()) {}

  bool has_property(std::size_t idx, const CycleSet& current) {
    if (!unicycles_[idx]) unicycles_[idx] = enumerate_unicycles_containing(g_, all_[idx]);
    for (const auto& u : *unicycles_[idx])
      if (!find_witness(g_, u, all_[idx], current)) return false;
    return true;
  }

 private:
  const Graph& g_;
  const CycleSet& all_;
  std::vector<std::optional<std::vector<Unicycle>>> unicycles_;
};

}  // namespace

std::optional<Unicycle> as_unicycle(const Graph& g, const EdgeSet& edges) {
  const std::size_t n = g.vertex_count();
  if (edges.universe() != g.edge_count() || edges.size() != n || n == 0) return std::nullopt;
  DisjointSets sets(n);
  std::vector<std::size_t> deg(n, 0);
  std::size_t merges = 0;
  edges.for_each([&](EdgeId e) {
    const Edge& ed = g.edge(e);
    ++deg[ed.a];
    ++deg[ed.b];
    if (sets.unite(ed.a, ed.b)) ++merges;
  });
  if (merges != n - 1) return std::nullopt;

  // Peel leaves; the edges left over form the cycle.
  EdgeSet core = edges;
  std::vector<Vertex> leaves;
  for (Vertex w = 0; w < n; ++w)
    if (deg[w] == 1) leaves.push_back(w);
  while (!leaves.empty()) {
    Vertex w = leaves.back();
    leaves.pop_back();
    for (const auto& inc : g.incident(w)) {
      if (!core.contains(inc.edge)) continue;
      core.erase(inc.edge);
      --deg[w];
      if (--deg[inc.neighbor] == 1) leaves.push_back(inc.neighbor);
    }
  }
  auto check = as_cycle(g, core);
  if (!check) return std::nullopt;
  return Unicycle(edges, *std::move(check.cycle));
}

std::vector<Unicycle> enumerate_unicycles_containing(const Graph& g, const Cycle& sigma) {
  const std::size_t n = g.vertex_count();
  const auto on_sigma = vertices_of(g, sigma.edges());

  // Node 0 is the contracted cycle; other vertices get 1, 2, ...
  std::vector<std::size_t> node(n, 0);
  std::size_t nodes = 1;
  for (Vertex w = 0; w < n; ++w)
    if (!on_sigma[w]) node[w] = nodes++;
  std::vector<EdgeId> candidates;
  for (EdgeId e = 0; e < g.edge_count(); ++e)
    if (!on_sigma[g.edge(e).a] || !on_sigma[g.edge(e).b]) candidates.push_back(e);
  const std::size_t need = nodes - 1;

  std::vector<Unicycle> out;
  EdgeSet chosen = sigma.edges();
  auto recurse = [&](auto&& self, std::size_t idx, std::size_t count, DisjointSets sets) -> void {
    if (count == need) {
      out.push_back(*as_unicycle(g, chosen));
      return;
    }
    if (count + (candidates.size() - idx) < need) return;
    const EdgeId e = candidates[idx];
    DisjointSets with = sets;
    if (with.unite(node[g.edge(e).a], node[g.edge(e).b])) {
      chosen.insert(e);
      self(self, idx + 1, count + 1, std::move(with));
      chosen.erase(e);
    }
    self(self, idx + 1, count, std::move(sets));
  };
  recurse(recurse, 0, 0, DisjointSets(nodes));
  std::sort(out.begin(), out.end());
  return out;
}

Unicycle extend_monocle_to_unicycle(const Graph& g, const Monocle& m) {
  EdgeSet edges = m.edges(g);
  auto reached = vertices_of(g, edges);
  std::queue<Vertex> queue;
  for (Vertex w = 0; w < g.vertex_count(); ++w)
    if (reached[w]) queue.push(w);
  while (!queue.empty()) {
    Vertex w = queue.front();
    queue.pop();
    for (const auto& inc : g.incident(w)) {
      if (reached[inc.neighbor]) continue;
      reached[inc.neighbor] = 1;
      edges.insert(inc.edge);
      queue.push(inc.neighbor);
    }
  }
  auto u = as_unicycle(g, edges);
  if (!u) throw Error("monocle does not extend to a unicycle; graph is disconnected");
  return *std::move(u);
}

std::vector<Cycle> cycles_in_unicycle_plus_edge(const Graph& g, const Unicycle& u, EdgeId e) {
  if (u.edges().contains(e)) throw Error("edge " + std::to_string(e) + " already lies in the unicycle");
  const Edge& ed = g.edge(e);
  auto path = tree_path(g, u.edges(), ed.a, ed.b);
  EdgeSet delta = g.empty_edge_set();
  delta.insert(e);
  for (std::size_t i = 1; i < path.size(); ++i) delta.insert(*g.edge_between(path[i - 1], path[i]));

  std::vector<Cycle> out;
  for (const EdgeSet& es : {u.cycle().edges(), delta, u.cycle().edges() ^ delta}) {
    auto check = as_cycle(g, es);
    if (check) out.push_back(*std::move(check.cycle));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<DeltaStarWitness> find_witness(const Graph& g, const Unicycle& u,
                                             const Cycle& sigma, const CycleSet& c,
                                             const EdgeSet* core) {
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (u.edges().contains(e)) continue;
    auto cycles = cycles_in_unicycle_plus_edge(g, u, e);
    for (std::size_t i = 0; i < cycles.size(); ++i) {
      if (!c.contains(cycles[i])) continue;
      for (std::size_t j = i + 1; j < cycles.size(); ++j) {
        if (!c.contains(cycles[j])) continue;
        if ((cycles[i].edges() ^ cycles[j].edges()) != sigma.edges()) continue;
        return DeltaStarWitness{u.edges(), e, cycles[i].edges(), cycles[j].edges(),
                                connector_path(g, u, e, core ? *core : sigma.edges())};
      }
    }
  }
  return std::nullopt;
}

DeltaStarReport has_property_delta_star(const Graph& g, const Cycle& sigma, const CycleSet& c) {
  DeltaStarReport report;
  for (const auto& u : enumerate_unicycles_containing(g, sigma)) {
    auto w = find_witness(g, u, sigma, c);
    if (!w) {
      report.witnesses.clear();
      report.failing_unicycle = u.edges();
      return report;
    }
    report.witnesses.push_back(*std::move(w));
  }
  report.holds = true;
  return report;
}

CycleSet delta_star_closure(const CycleSet& c, const Graph& g) {
  const CycleSet all = enumerate_all_cycles(g);
  std::vector<std::size_t> order(all.size());
  std::iota(order.begin(), order.end(), 0);
  return delta_star_closure(c, g, order);
}

CycleSet delta_star_closure(const CycleSet& c, const Graph& g, std::span<const std::size_t> scan_order) {
  const CycleSet all = enumerate_all_cycles(g);
  if (scan_order.size() != all.size()) throw Error("scan order must cover every cycle once");
  CycleSet current = c;
  ClosureRun run(g, all);
  bool added = true;
  while (added) {
    added = false;
    for (std::size_t idx : scan_order) {
      if (idx >= all.size()) throw Error("scan order index out of range");
      if (current.contains(all[idx])) continue;
      if (!run.has_property(idx, current)) continue;
      current.insert(all[idx]);
      added = true;
    }
  }
  return current;
}

bool is_delta_star_dense(const CycleSet& c, const Graph& g) {
  return delta_star_closure(c, g).size() == enumerate_all_cycles(g).size();
}

std::optional<Path> path_from_edges(const Graph& g, Vertex u, Vertex v, const EdgeSet& es) {
  if (es.universe() != g.edge_count() || es.empty() || u == v) return std::nullopt;
  std::vector<Vertex> seq{u};
  Vertex prev = u;
  Vertex cur = u;
  while (cur != v) {
    Vertex next = cur;
    std::size_t options = 0;
    for (const auto& inc : g.incident(cur))
      if (es.contains(inc.edge) && inc.neighbor != prev) {
        next = inc.neighbor;
        ++options;
      }
    if (options != 1 || seq.size() > es.size()) return std::nullopt;
    prev = cur;
    cur = next;
    seq.push_back(cur);
  }
  if (seq.size() != es.size() + 1) return std::nullopt;
  try {
    return Path(g, std::move(seq));
  } catch (const Error&) {
    return std::nullopt;
  }
}

Interpolation interpolate(const Graph& g, const Path& s, const Path& t, const CycleSet& c) {
  auto monocle = classify_union(g, s, t);
  if (!monocle) throw Error("paths are not adjacent");
  if (c.contains(monocle->cycle)) return {t, true, std::nullopt};

  const EdgeSet core = monocle->edges(g);
  const Unicycle u = extend_monocle_to_unicycle(g, *monocle);
  auto witness = find_witness(g, u, monocle->cycle, c, &core);
  if (!witness) throw Error("property Δ* fails for the exchange cycle");

  const Vertex uu = s.front();
  const Vertex vv = s.back();
  for (bool alpha_first : {true, false}) {
    const EdgeSet& first = alpha_first ? witness->alpha : witness->beta;
    const EdgeSet& second = alpha_first ? witness->beta : witness->alpha;
    auto q = path_from_edges(g, uu, vv, s.edges() ^ first);
    if (!q) continue;
    auto in = find_exchange(g, s, *q);
    auto out = find_exchange(g, *q, t);
    if (in && out && in->cycle == first && out->cycle == second)
      return {*std::move(q), false, std::move(witness)};
  }
  throw Error("interpolation finding: witness on edge " + std::to_string(witness->extra_edge) +
              " yields no intermediate path for " + format_path(g, s) + " / " + format_path(g, t));
}

std::vector<Path> project_walk(const Graph& g, const std::vector<Path>& walk, const CycleSet& c,
                               const Cycle& sigma) {
  if (walk.empty()) return {};
  std::vector<Path> out{walk.front()};
  for (std::size_t i = 1; i < walk.size(); ++i) {
    const Path& a = walk[i - 1];
    const Path& b = walk[i];
    auto ex = find_exchange(g, a, b);
    if (!ex) throw Error("walk steps between non-adjacent paths");
    if (c.contains(ex->cycle)) {
      out.push_back(b);
      continue;
    }
    if (ex->cycle != sigma.edges()) throw Error("walk step uses a cycle outside C and sigma");
    auto step = interpolate(g, a, b, c);
    if (!step.direct) out.push_back(step.q);
    out.push_back(b);
  }
  return out;
}

}  // namespace pathspace
