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

#include <gtest/gtest.h>

#include <limits>
#include <set>

#include "oracles.hpp"
#include "pathspace/corpus.hpp"
#include "pathspace/path_space.hpp"

namespace pathspace {
namespace {

constexpr Vertex U = 0, X = 1, Y = 2, V = 3;
constexpr auto kFar = std::numeric_limits<std::size_t>::max();

std::vector<std::vector<Vertex>> sequences(const std::vector<Path>& paths) {
  std::vector<std::vector<Vertex>> out;
  for (const auto& p : paths) out.push_back(p.vertices());
  return out;
}

bool walk_ok(const Graph& g, const std::vector<Path>& walk, const Path& s, const Path& t) {
  if (walk.empty() || !(walk.front() == s) || !(walk.back() == t)) return false;
  for (std::size_t i = 1; i < walk.size(); ++i)
    if (!oracle::adjacent_by_replacement(walk[i - 1].vertices(), walk[i].vertices())) return false;
  (void)g;
  return true;
}

TEST(Paths, K4HasFive) {
  Graph g = k4_fixture().graph;
  auto paths = enumerate_uv_paths(g, U, V);
  std::vector<std::vector<Vertex>> expected{{U, V}, {U, X, V}, {U, Y, V}, {U, X, Y, V}, {U, Y, X, V}};
  EXPECT_EQ(sequences(paths), expected);
}

TEST(Paths, CycleAndPathGraph) {
  EXPECT_EQ(enumerate_uv_paths(cycle_graph(6), 1, 4).size(), 2u);
  EXPECT_EQ(enumerate_uv_paths(Graph::build(3, {{0, 1}, {1, 2}}), 0, 2).size(), 1u);
  EXPECT_THROW(enumerate_uv_paths(cycle_graph(4), 2, 2), Error);
}

TEST(Paths, CapThrows) {
  EXPECT_THROW(enumerate_uv_paths(complete_graph(6), 0, 1, 10), PathLimitExceeded);
}

TEST(Paths, MatchOracleAsSets) {
  for (const auto& g : all_two_connected_graphs(5))
    for (Vertex v = 1; v < g.vertex_count(); ++v) {
      auto got = sequences(enumerate_uv_paths(g, 0, v));
      auto want = oracle::all_paths(g, 0, v);
      std::sort(want.begin(), want.end(), [](const auto& a, const auto& b) {
        return a.size() != b.size() ? a.size() < b.size() : a < b;
      });
      ASSERT_EQ(got, want);
    }
}

TEST(Adjacency, WholePathExchange) {
  Graph g = k4_fixture().graph;
  Path s(g, {U, V}), t(g, {U, Y, X, V});
  auto ex = find_exchange(g, s, t);
  ASSERT_TRUE(ex);
  EXPECT_EQ(ex->x, U);
  EXPECT_EQ(ex->y, V);
  EXPECT_TRUE(oracle::adjacent_by_replacement(s.vertices(), t.vertices()));
}

TEST(Adjacency, CrossedPairIsNotAdjacent) {
  Graph g = k4_fixture().graph;
  Path s(g, {U, X, Y, V}), t(g, {U, Y, X, V});
  EXPECT_FALSE(are_adjacent(g, s, t));
  EXPECT_FALSE(are_adjacent(g, t, s));
  EXPECT_TRUE(as_cycle(g, s.edges() ^ t.edges()));
}

TEST(Adjacency, PathIsNotAdjacentToItself) {
  Graph g = k4_fixture().graph;
  Path s(g, {U, X, V});
  EXPECT_FALSE(are_adjacent(g, s, s));
}

TEST(Adjacency, SymmetricWithSameCycle) {
  for (const auto& g : all_two_connected_graphs(5)) {
    auto paths = enumerate_uv_paths(g, 0, static_cast<Vertex>(g.vertex_count() - 1));
    for (const auto& s : paths)
      for (const auto& t : paths) {
        auto st = find_exchange(g, s, t), ts = find_exchange(g, t, s);
        ASSERT_EQ(static_cast<bool>(st), static_cast<bool>(ts));
        if (st) {
          ASSERT_EQ(st->cycle, ts->cycle);
          ASSERT_EQ(st->cycle, s.edges() ^ t.edges());
          ASSERT_TRUE(as_cycle(g, st->cycle));
        }
      }
  }
}

TEST(PathGraphs, K4FixtureIsolatesUYXV) {
  auto fx = k4_fixture();
  auto pg = build_path_graph(fx.graph, fx.u, fx.v, &fx.cycles);
  ASSERT_EQ(pg.size(), 5u);
  std::size_t uyxv = pg.index_of(Path(fx.graph, {U, Y, X, V}));
  ASSERT_LT(uyxv, pg.size());
  EXPECT_TRUE(pg.neighbors(uyxv).empty());
  auto comps = components(pg);
  ASSERT_EQ(comps.count(), 2u);
  // Hand check of all ten pairs: a star centred on [u,v].
  std::size_t uv = pg.index_of(Path(fx.graph, {U, V}));
  EXPECT_EQ(pg.links().size(), 3u);
  for (const auto& link : pg.links()) {
    EXPECT_TRUE(link.a == uv || link.b == uv);
    EXPECT_TRUE(fx.cycles.contains(link.cycle));
  }
  EXPECT_EQ(comps.members[comps.component_of[uyxv]].size(), 1u);
  EXPECT_FALSE(path_graph_diameter(pg));
}

TEST(PathGraphs, K4UnrestrictedIsConnected) {
  Graph g = k4_fixture().graph;
  auto pg = build_path_graph(g, U, V);
  EXPECT_EQ(pg.size(), 5u);
  EXPECT_EQ(components(pg).count(), 1u);
  EXPECT_EQ(pg.links().size(), 9u);
  // [u,x,y,v] and [u,y,x,v] are the only non-adjacent pair, joined via [u,v].
  EXPECT_EQ(path_graph_diameter(pg), std::optional<std::size_t>(2));
}

TEST(PathGraphs, FourCycle) {
  Graph g = cycle_graph(4);
  auto pg = build_path_graph(g, 0, 2);
  ASSERT_EQ(pg.size(), 2u);
  ASSERT_EQ(pg.links().size(), 1u);
  EXPECT_EQ(pg.links()[0].cycle, g.all_edges());
  EXPECT_EQ(path_graph_diameter(pg), std::optional<std::size_t>(1));
}

TEST(PathGraphs, EmptyRestrictionLeavesSingletons) {
  Graph g = k4_fixture().graph;
  CycleSet none(g);
  auto pg = build_path_graph(g, U, V, &none);
  EXPECT_EQ(components(pg).count(), 5u);
  EXPECT_TRUE(pg.links().empty());
}

TEST(PathGraphs, RejectsForeignRestriction) {
  Graph g = k4_fixture().graph;
  CycleSet other(cycle_graph(3));
  EXPECT_THROW(build_path_graph(g, U, V, &other), Error);
}

TEST(PathGraphs, LinksMatchOracleAndRestriction) {
  Rng rng(5);
  for (const auto& g : all_two_connected_graphs(5)) {
    auto all = enumerate_all_cycles(g);
    auto c = random_cycle_subset(g, all, 0.5, rng);
    Vertex u = 0, v = static_cast<Vertex>(g.vertex_count() - 1);
    auto pg = build_path_graph(g, u, v, &c);
    for (std::size_t a = 0; a < pg.size(); ++a)
      for (std::size_t b = 0; b < pg.size(); ++b) {
        const auto& s = pg.paths()[a];
        const auto& t = pg.paths()[b];
        bool want = oracle::adjacent_by_replacement(s.vertices(), t.vertices()) &&
                    c.contains(s.edges() ^ t.edges());
        ASSERT_EQ(pg.adjacent(a, b), want);
        if (want) ASSERT_EQ(*pg.link_cycle(a, b), s.edges() ^ t.edges());
      }
  }
}

TEST(Merge, StepExamples) {
  Graph g = k4_fixture().graph;
  auto a = merge_step(g, Path(g, {U, X, V}), Path(g, {U, Y, V}));
  EXPECT_EQ(a.next.vertices(), (std::vector<Vertex>{U, Y, V}));
  EXPECT_EQ(a.state.common_prefix, 0u);
  EXPECT_EQ(a.state.k, 2u);
  EXPECT_EQ(a.state.m, 2u);

  auto b = merge_step(g, Path(g, {U, X, Y, V}), Path(g, {U, V}));
  EXPECT_EQ(b.next.vertices(), (std::vector<Vertex>{U, V}));
  EXPECT_EQ(b.state.k, 1u);
  EXPECT_EQ(b.state.m, 3u);

  EXPECT_THROW(merge_step(g, Path(g, {U, V}), Path(g, {U, V})), Error);
}

TEST(Merge, LastDetourFinishesInOneStep) {
  // Shared prefix 0-1-2, then two ways to 5.
  Graph g = Graph::build(6, {{0, 1}, {1, 2}, {2, 3}, {3, 5}, {2, 4}, {4, 5}, {0, 5}});
  Path s(g, {0, 1, 2, 3, 5}), t(g, {0, 1, 2, 4, 5});
  auto step = merge_step(g, s, t);
  EXPECT_EQ(step.next, t);
  EXPECT_EQ(step.state.common_prefix, 2u);
}

TEST(Merge, WalkExamples) {
  Graph g = k4_fixture().graph;
  Path s(g, {U, X, V}), t(g, {U, Y, V});
  EXPECT_EQ(merge_walk(g, s, s), std::vector<Path>{s});
  EXPECT_EQ(merge_walk(g, s, t), (std::vector<Path>{s, t}));
}

TEST(Merge, RandomWalksAreValidAndShort) {
  Rng rng(2026);
  std::size_t samples = 0;
  for (int trial = 0; trial < 150; ++trial) {
    Graph g = random_two_connected(6, rng);
    Vertex u = static_cast<Vertex>(rng.below(g.vertex_count()));
    Vertex v = static_cast<Vertex>(rng.below(g.vertex_count() - 1));
    if (v >= u) ++v;
    auto paths = enumerate_uv_paths(g, u, v);
    for (int k = 0; k < 4; ++k) {
      const Path& s = paths[rng.below(paths.size())];
      const Path& t = paths[rng.below(paths.size())];
      auto walk = merge_walk(g, s, t);
      ASSERT_TRUE(walk_ok(g, walk, s, t));
      ASSERT_LE(walk.size() - 1, t.length());
      for (std::size_t i = 1; i < walk.size(); ++i)
        ASSERT_GT(common_prefix_edges(walk[i], t), common_prefix_edges(walk[i - 1], t));
      ++samples;
    }
  }
  EXPECT_EQ(samples, 600u);
}

TEST(Route, Examples) {
  Graph g = k4_fixture().graph;
  Path p(g, {U, V});
  EXPECT_EQ(bounded_route(g, U, V, p, p), std::vector<Path>{p});
  Path s(g, {U, X, Y, V}), t(g, {U, Y, X, V});
  auto route = bounded_route(g, U, V, s, t);
  EXPECT_TRUE(walk_ok(g, route, s, t));
  EXPECT_LE(route.size() - 1, 2u);
  EXPECT_EQ(route[1], p);
}

TEST(Route, BoundedByTwiceTheDistanceAndNeverBelowBfs) {
  Rng rng(99);
  for (int trial = 0; trial < 100; ++trial) {
    Graph g = random_two_connected(6, rng);
    Vertex u = 0, v = static_cast<Vertex>(1 + rng.below(g.vertex_count() - 1));
    std::size_t d = bfs_distances(g, u)[v];
    auto pg = build_path_graph(g, u, v);
    for (int k = 0; k < 5; ++k) {
      std::size_t a = rng.below(pg.size()), b = rng.below(pg.size());
      auto route = bounded_route(g, u, v, pg.paths()[a], pg.paths()[b]);
      ASSERT_TRUE(walk_ok(g, route, pg.paths()[a], pg.paths()[b]));
      ASSERT_LE(route.size() - 1, 2 * d);
      auto dist = oracle::bfs(pg.size(), a, [&](std::size_t x, std::size_t y) {
        return oracle::adjacent_by_replacement(pg.paths()[x].vertices(), pg.paths()[y].vertices());
      });
      ASSERT_NE(dist[b], kFar);
      ASSERT_GE(route.size() - 1, dist[b]);
      ASSERT_EQ(path_graph_distances(pg, a), dist);
    }
  }
}

TEST(Exhaustive, ConnectedAndDiameterBoundUpToSixVertices) {
  std::size_t pairs = 0;
  for (const auto& g : all_two_connected_graphs(6))
    for (Vertex u = 0; u < g.vertex_count(); ++u)
      for (Vertex v = u + 1; v < g.vertex_count(); ++v) {
        auto pg = build_path_graph(g, u, v);
        auto diameter = path_graph_diameter(pg);
        ASSERT_TRUE(diameter);
        ASSERT_LE(*diameter, 2 * bfs_distances(g, u)[v]);
        ++pairs;
      }
  EXPECT_GT(pairs, 700u);
}

TEST(ShortestPath, IsShortest) {
  Graph g = cycle_graph(7);
  Path p = shortest_path(g, 0, 3);
  EXPECT_EQ(p.length(), 3u);
  EXPECT_EQ(p.vertices(), (std::vector<Vertex>{0, 1, 2, 3}));
}

}  // namespace
}  // namespace pathspace
