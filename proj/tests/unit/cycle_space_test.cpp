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

#include "oracles.hpp"
#include "pathspace/corpus.hpp"
#include "pathspace/cycle_space.hpp"

namespace pathspace {
namespace {

constexpr Vertex U = 0, X = 1, Y = 2, V = 3;

Graph triangle_with_pendant() { return Graph::build(4, {{0, 1}, {1, 2}, {2, 0}, {2, 3}}); }

std::vector<EdgeSet> masks(const CycleSet& c) {
  std::vector<EdgeSet> out;
  for (const auto& cyc : c) out.push_back(cyc.edges());
  return out;
}

TEST(Dimension, Examples) {
  EXPECT_EQ(cycle_space_dimension(k4_fixture().graph), 3u);
  EXPECT_EQ(cycle_space_dimension(cycle_graph(3)), 1u);
  EXPECT_EQ(cycle_space_dimension(cycle_graph(4)), 1u);
  EXPECT_THROW(cycle_space_dimension(Graph::build(4, {{0, 1}, {2, 3}})), Error);
}

TEST(Spans, K4FixtureHasFullRank) {
  auto fx = k4_fixture();
  auto r = spans_cycle_space(fx.cycles, fx.graph);
  EXPECT_TRUE(r.spans);
  EXPECT_EQ(r.rank, 3u);
  EXPECT_EQ(r.dimension, 3u);
}

TEST(Spans, EmptySetOnTriangle) {
  Graph g = cycle_graph(3);
  auto r = spans_cycle_space(CycleSet(g), g);
  EXPECT_FALSE(r.spans);
  EXPECT_EQ(r.rank, 0u);
}

TEST(Spans, FundamentalCyclesAlwaysSpan) {
  for (const auto& g : all_two_connected_graphs(6)) {
    auto basis = fundamental_cycles(g, bfs_spanning_tree(g));
    ASSERT_EQ(basis.size(), cycle_space_dimension(g));
    ASSERT_TRUE(spans_cycle_space(basis, g).spans);
  }
}

TEST(Rank, DependentRowsCollapse) {
  Graph g = k4_fixture().graph;
  EdgeSet a(6, {0, 1, 3}), b(6, {0, 2, 4});
  std::vector<EdgeSet> rows{a, b, a ^ b, a};
  EXPECT_EQ(gf2_rank(rows), 2u);
}

TEST(Fundamental, Examples) {
  Graph tri = cycle_graph(3);
  auto one = fundamental_cycles(tri, EdgeSet(3, {0, 1}));
  ASSERT_EQ(one.size(), 1u);
  EXPECT_EQ(one[0].edges(), tri.all_edges());

  Graph k4 = k4_fixture().graph;
  auto three = fundamental_cycles(k4, EdgeSet(6, {1, 2, 0}));  // star at u
  EXPECT_EQ(three.size(), 3u);
  EXPECT_EQ(spans_cycle_space(three, k4).rank, 3u);

  Graph sq = cycle_graph(4);
  auto whole = fundamental_cycles(sq, EdgeSet(4, {1, 2, 3}));
  ASSERT_EQ(whole.size(), 1u);
  EXPECT_EQ(whole[0].edges(), sq.all_edges());
}

TEST(Fundamental, RejectsNonTrees) {
  Graph k4 = k4_fixture().graph;
  EXPECT_THROW(fundamental_cycles(k4, EdgeSet(6, {1, 3})), Error);      // too few edges
  EXPECT_THROW(fundamental_cycles(k4, EdgeSet(6, {0, 1, 3})), Error);   // a triangle
}

TEST(Fundamental, SubsetSumsMatchOracle) {
  Rng rng(11);
  for (const auto& g : all_two_connected_graphs(5)) {
    auto basis = fundamental_cycles(g, bfs_spanning_tree(g));
    const std::uint64_t total = std::uint64_t{1} << basis.size();
    for (std::uint64_t pick = 1; pick < total; ++pick) {
      EdgeSet sum = g.empty_edge_set();
      for (std::size_t i = 0; i < basis.size(); ++i)
        if ((pick >> i) & 1u) sum ^= basis[i].edges();
      ASSERT_EQ(static_cast<bool>(as_cycle(g, sum)), oracle::is_cycle(g, sum));
      // Fundamental combinations are never empty.
      ASSERT_FALSE(sum.empty());
    }
  }
}

TEST(Enumerate, K4HasSevenCycles) {
  Graph g = k4_fixture().graph;
  auto all = enumerate_all_cycles(g);
  ASSERT_EQ(all.size(), 7u);
  std::size_t triangles = 0, squares = 0;
  for (const auto& c : all) (c.length() == 3 ? triangles : squares)++;
  EXPECT_EQ(triangles, 4u);
  EXPECT_EQ(squares, 3u);
  auto brute = oracle::all_cycles(g);
  std::sort(brute.begin(), brute.end());
  EXPECT_EQ(masks(all), brute);
}

TEST(Enumerate, SmallShapes) {
  EXPECT_EQ(enumerate_all_cycles(cycle_graph(7)).size(), 1u);
  EXPECT_EQ(enumerate_all_cycles(triangle_with_pendant()).size(), 1u);
}

TEST(Enumerate, MatchesBruteForceUpToTwelveEdges) {
  Rng rng(3);
  std::vector<Graph> graphs = all_two_connected_graphs(5);
  for (int i = 0; i < 30; ++i) graphs.push_back(random_two_connected(6 + rng.below(2), 7 + rng.below(6), rng));
  graphs.push_back(triangle_with_pendant());
  for (const auto& g : graphs) {
    ASSERT_LE(g.edge_count(), 12u);
    auto brute = oracle::all_cycles(g);
    std::sort(brute.begin(), brute.end());
    ASSERT_EQ(masks(enumerate_all_cycles(g)), brute);
  }
}

TEST(ThroughEdge, Examples) {
  Graph k4 = k4_fixture().graph;
  auto through_uv = cycles_through_edge(k4, 0);
  ASSERT_EQ(through_uv.size(), 4u);
  for (auto walk : {std::vector<Vertex>{U, X, V}, {U, Y, V}, {U, X, Y, V}, {U, Y, X, V}})
    EXPECT_TRUE(through_uv.contains(oracle::edges_of(k4, walk, true)));

  Graph sq = cycle_graph(4);
  for (EdgeId e = 0; e < 4; ++e) EXPECT_EQ(cycles_through_edge(sq, e).size(), 1u);

  EXPECT_TRUE(cycles_through_edge(triangle_with_pendant(), 3).empty());
  EXPECT_THROW(cycles_through_edge(k4, 6), Error);
}

TEST(ThroughVertex, Examples) {
  Graph k4 = k4_fixture().graph;
  auto at_u = cycles_through_vertex(k4, U);
  EXPECT_EQ(at_u.size(), 6u);
  EXPECT_FALSE(at_u.contains(oracle::edges_of(k4, {X, Y, V}, true)));
  EXPECT_EQ(cycles_through_vertex(cycle_graph(4), 2).size(), 1u);
  EXPECT_TRUE(cycles_through_vertex(triangle_with_pendant(), 3).empty());
  EXPECT_THROW(cycles_through_vertex(k4, 4), Error);
}

TEST(ThroughVertex, ContainsEveryIncidentEdgeFamily) {
  for (const auto& g : all_two_connected_graphs(5))
    for (Vertex w = 0; w < g.vertex_count(); ++w) {
      auto at_w = cycles_through_vertex(g, w);
      for (const auto& inc : g.incident(w))
        for (const auto& c : cycles_through_edge(g, inc.edge)) ASSERT_TRUE(at_w.contains(c));
    }
}

TEST(CycleSetType, RejectsNonCyclesAndDropsDuplicates) {
  Graph k4 = k4_fixture().graph;
  std::vector<EdgeSet> sets{EdgeSet(6, {0, 1, 3}), EdgeSet(6, {0, 1, 3})};
  EXPECT_EQ(CycleSet(k4, sets).size(), 1u);
  std::vector<EdgeSet> bad{EdgeSet(6, {0, 1})};
  EXPECT_THROW(CycleSet(k4, bad), Error);
}

// Chorded square u=0, a=1, v=2, b=3 with chord uv; edges ua, av, vb, bu, uv.
struct ChordedSquare {
  Graph g = Graph::build(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 2}});
  // Counter-clockwise rotations for u(0,0), a(1,-1), v(2,0), b(1,1).
  PlaneEmbedding emb{{{0, 4, 3}, {1, 0}, {1, 2, 4}, {3, 2}}, Dart{0, true}};
};

TEST(Faces, TriangleHasOneInternalFace) {
  Graph g = cycle_graph(3);
  PlaneEmbedding emb{{{0, 2}, {1, 0}, {2, 1}}, Dart{0, true}};
  auto faces = internal_faces(g, emb);
  ASSERT_EQ(faces.size(), 1u);
  EXPECT_EQ(faces[0].edges(), g.all_edges());
}

TEST(Faces, ChordedSquareByHandTrace) {
  ChordedSquare cs;
  // Hand trace: u->a leaves a along av, then vb, then bu back to u, so the
  // dart u->a bounds the outer square.
  auto all = trace_faces(cs.g, cs.emb);
  ASSERT_EQ(all.size(), 3u);
  auto faces = internal_faces(cs.g, cs.emb);
  ASSERT_EQ(faces.size(), 2u);
  EXPECT_TRUE(faces.contains(EdgeSet(5, {0, 1, 4})));  // ua, av, uv
  EXPECT_TRUE(faces.contains(EdgeSet(5, {2, 3, 4})));  // vb, bu, uv
}

TEST(Faces, CoordinatesGiveTheSameEmbedding) {
  ChordedSquare cs;
  std::vector<std::pair<double, double>> coords{{0, 0}, {1, -1}, {2, 0}, {1, 1}};
  auto emb = embedding_from_coordinates(cs.g, coords);
  EXPECT_EQ(emb.rotation, cs.emb.rotation);
  EXPECT_EQ(internal_faces(cs.g, emb), internal_faces(cs.g, cs.emb));
}

TEST(Faces, K4WithOuterTriangleUXV) {
  Graph k4 = k4_fixture().graph;
  // u, x, v on the hull and y in the middle.
  std::vector<std::pair<double, double>> coords{{0, 0}, {2, 4}, {2, 1.5}, {4, 0}};
  auto emb = embedding_from_coordinates(k4, coords);
  auto faces = internal_faces(k4, emb);
  ASSERT_EQ(faces.size(), 3u);
  for (const auto& f : faces) {
    EXPECT_EQ(f.length(), 3u);
    EXPECT_TRUE(f.contains_vertex(Y));
  }
  EXPECT_FALSE(faces.contains(oracle::edges_of(k4, {U, X, V}, true)));
}

TEST(Faces, RejectsBrokenRotations) {
  ChordedSquare cs;
  PlaneEmbedding missing = cs.emb;
  missing.rotation[0] = {0, 4};
  EXPECT_THROW(trace_faces(cs.g, missing), Error);

  // K4 with a twisted rotation at one vertex has too few faces for Euler.
  Graph k4 = k4_fixture().graph;
  std::vector<std::pair<double, double>> coords{{0, 0}, {2, 4}, {2, 1.5}, {4, 0}};
  auto emb = embedding_from_coordinates(k4, coords);
  std::swap(emb.rotation[2][0], emb.rotation[2][1]);
  try {
    trace_faces(k4, emb);
    FAIL() << "expected an error";
  } catch (const Error& e) {
    EXPECT_NE(std::string(e.what()).find("not a plane embedding"), std::string::npos);
  }
}

TEST(Faces, FixturesFoldToOuterFaceAndFormBasis) {
  auto fixtures = plane_fixtures();
  ASSERT_GE(fixtures.size(), 10u);
  for (const auto& fx : fixtures) {
    SCOPED_TRACE(fx.name);
    auto all = trace_faces(fx.graph, fx.embedding);
    ASSERT_EQ(fx.graph.vertex_count() - fx.graph.edge_count() + all.size(), 2u);
    auto inner = internal_faces(fx.graph, fx.embedding);
    EdgeSet fold = fx.graph.empty_edge_set();
    for (const auto& f : inner) fold ^= f.edges();
    EdgeSet outer = fx.graph.empty_edge_set();
    for (const auto& f : all)
      for (const auto& d : f.darts)
        if (d == fx.embedding.outer) outer = f.edges;
    EXPECT_EQ(fold, outer);
    auto r = spans_cycle_space(inner, fx.graph);
    EXPECT_TRUE(r.spans);
    EXPECT_EQ(inner.size(), r.dimension);
    // Every dart lies on exactly one face.
    std::size_t darts = 0;
    for (const auto& f : all) darts += f.darts.size();
    EXPECT_EQ(darts, 2 * fx.graph.edge_count());
  }
}

}  // namespace
}  // namespace pathspace
