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

#ifndef PATHSPACE_CYCLE_SPACE_HPP_
#define PATHSPACE_CYCLE_SPACE_HPP_

#include <cstddef>
#include <span>
#include <unordered_map>
#include <vector>

#include "pathspace/edge_set.hpp"
#include "pathspace/graph.hpp"

namespace pathspace {

/// Ordered collection of distinct cycles of one graph.
class CycleSet {
 public:
  CycleSet() = default;
  explicit CycleSet(std::size_t edge_universe) : universe_(edge_universe) {}
  explicit CycleSet(const Graph& g) : universe_(g.edge_count()) {}
  /// Validates every edge set as a cycle of g; throws Error otherwise.
  /// Duplicates are dropped.
  CycleSet(const Graph& g, std::span<const EdgeSet> edge_sets);

  std::size_t edge_universe() const { return universe_; }
  std::size_t size() const { return cycles_.size(); }
  bool empty() const { return cycles_.empty(); }
  const Cycle& operator[](std::size_t i) const { return cycles_[i]; }
  auto begin() const { return cycles_.begin(); }
  auto end() const { return cycles_.end(); }
  const std::vector<Cycle>& cycles() const { return cycles_; }

  /// Returns false if the cycle was already present.
  bool insert(Cycle c);
  bool contains(const EdgeSet& es) const { return index_.count(es) != 0; }
  bool contains(const Cycle& c) const { return contains(c.edges()); }
  /// Position of the cycle, or size() when absent.
  std::size_t index_of(const EdgeSet& es) const;

  /// Sorts members by their edge mask.
  void sort();

  friend bool operator==(const CycleSet& a, const CycleSet& b);

 private:
  std::size_t universe_ = 0;
  std::vector<Cycle> cycles_;
  std::unordered_map<EdgeSet, std::size_t, EdgeSetHash> index_;
};

/// m - n + 1; throws Error for disconnected graphs.
std::size_t cycle_space_dimension(const Graph& g);

/// Rank over GF(2) of the given masks.
std::size_t gf2_rank(std::span<const EdgeSet> rows);

struct SpanReport {
  bool spans = false;
  std::size_t rank = 0;
  std::size_t dimension = 0;
};

SpanReport spans_cycle_space(const CycleSet& c, const Graph& g);

/// BFS tree from vertex 0 (edges taken in neighbor order).
EdgeSet bfs_spanning_tree(const Graph& g);

/// Vertices of the unique path between a and b inside the forest `tree`, or
/// an empty vector when they are not joined.
std::vector<Vertex> tree_path(const Graph& g, const EdgeSet& tree, Vertex a, Vertex b);

/// One cycle per non-tree edge; throws Error unless `tree` is a spanning tree.
CycleSet fundamental_cycles(const Graph& g, const EdgeSet& tree);

/// Every simple cycle once, sorted by mask. Throws Error when the cycle
/// space dimension exceeds kMaxEnumerationDimension.
CycleSet enumerate_all_cycles(const Graph& g);
inline constexpr std::size_t kMaxEnumerationDimension = 26;

CycleSet cycles_through_edge(const Graph& g, EdgeId e);
CycleSet cycles_through_vertex(const Graph& g, Vertex w);

/// A directed traversal of one edge.
struct Dart {
  EdgeId edge;
  bool forward;  // from edge(e).a to edge(e).b

  friend bool operator==(const Dart&, const Dart&) = default;
};

/// Rotation system of a plane graph plus a chosen outer face.
struct PlaneEmbedding {
  /// rotation[w] lists the edges at w in cyclic order.
  std::vector<std::vector<EdgeId>> rotation;
  Dart outer{0, true};
};

struct Face {
  std::vector<Dart> darts;
  EdgeSet edges;
};

/// Face traversal: the dart following (a -> b) along edge e leaves b along
/// the edge after e in b's rotation. Throws Error "not a plane embedding"
/// when the rotation is malformed or Euler's formula fails.
std::vector<Face> trace_faces(const Graph& g, const PlaneEmbedding& emb);

/// Boundary cycles of all faces except the one containing emb.outer.
CycleSet internal_faces(const Graph& g, const PlaneEmbedding& emb);

/// Rotation from a straight-line drawing: counter-clockwise angular order
/// at each vertex, outer face chosen as the unbounded face of the drawing.
PlaneEmbedding embedding_from_coordinates(const Graph& g,
                                          std::span<const std::pair<double, double>> coords);

}  // namespace pathspace

#endif  // PATHSPACE_CYCLE_SPACE_HPP_
