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

#ifndef PATHSPACE_GRAPH_HPP_
#define PATHSPACE_GRAPH_HPP_

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "pathspace/edge_set.hpp"
#include "pathspace/error.hpp"

namespace pathspace {

using Vertex = std::uint32_t;

struct Edge {
  Vertex a;
  Vertex b;

  Vertex other(Vertex w) const { return w == a ? b : a; }
  bool has(Vertex w) const { return w == a || w == b; }
};

struct Incidence {
  Vertex neighbor;
  EdgeId edge;
};

/// Simple undirected graph with dense vertex and edge indices.
///
/// Edge k is the k-th pair passed at construction. Neighbor lists are sorted
/// by neighbor index. Immutable once built.
class Graph {
 public:
  Graph() = default;

  /// Throws Error naming the offending pair on self-loops, duplicate edges
  /// and out-of-range endpoints.
  static Graph build(std::size_t vertex_count, std::vector<std::pair<Vertex, Vertex>> edges,
                     std::vector<std::string> labels = {});

  std::size_t vertex_count() const { return adjacency_.size(); }
  std::size_t edge_count() const { return edges_.size(); }
  const Edge& edge(EdgeId e) const { return edges_.at(e); }
  std::span<const Edge> edges() const { return edges_; }
  std::span<const Incidence> incident(Vertex w) const { return adjacency_.at(w); }
  std::size_t degree(Vertex w) const { return adjacency_.at(w).size(); }
  std::optional<EdgeId> edge_between(Vertex a, Vertex b) const;

  EdgeSet empty_edge_set() const { return EdgeSet(edges_.size()); }
  EdgeSet all_edges() const;

  bool has_labels() const { return !labels_.empty(); }
  /// The provided label, or the decimal index.
  std::string label(Vertex w) const;
  const std::vector<std::string>& labels() const { return labels_; }
  /// Resolves a label or a decimal index.
  std::optional<Vertex> find_vertex(const std::string& name) const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.adjacency_.size() == b.adjacency_.size() && a.pairs() == b.pairs();
  }
  std::vector<std::pair<Vertex, Vertex>> pairs() const;

 private:
  std::vector<Edge> edges_;
  std::vector<std::vector<Incidence>> adjacency_;
  std::vector<std::string> labels_;
};

bool is_connected(const Graph& g);
bool is_two_connected(const Graph& g);
/// BFS distances from `source`; unreachable vertices get SIZE_MAX.
std::vector<std::size_t> bfs_distances(const Graph& g, Vertex source);

/// A simple path given by its vertex sequence.
class Path {
 public:
  Path() = default;
  /// Validates adjacency of consecutive vertices and distinctness.
  Path(const Graph& g, std::vector<Vertex> vertices);

  const std::vector<Vertex>& vertices() const { return vertices_; }
  const EdgeSet& edges() const { return edges_; }
  std::size_t length() const { return vertices_.empty() ? 0 : vertices_.size() - 1; }
  Vertex front() const { return vertices_.front(); }
  Vertex back() const { return vertices_.back(); }

  friend bool operator==(const Path& a, const Path& b) { return a.vertices_ == b.vertices_; }
  /// Length first, then lexicographic vertex sequence.
  friend bool operator<(const Path& a, const Path& b) {
    if (a.vertices_.size() != b.vertices_.size())
      return a.vertices_.size() < b.vertices_.size();
    return a.vertices_ < b.vertices_;
  }

 private:
  std::vector<Vertex> vertices_;
  EdgeSet edges_;
};

std::string format_path(const Graph& g, const Path& p, char sep = '-');

struct CycleCheck;
CycleCheck as_cycle(const Graph& g, const EdgeSet& es);

/// Edge set of a single simple cycle; identity is the edge set.
class Cycle {
 public:
  const EdgeSet& edges() const { return edges_; }
  /// Cyclic vertex order starting at the smallest vertex, continuing toward
  /// its smaller cycle neighbor.
  const std::vector<Vertex>& vertices() const { return order_; }
  std::size_t length() const { return order_.size(); }
  bool contains_vertex(Vertex w) const;

  friend bool operator==(const Cycle& a, const Cycle& b) { return a.edges_ == b.edges_; }
  friend bool operator<(const Cycle& a, const Cycle& b) { return a.edges_ < b.edges_; }

 private:
  friend CycleCheck as_cycle(const Graph& g, const EdgeSet& es);
  Cycle(EdgeSet edges, std::vector<Vertex> order)
      : edges_(std::move(edges)), order_(std::move(order)) {}

  EdgeSet edges_;
  std::vector<Vertex> order_;
};

enum class CycleDefect {
  kNone,
  kEmpty,
  kBadDegree,     // some incident vertex has degree other than 2
  kDisconnected,  // all degrees 2 but more than one component
};

const char* to_string(CycleDefect d);

struct CycleCheck {
  std::optional<Cycle> cycle;
  CycleDefect defect = CycleDefect::kNone;

  explicit operator bool() const { return cycle.has_value(); }
};

/// Throws Error when `es` is not a single cycle.
Cycle require_cycle(const Graph& g, const EdgeSet& es);
/// Cycle through the given vertices in order (closing edge implied).
Cycle cycle_from_vertices(const Graph& g, const std::vector<Vertex>& vertices);

/// A cycle together with two vertex-disjoint attachment paths.
///
/// attach_u runs from u to u_prime and attach_v from v to v_prime; either may
/// be a single vertex. Each meets the cycle only at its far end.
struct Monocle {
  Cycle cycle;
  std::vector<Vertex> attach_u;
  std::vector<Vertex> attach_v;
  Vertex u_prime;
  Vertex v_prime;

  EdgeSet edges(const Graph& g) const;
};

/// Succeeds exactly when S and T differ by one subpath exchange; the cycle is
/// S Δ T, attach_u the longest common prefix and attach_v the longest common
/// suffix. Throws Error when S == T.
std::optional<Monocle> classify_union(const Graph& g, const Path& s, const Path& t);

}  // namespace pathspace

#endif  // PATHSPACE_GRAPH_HPP_
