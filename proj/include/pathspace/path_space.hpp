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

#ifndef PATHSPACE_PATH_SPACE_HPP_
#define PATHSPACE_PATH_SPACE_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "pathspace/cycle_space.hpp"
#include "pathspace/graph.hpp"

namespace pathspace {

inline constexpr std::size_t kDefaultMaxPaths = 1'000'000;

/// All simple u-v paths, ordered by length then vertex sequence. Throws
/// PathLimitExceeded past `max_paths`, Error when u == v.
std::vector<Path> enumerate_uv_paths(const Graph& g, Vertex u, Vertex v,
                                     std::size_t max_paths = kDefaultMaxPaths);

/// End vertices of the exchanged subpaths.
struct Exchange {
  Vertex x;
  Vertex y;
  EdgeSet cycle;
};

/// The exchange turning S into T, if they differ by exactly one
/// replacement of S_xy by an internally disjoint T_xy.
std::optional<Exchange> find_exchange(const Graph& g, const Path& s, const Path& t);
bool are_adjacent(const Graph& g, const Path& s, const Path& t);

/// Paths joining u and v with single-exchange adjacency, optionally keeping
/// only exchanges whose cycle lies in a restriction set.
class PathGraph {
 public:
  struct Link {
    std::size_t a;  // a < b
    std::size_t b;
    EdgeSet cycle;
  };

  Vertex u() const { return u_; }
  Vertex v() const { return v_; }
  const std::vector<Path>& paths() const { return paths_; }
  std::size_t size() const { return paths_.size(); }
  const std::vector<Link>& links() const { return links_; }
  bool restricted() const { return restriction_.has_value(); }
  const std::optional<CycleSet>& restriction() const { return restriction_; }
  /// Position of a path, or size() when absent.
  std::size_t index_of(const Path& p) const;
  bool adjacent(std::size_t a, std::size_t b) const {
    return (rows_[a][b / 64] >> (b % 64)) & 1u;
  }
  std::vector<std::size_t> neighbors(std::size_t a) const;
  /// Exchange cycle of an adjacent pair.
  const EdgeSet* link_cycle(std::size_t a, std::size_t b) const;

 private:
  friend PathGraph build_path_graph(const Graph&, Vertex, Vertex, std::vector<Path>,
                                    const CycleSet*);

  Vertex u_ = 0;
  Vertex v_ = 0;
  std::vector<Path> paths_;
  std::vector<Link> links_;
  std::vector<std::vector<std::uint64_t>> rows_;
  std::optional<CycleSet> restriction_;
};

/// Throws Error when a restriction cycle does not belong to g.
PathGraph build_path_graph(const Graph& g, Vertex u, Vertex v, const CycleSet* restriction = nullptr,
                           std::size_t max_paths = kDefaultMaxPaths);
/// Same, over a precomputed path list (must be enumerate_uv_paths output).
PathGraph build_path_graph(const Graph& g, Vertex u, Vertex v, std::vector<Path> paths,
                           const CycleSet* restriction);

struct Components {
  std::vector<std::size_t> component_of;
  std::vector<std::vector<std::size_t>> members;  // each sorted; ordered by smallest member

  std::size_t count() const { return members.size(); }
};

Components components(const PathGraph& pg);

/// BFS distances from one path; unreachable entries are SIZE_MAX.
std::vector<std::size_t> path_graph_distances(const PathGraph& pg, std::size_t source);

/// nullopt when the path graph is disconnected.
std::optional<std::size_t> path_graph_diameter(const PathGraph& pg);

/// Number of consecutive initial edges shared by two paths.
std::size_t common_prefix_edges(const Path& a, const Path& b);

/// Indices of one splice. `k` and `m` drive the construction; `j` and `l`
/// are the symmetric indices measured from S's side and are reported only.
struct MergeState {
  std::size_t common_prefix = 0;
  std::size_t k = 0;
  std::size_t m = 0;
  std::size_t j = 0;
  std::size_t l = 0;
};

struct MergeStep {
  Path next;
  MergeState state;
};

/// Splices T's divergent segment into S so that the result shares at least
/// one more initial edge with T. Throws Error when S == T.
MergeStep merge_step(const Graph& g, const Path& s, const Path& t);

/// S = W_0, ..., W_r = T by repeated merge steps; r <= l(T).
std::vector<Path> merge_walk(const Graph& g, const Path& s, const Path& t);

/// A shortest u-v path (BFS from u, neighbors in index order).
Path shortest_path(const Graph& g, Vertex u, Vertex v);

/// Walk from S to T through a shortest path P; length <= 2 d(u, v).
std::vector<Path> bounded_route(const Graph& g, Vertex u, Vertex v, const Path& s, const Path& t);

}  // namespace pathspace

#endif  // PATHSPACE_PATH_SPACE_HPP_
