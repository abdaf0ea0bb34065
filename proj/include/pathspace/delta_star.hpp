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

#ifndef PATHSPACE_DELTA_STAR_HPP_
#define PATHSPACE_DELTA_STAR_HPP_

#include <optional>
#include <span>
#include <vector>

#include "pathspace/cycle_space.hpp"
#include "pathspace/graph.hpp"
#include "pathspace/path_space.hpp"

namespace pathspace {

/// Spanning connected subgraph with exactly one cycle.
class Unicycle {
 public:
  const EdgeSet& edges() const { return edges_; }
  const Cycle& cycle() const { return cycle_; }

  friend bool operator==(const Unicycle& a, const Unicycle& b) { return a.edges_ == b.edges_; }
  friend bool operator<(const Unicycle& a, const Unicycle& b) { return a.edges_ < b.edges_; }

 private:
  friend std::optional<Unicycle> as_unicycle(const Graph& g, const EdgeSet& edges);
  Unicycle(EdgeSet edges, Cycle cycle) : edges_(std::move(edges)), cycle_(std::move(cycle)) {}

  EdgeSet edges_;
  Cycle cycle_;
};

/// nullopt unless `edges` spans g, is connected and has |E| = |V|.
std::optional<Unicycle> as_unicycle(const Graph& g, const EdgeSet& edges);

/// Every unicycle whose cycle is sigma, sorted by mask. Built by contracting
/// sigma to one vertex and enumerating spanning trees of the contraction.
std::vector<Unicycle> enumerate_unicycles_containing(const Graph& g, const Cycle& sigma);

/// Grows the monocle into a unicycle by multi-source BFS from its vertices
/// (popped in increasing index order, neighbors in index order).
Unicycle extend_monocle_to_unicycle(const Graph& g, const Monocle& m);

/// The 2 or 3 simple cycles of U + e, sorted by mask. Throws Error if e is
/// already in U.
std::vector<Cycle> cycles_in_unicycle_plus_edge(const Graph& g, const Unicycle& u, EdgeId e);

struct DeltaStarWitness {
  EdgeSet unicycle;
  EdgeId extra_edge;
  EdgeSet alpha;
  EdgeSet beta;
  /// Path from x' to y' through the extra edge, using no edge of the core
  /// (the monocle, or the cycle itself when no monocle is given).
  std::vector<Vertex> connector;
};

/// First witness for one unicycle: edges in index order, then cycle pairs in
/// mask order.
std::optional<DeltaStarWitness> find_witness(const Graph& g, const Unicycle& u,
                                             const Cycle& sigma, const CycleSet& c,
                                             const EdgeSet* core = nullptr);

struct DeltaStarReport {
  bool holds = false;
  std::vector<DeltaStarWitness> witnesses;  // one per unicycle when holds
  std::optional<EdgeSet> failing_unicycle;
};

/// Checks every unicycle containing sigma. No shortcut is taken when sigma
/// is itself a member of c.
DeltaStarReport has_property_delta_star(const Graph& g, const Cycle& sigma, const CycleSet& c);

/// Repeatedly adds cycles with the property relative to the current set,
/// scanning in enumerate_all_cycles order, until a full pass adds nothing.
CycleSet delta_star_closure(const CycleSet& c, const Graph& g);
/// Same, scanning candidates in the given permutation of all-cycle indices.
CycleSet delta_star_closure(const CycleSet& c, const Graph& g, std::span<const std::size_t> scan_order);

bool is_delta_star_dense(const CycleSet& c, const Graph& g);

/// The edge set as a u-v path, if it is one.
std::optional<Path> path_from_edges(const Graph& g, Vertex u, Vertex v, const EdgeSet& es);

struct Interpolation {
  Path q;
  bool direct = false;  // exchange cycle already in c; q == T
  std::optional<DeltaStarWitness> witness;
};

/// For adjacent S, T whose exchange cycle has the property relative to c,
/// a path Q with S Δ Q and Q Δ T both exchanges along cycles of c.
/// Throws Error "property Δ* fails" when no witness exists for the
/// monocle's unicycle, and Error when no witness yields a valid Q.
Interpolation interpolate(const Graph& g, const Path& s, const Path& t, const CycleSet& c);

/// Replaces every sigma-step of a walk in P_{C ∪ {sigma}} with at most two
/// steps inside P_C.
std::vector<Path> project_walk(const Graph& g, const std::vector<Path>& walk, const CycleSet& c,
                               const Cycle& sigma);

}  // namespace pathspace

#endif  // PATHSPACE_DELTA_STAR_HPP_
