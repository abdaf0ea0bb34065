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

#ifndef PATHSPACE_CORPUS_HPP_
#define PATHSPACE_CORPUS_HPP_

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "pathspace/cycle_space.hpp"
#include "pathspace/graph.hpp"

namespace pathspace {

inline constexpr std::uint64_t kDefaultSeed = 20260101;

/// Seeded generator with platform-independent draws.
class Rng {
 public:
  explicit Rng(std::uint64_t seed = kDefaultSeed) : engine_(seed) {}
  /// Uniform in [0, bound).
  std::uint64_t below(std::uint64_t bound) { return engine_() % bound; }
  /// Uniform in [lo, hi].
  std::uint64_t between(std::uint64_t lo, std::uint64_t hi) { return lo + below(hi - lo + 1); }
  bool coin(double p_true = 0.5) {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53 < p_true;
  }
  template <typename T>
  void shuffle(std::vector<T>& items) {
    for (std::size_t i = items.size(); i > 1; --i) std::swap(items[i - 1], items[below(i)]);
  }

 private:
  std::mt19937_64 engine_;
};

/// Canonical adjacency code of a graph on at most 11 vertices: the minimum
/// upper-triangle bit string over all relabelings that respect a
/// colour-refinement partition.
std::uint64_t canonical_code(const Graph& g);

/// All graphs on exactly n vertices up to isomorphism, as canonical
/// representatives ordered by (edge count, code). n <= 8.
std::vector<Graph> all_graphs(std::size_t n);
/// Isomorphism-free 2-connected graphs with 3 <= n <= max_n.
std::vector<Graph> all_two_connected_graphs(std::size_t max_n);

/// Uniform m-edge subsets of K_n, rejected until 2-connected.
Graph random_two_connected(std::size_t n, std::size_t m, Rng& rng);
/// Random 2-connected graph with n in [3, max_n] and a random edge count.
Graph random_two_connected(std::size_t max_n, Rng& rng);

/// Random subset of the cycles of g; each cycle kept with probability p.
CycleSet random_cycle_subset(const Graph& g, const CycleSet& all, double p, Rng& rng);

Graph complete_graph(std::size_t n);
Graph cycle_graph(std::size_t n);

struct K4Fixture {
  Graph graph;  // vertices u=0, x=1, y=2, v=3
  Vertex u;
  Vertex v;
  CycleSet cycles;  // triangles uxv, uyv and the 4-cycle uxyv
};

/// The complete graph on u, x, y, v with the three-cycle family whose
/// restricted u-v path graph isolates u-y-x-v.
K4Fixture k4_fixture();

struct PlaneFixture {
  std::string name;
  Graph graph;
  std::vector<std::pair<double, double>> coords;
  PlaneEmbedding embedding;
};

/// Straight-line drawings of small 2-connected plane graphs.
std::vector<PlaneFixture> plane_fixtures();

}  // namespace pathspace

#endif  // PATHSPACE_CORPUS_HPP_
