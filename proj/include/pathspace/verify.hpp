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

#ifndef PATHSPACE_VERIFY_HPP_
#define PATHSPACE_VERIFY_HPP_

#include <optional>
#include <string>
#include <vector>

#include "pathspace/corpus.hpp"
#include "pathspace/io.hpp"
#include "pathspace/path_space.hpp"

namespace pathspace {

inline constexpr const char* kReportSchema = "pathspace.report/1";

enum class Verdict { kPass, kFail, kWitness, kSkipped };
const char* to_string(Verdict v);

struct TheoremReport {
  std::string theorem;
  std::string instance;
  std::string graph_hash;
  std::optional<Vertex> u;
  std::optional<Vertex> v;
  std::string cycles_hash;
  Verdict verdict = Verdict::kPass;
  Json metrics = Json::object();
  /// Graph plus the offending paths or cycles; set for every failure.
  Json counterexample;
  double duration_ms = 0;
};

Json to_json(const TheoremReport& r, bool with_duration = true);
Json reports_json(const std::vector<TheoremReport>& reports, bool with_duration = true);

struct Instance {
  std::string name;
  Graph graph;
  std::optional<CycleSet> cycles;
  std::optional<PlaneEmbedding> embedding;
};

struct Corpus {
  std::string generator;
  std::vector<Instance> instances;
};

/// Every 2-connected graph with 3 <= n <= max_n, up to isomorphism.
Corpus exhaustive_corpus(std::size_t max_n);
/// Random 2-connected graphs with n <= max_n, each with a random cycle set.
Corpus random_corpus(std::size_t count, std::size_t max_n, std::uint64_t seed);
Corpus plane_corpus();
Corpus k4_corpus();

/// Theorem ids accepted by run_theorem_suite.
const std::vector<std::string>& theorem_ids();

struct SuiteOptions {
  std::size_t max_paths = kDefaultMaxPaths;
  /// Random (S, T) pairs per (u, v) for merge and route checks.
  std::size_t route_samples = 20;
  std::uint64_t seed = kDefaultSeed;
};

/// Runs the requested checks on every instance. Reports come back ordered
/// by (instance, theorem). An instance whose enumeration exceeds the path
/// cap yields a kSkipped report with a notice.
std::vector<TheoremReport> run_theorem_suite(const Corpus& corpus, const std::vector<std::string>& which,
                                             const SuiteOptions& options = {});

bool all_passed(const std::vector<TheoremReport>& reports);

struct TightnessResult {
  bool tight = false;  // diameter == 2 d with d >= 2
  std::size_t diameter = 0;
  std::size_t distance = 0;
  std::optional<Graph> graph;
  Vertex u = 0;
  Vertex v = 0;
  std::optional<Path> s;
  std::optional<Path> t;
  std::size_t instances_scanned = 0;
};

/// Scans 2-connected graphs up to max_n vertices (max_n <= 8) for a pair
/// whose path graph diameter equals 2 d(u, v) with d >= 2, preferring larger
/// d; otherwise reports the pair maximizing diameter - 2 d.
TightnessResult search_tightness_witness(std::size_t max_n);
Json to_json(const TightnessResult& r);

struct DotOptions {
  bool edge_labels = false;
  /// Draw exchanges removed by the restriction as dashed edges.
  bool show_removed = false;
};

std::string export_dot(const Graph& g, const PathGraph& pg, const DotOptions& options = {});

}  // namespace pathspace

#endif  // PATHSPACE_VERIFY_HPP_
