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

#ifndef PATHSPACE_IO_HPP_
#define PATHSPACE_IO_HPP_

#include <string>
#include <vector>

#include "json.hpp"
#include "pathspace/cycle_space.hpp"
#include "pathspace/delta_star.hpp"
#include "pathspace/graph.hpp"

namespace pathspace {

using Json = nlohmann::json;

// Graph: {"n": int, "edges": [[a,b],...], "labels": {"id": "name", ...}}
Graph graph_from_json(const Json& j);
Json to_json(const Graph& g);

// Cycle set: {"cycles": [[edge, ...], ...]}
CycleSet cycle_set_from_json(const Graph& g, const Json& j);
Json to_json(const CycleSet& c);

// Embedding: {"rotation": [[edge, ...] per vertex], "outer": [edge, "fwd"|"rev"]}
PlaneEmbedding embedding_from_json(const Graph& g, const Json& j);
Json to_json(const PlaneEmbedding& emb);

Json edge_list_json(const EdgeSet& es);
Json path_json(const Graph& g, const Path& p);
Json to_json(const DeltaStarWitness& w);

/// Parses "u-x-v", "u,x,v" or "0 1 3" as a path of g (labels or indices).
Path parse_path(const Graph& g, const std::string& text);
/// Parses "0,1,3" (or space/dash separated) as edge indices.
EdgeSet parse_edge_set(const Graph& g, const std::string& text);
Vertex parse_vertex(const Graph& g, const std::string& text);

Json read_json_file(const std::string& file);
void write_text_file(const std::string& file, const std::string& text);

/// FNV-1a over a canonical serialization.
std::string graph_hash(const Graph& g);
std::string cycle_set_hash(const CycleSet& c);

}  // namespace pathspace

#endif  // PATHSPACE_IO_HPP_
