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

#include "pathspace/io.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace pathspace {
namespace {

std::vector<std::string> split_tokens(const std::string& text) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : text) {
    if (ch == ',' || ch == '-' || ch == ' ' || ch == '\t' || ch == '[' || ch == ']') {
      if (!cur.empty()) out.push_back(std::move(cur));
      cur.clear();
    } else {
      cur += ch;
    }
  }
  if (!cur.empty()) out.push_back(std::move(cur));
  return out;
}

std::string fnv1a(const std::string& text) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char ch : text) {
    h ^= ch;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace

Graph graph_from_json(const Json& j) {
  try {
    const auto n = j.at("n").get<std::size_t>();
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (const auto& e : j.at("edges")) {
      if (!e.is_array() || e.size() != 2) throw Error("each edge must be a pair [a, b]");
      edges.emplace_back(e[0].get<Vertex>(), e[1].get<Vertex>());
    }
    std::vector<std::string> labels;
    if (j.contains("labels") && !j["labels"].is_null()) {
      labels.resize(n);
      for (Vertex w = 0; w < n; ++w) labels[w] = std::to_string(w);
      for (const auto& [key, value] : j["labels"].items()) {
        const auto id = static_cast<std::size_t>(std::stoul(key));
        if (id >= n) throw Error("label for unknown vertex " + key);
        labels[id] = value.get<std::string>();
      }
    }
    return Graph::build(n, std::move(edges), std::move(labels));
  } catch (const Json::exception& ex) {
    throw Error(std::string("malformed graph JSON: ") + ex.what());
  }
}

Json to_json(const Graph& g) {
  Json j;
  j["n"] = g.vertex_count();
  j["edges"] = Json::array();
  for (const auto& e : g.edges()) j["edges"].push_back({e.a, e.b});
  if (g.has_labels()) {
    Json labels = Json::object();
    for (Vertex w = 0; w < g.vertex_count(); ++w) labels[std::to_string(w)] = g.label(w);
    j["labels"] = labels;
  }
  return j;
}

CycleSet cycle_set_from_json(const Graph& g, const Json& j) {
  try {
    std::vector<EdgeSet> sets;
    for (const auto& cyc : j.at("cycles")) {
      EdgeSet es = g.empty_edge_set();
      for (const auto& e : cyc) {
        const auto id = e.get<EdgeId>();
        if (id >= g.edge_count()) throw Error("cycle names unknown edge " + std::to_string(id));
        es.insert(id);
      }
      sets.push_back(std::move(es));
    }
    return CycleSet(g, sets);
  } catch (const Json::exception& ex) {
    throw Error(std::string("malformed cycle set JSON: ") + ex.what());
  }
}

Json to_json(const CycleSet& c) {
  Json j;
  j["cycles"] = Json::array();
  for (const auto& cyc : c) j["cycles"].push_back(edge_list_json(cyc.edges()));
  return j;
}

PlaneEmbedding embedding_from_json(const Graph& g, const Json& j) {
  try {
    PlaneEmbedding emb;
    for (const auto& rot : j.at("rotation")) emb.rotation.push_back(rot.get<std::vector<EdgeId>>());
    if (j.contains("outer")) {
      const auto& outer = j["outer"];
      if (!outer.is_array() || outer.size() != 2) throw Error("outer must be [edge, \"fwd\"|\"rev\"]");
      const auto dir = outer[1].get<std::string>();
      if (dir != "fwd" && dir != "rev") throw Error("outer direction must be \"fwd\" or \"rev\"");
      emb.outer = Dart{outer[0].get<EdgeId>(), dir == "fwd"};
    } else {
      // Lexicographically first directed edge.
      emb.outer = Dart{0, true};
    }
    if (emb.outer.edge >= g.edge_count()) throw Error("outer face names an unknown edge");
    return emb;
  } catch (const Json::exception& ex) {
    throw Error(std::string("malformed embedding JSON: ") + ex.what());
  }
}

Json to_json(const PlaneEmbedding& emb) {
  Json j;
  j["rotation"] = emb.rotation;
  j["outer"] = {emb.outer.edge, emb.outer.forward ? "fwd" : "rev"};
  return j;
}

Json edge_list_json(const EdgeSet& es) { return es.to_vector(); }

Json path_json(const Graph& g, const Path& p) {
  Json j = Json::array();
  for (Vertex w : p.vertices()) {
    if (g.has_labels())
      j.push_back(g.label(w));
    else
      j.push_back(w);
  }
  return j;
}

Json to_json(const DeltaStarWitness& w) {
  Json j;
  j["unicycle"] = edge_list_json(w.unicycle);
  j["e"] = w.extra_edge;
  j["alpha"] = edge_list_json(w.alpha);
  j["beta"] = edge_list_json(w.beta);
  j["connector"] = w.connector;
  return j;
}

Vertex parse_vertex(const Graph& g, const std::string& text) {
  auto w = g.find_vertex(text);
  if (!w) throw Error("unknown vertex '" + text + "'");
  return *w;
}

Path parse_path(const Graph& g, const std::string& text) {
  std::vector<Vertex> seq;
  for (const auto& tok : split_tokens(text)) seq.push_back(parse_vertex(g, tok));
  return Path(g, std::move(seq));
}

EdgeSet parse_edge_set(const Graph& g, const std::string& text) {
  EdgeSet es = g.empty_edge_set();
  for (const auto& tok : split_tokens(text)) {
    std::size_t used = 0;
    unsigned long id = 0;
    try {
      id = std::stoul(tok, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != tok.size() || id >= g.edge_count()) throw Error("unknown edge '" + tok + "'");
    es.insert(static_cast<EdgeId>(id));
  }
  return es;
}

Json read_json_file(const std::string& file) {
  std::ifstream in(file);
  if (!in) throw Error("cannot open " + file);
  try {
    return Json::parse(in);
  } catch (const Json::exception& ex) {
    throw Error(file + ": " + ex.what());
  }
}

void write_text_file(const std::string& file, const std::string& text) {
  std::ofstream out(file);
  if (!out) throw Error("cannot write " + file);
  out << text;
}

std::string graph_hash(const Graph& g) {
  std::ostringstream s;
  s << g.vertex_count() << ':';
  for (const auto& e : g.edges()) s << std::min(e.a, e.b) << '-' << std::max(e.a, e.b) << ';';
  return fnv1a(s.str());
}

std::string cycle_set_hash(const CycleSet& c) {
  std::vector<std::vector<EdgeId>> members;
  for (const auto& cyc : c) members.push_back(cyc.edges().to_vector());
  std::sort(members.begin(), members.end());
  std::ostringstream s;
  s << c.edge_universe() << ':';
  for (const auto& m : members) {
    for (EdgeId e : m) s << e << ',';
    s << ';';
  }
  return fnv1a(s.str());
}

}  // namespace pathspace
