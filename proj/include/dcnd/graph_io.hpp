// Copyright 2026 The dcnd Authors
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

// JSON graph format:
//
//   {"nodes": [id...], "blocks": [id...], "edges": [[node, block]...],
//    "labels": {id: text}, "meta": {...}}
//
// Distances computed on a loaded graph count edges of the bipartite graph.
// "labels" is optional; "meta" is free-form and round-trips untouched.

#pragma once

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <utility>

#include "dcnd/bigraph.hpp"
#include "json.hpp"

namespace dcnd {

using Json = nlohmann::json;

struct LoadedGraph {
  BipartiteGraph graph;
  Json meta = Json::object();
};

inline Json graph_to_json(const BipartiteGraph& g,
                          const Json& meta = Json::object()) {
  Json j;
  j["nodes"] = g.node_ids();
  j["blocks"] = g.block_ids();
  Json edges = Json::array();
  for (auto [node, block] : g.edges()) {
    edges.push_back({g.id(g.node_vertex(node)), g.id(g.block_vertex(block))});
  }
  j["edges"] = std::move(edges);
  if (!g.labels().empty()) j["labels"] = g.labels();
  j["meta"] = meta;
  return j;
}

inline LoadedGraph graph_from_json(const Json& j) {
  try {
    if (!j.is_object() || !j.contains("nodes") || !j.contains("blocks") ||
        !j.contains("edges")) {
      throw FormatError("graph JSON needs \"nodes\", \"blocks\", \"edges\"");
    }
    auto nodes = j.at("nodes").get<std::vector<std::string>>();
    auto blocks = j.at("blocks").get<std::vector<std::string>>();
    std::vector<std::pair<std::string, std::string>> edges;
    for (const auto& e : j.at("edges")) {
      if (!e.is_array() || e.size() != 2) {
        throw FormatError("edge must be a [node, block] pair");
      }
      edges.emplace_back(e[0].get<std::string>(), e[1].get<std::string>());
    }
    std::map<std::string, std::string> labels;
    if (j.contains("labels")) {
      labels = j.at("labels").get<std::map<std::string, std::string>>();
    }
    LoadedGraph out{BipartiteGraph::from_ids(std::move(nodes),
                                             std::move(blocks), edges,
                                             std::move(labels)),
                    j.value("meta", Json::object())};
    for (const auto& [id, _] : out.graph.labels()) {
      if (!out.graph.find(id)) {
        throw FormatError("label for unknown element '" + id + "'");
      }
    }
    return out;
  } catch (const Json::exception& e) {
    throw FormatError(std::string("malformed graph JSON: ") + e.what());
  }
}

/// Reads a whole file, or standard input when path is "-".
inline std::string read_text(const std::string& path) {
  if (path == "-") {
    return {std::istreambuf_iterator<char>(std::cin),
            std::istreambuf_iterator<char>()};
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FormatError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline void write_text(const std::string& path, const std::string& text) {
  if (path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw FormatError("cannot write '" + path + "'");
  out << text;
}

inline Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::exception& e) {
    throw FormatError(std::string("invalid JSON: ") + e.what());
  }
}

inline LoadedGraph load_graph(const std::string& path) {
  return graph_from_json(parse_json(read_text(path)));
}

inline void save_graph(const BipartiteGraph& g, const std::string& path,
                       const Json& meta = Json::object()) {
  write_text(path, graph_to_json(g, meta).dump(1) + "\n");
}

namespace detail {
inline std::string dot_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  return out + "\"";
}
}  // namespace detail

/// Undirected DOT: nodes drawn as circles, blocks as squares.
inline std::string export_dot(const BipartiteGraph& g) {
  std::ostringstream out;
  out << "graph G {\n";
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    out << "  " << detail::dot_quote(g.id(v)) << " [shape="
        << (g.is_block(v) ? "square" : "circle");
    if (auto it = g.labels().find(g.id(v)); it != g.labels().end()) {
      out << ", label=" << detail::dot_quote(it->second);
    }
    out << "];\n";
  }
  for (auto [node, block] : g.edges()) {
    out << "  " << detail::dot_quote(g.id(g.node_vertex(node))) << " -- "
        << detail::dot_quote(g.id(g.block_vertex(block))) << ";\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace dcnd
