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

#pragma once

#include <string>
#include <vector>

#include "dcnd/bigraph.hpp"
#include "dcnd/graph_io.hpp"

namespace dcnd {

enum class Disjointness { internal, edge };

inline const char* to_string(Disjointness m) {
  return m == Disjointness::internal ? "internal" : "edge";
}

inline Disjointness disjointness_from_string(const std::string& s) {
  if (s == "internal") return Disjointness::internal;
  if (s == "edge") return Disjointness::edge;
  throw DomainError("mode must be 'internal' or 'edge', got '" + s + "'");
}

/// A family of alternating paths with the disjointness it claims.
struct PathSet {
  std::vector<AltPath> paths;
  Disjointness mode = Disjointness::internal;
  int claimed_count = 0;
  int length_bound = 0;
  const BipartiteGraph* host = nullptr;

  // Construction details, informational.
  int lambda_count = 0;  // disjoint base paths available (one-to-one)
  int mu = 0;            // length bound of the base paths used
  int depth = 0;         // skeleton depth (one-to-many)
  std::string method;    // which construction branch produced the set
  std::vector<AltPath> base_paths;  // base-graph paths the set was built along

  int max_length() const {
    int m = 0;
    for (const auto& p : paths) m = std::max(m, path_length(p));
    return m;
  }
};

inline Json pathset_to_json(const PathSet& ps) {
  Json j;
  j["mode"] = to_string(ps.mode);
  j["claimed_count"] = ps.claimed_count;
  j["length_bound"] = ps.length_bound;
  if (!ps.method.empty()) j["method"] = ps.method;
  Json paths = Json::array();
  for (const auto& p : ps.paths) {
    Json ids = Json::array();
    for (Vertex v : p) ids.push_back(ps.host->id(v));
    paths.push_back(std::move(ids));
  }
  j["paths"] = std::move(paths);
  return j;
}

inline PathSet pathset_from_json(const Json& j, const BipartiteGraph& host) {
  PathSet ps;
  ps.host = &host;
  try {
    for (const auto& p : j.at("paths")) {
      AltPath path;
      for (const auto& id : p) {
        auto v = host.find(id.get<std::string>());
        if (!v) {
          throw FormatError("path references unknown element '" +
                            id.get<std::string>() + "'");
        }
        path.push_back(*v);
      }
      ps.paths.push_back(std::move(path));
    }
    ps.mode = disjointness_from_string(j.value("mode", "internal"));
    ps.claimed_count =
        j.value("claimed_count", static_cast<int>(ps.paths.size()));
    ps.length_bound = j.value("length_bound", 0);
    if (ps.length_bound == 0) ps.length_bound = ps.max_length();
  } catch (const Json::exception& e) {
    throw FormatError(std::string("malformed path JSON: ") + e.what());
  }
  return ps;
}

}  // namespace dcnd
