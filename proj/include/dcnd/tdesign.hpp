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

// [delta, k]-transversal designs viewed as (k, delta)-bipartite graphs:
// delta groups of k nodes, k^2 blocks, every block meets every group exactly
// once and every pair of nodes from distinct groups lies in exactly one block.

#pragma once

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "dcnd/bigraph.hpp"
#include "dcnd/field.hpp"
#include "dcnd/graph_io.hpp"

namespace dcnd {

class TransversalDesign {
 public:
  TransversalDesign() = default;

  /// groups[i] lists the node indices of group i. Indexes are derived from
  /// the incidences; an invalid design is representable (see verify_td) but
  /// generated_block() only answers for pairs covered exactly once.
  TransversalDesign(int delta, int k, BipartiteGraph graph,
                    std::vector<std::vector<int>> groups)
      : delta_(delta), k_(k), graph_(std::move(graph)),
        groups_(std::move(groups)) {
    const int n = graph_.node_count();
    group_of_.assign(n, -1);
    pos_in_group_.assign(n, -1);
    for (int i = 0; i < static_cast<int>(groups_.size()); ++i) {
      for (int j = 0; j < static_cast<int>(groups_[i].size()); ++j) {
        int x = groups_[i][j];
        if (x < 0 || x >= n) throw FormatError("group references unknown node");
        if (group_of_[x] >= 0) {
          throw FormatError("node '" + graph_.id(x) + "' in two groups");
        }
        group_of_[x] = i;
        pos_in_group_[x] = j;
      }
    }
    members_.assign(graph_.block_count(),
                    std::vector<int>(groups_.size(), -1));
    gen_.assign(static_cast<std::size_t>(n) * n, -1);
    for (int u = 0; u < graph_.block_count(); ++u) {
      auto nb = graph_.neighbors(graph_.block_vertex(u));
      for (Vertex x : nb) {
        if (group_of_[x] >= 0) members_[u][group_of_[x]] = x;
      }
      for (Vertex x : nb) {
        for (Vertex y : nb) {
          if (x == y || group_of_[x] == group_of_[y]) continue;
          int& slot = gen_[static_cast<std::size_t>(x) * n + y];
          slot = slot == -1 ? u : -2;  // -2 marks a pair covered twice
        }
      }
    }
  }

  int delta() const { return delta_; }
  int k() const { return k_; }
  const BipartiteGraph& graph() const { return graph_; }
  const std::vector<std::vector<int>>& groups() const { return groups_; }

  int group_of(int node) const { return group_of_.at(node); }
  int position_in_group(int node) const { return pos_in_group_.at(node); }
  int node_at(int group, int pos) const { return groups_.at(group).at(pos); }

  /// Node of block u lying in group i.
  int member(int block, int group) const { return members_.at(block).at(group); }

  /// The unique block incident to both x and y (node indices, distinct
  /// groups).
  int generated_block(int x, int y) const {
    if (x == y || group_of(x) == group_of(y)) {
      throw DomainError("generated block needs nodes from distinct groups");
    }
    int u = gen_[static_cast<std::size_t>(x) * graph_.node_count() + y];
    if (u < 0) {
      throw DomainError("pair {" + graph_.id(x) + ", " + graph_.id(y) +
                        "} is not covered by exactly one block");
    }
    return u;
  }

  /// Count of blocks covering {x, y}: 0, 1, or 2 meaning "two or more".
  int pair_cover_count(int x, int y) const {
    int u = gen_[static_cast<std::size_t>(x) * graph_.node_count() + y];
    return u == -1 ? 0 : (u == -2 ? 2 : 1);
  }

 private:
  int delta_ = 0;
  int k_ = 0;
  BipartiteGraph graph_;
  std::vector<std::vector<int>> groups_;
  std::vector<int> group_of_;
  std::vector<int> pos_in_group_;
  std::vector<std::vector<int>> members_;
  std::vector<int> gen_;
};

/// Orthogonal-array construction over GF(k). Block (a, b) contains, in group
/// i < min(delta, k), the node of value a*c_i + b where c_i is the i-th field
/// element; when delta = k + 1 the last group holds the node of value a.
inline TransversalDesign build_td(int delta, int k) {
  if (k < 2) throw DomainError("k must be at least 2");
  if (delta < 2 || delta > k + 1) {
    throw DomainError("delta must satisfy 2 <= delta <= k + 1");
  }
  FiniteField f(k);
  std::vector<std::string> nodes, blocks;
  std::vector<std::vector<int>> groups(delta);
  for (int i = 0; i < delta; ++i) {
    for (int v = 0; v < k; ++v) {
      groups[i].push_back(static_cast<int>(nodes.size()));
      nodes.push_back("x" + std::to_string(i) + "." + std::to_string(v));
    }
  }
  std::vector<std::pair<int, int>> edges;
  edges.reserve(static_cast<std::size_t>(k) * k * delta);
  const int affine = std::min(delta, k);
  for (int a = 0; a < k; ++a) {
    for (int b = 0; b < k; ++b) {
      int u = static_cast<int>(blocks.size());
      blocks.push_back("U" + std::to_string(a) + "." + std::to_string(b));
      for (int i = 0; i < delta; ++i) {
        int v = i < affine ? f.add(f.mul(a, i), b) : a;
        edges.emplace_back(groups[i][v], u);
      }
    }
  }
  return TransversalDesign(
      delta, k, BipartiteGraph(std::move(nodes), std::move(blocks), edges),
      std::move(groups));
}

/// Every violated clause of the transversal-design definition; empty when the
/// design is valid.
inline std::vector<std::string> verify_td(const TransversalDesign& t) {
  std::vector<std::string> report;
  const auto& g = t.graph();
  const int delta = t.delta(), k = t.k();
  if (delta < 2 || k < 2) report.push_back("delta and k must be at least 2");
  if (g.node_count() != delta * k) {
    report.push_back("node count " + std::to_string(g.node_count()) +
                     " != delta*k = " + std::to_string(delta * k));
  }
  if (g.block_count() != k * k) {
    report.push_back("block count " + std::to_string(g.block_count()) +
                     " != k^2 = " + std::to_string(k * k));
  }
  if (static_cast<int>(t.groups().size()) != delta) {
    report.push_back("expected " + std::to_string(delta) + " groups");
  }
  for (int i = 0; i < static_cast<int>(t.groups().size()); ++i) {
    if (static_cast<int>(t.groups()[i].size()) != k) {
      report.push_back("group " + std::to_string(i) + " does not have k nodes");
    }
  }
  for (int x = 0; x < g.node_count(); ++x) {
    if (t.group_of(x) < 0) {
      report.push_back("node '" + g.id(x) + "' lies in no group");
    }
  }
  const int ng = static_cast<int>(t.groups().size());
  for (int u = 0; u < g.block_count(); ++u) {
    std::vector<int> hits(ng, 0);
    for (Vertex x : g.neighbors(g.block_vertex(u))) {
      if (t.group_of(x) >= 0) ++hits[t.group_of(x)];
    }
    for (int i = 0; i < ng; ++i) {
      if (hits[i] != 1) {
        report.push_back("block '" + g.id(g.block_vertex(u)) + "' meets group " +
                         std::to_string(i) + " in " + std::to_string(hits[i]) +
                         " nodes");
      }
    }
  }
  for (int x = 0; x < g.node_count(); ++x) {
    for (int y = x + 1; y < g.node_count(); ++y) {
      if (t.group_of(x) < 0 || t.group_of(y) < 0 ||
          t.group_of(x) == t.group_of(y)) {
        continue;
      }
      int c = t.pair_cover_count(x, y);
      if (c != 1) {
        report.push_back("pair {" + g.id(x) + ", " + g.id(y) + "} covered " +
                         (c == 0 ? std::string("by no block")
                                 : std::string("twice")));
      }
    }
  }
  return report;
}

/// The [3,2]-design with groups {r_i, s_i} and blocks B1..B4.
inline TransversalDesign canonical_td_3_2() {
  std::vector<std::string> nodes = {"r1", "s1", "r2", "s2", "r3", "s3"};
  std::vector<std::string> blocks = {"B1", "B2", "B3", "B4"};
  std::vector<std::pair<std::string, std::string>> e = {
      {"r1", "B1"}, {"r1", "B2"}, {"s1", "B3"}, {"s1", "B4"},
      {"r2", "B1"}, {"r2", "B3"}, {"s2", "B2"}, {"s2", "B4"},
      {"r3", "B1"}, {"r3", "B4"}, {"s3", "B2"}, {"s3", "B3"}};
  return TransversalDesign(
      3, 2, BipartiteGraph::from_ids(nodes, blocks, e), {{0, 1}, {2, 3}, {4, 5}});
}

inline Json td_to_json(const TransversalDesign& t) {
  Json j;
  j["delta"] = t.delta();
  j["k"] = t.k();
  Json groups = Json::array();
  for (const auto& grp : t.groups()) {
    Json ids = Json::array();
    for (int x : grp) ids.push_back(t.graph().id(x));
    groups.push_back(std::move(ids));
  }
  j["groups"] = std::move(groups);
  j["graph"] = graph_to_json(t.graph());
  return j;
}

inline TransversalDesign td_from_json(const Json& j) {
  try {
    auto loaded = graph_from_json(j.at("graph"));
    std::vector<std::vector<int>> groups;
    for (const auto& grp : j.at("groups")) {
      std::vector<int> ids;
      for (const auto& id : grp) {
        auto v = loaded.graph.find(id.get<std::string>());
        if (!v || !loaded.graph.is_node(*v)) {
          throw FormatError("group member '" + id.get<std::string>() +
                            "' is not a node");
        }
        ids.push_back(*v);
      }
      groups.push_back(std::move(ids));
    }
    return TransversalDesign(j.at("delta").get<int>(), j.at("k").get<int>(),
                             std::move(loaded.graph), std::move(groups));
  } catch (const Json::exception& e) {
    throw FormatError(std::string("malformed design JSON: ") + e.what());
  }
}

}  // namespace dcnd
