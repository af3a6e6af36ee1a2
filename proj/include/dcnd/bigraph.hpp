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

// Bipartite incidence structures: nodes on the left, blocks on the right.
//
// Every element gets a vertex index in one shared space: nodes occupy
// [0, node_count()) and blocks occupy [node_count(), vertex_count()). Paths
// are sequences of vertex indices. Lengths count edges, so a node-to-node
// distance is always even.

#pragma once

#include <algorithm>
#include <cstddef>
#include <deque>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "dcnd/error.hpp"

namespace dcnd {

using Vertex = int;
using AltPath = std::vector<Vertex>;

inline int path_length(const AltPath& p) {
  return p.empty() ? 0 : static_cast<int>(p.size()) - 1;
}

struct DegreeProfile {
  int d = 0;      // node degree (max when irregular)
  int delta = 0;  // block rank (max when non-uniform)
  bool regular = false;
  bool uniform = false;

  bool operator==(const DegreeProfile&) const = default;
};

class BipartiteGraph {
 public:
  BipartiteGraph() = default;

  /// Edges are (node index, block index) pairs. Throws FormatError on
  /// duplicate ids, dangling or repeated incidences, and isolated elements.
  BipartiteGraph(std::vector<std::string> node_ids,
                 std::vector<std::string> block_ids,
                 const std::vector<std::pair<int, int>>& edges,
                 std::map<std::string, std::string> labels = {})
      : ids_(std::move(node_ids)),
        n_(static_cast<int>(ids_.size())),
        labels_(std::move(labels)) {
    ids_.insert(ids_.end(), std::make_move_iterator(block_ids.begin()),
                std::make_move_iterator(block_ids.end()));
    index_.reserve(ids_.size());
    for (int v = 0; v < static_cast<int>(ids_.size()); ++v) {
      if (!index_.emplace(ids_[v], v).second) {
        throw FormatError("duplicate identifier '" + ids_[v] + "'");
      }
    }
    adj_.assign(ids_.size(), {});
    for (auto [node, block] : edges) {
      if (node < 0 || node >= n_ || block < 0 ||
          block >= block_count()) {
        throw FormatError("incidence references an unknown element");
      }
      adj_[node].push_back(n_ + block);
      adj_[n_ + block].push_back(node);
    }
    for (int v = 0; v < vertex_count(); ++v) {
      auto& a = adj_[v];
      std::sort(a.begin(), a.end());
      if (std::adjacent_find(a.begin(), a.end()) != a.end()) {
        throw FormatError("repeated incidence at '" + ids_[v] + "'");
      }
      if (a.empty()) {
        throw FormatError("isolated element '" + ids_[v] + "'");
      }
    }
    edge_count_ = static_cast<int>(edges.size());
  }

  /// Builds from string-keyed incidences.
  static BipartiteGraph from_ids(
      std::vector<std::string> node_ids, std::vector<std::string> block_ids,
      const std::vector<std::pair<std::string, std::string>>& edges,
      std::map<std::string, std::string> labels = {}) {
    std::unordered_map<std::string, int> nodes, blocks;
    for (int i = 0; i < static_cast<int>(node_ids.size()); ++i) {
      nodes.emplace(node_ids[i], i);
    }
    for (int i = 0; i < static_cast<int>(block_ids.size()); ++i) {
      blocks.emplace(block_ids[i], i);
    }
    std::vector<std::pair<int, int>> e;
    e.reserve(edges.size());
    for (const auto& [a, b] : edges) {
      auto na = nodes.find(a);
      auto nb = blocks.find(b);
      if (na == nodes.end()) {
        throw FormatError("edge references unknown node '" + a + "'");
      }
      if (nb == blocks.end()) {
        throw FormatError("edge references unknown block '" + b + "'");
      }
      e.emplace_back(na->second, nb->second);
    }
    return BipartiteGraph(std::move(node_ids), std::move(block_ids), e,
                          std::move(labels));
  }

  int node_count() const { return n_; }
  int block_count() const { return static_cast<int>(ids_.size()) - n_; }
  int vertex_count() const { return static_cast<int>(ids_.size()); }
  int edge_count() const { return edge_count_; }

  Vertex node_vertex(int i) const { return i; }
  Vertex block_vertex(int j) const { return n_ + j; }
  bool is_block(Vertex v) const { return v >= n_; }
  bool is_node(Vertex v) const { return v < n_; }
  int block_index(Vertex v) const { return v - n_; }

  const std::string& id(Vertex v) const { return ids_.at(v); }
  std::optional<Vertex> find(const std::string& id) const {
    auto it = index_.find(id);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }
  Vertex at(const std::string& id) const {
    auto v = find(id);
    if (!v) throw DomainError("unknown element '" + id + "'");
    return *v;
  }

  std::span<const Vertex> neighbors(Vertex v) const { return adj_.at(v); }
  int degree(Vertex v) const { return static_cast<int>(adj_.at(v).size()); }
  bool adjacent(Vertex u, Vertex v) const {
    const auto& a = adj_.at(u);
    return std::binary_search(a.begin(), a.end(), v);
  }

  /// (node index, block index) pairs, node-major, ascending.
  std::vector<std::pair<int, int>> edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(edge_count_);
    for (int v = 0; v < n_; ++v) {
      for (Vertex b : adj_[v]) out.emplace_back(v, b - n_);
    }
    return out;
  }

  std::vector<std::string> node_ids() const {
    return {ids_.begin(), ids_.begin() + n_};
  }
  std::vector<std::string> block_ids() const {
    return {ids_.begin() + n_, ids_.end()};
  }
  const std::map<std::string, std::string>& labels() const { return labels_; }

  bool operator==(const BipartiteGraph& o) const {
    return n_ == o.n_ && ids_ == o.ids_ && adj_ == o.adj_ &&
           labels_ == o.labels_;
  }

 private:
  std::vector<std::string> ids_;
  int n_ = 0;
  int edge_count_ = 0;
  std::unordered_map<std::string, Vertex> index_;
  std::vector<std::vector<Vertex>> adj_;
  std::map<std::string, std::string> labels_;
};

inline DegreeProfile degree_profile(const BipartiteGraph& g) {
  DegreeProfile p;
  int dmin = -1, rmin = -1;
  for (int v = 0; v < g.vertex_count(); ++v) {
    int deg = g.degree(v);
    if (g.is_node(v)) {
      p.d = std::max(p.d, deg);
      dmin = dmin < 0 ? deg : std::min(dmin, deg);
    } else {
      p.delta = std::max(p.delta, deg);
      rmin = rmin < 0 ? deg : std::min(rmin, deg);
    }
  }
  p.regular = dmin == p.d;
  p.uniform = rmin == p.delta;
  return p;
}

/// Swaps the roles of nodes and blocks.
inline BipartiteGraph dual(const BipartiteGraph& g) {
  std::vector<std::pair<int, int>> e;
  e.reserve(g.edge_count());
  for (auto [node, block] : g.edges()) e.emplace_back(block, node);
  return BipartiteGraph(g.block_ids(), g.node_ids(), e, g.labels());
}

/// Single-source BFS distances in edges; -1 for unreachable.
inline std::vector<int> bfs_distances(const BipartiteGraph& g, Vertex src) {
  std::vector<int> dist(g.vertex_count(), -1);
  std::deque<Vertex> queue{src};
  dist[src] = 0;
  while (!queue.empty()) {
    Vertex u = queue.front();
    queue.pop_front();
    for (Vertex w : g.neighbors(u)) {
      if (dist[w] < 0) {
        dist[w] = dist[u] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

/// A shortest path from src to dst (ties broken by lowest vertex index), or
/// an empty path when unreachable. `blocked` elements are never entered.
inline AltPath shortest_path(const BipartiteGraph& g, Vertex src, Vertex dst,
                             const std::vector<char>* blocked = nullptr) {
  std::vector<Vertex> parent(g.vertex_count(), -2);
  std::deque<Vertex> queue{src};
  parent[src] = -1;
  while (!queue.empty() && parent[dst] == -2) {
    Vertex u = queue.front();
    queue.pop_front();
    for (Vertex w : g.neighbors(u)) {
      if (parent[w] != -2) continue;
      if (blocked && (*blocked)[w] && w != dst) continue;
      parent[w] = u;
      queue.push_back(w);
    }
  }
  if (parent[dst] == -2) return {};
  AltPath p;
  for (Vertex v = dst; v != -1; v = parent[v]) p.push_back(v);
  std::reverse(p.begin(), p.end());
  return p;
}

inline bool is_connected(const BipartiteGraph& g) {
  if (g.vertex_count() == 0) return true;
  auto dist = bfs_distances(g, 0);
  return std::none_of(dist.begin(), dist.end(), [](int d) { return d < 0; });
}

namespace detail {

inline int side_eccentricity_max(const BipartiteGraph& g, bool blocks) {
  int lo = blocks ? g.node_count() : 0;
  int hi = blocks ? g.vertex_count() : g.node_count();
  int best = 0;
  for (Vertex s = lo; s < hi; ++s) {
    auto dist = bfs_distances(g, s);
    for (Vertex t = lo; t < hi; ++t) {
      if (dist[t] < 0) {
        throw DomainError("graph is disconnected; no finite diameter");
      }
      best = std::max(best, dist[t]);
    }
  }
  return best;
}

}  // namespace detail

/// Longest shortest node-to-node path, counted in edges.
inline int diameter(const BipartiteGraph& g) {
  return detail::side_eccentricity_max(g, false);
}

/// Longest shortest block-to-block path, counted in edges.
inline int line_diameter(const BipartiteGraph& g) {
  return detail::side_eccentricity_max(g, true);
}

/// True iff p alternates between sides, follows incidences, and repeats no
/// element.
inline bool validate_path(const BipartiteGraph& g, const AltPath& p) {
  if (p.empty()) return false;
  std::vector<char> seen(g.vertex_count(), 0);
  for (std::size_t i = 0; i < p.size(); ++i) {
    Vertex v = p[i];
    if (v < 0 || v >= g.vertex_count() || seen[v]) return false;
    seen[v] = 1;
    if (i > 0) {
      if (g.is_block(v) == g.is_block(p[i - 1])) return false;
      if (!g.adjacent(p[i - 1], v)) return false;
    }
  }
  return true;
}

}  // namespace dcnd
