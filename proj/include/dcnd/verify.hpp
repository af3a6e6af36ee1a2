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

// Independent oracles. Nothing in this header calls into the routing code.

#pragma once

#include <algorithm>
#include <array>
#include <deque>
#include <limits>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "dcnd/bigraph.hpp"
#include "dcnd/pathset.hpp"
#include "dcnd/tdesign.hpp"

namespace dcnd {

/// Every way in which ps breaks its own claims; empty iff it holds.
///
/// internal: sources and destinations appear only as sources or destinations,
///   every other element appears on at most one path.
/// edge: no (node, block) incidence is traversed by two path steps.
inline std::vector<std::string> assert_disjoint(const PathSet& ps) {
  std::vector<std::string> report;
  if (!ps.host) return {"path set has no host graph"};
  const auto& g = *ps.host;
  if (static_cast<int>(ps.paths.size()) != ps.claimed_count) {
    report.push_back("claimed " + std::to_string(ps.claimed_count) +
                     " paths, found " + std::to_string(ps.paths.size()));
  }
  for (std::size_t i = 0; i < ps.paths.size(); ++i) {
    const auto& p = ps.paths[i];
    if (!validate_path(g, p)) {
      report.push_back("path " + std::to_string(i) + " is not a valid path");
      continue;
    }
    if (path_length(p) > ps.length_bound) {
      report.push_back("path " + std::to_string(i) + " has length " +
                       std::to_string(path_length(p)) + " > bound " +
                       std::to_string(ps.length_bound));
    }
  }
  if (!report.empty()) return report;

  if (ps.mode == Disjointness::internal) {
    std::set<Vertex> ends;
    for (const auto& p : ps.paths) {
      ends.insert(p.front());
      ends.insert(p.back());
    }
    std::map<Vertex, int> interior_use;
    for (std::size_t i = 0; i < ps.paths.size(); ++i) {
      const auto& p = ps.paths[i];
      for (std::size_t s = 1; s + 1 < p.size(); ++s) {
        if (ends.count(p[s])) {
          report.push_back("endpoint '" + g.id(p[s]) +
                           "' is interior to path " + std::to_string(i));
        } else if (++interior_use[p[s]] == 2) {
          report.push_back("element '" + g.id(p[s]) +
                           "' is interior to two paths");
        }
      }
    }
  } else {
    std::map<std::pair<Vertex, Vertex>, int> use;
    for (const auto& p : ps.paths) {
      for (std::size_t s = 1; s < p.size(); ++s) {
        auto e = std::minmax(p[s - 1], p[s]);
        if (++use[{e.first, e.second}] == 2) {
          report.push_back("edge {" + g.id(e.first) + ", " + g.id(e.second) +
                           "} used twice");
        }
      }
    }
  }
  return report;
}

namespace detail {

/// Unit-capacity Edmonds-Karp on an explicit residual graph.
class FlowNet {
 public:
  explicit FlowNet(int n) : head_(n, -1) {}

  void add_arc(int u, int v, int cap) {
    to_.push_back(v); cap_.push_back(cap); next_.push_back(head_[u]);
    head_[u] = static_cast<int>(to_.size()) - 1;
    to_.push_back(u); cap_.push_back(0); next_.push_back(head_[v]);
    head_[v] = static_cast<int>(to_.size()) - 1;
  }

  int max_flow(int s, int t) {
    int flow = 0;
    const int n = static_cast<int>(head_.size());
    while (true) {
      std::vector<int> via(n, -1);
      std::deque<int> q{s};
      std::vector<char> seen(n, 0);
      seen[s] = 1;
      while (!q.empty() && !seen[t]) {
        int u = q.front();
        q.pop_front();
        for (int a = head_[u]; a != -1; a = next_[a]) {
          if (cap_[a] > 0 && !seen[to_[a]]) {
            seen[to_[a]] = 1;
            via[to_[a]] = a;
            q.push_back(to_[a]);
          }
        }
      }
      if (!seen[t]) return flow;
      int push = std::numeric_limits<int>::max();
      for (int v = t; v != s; v = to_[via[v] ^ 1]) {
        push = std::min(push, cap_[via[v]]);
      }
      for (int v = t; v != s; v = to_[via[v] ^ 1]) {
        cap_[via[v]] -= push;
        cap_[via[v] ^ 1] += push;
      }
      flow += push;
    }
  }

 private:
  std::vector<int> head_, to_, cap_, next_;
};

}  // namespace detail

struct MengerQuery {
  const BipartiteGraph* host = nullptr;
  Vertex source = -1;
  Vertex sink = -1;
  Disjointness mode = Disjointness::internal;
};

/// Maximum number of internally- (or edge-) disjoint source-sink paths.
inline int menger_count(const MengerQuery& q) {
  const auto& g = *q.host;
  if (q.source == q.sink) throw DomainError("Menger query needs source != sink");
  const int n = g.vertex_count();
  const int inf = n + 1;
  if (q.mode == Disjointness::internal) {
    detail::FlowNet net(2 * n);
    for (Vertex v = 0; v < n; ++v) {
      bool terminal = v == q.source || v == q.sink;
      net.add_arc(2 * v, 2 * v + 1, terminal ? inf : 1);
      for (Vertex w : g.neighbors(v)) net.add_arc(2 * v + 1, 2 * w, 1);
    }
    return net.max_flow(2 * q.source, 2 * q.sink + 1);
  }
  detail::FlowNet net(n);
  for (Vertex v = 0; v < n; ++v) {
    for (Vertex w : g.neighbors(v)) {
      if (v < w) {
        net.add_arc(v, w, 1);
        net.add_arc(w, v, 1);
      }
    }
  }
  return net.max_flow(q.source, q.sink);
}

inline int menger_count(const BipartiteGraph& g, Vertex s, Vertex t,
                        Disjointness mode = Disjointness::internal) {
  return menger_count(MengerQuery{&g, s, t, mode});
}

/// Side-preserving isomorphism search by backtracking. `colour_a/b` optionally
/// restrict which vertices may correspond. Returns a mapping a -> b.
inline std::optional<std::vector<Vertex>> find_isomorphism(
    const BipartiteGraph& a, const BipartiteGraph& b,
    const std::vector<int>& colour_a = {}, const std::vector<int>& colour_b = {}) {
  if (a.node_count() != b.node_count() || a.block_count() != b.block_count() ||
      a.edge_count() != b.edge_count()) {
    return std::nullopt;
  }
  const int n = a.vertex_count();
  auto colour = [](const std::vector<int>& c, Vertex v) {
    return c.empty() ? 0 : c[v];
  };
  // BFS order from vertex 0 keeps each new vertex adjacent to placed ones.
  std::vector<Vertex> order;
  std::vector<char> placed(n, 0);
  for (Vertex r = 0; r < n; ++r) {
    if (placed[r]) continue;
    std::deque<Vertex> q{r};
    placed[r] = 1;
    while (!q.empty()) {
      Vertex u = q.front();
      q.pop_front();
      order.push_back(u);
      for (Vertex w : a.neighbors(u)) {
        if (!placed[w]) {
          placed[w] = 1;
          q.push_back(w);
        }
      }
    }
  }
  std::vector<Vertex> map(n, -1), inv(n, -1);
  auto ok = [&](Vertex u, Vertex c) {
    if (inv[c] != -1 || a.is_block(u) != b.is_block(c) ||
        a.degree(u) != b.degree(c) || colour(colour_a, u) != colour(colour_b, c)) {
      return false;
    }
    for (Vertex w : a.neighbors(u)) {
      if (map[w] != -1 && !b.adjacent(c, map[w])) return false;
    }
    int mapped_nb = 0;
    for (Vertex w : a.neighbors(u)) mapped_nb += map[w] != -1;
    int mapped_nb_b = 0;
    for (Vertex w : b.neighbors(c)) mapped_nb_b += inv[w] != -1;
    return mapped_nb == mapped_nb_b;
  };
  auto rec = [&](auto&& self, std::size_t i) -> bool {
    if (i == order.size()) return true;
    Vertex u = order[i];
    for (Vertex c = 0; c < n; ++c) {
      if (!ok(u, c)) continue;
      map[u] = c;
      inv[c] = u;
      if (self(self, i + 1)) return true;
      map[u] = -1;
      inv[c] = -1;
    }
    return false;
  };
  if (!rec(rec, 0)) return std::nullopt;
  return map;
}

inline bool are_isomorphic(const BipartiteGraph& a, const BipartiteGraph& b) {
  return find_isomorphism(a, b).has_value();
}

/// Isomorphism of transversal designs: must map groups onto groups.
inline bool designs_isomorphic(const TransversalDesign& a,
                               const TransversalDesign& b) {
  if (a.delta() != b.delta() || a.k() != b.k()) return false;
  // Colour every node by group and try each group permutation.
  std::vector<int> perm(a.delta());
  std::iota(perm.begin(), perm.end(), 0);
  do {
    std::vector<int> ca(a.graph().vertex_count(), -1);
    std::vector<int> cb(b.graph().vertex_count(), -1);
    for (int x = 0; x < a.graph().node_count(); ++x) ca[x] = perm[a.group_of(x)];
    for (int x = 0; x < b.graph().node_count(); ++x) cb[x] = b.group_of(x);
    if (find_isomorphism(a.graph(), b.graph(), ca, cb)) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

struct Td32Enumeration {
  int raw_candidates = 0;    // ordered 4-tuples of transversal blocks
  int valid_candidates = 0;  // tuples satisfying the design clauses
  std::vector<TransversalDesign> representatives;  // one per class
  int classes() const { return static_cast<int>(representatives.size()); }
};

/// Exhaustive search for [3,2]-designs on groups {r_i, s_i}: a block picks one
/// node per group, i.e. a 3-bit choice vector. All 8^4 ordered block tuples
/// are tested and the valid ones quotiented by group permutation, swaps
/// within groups, and block reordering.
inline Td32Enumeration enumerate_td_3_2() {
  Td32Enumeration out;
  auto apply = [](int vec, const std::array<int, 3>& perm, int flips) {
    int r = 0;
    for (int i = 0; i < 3; ++i) {
      int bit = ((vec >> i) & 1) ^ ((flips >> i) & 1);
      r |= bit << perm[i];
    }
    return r;
  };
  std::set<std::vector<int>> canon_seen;
  for (int code = 0; code < 8 * 8 * 8 * 8; ++code) {
    ++out.raw_candidates;
    std::array<int, 4> blk = {code & 7, (code >> 3) & 7, (code >> 6) & 7,
                              (code >> 9) & 7};
    bool valid = true;
    // Each pair (group i value a, group j value b) must be covered once.
    for (int i = 0; i < 3 && valid; ++i) {
      for (int j = i + 1; j < 3 && valid; ++j) {
        for (int va = 0; va < 2 && valid; ++va) {
          for (int vb = 0; vb < 2 && valid; ++vb) {
            int c = 0;
            for (int u : blk) {
              c += ((u >> i) & 1) == va && ((u >> j) & 1) == vb;
            }
            valid = c == 1;
          }
        }
      }
    }
    if (!valid) continue;
    ++out.valid_candidates;
    std::vector<int> best;
    std::array<int, 3> perm = {0, 1, 2};
    do {
      for (int flips = 0; flips < 8; ++flips) {
        std::vector<int> img;
        for (int u : blk) img.push_back(apply(u, perm, flips));
        std::sort(img.begin(), img.end());
        if (best.empty() || img < best) best = img;
      }
    } while (std::next_permutation(perm.begin(), perm.end()));
    if (!canon_seen.insert(best).second) continue;

    std::vector<std::string> nodes = {"r1", "s1", "r2", "s2", "r3", "s3"};
    std::vector<std::string> blocks;
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < 4; ++u) {
      blocks.push_back("B" + std::to_string(u + 1));
      for (int i = 0; i < 3; ++i) {
        edges.emplace_back(2 * i + ((blk[u] >> i) & 1), u);
      }
    }
    out.representatives.emplace_back(
        3, 2, BipartiteGraph(nodes, blocks, edges),
        std::vector<std::vector<int>>{{0, 1}, {2, 3}, {4, 5}});
  }
  return out;
}

}  // namespace dcnd
