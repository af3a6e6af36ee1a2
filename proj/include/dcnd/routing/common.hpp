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

#include <algorithm>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "dcnd/construct.hpp"
#include "dcnd/pathset.hpp"
#include "dcnd/tdesign.hpp"
#include "dcnd/verify.hpp"

namespace dcnd {

/// A target of a one-to-many request: a node or a block, by local index.
struct Target {
  bool block = false;
  int index = 0;

  static Target node(int x) { return {false, x}; }
  static Target blk(int u) { return {true, u}; }
  bool operator==(const Target&) const = default;
};

using TargetMultiset = std::vector<Target>;

/// The copy T_Q inside a 2-step graph, translating between design-local
/// indices and vertices of H.
class CopyView {
 public:
  CopyView(const ConstructedGraph& cg, int q)
      : cg_(&cg), t_(cg.td.get()), q_(q), roots_(&cg.roots_of_copy.at(q)) {}

  int copy() const { return q_; }
  const TransversalDesign& design() const { return *t_; }
  const std::vector<int>& roots() const { return *roots_; }

  /// Position of base node p among the roots of Q, or -1.
  int root_index(int p) const {
    auto it = std::lower_bound(roots_->begin(), roots_->end(), p);
    return it != roots_->end() && *it == p ? static_cast<int>(it - roots_->begin())
                                           : -1;
  }
  bool has_group(int p) const { return root_index(p) >= 0; }

  Vertex h_node(int x) const {
    return (*roots_)[t_->group_of(x)] * t_->k() + t_->position_in_group(x);
  }
  Vertex h_block(int u) const { return cg_->block_vertex(q_, u); }
  Vertex h_vertex(Vertex local) const {
    const auto& g = t_->graph();
    return g.is_block(local) ? h_block(g.block_index(local)) : h_node(local);
  }

  int td_node(Vertex v) const {
    auto [p, j] = cg_->group_of_node.at(v);
    int gi = root_index(p);
    if (gi < 0) throw VerificationError("node outside the copy");
    return t_->node_at(gi, j);
  }
  int td_block(Vertex b) const {
    auto [q, u] = cg_->origin_of_block.at(cg_->h.block_index(b));
    if (q != q_) throw VerificationError("block outside the copy");
    return u;
  }

  /// Block of T_Q through H nodes a and b (distinct groups).
  Vertex gen(Vertex a, Vertex b) const {
    return h_block(t_->generated_block(td_node(a), td_node(b)));
  }
  /// Node of the copy block b lying in G_p.
  Vertex member(Vertex b, int p) const {
    return h_node(t_->member(td_block(b), root_index(p)));
  }

  AltPath lift(const AltPath& local) const {
    AltPath out;
    out.reserve(local.size());
    for (Vertex v : local) out.push_back(h_vertex(v));
    return out;
  }

 private:
  const ConstructedGraph* cg_;
  const TransversalDesign* t_;
  int q_;
  const std::vector<int>* roots_;
};

namespace detail {

/// Fail-fast contract: throws VerificationError unless ps satisfies its
/// own claims and path i runs from ends[i].first to ends[i].second.
inline void require_valid(const PathSet& ps,
                          const std::vector<std::pair<Vertex, Vertex>>& ends,
                          const std::string& what) {
  auto report = assert_disjoint(ps);
  for (std::size_t i = 0; i < ps.paths.size() && i < ends.size(); ++i) {
    const auto& p = ps.paths[i];
    if (p.empty() || p.front() != ends[i].first || p.back() != ends[i].second) {
      report.push_back("path " + std::to_string(i) + " has wrong endpoints");
    }
  }
  if (!report.empty()) {
    std::string msg = what + ": construction failed self-check:";
    for (const auto& r : report) msg += "\n  " + r;
    throw VerificationError(msg);
  }
}

/// Removes cycles: whenever an element repeats, the segment between the two
/// occurrences is dropped.
inline AltPath erase_loops(const AltPath& p) {
  AltPath out;
  for (Vertex v : p) {
    auto it = std::find(out.begin(), out.end(), v);
    if (it != out.end()) {
      out.erase(it + 1, out.end());
    } else {
      out.push_back(v);
    }
  }
  return out;
}

/// a followed by b, where b starts with the last element of a.
inline AltPath join(AltPath a, const AltPath& b) {
  if (a.empty()) return b;
  if (b.empty()) return a;
  if (a.back() != b.front()) throw VerificationError("paths do not meet");
  a.insert(a.end(), b.begin() + 1, b.end());
  return a;
}

inline AltPath reversed(AltPath p) {
  std::reverse(p.begin(), p.end());
  return p;
}

}  // namespace detail

/// Blocks generated by `pairs` inside t, after checking that every pair has
/// exactly one node on block u, no node of u is used twice, and no pair lies
/// inside one group. The results are asserted distinct and different from u.
inline std::vector<int> generate_blocks_from_pairs(const TransversalDesign& t, int u,
                                        const std::vector<std::pair<int, int>>& pairs) {
  const auto& g = t.graph();
  auto on_u = [&](int x) { return g.adjacent(x, g.block_vertex(u)); };
  std::set<int> used_roots;
  std::set<std::pair<int, int>> seen;
  std::vector<int> out;
  for (auto [x, y] : pairs) {
    if (x < 0 || y < 0 || x >= g.node_count() || y >= g.node_count()) {
      throw DomainError("pair references an unknown node");
    }
    if (t.group_of(x) == t.group_of(y)) {
      throw DomainError("pair {" + g.id(x) + ", " + g.id(y) +
                        "} lies inside one group");
    }
    if (on_u(x) == on_u(y)) {
      throw DomainError("pair {" + g.id(x) + ", " + g.id(y) +
                        "} must have exactly one node on the block");
    }
    int root = on_u(x) ? x : y;
    if (!used_roots.insert(root).second) {
      throw DomainError("node '" + g.id(root) + "' used by two pairs");
    }
    if (!seen.insert(std::minmax(x, y)).second) {
      throw DomainError("repeated pair");
    }
    out.push_back(t.generated_block(x, y));
  }
  std::set<int> distinct(out.begin(), out.end());
  if (distinct.size() != out.size() || distinct.count(u)) {
    throw VerificationError("generated blocks are not distinct from each "
                            "other and from the base block");
  }
  return out;
}

}  // namespace dcnd
