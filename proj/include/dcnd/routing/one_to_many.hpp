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

// One-to-many and many-to-one path families, inside a single design and
// across a 2-step graph.

#pragma once

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "dcnd/routing/common.hpp"

namespace dcnd {

namespace detail {

inline void check_targets(const TransversalDesign& t, const TargetMultiset& ts) {
  const auto& g = t.graph();
  for (const auto& x : ts) {
    int lim = x.block ? g.block_count() : g.node_count();
    if (x.index < 0 || x.index >= lim) throw DomainError("target out of range");
  }
}

// Paths from block u to the node targets tn (with repetition), pairwise
// internally disjoint. Index i of the result ends at tn[i].
inline std::vector<AltPath> fan_out_nodes(const TransversalDesign& t, int u,
                                          const std::vector<int>& tn) {
  const auto& g = t.graph();
  const int delta = t.delta();
  const Vertex uv = g.block_vertex(u);
  auto gen = [&](int x, int y) { return g.block_vertex(t.generated_block(x, y)); };
  std::vector<int> root(delta), mult(delta, 0);
  std::vector<std::vector<int>> nonrooted(delta);
  for (int i = 0; i < delta; ++i) root[i] = t.member(u, i);
  for (int i = 0; i < static_cast<int>(tn.size()); ++i) {
    int grp = t.group_of(tn[i]);
    if (tn[i] == root[grp]) {
      ++mult[grp];
    } else {
      nonrooted[grp].push_back(i);
    }
  }
  std::vector<int> order(delta);
  for (int i = 0; i < delta; ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    if (nonrooted[a].size() != nonrooted[b].size()) {
      return nonrooted[a].size() > nonrooted[b].size();
    }
    return mult[a] > mult[b];
  });

  std::vector<int> match(tn.size(), -1);
  std::vector<char> root_used(delta, 0);
  for (int grp = 0; grp < delta; ++grp) {
    if (mult[grp] == 0) continue;
    for (std::size_t i = 0; i < tn.size(); ++i) {
      if (tn[i] == root[grp]) {
        match[i] = grp;
        root_used[grp] = 1;
        break;
      }
    }
  }
  std::vector<int> leftover;
  int ptr = 1;
  for (int grp : order) {
    for (int i : nonrooted[grp]) {
      while (ptr < delta && mult[order[ptr]] > 0) ++ptr;
      if (ptr < delta) {
        if (order[ptr] == grp) throw VerificationError("matched within a group");
        match[i] = order[ptr++];
        root_used[match[i]] = 1;
      } else {
        leftover.push_back(i);
      }
    }
  }
  const int n1 = order[0];
  int special = -1;
  if (leftover.size() > 1) throw VerificationError("matching left several targets");
  if (leftover.size() == 1) {
    int i = leftover[0];
    if (t.group_of(tn[i]) != n1) {
      if (root_used[n1]) throw VerificationError("first root already matched");
      match[i] = n1;
      root_used[n1] = 1;
    } else {
      special = i;
    }
  }

  std::vector<AltPath> paths(tn.size());
  std::set<Vertex> used;
  for (std::size_t i = 0; i < tn.size(); ++i) {
    if (match[i] < 0) continue;
    int r = root[match[i]];
    if (tn[i] == r) {
      paths[i] = {uv, r};
    } else {
      Vertex blk = gen(r, tn[i]);
      used.insert(blk);
      paths[i] = {uv, r, blk, tn[i]};
    }
  }
  auto is_target = [&](int x) {
    return std::find(tn.begin(), tn.end(), x) != tn.end();
  };
  // Relay x for a path from root r to target tt, taken from the listed groups.
  auto relay = [&](int r, int tt, const std::vector<int>& groups) -> int {
    for (int grp : groups) {
      if (grp == t.group_of(r) || grp == t.group_of(tt)) continue;
      for (int x : t.groups()[grp]) {
        if (x == root[grp] || is_target(x)) continue;
        if (used.count(gen(r, x)) || used.count(gen(x, tt))) continue;
        return x;
      }
    }
    throw VerificationError("no relay node available");
  };
  auto relay_path = [&](int r, int x, int tt) {
    Vertex a = gen(r, x), b = gen(x, tt);
    used.insert(a);
    used.insert(b);
    return AltPath{uv, r, a, x, b, tt};
  };

  if (special >= 0) {
    paths[special] = relay_path(root[n1], relay(root[n1], tn[special], {order[1]}),
                                tn[special]);
    root_used[n1] = 1;
  }

  std::vector<int> rest, free_roots;
  for (std::size_t i = 0; i < tn.size(); ++i) {
    if (match[i] < 0 && static_cast<int>(i) != special) rest.push_back(static_cast<int>(i));
  }
  for (int grp : order) {
    if (!root_used[grp]) free_roots.push_back(grp);
  }
  if (rest.size() != free_roots.size()) {
    throw VerificationError("unmatched roots and targets differ in number");
  }
  const std::size_t b = rest.size();
  if (b == 1 && delta == 2) {
    int gr = free_roots[0], c = t.group_of(tn[rest[0]]);
    int xc = -1, xr = -1;
    for (int x : t.groups()[c]) {
      if (x != root[c]) {
        xc = x;
        break;
      }
    }
    for (int x : t.groups()[gr]) {
      if (x != root[gr]) {
        xr = x;
        break;
      }
    }
    paths[rest[0]] = {uv, root[gr], gen(root[gr], xc), xc, gen(xc, xr), xr,
                      gen(xr, tn[rest[0]]), tn[rest[0]]};
  } else if (b == 1) {
    int c = t.group_of(tn[rest[0]]);
    std::vector<int> groups;
    groups.push_back(c == order[delta - 2] ? order[delta - 1] : order[delta - 2]);
    for (int grp : order) groups.push_back(grp);
    int r = root[free_roots[0]];
    paths[rest[0]] = relay_path(r, relay(r, tn[rest[0]], groups), tn[rest[0]]);
  } else if (b >= 2) {
    // Cyclic: root i reaches target i through a relay in the group of
    // root i+1.
    std::vector<int> xs(b, -1);
    for (std::size_t j = 0; j < b; ++j) {
      std::size_t prev = (j + b - 1) % b;
      int r = root[free_roots[prev]], tt = tn[rest[prev]];
      xs[j] = relay(r, tt, {free_roots[j]});
      used.insert(gen(r, xs[j]));
      used.insert(gen(xs[j], tt));
    }
    for (std::size_t i = 0; i < b; ++i) {
      int r = root[free_roots[i]], x = xs[(i + 1) % b], tt = tn[rest[i]];
      paths[rest[i]] = {uv, r, gen(r, x), x, gen(x, tt), tt};
    }
  }
  return paths;
}

}  // namespace detail

/// Delta edge-disjoint paths inside design t from block u to a multiset of
/// Delta node or block targets (internally disjoint when all targets are
/// nodes), each of length at most 7. Needs Delta <= k.
inline PathSet one_to_many_td(const TransversalDesign& t, int u,
                              const TargetMultiset& targets) {
  const auto& g = t.graph();
  const int delta = t.delta();
  if (delta > t.k()) throw DomainError("one-to-many routing needs delta <= k");
  if (static_cast<int>(targets.size()) != delta) {
    throw DomainError("expected " + std::to_string(delta) + " targets, got " +
                      std::to_string(targets.size()));
  }
  if (u < 0 || u >= g.block_count()) throw DomainError("source block out of range");
  detail::check_targets(t, targets);

  // Block targets become node targets: an adjacent root when its group is
  // still free, otherwise the block's node in a fresh free group.
  std::vector<int> tn(delta, -1);
  std::vector<char> occupied(delta, 0), by_root(delta, 0);
  bool all_nodes = true;
  for (int i = 0; i < delta; ++i) {
    if (!targets[i].block) {
      tn[i] = targets[i].index;
      occupied[t.group_of(tn[i])] = 1;
    } else {
      all_nodes = false;
      if (targets[i].index == u) throw DomainError("target equals the source block");
    }
  }
  for (int i = 0; i < delta; ++i) {
    if (!targets[i].block) continue;
    for (int grp = 0; grp < delta; ++grp) {
      if (t.member(targets[i].index, grp) == t.member(u, grp) && !occupied[grp]) {
        tn[i] = t.member(u, grp);
        occupied[grp] = 1;
        by_root[i] = 1;
      }
    }
  }
  for (int i = 0; i < delta; ++i) {
    if (!targets[i].block || by_root[i]) continue;
    int grp = 0;
    while (grp < delta && occupied[grp]) ++grp;
    if (grp == delta) throw VerificationError("no free group for a block target");
    occupied[grp] = 1;
    tn[i] = t.member(targets[i].index, grp);
  }

  auto paths = detail::fan_out_nodes(t, u, tn);
  for (int i = 0; i < delta; ++i) {
    if (!targets[i].block) continue;
    Vertex ub = g.block_vertex(targets[i].index);
    auto& p = paths[i];
    auto it = std::find(p.begin(), p.end(), ub);
    if (it != p.end()) {
      p.erase(it + 1, p.end());
    } else {
      p.push_back(ub);
    }
  }

  PathSet ps;
  ps.host = &g;
  ps.mode = all_nodes ? Disjointness::internal : Disjointness::edge;
  ps.claimed_count = delta;
  ps.length_bound = 7;
  ps.method = all_nodes ? "fan-out-nodes" : "fan-out-mixed";
  ps.paths = std::move(paths);
  std::vector<std::pair<Vertex, Vertex>> ends;
  for (const auto& x : targets) {
    ends.emplace_back(g.block_vertex(u), x.block ? g.block_vertex(x.index) : x.index);
  }
  detail::require_valid(ps, ends, "one-to-many in a design");
  return ps;
}

/// Result of a many-to-one family: sources[i] is the node of the base group
/// where path i starts.
struct FanIn {
  std::vector<int> sources;
  PathSet paths;
};

/// Internally disjoint paths of length at most 3 from distinct nodes of
/// group d0 to each of the given targets. Needs at most min(Delta, k)
/// targets and no target node inside d0.
inline FanIn fan_in_td(const TransversalDesign& t, int d0,
                       const TargetMultiset& targets) {
  const auto& g = t.graph();
  const int delta = t.delta(), k = t.k();
  const int m = static_cast<int>(targets.size());
  if (d0 < 0 || d0 >= delta) throw DomainError("group out of range");
  if (m > std::min(delta, k)) {
    throw DomainError("too many targets for a fan-in: " + std::to_string(m));
  }
  detail::check_targets(t, targets);
  std::vector<char> group_has_target(delta, 0);
  for (const auto& x : targets) {
    if (x.block) continue;
    if (t.group_of(x.index) == d0) {
      throw DomainError("target node '" + g.id(x.index) + "' lies in the source group");
    }
    group_has_target[t.group_of(x.index)] = 1;
  }

  std::vector<int> reps;  // d0 nodes of the class representatives
  std::vector<char> is_rep(m, 0);
  for (int i = 0; i < m; ++i) {
    if (!targets[i].block) continue;
    int key = t.member(targets[i].index, d0);
    if (std::find(reps.begin(), reps.end(), key) == reps.end()) {
      reps.push_back(key);
      is_rep[i] = 1;
    }
  }
  std::deque<int> free_src, free_groups;
  for (int x : t.groups()[d0]) {
    if (std::find(reps.begin(), reps.end(), x) == reps.end()) free_src.push_back(x);
  }
  for (int grp = 0; grp < delta; ++grp) {
    if (grp != d0 && !group_has_target[grp]) free_groups.push_back(grp);
  }
  auto take = [](std::deque<int>& q, const char* what) {
    if (q.empty()) throw DomainError(std::string("fan-in infeasible: no ") + what);
    int v = q.front();
    q.pop_front();
    return v;
  };
  auto gen = [&](int x, int y) { return g.block_vertex(t.generated_block(x, y)); };

  FanIn out;
  out.sources.resize(m);
  out.paths.paths.resize(m);
  for (int i = 0; i < m; ++i) {
    if (!targets[i].block) continue;
    int ui = targets[i].index;
    Vertex uv = g.block_vertex(ui);
    if (is_rep[i]) {
      out.sources[i] = t.member(ui, d0);
      out.paths.paths[i] = {out.sources[i], uv};
    } else {
      int grp = take(free_groups, "free group");
      int x = take(free_src, "free source");
      int r = t.member(ui, grp);
      out.sources[i] = x;
      out.paths.paths[i] = {x, gen(x, r), r, uv};
    }
  }
  for (int i = 0; i < m; ++i) {
    if (targets[i].block) continue;
    int x = take(free_src, "free source");
    out.sources[i] = x;
    out.paths.paths[i] = {x, gen(x, targets[i].index), targets[i].index};
  }
  auto& ps = out.paths;
  ps.host = &g;
  ps.mode = Disjointness::internal;
  ps.claimed_count = m;
  ps.length_bound = 3;
  ps.method = "fan-in";
  std::vector<std::pair<Vertex, Vertex>> ends;
  for (int i = 0; i < m; ++i) {
    ends.emplace_back(out.sources[i], targets[i].block ? g.block_vertex(targets[i].index)
                                                       : targets[i].index);
  }
  if (std::set<int>(out.sources.begin(), out.sources.end()).size() !=
      out.sources.size()) {
    throw VerificationError("fan-in sources repeat");
  }
  detail::require_valid(ps, ends, "fan-in in a design");
  return out;
}

/// Breadth-first tree of the base graph from a root block, pruned so that
/// every leaf is a block holding targets.
struct SkeletonTree {
  Vertex root = -1;
  std::vector<Vertex> parent;  // -1 at the root, -2 outside the tree
  std::vector<std::vector<Vertex>> children;
  std::vector<int> depth;
  std::vector<int> own;  // targets in this block's copy
  std::vector<int> mu;   // targets in the subtree
  std::vector<Vertex> members;  // breadth-first order
  int height = 0;

  bool contains(Vertex v) const { return parent[v] != -2; }
};

inline SkeletonTree build_skeleton(const BipartiteGraph& h0, Vertex root,
                                   const std::vector<Vertex>& target_blocks) {
  const int n = h0.vertex_count();
  if (!h0.is_block(root)) throw DomainError("skeleton root must be a block");
  std::vector<Vertex> bfs_parent(n, -2), order;
  std::vector<int> depth(n, -1);
  std::deque<Vertex> q{root};
  bfs_parent[root] = -1;
  depth[root] = 0;
  while (!q.empty()) {
    Vertex v = q.front();
    q.pop_front();
    order.push_back(v);
    for (Vertex w : h0.neighbors(v)) {
      if (depth[w] < 0) {
        depth[w] = depth[v] + 1;
        bfs_parent[w] = v;
        q.push_back(w);
      }
    }
  }
  SkeletonTree sk;
  sk.root = root;
  sk.parent.assign(n, -2);
  sk.children.assign(n, {});
  sk.depth = depth;
  sk.own.assign(n, 0);
  sk.mu.assign(n, 0);
  for (Vertex b : target_blocks) {
    if (!h0.is_block(b) || depth[b] < 0) throw DomainError("unreachable target block");
    ++sk.own[b];
    for (Vertex v = b; v != -1 && sk.parent[v] == -2; v = bfs_parent[v]) {
      sk.parent[v] = bfs_parent[v];
    }
  }
  sk.parent[root] = -1;
  for (Vertex v : order) {
    if (!sk.contains(v)) continue;
    sk.members.push_back(v);
    sk.height = std::max(sk.height, depth[v]);
    if (v != root) sk.children[sk.parent[v]].push_back(v);
  }
  for (auto it = sk.members.rbegin(); it != sk.members.rend(); ++it) {
    sk.mu[*it] += sk.own[*it];
    if (*it != root) sk.mu[sk.parent[*it]] += sk.mu[*it];
  }
  return sk;
}

/// Delta edge-disjoint paths in H from block b to Delta target blocks (with
/// repetition), of length at most 3h/2 + 7 where h is the skeleton height.
inline PathSet one_to_many(const ConstructedGraph& cg, Vertex b,
                           const std::vector<Vertex>& targets) {
  const auto& h = cg.h;
  const auto& h0 = *cg.base;
  const int delta = cg.delta();
  if (delta > cg.k()) throw DomainError("one-to-many routing needs delta <= k");
  if (static_cast<int>(targets.size()) != delta) {
    throw DomainError("expected " + std::to_string(delta) + " target blocks, got " +
                      std::to_string(targets.size()));
  }
  if (!h.is_block(b)) throw DomainError("source must be a block");
  std::vector<Vertex> copies;
  for (Vertex x : targets) {
    if (!h.is_block(x)) throw DomainError("targets must be blocks");
    if (x == b) throw DomainError("target equals the source block");
    copies.push_back(h0.block_vertex(cg.copy_of(x)));
  }
  const Vertex root = h0.block_vertex(cg.copy_of(b));
  auto sk = build_skeleton(h0, root, copies);

  // A partial path from `start` (a node of H) to target `target`.
  struct Pending {
    Vertex start;
    AltPath rest;
    int target;
  };
  std::map<Vertex, std::vector<Pending>> pending;  // by base node

  auto gather = [&](Vertex qv, const CopyView& view, TargetMultiset& local,
                    std::vector<Pending>& cont) {
    for (int i = 0; i < delta; ++i) {
      if (copies[i] == qv) {
        local.push_back(Target::blk(view.td_block(targets[i])));
        cont.push_back({targets[i], {targets[i]}, i});
      }
    }
    for (Vertex p : sk.children[qv]) {
      for (auto& e : pending[p]) {
        local.push_back(Target::node(view.td_node(e.start)));
        cont.push_back(std::move(e));
      }
    }
  };

  for (auto it = sk.members.rbegin(); it != sk.members.rend(); ++it) {
    Vertex qv = *it;
    if (!h0.is_block(qv) || qv == root) continue;
    CopyView view(cg, h0.block_index(qv));
    TargetMultiset local;
    std::vector<Pending> cont;
    gather(qv, view, local, cont);
    Vertex p0 = sk.parent[qv];
    auto fan = fan_in_td(view.design(), view.root_index(p0), local);
    for (std::size_t j = 0; j < cont.size(); ++j) {
      auto seg = view.lift(fan.paths.paths[j]);
      pending[p0].push_back({seg.front(), detail::join(seg, cont[j].rest), cont[j].target});
    }
  }

  CopyView view(cg, h0.block_index(root));
  TargetMultiset local;
  std::vector<Pending> cont;
  gather(root, view, local, cont);
  auto top = one_to_many_td(view.design(), view.td_block(b), local);

  PathSet ps;
  ps.host = &h;
  ps.mode = Disjointness::edge;
  ps.claimed_count = delta;
  ps.depth = sk.height;
  ps.length_bound = 3 * sk.height / 2 + 7;
  ps.method = "skeleton";
  ps.paths.resize(delta);
  for (std::size_t j = 0; j < cont.size(); ++j) {
    ps.paths[cont[j].target] =
        detail::erase_loops(detail::join(view.lift(top.paths[j]), cont[j].rest));
  }
  std::vector<std::pair<Vertex, Vertex>> ends;
  for (Vertex x : targets) ends.emplace_back(b, x);
  detail::require_valid(ps, ends, "one-to-many routing");
  return ps;
}

}  // namespace dcnd
