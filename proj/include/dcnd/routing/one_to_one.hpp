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

// Block-to-block disjoint paths in a 2-step graph H.
//
// Notation used below: b1 lies in copy T_Q, b2 in T_Q'. For a base node p
// adjacent to Q, r(p) is the node of b1 in G_p; s(p) is the node of b2 in
// G_p for p adjacent to Q'. C is the set of common neighbours of Q and Q'.

#pragma once

#include <algorithm>
#include <deque>
#include <limits>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "dcnd/routing/common.hpp"

namespace dcnd {

/// Internally disjoint paths between two blocks of the base graph.
struct BasePaths {
  int lambda = 0;  // size of a maximum family
  std::vector<AltPath> paths;
  int mu = 0;  // longest returned path
};

namespace detail {

// Successive-shortest-path min-cost flow with unit augmentations.
class MinCostFlow {
 public:
  explicit MinCostFlow(int n) : out_(n) {}

  void add_arc(int u, int v, int cap, int cost) {
    out_[u].push_back(static_cast<int>(arcs_.size()));
    arcs_.push_back({v, cap, cost, cap});
    out_[v].push_back(static_cast<int>(arcs_.size()));
    arcs_.push_back({u, 0, -cost, 0});
  }

  bool augment(int s, int t) {
    const int n = static_cast<int>(out_.size());
    const int inf = std::numeric_limits<int>::max();
    std::vector<int> dist(n, inf), via(n, -1);
    std::vector<char> queued(n, 0);
    std::deque<int> q{s};
    dist[s] = 0;
    while (!q.empty()) {
      int u = q.front();
      q.pop_front();
      queued[u] = 0;
      for (int a : out_[u]) {
        const auto& arc = arcs_[a];
        if (arc.cap > 0 && dist[u] + arc.cost < dist[arc.to]) {
          dist[arc.to] = dist[u] + arc.cost;
          via[arc.to] = a;
          if (!queued[arc.to]) {
            queued[arc.to] = 1;
            q.push_back(arc.to);
          }
        }
      }
    }
    if (dist[t] == inf) return false;
    for (int v = t; v != s; v = arcs_[via[v] ^ 1].to) {
      arcs_[via[v]].cap -= 1;
      arcs_[via[v] ^ 1].cap += 1;
    }
    return true;
  }

  /// Arcs leaving u that carry flow, as (arc id, head).
  std::vector<std::pair<int, int>> used_arcs(int u) const {
    std::vector<std::pair<int, int>> r;
    for (int a : out_[u]) {
      if (a % 2 == 0 && arcs_[a].cap < arcs_[a].orig) r.emplace_back(a, arcs_[a].to);
    }
    return r;
  }
  void consume(int a) { arcs_[a].cap += 1; }

 private:
  struct Arc {
    int to, cap, cost, orig;
  };
  std::vector<Arc> arcs_;
  std::vector<std::vector<int>> out_;
};

/// Shortens a base path Q, q1, ..., Q' so that only its first node touches Q
/// and only its last node touches Q'.
inline AltPath shortcut_base_path(const BipartiteGraph& h0, const AltPath& p) {
  const Vertex q = p.front(), qq = p.back();
  std::size_t i = 1;
  for (std::size_t a = 1; a + 1 < p.size(); a += 2) {
    if (h0.adjacent(p[a], q)) i = a;
  }
  std::size_t j = i;
  while (!h0.adjacent(p[j], qq)) j += 2;
  AltPath out{q};
  out.insert(out.end(), p.begin() + static_cast<std::ptrdiff_t>(i),
             p.begin() + static_cast<std::ptrdiff_t>(j) + 1);
  out.push_back(qq);
  return out;
}

}  // namespace detail

/// Up to `limit` internally disjoint paths between base blocks q and qq
/// (vertices of h0) of minimum total length, shortcut so that interior
/// nodes other than the first and last avoid q and qq. limit 0 means all.
inline BasePaths h0_disjoint_paths(const BipartiteGraph& h0, Vertex q, Vertex qq,
                                   int limit = 0) {
  if (q == qq || !h0.is_block(q) || !h0.is_block(qq)) {
    throw DomainError("base paths need two distinct blocks");
  }
  const int n = h0.vertex_count();
  auto in = [](Vertex v) { return 2 * v; };
  auto out = [](Vertex v) { return 2 * v + 1; };
  detail::MinCostFlow net(2 * n);
  for (Vertex v = 0; v < n; ++v) {
    net.add_arc(in(v), out(v), v == q || v == qq ? 0 : 1, 0);
  }
  for (Vertex v = 0; v < n; ++v) {
    for (Vertex w : h0.neighbors(v)) net.add_arc(out(v), in(w), 1, 1);
  }
  BasePaths res;
  res.lambda = menger_count(h0, q, qq, Disjointness::internal);
  int want = limit > 0 ? std::min(limit, res.lambda) : res.lambda;
  for (int f = 0; f < want; ++f) {
    if (!net.augment(out(q), in(qq))) throw VerificationError("flow fell short");
  }
  for (int f = 0; f < want; ++f) {
    AltPath p{q};
    int cur = out(q);
    while (cur != in(qq)) {
      auto used = net.used_arcs(cur);
      if (used.empty()) throw VerificationError("flow decomposition failed");
      net.consume(used.front().first);
      cur = used.front().second;
      if (cur % 2 == 0) p.push_back(cur / 2);
    }
    res.paths.push_back(detail::shortcut_base_path(h0, p));
  }
  for (const auto& p : res.paths) res.mu = std::max(res.mu, path_length(p));
  return res;
}

/// Delta internally disjoint paths between two blocks of the same copy.
inline PathSet one_to_one_same_copy(const ConstructedGraph& cg, Vertex b1,
                                    Vertex b2) {
  const auto& h = cg.h;
  if (!h.is_block(b1) || !h.is_block(b2) || b1 == b2) {
    throw DomainError("one-to-one routing needs two distinct blocks");
  }
  const int q = cg.copy_of(b1);
  if (cg.copy_of(b2) != q) throw DomainError("blocks lie in different copies");
  CopyView view(cg, q);
  const auto& t = view.design();
  const auto& tg = t.graph();
  const int delta = t.delta();
  const int u1 = view.td_block(b1), u2 = view.td_block(b2);

  std::vector<int> differ;
  std::vector<AltPath> local;
  const Vertex lb1 = tg.block_vertex(u1), lb2 = tg.block_vertex(u2);
  for (int i = 0; i < delta; ++i) {
    if (t.member(u1, i) == t.member(u2, i)) {
      local.push_back({lb1, t.member(u1, i), lb2});
    } else {
      differ.push_back(i);
    }
  }
  const int b = static_cast<int>(differ.size());
  if (b == 1) {
    // The other group holds the shared node; detour through it.
    int d = differ[0], c = d == 0 ? 1 : 0;
    int r = t.member(u1, d), s = t.member(u2, d), shared = t.member(u1, c);
    int x = -1;
    for (int x0 : t.groups()[c]) {
      if (x0 != shared) {
        x = x0;
        break;
      }
    }
    local.push_back({lb1, r, tg.block_vertex(t.generated_block(r, x)), x,
                     tg.block_vertex(t.generated_block(s, x)), s, lb2});
  } else {
    for (int i = 0; i < b; ++i) {
      int r = t.member(u1, differ[i]);
      int s = t.member(u2, differ[(i + 1) % b]);
      local.push_back({lb1, r, tg.block_vertex(t.generated_block(r, s)), s, lb2});
    }
  }

  PathSet ps;
  ps.host = &h;
  ps.mode = Disjointness::internal;
  ps.claimed_count = delta;
  ps.length_bound = b == 1 ? 6 : 4;
  ps.method = "same-copy";
  for (const auto& p : local) ps.paths.push_back(view.lift(p));
  detail::require_valid(ps, std::vector(ps.paths.size(), std::pair{b1, b2}),
                        "same-copy routing");
  return ps;
}

namespace detail {

struct Cross {
  const ConstructedGraph& cg;
  const BipartiteGraph& h0;
  Vertex b1, b2;
  int q1, q2;
  CopyView v1, v2;
  int k;
  std::vector<int> common;

  Cross(const ConstructedGraph& g, Vertex a, Vertex b)
      : cg(g), h0(*g.base), b1(a), b2(b), q1(g.copy_of(a)), q2(g.copy_of(b)),
        v1(g, q1), v2(g, q2), k(g.k()) {
    std::set_intersection(v1.roots().begin(), v1.roots().end(),
                          v2.roots().begin(), v2.roots().end(),
                          std::back_inserter(common));
  }

  Vertex r(int p) const { return v1.member(b1, p); }
  Vertex s(int p) const { return v2.member(b2, p); }
  Vertex node(int p, int j) const { return cg.node_vertex(p, j); }
  int pos(Vertex x) const { return cg.group_of_node[x].second; }

  std::vector<Vertex> group_without(int p, std::initializer_list<Vertex> skip) const {
    std::vector<Vertex> out;
    for (int j = 0; j < k; ++j) {
      Vertex x = node(p, j);
      if (std::find(skip.begin(), skip.end(), x) == skip.end()) out.push_back(x);
    }
    return out;
  }

  /// Groups of Q and Q' paired up, common groups first on both sides.
  std::vector<std::pair<int, int>> aligned(const std::set<int>& skip1,
                                           const std::set<int>& skip2,
                                           std::size_t m) const {
    std::vector<int> a, b, both;
    for (int p : v1.roots()) {
      if (!skip1.count(p)) a.push_back(p);
    }
    for (int p : v2.roots()) {
      if (!skip2.count(p)) b.push_back(p);
    }
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                          std::back_inserter(both));
    std::vector<int> left = both, right = both;
    for (int p : a) {
      if (!std::binary_search(both.begin(), both.end(), p)) left.push_back(p);
    }
    for (int p : b) {
      if (!std::binary_search(both.begin(), both.end(), p)) right.push_back(p);
    }
    if (left.size() < m || right.size() < m) {
      throw VerificationError("not enough groups to pair");
    }
    std::vector<std::pair<int, int>> out;
    for (std::size_t i = 0; i < m; ++i) out.emplace_back(left[i], right[i]);
    return out;
  }

  /// Walks from node cur (in the group of path[1]) through the copies along
  /// the base path, keeping the position in each group, and lands on `last`
  /// in the group of path[len-1]. Returns the blocks and nodes visited after
  /// cur.
  AltPath hops(const AltPath& path, Vertex cur, Vertex last) const {
    AltPath seg;
    for (std::size_t i = 2; i + 2 < path.size(); i += 2) {
      CopyView v(cg, h0.block_index(path[i]));
      bool final_hop = i + 3 == path.size();
      Vertex next = final_hop ? last : node(path[i + 1], pos(cur));
      seg.push_back(v.gen(cur, next));
      seg.push_back(next);
      cur = next;
    }
    if (cur != last) throw VerificationError("hop chain missed its target");
    return seg;
  }

  /// Single path from b1 to b2 following a base path of length >= 4.
  AltPath chain(const AltPath& path) const {
    Vertex start = r(path[1]), end = s(path[path.size() - 2]);
    AltPath p{b1, start};
    auto seg = hops(path, start, end);
    p.insert(p.end(), seg.begin(), seg.end());
    p.push_back(b2);
    return p;
  }
};

struct Bundle {
  std::vector<AltPath> paths;
  Vertex fix_node = -1;
};

// m+1 paths through the common group G_{p1} and m paired groups.
inline Bundle pi_bundle(const Cross& c, int p1,
                        const std::vector<std::pair<int, int>>& pairs) {
  const Vertex b1 = c.b1, b2 = c.b2;
  const Vertex r0 = c.r(p1), s0 = c.s(p1);
  const std::size_t m = pairs.size();
  std::vector<Vertex> t(m), w(m);
  auto rest = c.group_without(p1, {r0, s0});
  Bundle out;
  std::size_t first = 0;
  if (r0 == s0) {
    for (std::size_t j = 0; j < m; ++j) t[j] = w[j] = rest.at(j);
    out.paths.push_back({b1, r0, b2});
  } else if (m > 0) {
    t[0] = s0;
    w[0] = r0;
    for (std::size_t j = 1; j < m; ++j) t[j] = w[j] = rest.at(j - 1);
    auto [g1, h1] = pairs[0];
    Vertex r1 = c.r(g1), s1 = c.s(h1);
    if (g1 == h1 && r1 == s1) {
      Vertex x1 = c.group_without(g1, {r1}).front();
      out.fix_node = x1;
      out.paths.push_back({b1, r1, b2});
      out.paths.push_back({b1, r0, c.v1.gen(r0, x1), x1, c.v2.gen(s0, x1), s0, b2});
    } else {
      out.paths.push_back({b1, r0, c.v2.gen(s1, r0), s1, b2});
      out.paths.push_back({b1, r1, c.v1.gen(r1, s0), s0, b2});
    }
    first = 1;
  } else {
    throw VerificationError("bundle needs a paired group");
  }
  for (std::size_t j = first; j < m; ++j) {
    auto [g, hh] = pairs[j];
    Vertex rj = c.r(g), sj = c.s(hh);
    if (g == hh && rj == sj) {
      out.paths.push_back({b1, rj, b2});
    } else {
      out.paths.push_back(
          {b1, rj, c.v1.gen(rj, t[j]), t[j], c.v2.gen(sj, w[j]), sj, b2});
    }
  }
  return out;
}

// m+1 paths along a base path A of length >= 4, avoiding the groups in skip1
// (around Q) and skip2 (around Q').
inline std::vector<AltPath> transit_bundle(const Cross& c, const AltPath& a,
                                           std::size_t m, std::set<int> skip1,
                                           std::set<int> skip2) {
  const int g0 = a[1], hg = a[a.size() - 2];
  skip1.insert(g0);
  skip2.insert(hg);
  auto pairs = c.aligned(skip1, skip2, m);
  const Vertex r0 = c.r(g0), s0 = c.s(hg);
  auto starts = c.group_without(g0, {r0});
  auto lands = c.group_without(hg, {s0});
  starts.insert(starts.begin(), r0);
  lands.insert(lands.begin(), s0);
  std::vector<AltPath> out;
  for (std::size_t j = 0; j <= m; ++j) {
    AltPath p{c.b1};
    if (j == 0) {
      p.push_back(r0);
    } else {
      Vertex rj = c.r(pairs[j - 1].first);
      p.insert(p.end(), {rj, c.v1.gen(rj, starts[j]), starts[j]});
    }
    auto seg = c.hops(a, starts[j], lands[j]);
    p.insert(p.end(), seg.begin(), seg.end());
    if (j > 0) {
      Vertex sj = c.s(pairs[j - 1].second);
      p.insert(p.end(), {c.v2.gen(lands[j], sj), sj});
    }
    p.push_back(c.b2);
    out.push_back(std::move(p));
  }
  return out;
}

/// Isomorphism from a [3,2]-design onto the canonical one sending block u to
/// B1, as a vertex map; found among the 48 group permutations and flips.
inline std::vector<Vertex> iso_to_canonical_3_2(const TransversalDesign& t, int u) {
  static const TransversalDesign canon = canonical_td_3_2();
  const auto& cg = canon.graph();
  const auto& tg = t.graph();
  if (t.delta() != 3 || t.k() != 2) throw DomainError("design is not [3,2]");
  std::array<int, 3> perm = {0, 1, 2};
  do {
    for (int flips = 0; flips < 8; ++flips) {
      std::vector<Vertex> map(tg.vertex_count(), -1);
      for (int x = 0; x < tg.node_count(); ++x) {
        int g = t.group_of(x);
        map[x] = canon.node_at(perm[g], t.position_in_group(x) ^ ((flips >> g) & 1));
      }
      bool ok = true;
      for (int b = 0; b < tg.block_count() && ok; ++b) {
        int m0 = map[t.member(b, 0)], m1 = map[t.member(b, 1)];
        int cb = canon.generated_block(m0, m1);
        ok = cg.adjacent(map[t.member(b, 2)], cg.block_vertex(cb));
        map[tg.block_vertex(b)] = cg.block_vertex(cb);
      }
      if (ok && map[tg.block_vertex(u)] == cg.block_vertex(0)) return map;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  throw VerificationError("no isomorphism onto the canonical [3,2]-design");
}

/// Paths inside a [3,2]-design from block u to each target node, pairwise
/// internally disjoint, interiors avoiding targets and `avoid`. Chooses the
/// family with the smallest longest path, then the smallest total.
inline std::optional<std::vector<AltPath>> small_fan(const TransversalDesign& t,
                                                     int u,
                                                     const std::vector<int>& targets,
                                                     const std::set<int>& avoid) {
  static const TransversalDesign canon = canonical_td_3_2();
  const auto& g = canon.graph();
  auto map = iso_to_canonical_3_2(t, u);
  std::vector<Vertex> inv(map.size(), -1);
  for (std::size_t v = 0; v < map.size(); ++v) inv[map[v]] = static_cast<Vertex>(v);

  std::set<Vertex> ctargets, cavoid;
  for (int x : targets) ctargets.insert(map[x]);
  for (int x : avoid) cavoid.insert(map[x]);
  const Vertex src = g.block_vertex(0);

  std::vector<std::vector<AltPath>> options(targets.size());
  AltPath cur{src};
  std::vector<char> on(g.vertex_count(), 0);
  on[src] = 1;
  auto dfs = [&](auto&& self, Vertex v) -> void {
    for (Vertex w : g.neighbors(v)) {
      if (on[w] || cavoid.count(w)) continue;
      cur.push_back(w);
      if (ctargets.count(w)) {
        for (std::size_t i = 0; i < targets.size(); ++i) {
          if (map[targets[i]] == w) options[i].push_back(cur);
        }
      } else {
        on[w] = 1;
        self(self, w);
        on[w] = 0;
      }
      cur.pop_back();
    }
  };
  dfs(dfs, src);

  std::optional<std::vector<AltPath>> best;
  std::pair<int, int> best_key{std::numeric_limits<int>::max(), 0};
  std::vector<AltPath> pick;
  std::set<Vertex> used;
  auto choose = [&](auto&& self, std::size_t i, int mx, int sum) -> void {
    if (std::pair{mx, sum} >= best_key) return;
    if (i == targets.size()) {
      best_key = {mx, sum};
      best = pick;
      return;
    }
    for (const auto& p : options[i]) {
      bool clash = false;
      for (std::size_t a = 1; a + 1 < p.size() && !clash; ++a) clash = used.count(p[a]);
      if (clash) continue;
      for (std::size_t a = 1; a + 1 < p.size(); ++a) used.insert(p[a]);
      pick.push_back(p);
      int len = path_length(p);
      self(self, i + 1, std::max(mx, len), sum + len);
      pick.pop_back();
      for (std::size_t a = 1; a + 1 < p.size(); ++a) used.erase(p[a]);
    }
  };
  choose(choose, 0, 0, 0);
  if (!best) return std::nullopt;
  for (auto& p : *best) {
    for (auto& v : p) v = inv[v];
  }
  return best;
}

}  // namespace detail

/// Internally disjoint paths between blocks of different copies: Delta of
/// them when the two base blocks are joined by two disjoint paths and
/// Delta = k+1, min(Delta, k) otherwise.
inline PathSet one_to_one(const ConstructedGraph& cg, Vertex b1, Vertex b2) {
  const auto& h = cg.h;
  if (!h.is_block(b1) || !h.is_block(b2) || b1 == b2) {
    throw DomainError("one-to-one routing needs two distinct blocks");
  }
  if (cg.copy_of(b1) == cg.copy_of(b2)) {
    throw DomainError("blocks lie in the same copy");
  }
  detail::Cross c(cg, b1, b2);
  const auto& h0 = c.h0;
  const int k = c.k, delta = cg.delta();
  const Vertex hq1 = h0.block_vertex(c.q1), hq2 = h0.block_vertex(c.q2);
  const int lambda = menger_count(h0, hq1, hq2, Disjointness::internal);

  PathSet ps;
  ps.host = &h;
  ps.mode = Disjointness::internal;
  ps.lambda_count = lambda;
  const bool full = delta == k + 1 && lambda >= 2;
  ps.claimed_count = full ? delta : std::min(delta, k);
  const std::size_t nc = c.common.size();

  if (full && nc >= 2 && k == 2) {
    // Delta = 3, k = 2: search the tiny design exhaustively.
    ps.method = "shared-neighbours-k2";
    ps.length_bound = 6;
    ps.mu = 2;
    std::vector<AltPath> paths;
    const auto& t = c.v1.design();
    if (nc == 3) {
      std::vector<int> tg;
      for (int p : c.common) tg.push_back(c.v1.td_node(c.s(p)));
      auto fan = detail::small_fan(t, c.v1.td_block(b1), tg, {});
      if (!fan) throw VerificationError("no fan in the [3,2] copy");
      for (const auto& p : *fan) {
        auto lp = c.v1.lift(p);
        lp.push_back(b2);
        paths.push_back(lp);
      }
    } else {
      int pi = c.common[0], pj = c.common[1];
      Vertex xi = c.s(pi), xj = c.s(pj);
      std::vector<Vertex> cand = {c.group_without(pi, {xi}).front(),
                                  c.group_without(pj, {xj}).front()};
      for (int a = 0; a < 2 && paths.empty(); ++a) {
        Vertex x = cand[a], y = cand[1 - a];
        std::vector<Vertex> ends = {xi, xj, x};
        std::vector<int> t2, t1;
        for (Vertex e : ends) {
          t2.push_back(c.v2.td_node(e));
          t1.push_back(c.v1.td_node(e));
        }
        auto fan2 = detail::small_fan(c.v2.design(), c.v2.td_block(b2), t2,
                                      {c.v2.td_node(y)});
        if (!fan2) continue;
        auto fan1 = detail::small_fan(t, c.v1.td_block(b1), t1, {});
        if (!fan1) continue;
        for (std::size_t i = 0; i < ends.size(); ++i) {
          paths.push_back(detail::join(c.v1.lift((*fan1)[i]),
                                       detail::reversed(c.v2.lift((*fan2)[i]))));
        }
      }
    }
    ps.paths = std::move(paths);
    for (int p : std::vector<int>(c.common.begin(), c.common.begin() + 2)) {
      ps.base_paths.push_back({hq1, p, hq2});
    }
  } else if (full && nc >= 2) {
    ps.method = "shared-neighbours";
    ps.length_bound = 6;
    ps.mu = 2;
    const int p1 = c.common[0], p2 = c.common[1];
    auto pairs = c.aligned({p1, p2}, {p1, p2}, static_cast<std::size_t>(k - 1));
    const Vertex r2 = c.r(p2), s2 = c.s(p2);
    auto bundle = detail::pi_bundle(c, p1, pairs);
    std::optional<AltPath> extra;
    if (r2 == s2) {
      extra = AltPath{b1, r2, b2};
    } else {
      for (auto [g, hh] : pairs) {
        if (g != hh || extra) continue;
        for (Vertex x : c.group_without(g, {c.r(g), c.s(g), bundle.fix_node})) {
          extra = AltPath{b1, r2, c.v1.gen(r2, x), x, c.v2.gen(s2, x), s2, b2};
          break;
        }
      }
    }
    if (extra) {
      ps.paths = std::move(bundle.paths);
      ps.paths.push_back(*extra);
    } else {
      // No free common group: pair G_{p2} crosswise with the last paired
      // group instead of routing it through the bundle.
      ps.method = "shared-neighbours-cross";
      auto [g, hh] = pairs.back();
      pairs.pop_back();
      const Vertex rj = c.r(g), sj = c.s(hh);
      ps.paths = detail::pi_bundle(c, p1, pairs).paths;
      ps.paths.push_back({b1, r2, c.v2.gen(r2, sj), sj, b2});
      ps.paths.push_back({b1, rj, c.v1.gen(rj, s2), s2, b2});
    }
    ps.base_paths = {{hq1, p1, hq2}, {hq1, p2, hq2}};
  } else if (full && nc == 1) {
    ps.method = "one-shared-neighbour";
    const int p1 = c.common[0];
    auto base = h0_disjoint_paths(h0, hq1, hq2, 2);
    const AltPath* other = nullptr;
    for (const auto& p : base.paths) {
      if (std::find(p.begin(), p.end(), p1) != p.end()) continue;
      if (!other || path_length(p) < path_length(*other)) other = &p;
    }
    if (!other) throw VerificationError("no base path avoids the shared node");
    const int q1 = (*other)[1], qm = (*other)[other->size() - 2];
    auto pairs = c.aligned({p1, q1}, {p1, qm}, static_cast<std::size_t>(k - 1));
    ps.paths = detail::pi_bundle(c, p1, pairs).paths;
    ps.paths.push_back(c.chain(*other));
    ps.mu = base.mu;
    ps.length_bound = std::max(6, path_length(*other));
    ps.base_paths = base.paths;
  } else if (full) {
    ps.method = "no-shared-neighbour";
    auto base = h0_disjoint_paths(h0, hq1, hq2, 2);
    auto a = base.paths[0], b = base.paths[1];
    if (path_length(b) < path_length(a)) std::swap(a, b);
    ps.paths = detail::transit_bundle(c, a, static_cast<std::size_t>(k - 1),
                                      {b[1]}, {b[b.size() - 2]});
    ps.paths.push_back(c.chain(b));
    ps.mu = base.mu;
    ps.length_bound = base.mu + 4;
    ps.base_paths = base.paths;
  } else if (nc >= 1) {
    ps.method = "reduced-shared";
    const int p1 = c.common[0];
    auto pairs = c.aligned({p1}, {p1}, static_cast<std::size_t>(ps.claimed_count - 1));
    ps.paths = detail::pi_bundle(c, p1, pairs).paths;
    ps.mu = 2;
    ps.length_bound = 6;
    ps.base_paths = {{hq1, p1, hq2}};
  } else {
    ps.method = "reduced-transit";
    auto a = detail::shortcut_base_path(h0, shortest_path(h0, hq1, hq2));
    ps.paths = detail::transit_bundle(
        c, a, static_cast<std::size_t>(ps.claimed_count - 1), {}, {});
    ps.mu = path_length(a);
    ps.length_bound = ps.mu + 4;
    ps.base_paths = {a};
  }
  detail::require_valid(ps, std::vector(ps.paths.size(), std::pair{b1, b2}),
                        "one-to-one routing");
  return ps;
}

/// Dispatches to the same-copy or cross-copy construction.
inline PathSet route_one_to_one(const ConstructedGraph& cg, Vertex b1, Vertex b2) {
  if (!cg.h.is_block(b1) || !cg.h.is_block(b2) || b1 == b2) {
    throw DomainError("one-to-one routing needs two distinct blocks");
  }
  return cg.copy_of(b1) == cg.copy_of(b2) ? one_to_one_same_copy(cg, b1, b2)
                                          : one_to_one(cg, b1, b2);
}

}  // namespace dcnd
