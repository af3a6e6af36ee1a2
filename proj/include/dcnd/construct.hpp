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

// The 2-step and 3-step constructions.
//
// Given a connected (d, delta)-bipartite base graph H0 with n nodes and e
// blocks and a [delta, k]-transversal design T, the 2-step graph H replaces
// every base node p with a group G_p of k nodes a[p,j], and every base block
// Q (with neighbours p_1 < ... < p_delta) with a copy T_Q of T whose group i
// is rooted on G_{p_i}. H is a (dk, delta)-bipartite graph with nk nodes and
// ek^2 blocks. The 3-step graph H* is the dual of H.
//
// Indexing is arithmetic: a[p,j] has node index p*k + j and B[Q,U] has block
// index Q*k^2 + U, so provenance lookups are O(1).

#pragma once

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "dcnd/bigraph.hpp"
#include "dcnd/tdesign.hpp"

namespace dcnd {

struct ConstructedGraph {
  /// The 2-step graph H. Always present; routing works on this orientation.
  BipartiteGraph h;
  /// Set for 3-step outputs: the dual of h.
  std::optional<BipartiteGraph> h_star;

  std::shared_ptr<const BipartiteGraph> base;
  std::shared_ptr<const TransversalDesign> td;
  int iterations = 1;

  /// H node -> (base node p, position j in G_p), j in [0, k).
  std::vector<std::pair<int, int>> group_of_node;
  /// H block -> (base block Q, design block U).
  std::vector<std::pair<int, int>> origin_of_block;
  /// Base block Q -> its neighbours in ascending order; entry i hosts design
  /// group i of T_Q.
  std::vector<std::vector<int>> roots_of_copy;

  bool dualized() const { return h_star.has_value(); }
  const BipartiteGraph& graph() const { return h_star ? *h_star : h; }

  int k() const { return td->k(); }
  int delta() const { return td->delta(); }

  int node_index(int p, int j) const { return p * k() + j; }
  int block_index(int q, int u) const { return q * k() * k() + u; }
  Vertex node_vertex(int p, int j) const { return node_index(p, j); }
  Vertex block_vertex(int q, int u) const {
    return h.block_vertex(block_index(q, u));
  }

  /// Base block whose copy contains H block vertex v.
  int copy_of(Vertex block) const {
    return origin_of_block.at(h.block_index(block)).first;
  }
  /// Base node whose group contains H node vertex v.
  int base_node_of(Vertex node) const { return group_of_node.at(node).first; }
};

namespace detail {

inline void require_base(const BipartiteGraph& h0, const TransversalDesign& t) {
  auto prof = degree_profile(h0);
  if (!prof.regular || !prof.uniform) {
    throw DomainError("base graph must be regular and uniform");
  }
  if (prof.delta != t.delta()) {
    throw DomainError("base rank " + std::to_string(prof.delta) +
                      " does not match design delta " +
                      std::to_string(t.delta()));
  }
  if (!is_connected(h0)) throw DomainError("base graph must be connected");
  if (!verify_td(t).empty()) {
    throw DomainError("design fails the transversal-design clauses");
  }
}

}  // namespace detail

inline ConstructedGraph two_step(std::shared_ptr<const BipartiteGraph> h0,
                                 std::shared_ptr<const TransversalDesign> t) {
  detail::require_base(*h0, *t);
  const int n = h0->node_count(), e = h0->block_count();
  const int k = t->k(), kk = k * k, delta = t->delta();

  ConstructedGraph out;
  out.base = h0;
  out.td = t;
  std::vector<std::string> nodes, blocks;
  nodes.reserve(static_cast<std::size_t>(n) * k);
  out.group_of_node.reserve(static_cast<std::size_t>(n) * k);
  for (int p = 0; p < n; ++p) {
    for (int j = 0; j < k; ++j) {
      nodes.push_back("a[" + h0->id(h0->node_vertex(p)) + "," +
                      std::to_string(j + 1) + "]");
      out.group_of_node.emplace_back(p, j);
    }
  }
  std::vector<std::pair<int, int>> edges;
  edges.reserve(static_cast<std::size_t>(e) * kk * delta);
  out.roots_of_copy.resize(e);
  blocks.reserve(static_cast<std::size_t>(e) * kk);
  for (int q = 0; q < e; ++q) {
    auto& roots = out.roots_of_copy[q];
    for (Vertex p : h0->neighbors(h0->block_vertex(q))) roots.push_back(p);
    for (int u = 0; u < kk; ++u) {
      int b = static_cast<int>(blocks.size());
      blocks.push_back("B[" + h0->id(h0->block_vertex(q)) + "," +
                       std::to_string(u + 1) + "]");
      out.origin_of_block.emplace_back(q, u);
      for (int i = 0; i < delta; ++i) {
        int x = t->member(u, i);
        edges.emplace_back(roots[i] * k + t->position_in_group(x), b);
      }
    }
  }
  out.h = BipartiteGraph(std::move(nodes), std::move(blocks), edges);
  return out;
}

inline ConstructedGraph two_step(const BipartiteGraph& h0,
                                 const TransversalDesign& t) {
  return two_step(std::make_shared<const BipartiteGraph>(h0),
                  std::make_shared<const TransversalDesign>(t));
}

inline ConstructedGraph three_step(const BipartiteGraph& h0,
                                   const TransversalDesign& t) {
  auto out = two_step(h0, t);
  out.h_star = dual(out.h);
  return out;
}

/// Applies the 2-step method `rounds` times, one design per round. The
/// provenance of the result refers to the last round.
inline ConstructedGraph iterate(const BipartiteGraph& h0,
                                const std::vector<TransversalDesign>& designs) {
  if (designs.empty()) throw DomainError("iteration count must be >= 1");
  auto base = std::make_shared<const BipartiteGraph>(h0);
  ConstructedGraph cur;
  for (std::size_t r = 0; r < designs.size(); ++r) {
    cur = two_step(base, std::make_shared<const TransversalDesign>(designs[r]));
    cur.iterations = static_cast<int>(r) + 1;
    base = std::make_shared<const BipartiteGraph>(cur.h);
  }
  return cur;
}

inline ConstructedGraph iterate(const BipartiteGraph& h0,
                                const TransversalDesign& t, int rounds) {
  if (rounds < 1) throw DomainError("iteration count must be >= 1");
  return iterate(h0, std::vector<TransversalDesign>(rounds, t));
}

/// Alternating cycle with n nodes and n blocks; node i lies in blocks i and
/// i+1 (mod n).
inline BipartiteGraph gen_cycle(int n) {
  if (n < 3) throw DomainError("cycle needs n >= 3");
  std::vector<std::string> nodes, blocks;
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i) {
    nodes.push_back("p" + std::to_string(i));
    blocks.push_back("Q" + std::to_string(i));
    edges.emplace_back(i, i);
    edges.emplace_back(i, (i + 1) % n);
  }
  return BipartiteGraph(std::move(nodes), std::move(blocks), edges);
}

/// Node i lies in blocks i, i+1, ..., i+delta-1 (mod n).
inline BipartiteGraph gen_circulant(int n, int delta) {
  if (delta < 2 || delta >= n) {
    throw DomainError("circulant needs 2 <= delta < n");
  }
  std::vector<std::string> nodes, blocks;
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i) {
    nodes.push_back("p" + std::to_string(i));
    blocks.push_back("Q" + std::to_string(i));
    for (int s = 0; s < delta; ++s) edges.emplace_back(i, (i + s) % n);
  }
  return BipartiteGraph(std::move(nodes), std::move(blocks), edges);
}

/// Two disjoint copies of an (r, r)-graph with m nodes and m blocks, plus the
/// 2m edges joining node i of each copy to block i of the other. The result
/// is (r+1, r+1)-regular with 2m nodes and 2m blocks.
inline BipartiteGraph double_cover_join(const BipartiteGraph& g) {
  auto prof = degree_profile(g);
  if (!prof.regular || !prof.uniform || prof.d != prof.delta ||
      g.node_count() != g.block_count()) {
    throw DomainError("double cover needs a square (r, r)-regular graph");
  }
  const int m = g.node_count();
  std::vector<std::string> nodes, blocks;
  for (const char* side : {"A:", "B:"}) {
    for (int i = 0; i < m; ++i) nodes.push_back(side + g.id(g.node_vertex(i)));
    for (int i = 0; i < m; ++i) {
      blocks.push_back(side + g.id(g.block_vertex(i)));
    }
  }
  std::vector<std::pair<int, int>> edges;
  for (int c = 0; c < 2; ++c) {
    for (auto [x, b] : g.edges()) edges.emplace_back(c * m + x, c * m + b);
  }
  for (int i = 0; i < m; ++i) {
    edges.emplace_back(i, m + i);
    edges.emplace_back(m + i, i);
  }
  return BipartiteGraph(std::move(nodes), std::move(blocks), edges);
}

/// True iff H has the same line-diameter as its base. Throws DomainError when
/// the base line-diameter is below 4, where no equality is promised.
inline bool line_diameter_preserved(const BipartiteGraph& h0, const ConstructedGraph& h) {
  int lambda = line_diameter(h0);
  if (lambda < 4) {
    throw DomainError("base line-diameter " + std::to_string(lambda) +
                      " < 4: line-diameter preservation not promised");
  }
  return line_diameter(h.h) == lambda;
}

/// Provenance block embedded in the "meta" of a saved construction; enough to
/// rebuild the ConstructedGraph exactly.
inline Json construction_meta(const BipartiteGraph& h0,
                              const TransversalDesign& t, int iterations,
                              bool three) {
  Json j;
  j["construction"] = {{"method", three ? "three-step" : "two-step"},
                       {"iterations", iterations},
                       {"base", graph_to_json(h0)},
                       {"td", td_to_json(t)}};
  return j;
}

/// Rebuilds a construction from a saved graph's meta and checks it matches.
inline ConstructedGraph construction_from_saved(const LoadedGraph& saved) {
  if (!saved.meta.contains("construction")) {
    throw FormatError("graph carries no construction provenance");
  }
  const auto& c = saved.meta.at("construction");
  try {
    auto base = graph_from_json(c.at("base")).graph;
    auto t = td_from_json(c.at("td"));
    int rounds = c.value("iterations", 1);
    auto out = iterate(base, t, rounds);
    if (c.at("method").get<std::string>() == "three-step") {
      out.h_star = dual(out.h);
    }
    if (!(out.graph() == saved.graph)) {
      throw FormatError("graph does not match its construction provenance");
    }
    return out;
  } catch (const Json::exception& e) {
    throw FormatError(std::string("malformed construction meta: ") + e.what());
  }
}

}  // namespace dcnd
