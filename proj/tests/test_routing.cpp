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

#include <gtest/gtest.h>

#include <random>
#include <set>

#include "dcnd/construct.hpp"
#include "dcnd/routing.hpp"
#include "dcnd/verify.hpp"
#include "oracles.hpp"

using namespace dcnd;

namespace {

// Number of groups in which two blocks of a design have different members.
int differing(const TransversalDesign& t, int u1, int u2) {
  int b = 0;
  for (int i = 0; i < t.delta(); ++i) b += t.member(u1, i) != t.member(u2, i);
  return b;
}

void expect_paths(const BipartiteGraph& g, const PathSet& ps, Vertex from, Vertex to) {
  for (const auto& p : ps.paths) {
    EXPECT_TRUE(oracle::is_alternating_path(g, p));
    EXPECT_EQ(p.front(), from);
    EXPECT_EQ(p.back(), to);
  }
}

}  // namespace

TEST(GenerateBlocks, Empty) { EXPECT_TRUE(generate_blocks_from_pairs(build_td(3, 3), 0, {}).empty()); }

TEST(GenerateBlocks, FullMatching) {
  auto t = build_td(3, 3);
  const auto& g = t.graph();
  for (int u = 0; u < g.block_count(); ++u) {
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < 3; ++i) {
      int x = t.member(u, i);
      int next = (i + 1) % 3;
      int y = t.node_at(next, (t.position_in_group(t.member(u, next)) + 1) % 3);
      pairs.emplace_back(x, y);
    }
    auto out = generate_blocks_from_pairs(t, u, pairs);
    ASSERT_EQ(out.size(), 3u);
    std::set<int> distinct(out.begin(), out.end());
    EXPECT_EQ(distinct.size(), 3u);
    EXPECT_FALSE(distinct.count(u));
    for (std::size_t i = 0; i < 3; ++i) {
      Vertex b = g.block_vertex(out[i]);
      EXPECT_TRUE(g.adjacent(pairs[i].first, b) && g.adjacent(pairs[i].second, b));
    }
  }
}

TEST(GenerateBlocks, Errors) {
  auto t = build_td(3, 3);
  int x = t.member(0, 0);
  int same_group = t.node_at(0, (t.position_in_group(x) + 1) % 3);
  EXPECT_THROW(generate_blocks_from_pairs(t, 0, {{x, same_group}}), DomainError);
  // Both ends on the block.
  EXPECT_THROW(generate_blocks_from_pairs(t, 0, {{x, t.member(0, 1)}}), DomainError);
}

TEST(BasePaths, CycleOpposite) {
  auto c = gen_cycle(5);
  auto bp = h0_disjoint_paths(c, c.block_vertex(0), c.block_vertex(2));
  EXPECT_EQ(bp.lambda, 2);
  EXPECT_EQ(bp.mu, 6);
  ASSERT_EQ(bp.paths.size(), 2u);
  std::multiset<int> lengths{path_length(bp.paths[0]), path_length(bp.paths[1])};
  EXPECT_EQ(lengths, (std::multiset<int>{4, 6}));
  EXPECT_TRUE(oracle::internally_disjoint(bp.paths));
  EXPECT_THROW(h0_disjoint_paths(c, c.block_vertex(0), c.block_vertex(0)), DomainError);
}

TEST(BasePaths, CirculantNeighbours) {
  auto g = gen_circulant(9, 3);
  auto bp = h0_disjoint_paths(g, g.block_vertex(0), g.block_vertex(1));
  EXPECT_GE(bp.lambda, 2);
  EXPECT_EQ(bp.lambda,
            oracle::brute_disjoint_count(g, g.block_vertex(0), g.block_vertex(1), false));
  auto two = h0_disjoint_paths(g, g.block_vertex(0), g.block_vertex(4), 2);
  EXPECT_EQ(two.paths.size(), 2u);
}

TEST(SameCopy, OneDifferingGroup) {
  auto cg = two_step(gen_cycle(5), build_td(2, 3));
  const auto& t = *cg.td;
  int found = 0;
  for (int u2 = 1; u2 < 9; ++u2) {
    if (differing(t, 0, u2) != 1) continue;
    ++found;
    Vertex b1 = cg.block_vertex(0, 0), b2 = cg.block_vertex(0, u2);
    auto ps = one_to_one_same_copy(cg, b1, b2);
    ASSERT_EQ(ps.paths.size(), 2u);
    expect_paths(cg.h, ps, b1, b2);
    std::multiset<int> lengths;
    for (const auto& p : ps.paths) lengths.insert(path_length(p));
    EXPECT_EQ(lengths, (std::multiset<int>{2, 6}));
    EXPECT_TRUE(oracle::internally_disjoint(ps.paths));
  }
  EXPECT_GT(found, 0);
}

TEST(SameCopy, AllGroupsDiffer) {
  auto cg = two_step(gen_circulant(9, 3), build_td(3, 3));
  const auto& t = *cg.td;
  int found = 0;
  for (int u2 = 1; u2 < 9; ++u2) {
    if (differing(t, 0, u2) != 3) continue;
    ++found;
    Vertex b1 = cg.block_vertex(3, 0), b2 = cg.block_vertex(3, u2);
    auto ps = one_to_one_same_copy(cg, b1, b2);
    ASSERT_EQ(ps.paths.size(), 3u);
    expect_paths(cg.h, ps, b1, b2);
    for (const auto& p : ps.paths) EXPECT_EQ(path_length(p), 4);
    EXPECT_TRUE(oracle::internally_disjoint(ps.paths));
  }
  EXPECT_GT(found, 0);
}

TEST(SameCopy, Errors) {
  auto cg = two_step(gen_cycle(5), build_td(2, 3));
  Vertex b = cg.block_vertex(0, 0);
  EXPECT_THROW(one_to_one_same_copy(cg, b, b), DomainError);
  EXPECT_THROW(one_to_one_same_copy(cg, b, cg.block_vertex(1, 0)), DomainError);
}

TEST(OneToOne, CycleCrossCopy) {
  auto cg = two_step(gen_cycle(5), build_td(2, 3));
  for (int q = 1; q < 5; ++q) {
    for (int u = 0; u < 9; u += 4) {
      Vertex b1 = cg.block_vertex(0, 0), b2 = cg.block_vertex(q, u);
      auto ps = route_one_to_one(cg, b1, b2);
      EXPECT_EQ(ps.paths.size(), 2u);
      expect_paths(cg.h, ps, b1, b2);
      EXPECT_TRUE(oracle::internally_disjoint(ps.paths));
      EXPECT_EQ(menger_count(cg.h, b1, b2, Disjointness::internal), 2);
    }
  }
}

TEST(OneToOne, CirculantBound) {
  auto cg = two_step(gen_circulant(9, 3), build_td(3, 3));
  for (int q = 1; q < 9; ++q) {
    Vertex b1 = cg.block_vertex(0, 2), b2 = cg.block_vertex(q, 5);
    auto ps = route_one_to_one(cg, b1, b2);
    ASSERT_EQ(ps.paths.size(), 3u);
    expect_paths(cg.h, ps, b1, b2);
    EXPECT_TRUE(oracle::internally_disjoint(ps.paths));
    EXPECT_LE(oracle::longest(ps.paths), ps.mu + 4);
    EXPECT_EQ(ps.claimed_count, 3);
  }
}

TEST(OneToOne, FullFamilyWhenDeltaExceedsK) {
  auto cg = two_step(double_cover_join(gen_cycle(5)), build_td(3, 2));
  for (int q = 1; q < 10; ++q) {
    for (int u = 0; u < 4; ++u) {
      Vertex b1 = cg.block_vertex(0, 1), b2 = cg.block_vertex(q, u);
      auto ps = route_one_to_one(cg, b1, b2);
      ASSERT_EQ(ps.paths.size(), 3u) << ps.method;
      expect_paths(cg.h, ps, b1, b2);
      EXPECT_TRUE(oracle::internally_disjoint(ps.paths));
      EXPECT_EQ(menger_count(cg.h, b1, b2, Disjointness::internal), 3);
    }
  }
}

TEST(OneToOne, RejectsNonBlocks) {
  auto cg = two_step(gen_cycle(5), build_td(2, 3));
  EXPECT_THROW(route_one_to_one(cg, 0, cg.block_vertex(1, 0)), DomainError);
}

TEST(OneToManyTd, RootsAsTargets) {
  auto t = build_td(3, 3);
  TargetMultiset ts;
  for (int i = 0; i < 3; ++i) ts.push_back(Target::node(t.member(5, i)));
  auto ps = one_to_many_td(t, 5, ts);
  for (const auto& p : ps.paths) EXPECT_EQ(path_length(p), 1);
}

TEST(OneToManyTd, RepeatedNode) {
  auto t = build_td(3, 3);
  int x = t.node_at(1, 2);
  auto ps = one_to_many_td(t, 0, {Target::node(x), Target::node(x), Target::node(x)});
  ASSERT_EQ(ps.paths.size(), 3u);
  expect_paths(t.graph(), ps, t.graph().block_vertex(0), x);
  EXPECT_TRUE(oracle::edge_disjoint(ps.paths));
  EXPECT_TRUE(oracle::internally_disjoint(ps.paths));
  EXPECT_LE(oracle::longest(ps.paths), 7);
}

TEST(OneToManyTd, RandomMixedTargets) {
  auto t = build_td(4, 4);
  const auto& g = t.graph();
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 1000; ++trial) {
    int u = static_cast<int>(rng() % g.block_count());
    TargetMultiset ts;
    while (ts.size() < 4) {
      if (rng() % 2) {
        ts.push_back(Target::node(static_cast<int>(rng() % g.node_count())));
      } else if (int b = static_cast<int>(rng() % g.block_count()); b != u) {
        ts.push_back(Target::blk(b));
      }
    }
    auto ps = one_to_many_td(t, u, ts);
    ASSERT_TRUE(oracle::edge_disjoint(ps.paths));
    ASSERT_LE(oracle::longest(ps.paths), 7);
  }
}

TEST(OneToManyTd, Errors) {
  auto t = build_td(3, 3);
  EXPECT_THROW(one_to_many_td(t, 0, {Target::node(0)}), DomainError);
  EXPECT_THROW(one_to_many_td(build_td(3, 2), 0,
                              {Target::node(0), Target::node(0), Target::node(0)}),
               DomainError);
}

TEST(FanIn, AdjacentBlock) {
  auto t = build_td(4, 5);
  int x = t.member(7, 2);
  auto fan = fan_in_td(t, 2, {Target::blk(7)});
  ASSERT_EQ(fan.sources.size(), 1u);
  EXPECT_EQ(fan.sources[0], x);
  EXPECT_EQ(fan.paths.paths[0], (AltPath{x, t.graph().block_vertex(7)}));
}

TEST(FanIn, RandomMixedTargets) {
  auto t = build_td(4, 5);
  const auto& g = t.graph();
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 1000; ++trial) {
    int d0 = static_cast<int>(rng() % 4);
    TargetMultiset ts;
    while (ts.size() < 4) {
      if (rng() % 2) {
        ts.push_back(Target::blk(static_cast<int>(rng() % g.block_count())));
      } else if (int x = static_cast<int>(rng() % g.node_count()); t.group_of(x) != d0) {
        ts.push_back(Target::node(x));
      }
    }
    auto fan = fan_in_td(t, d0, ts);
    std::set<int> srcs(fan.sources.begin(), fan.sources.end());
    ASSERT_EQ(srcs.size(), 4u);
    ASSERT_TRUE(oracle::internally_disjoint(fan.paths.paths));
    ASSERT_LE(oracle::longest(fan.paths.paths), 3);
  }
}

TEST(FanIn, Errors) {
  auto t = build_td(3, 3);
  EXPECT_THROW(fan_in_td(t, 0, {Target::node(t.node_at(0, 1))}), DomainError);
  EXPECT_THROW(fan_in_td(t, 3, {Target::blk(0)}), DomainError);
  EXPECT_THROW(fan_in_td(t, 0, {Target::blk(0), Target::blk(1), Target::blk(2), Target::blk(3)}),
               DomainError);
}

TEST(Skeleton, RootOnly) {
  auto c = gen_cycle(5);
  auto sk = build_skeleton(c, c.block_vertex(0), {c.block_vertex(0), c.block_vertex(0)});
  EXPECT_EQ(sk.height, 0);
  EXPECT_EQ(sk.members.size(), 1u);
  EXPECT_EQ(sk.mu[sk.root], 2);
}

TEST(Skeleton, CycleFarBlocks) {
  auto c = gen_cycle(5);
  auto sk = build_skeleton(c, c.block_vertex(0), {c.block_vertex(2), c.block_vertex(3)});
  EXPECT_EQ(sk.height, 4);
  EXPECT_EQ(sk.mu[sk.root], 2);
  EXPECT_EQ(sk.members.size(), 9u);
  for (Vertex v : sk.members) {
    if (v != sk.root) {
      EXPECT_TRUE(c.adjacent(v, sk.parent[v]));
    }
  }
}

TEST(OneToMany, OwnCopy) {
  auto cg = two_step(gen_circulant(9, 3), build_td(3, 3));
  Vertex b = cg.block_vertex(4, 0);
  std::vector<Vertex> ts = {cg.block_vertex(4, 1), cg.block_vertex(4, 5), cg.block_vertex(4, 5)};
  auto ps = one_to_many(cg, b, ts);
  ASSERT_EQ(ps.paths.size(), 3u);
  for (std::size_t i = 0; i < 3; ++i) {
    EXPECT_TRUE(oracle::is_alternating_path(cg.h, ps.paths[i]));
    EXPECT_EQ(ps.paths[i].back(), ts[i]);
  }
  EXPECT_TRUE(oracle::edge_disjoint(ps.paths));
  EXPECT_LE(oracle::longest(ps.paths), 7);
}

TEST(OneToMany, SourceAmongTargets) {
  auto cg = two_step(gen_circulant(9, 3), build_td(3, 3));
  Vertex b = cg.block_vertex(0, 0);
  EXPECT_THROW(one_to_many(cg, b, {b, cg.block_vertex(1, 0), cg.block_vertex(2, 0)}),
               DomainError);
  EXPECT_THROW(one_to_many(cg, b, {cg.block_vertex(1, 0)}), DomainError);
}

TEST(OneToMany, FarTargets) {
  auto cg = two_step(gen_circulant(9, 3), build_td(3, 3));
  Vertex b = cg.block_vertex(0, 0);
  std::vector<Vertex> ts = {cg.block_vertex(4, 3), cg.block_vertex(5, 8), cg.block_vertex(5, 8)};
  auto ps = one_to_many(cg, b, ts);
  EXPECT_TRUE(oracle::edge_disjoint(ps.paths));
  std::vector<Vertex> copies = {cg.base->block_vertex(4), cg.base->block_vertex(5),
                                cg.base->block_vertex(5)};
  int h = build_skeleton(*cg.base, cg.base->block_vertex(0), copies).height;
  EXPECT_LE(oracle::longest(ps.paths), 3 * h / 2 + 7);
}
