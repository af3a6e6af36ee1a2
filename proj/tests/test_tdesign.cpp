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

#include <algorithm>
#include <set>

#include "dcnd/field.hpp"
#include "dcnd/tdesign.hpp"
#include "dcnd/verify.hpp"
#include "oracles.hpp"

using namespace dcnd;

namespace {

bool contains(const std::vector<std::string>& report, const std::string& needle) {
  return std::any_of(report.begin(), report.end(), [&](const std::string& s) {
    return s.find(needle) != std::string::npos;
  });
}

// Copy of t's incidences with `drop` removed and `extra` blocks appended.
TransversalDesign rebuild(const TransversalDesign& t, std::pair<int, int> drop,
                          const std::vector<std::vector<int>>& extra = {}) {
  const auto& g = t.graph();
  auto edges = g.edges();
  edges.erase(std::remove(edges.begin(), edges.end(), drop), edges.end());
  auto blocks = g.block_ids();
  for (const auto& members : extra) {
    int b = static_cast<int>(blocks.size());
    blocks.push_back("extra" + std::to_string(b));
    for (int x : members) edges.emplace_back(x, b);
  }
  return TransversalDesign(t.delta(), t.k(), BipartiteGraph(g.node_ids(), blocks, edges),
                           t.groups());
}

}  // namespace

TEST(Field, Gf2) {
  auto f = build_field(2);
  EXPECT_EQ(f.add(1, 1), 0);
  EXPECT_EQ(f.mul(1, 1), 1);
}

TEST(Field, Gf4) {
  auto f = build_field(4);
  // Elements are digit vectors: 2 is x, 3 is x + 1.
  EXPECT_EQ(f.mul(2, 3), 1);
  EXPECT_EQ(f.mul(2, 2), 3);
}

TEST(Field, RejectsNonPrimePowers) {
  EXPECT_THROW(build_field(6), DomainError);
  EXPECT_THROW(build_field(1), DomainError);
  EXPECT_THROW(build_field(12), DomainError);
}

TEST(Field, AxiomsForSupportedOrders) {
  for (int q : supported_field_orders()) {
    if (q > 32) continue;
    auto f = build_field(q);
    for (int a = 0; a < q; ++a) {
      EXPECT_EQ(f.add(a, 0), a);
      EXPECT_EQ(f.mul(a, 1), a);
      EXPECT_EQ(f.add(a, f.neg(a)), 0);
      if (a != 0) {
        int inverses = 0;
        for (int b = 1; b < q; ++b) inverses += f.mul(a, b) == 1;
        EXPECT_EQ(inverses, 1) << "q=" << q << " a=" << a;
      }
      for (int b = 0; b < q; ++b) {
        EXPECT_EQ(f.mul(a, b), f.mul(b, a));
        for (int c = 0; c < q; ++c) {
          ASSERT_EQ(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
        }
      }
    }
  }
}

TEST(BuildTd, AllSupportedOrdersAreDesigns) {
  for (int k : {2, 3, 4, 5, 7, 8, 9, 11, 13}) {
    for (int delta = 2; delta <= k + 1; ++delta) {
      auto t = build_td(delta, k);
      EXPECT_TRUE(verify_td(t).empty()) << delta << "," << k;
      EXPECT_TRUE(oracle::is_transversal_design(t)) << delta << "," << k;
      auto p = degree_profile(t.graph());
      EXPECT_EQ(p, (DegreeProfile{k, delta, true, true}));
    }
  }
}

TEST(BuildTd, Examples) {
  auto t32 = build_td(3, 2);
  EXPECT_EQ(t32.graph().node_count(), 6);
  EXPECT_EQ(t32.graph().block_count(), 4);
  EXPECT_TRUE(designs_isomorphic(t32, canonical_td_3_2()));
  auto t23 = build_td(2, 3);
  EXPECT_EQ(t23.graph().node_count(), 6);
  EXPECT_EQ(t23.graph().block_count(), 9);
  auto t54 = build_td(5, 4);
  EXPECT_EQ(t54.graph().node_count(), 20);
  EXPECT_EQ(t54.graph().block_count(), 16);
  EXPECT_TRUE(verify_td(t54).empty());
}

TEST(BuildTd, Ids) {
  auto t = build_td(3, 3);
  EXPECT_EQ(t.graph().id(t.node_at(1, 2)), "x1.2");
  EXPECT_TRUE(t.graph().find("U0.0").has_value());
}

TEST(BuildTd, RejectsBadParameters) {
  EXPECT_THROW(build_td(5, 3), DomainError);
  EXPECT_THROW(build_td(1, 3), DomainError);
  EXPECT_THROW(build_td(3, 6), DomainError);
}

TEST(VerifyTd, MissingIncidence) {
  auto t = build_td(3, 3);
  auto bad = rebuild(t, {t.member(0, 1), 0});
  auto rep = verify_td(bad);
  ASSERT_FALSE(rep.empty());
  EXPECT_TRUE(contains(rep, "meets group 1 in 0 nodes"));
  EXPECT_FALSE(oracle::is_transversal_design(bad));
}

TEST(VerifyTd, DuplicatedBlock) {
  auto t = build_td(3, 3);
  std::vector<int> copy;
  for (int i = 0; i < 3; ++i) copy.push_back(t.member(4, i));
  auto bad = rebuild(t, {-1, -1}, {copy});
  auto rep = verify_td(bad);
  EXPECT_TRUE(contains(rep, "covered twice"));
  EXPECT_FALSE(oracle::is_transversal_design(bad));
}

TEST(GeneratedBlock, Canonical) {
  auto t = canonical_td_3_2();
  const auto& g = t.graph();
  int r1 = g.at("r1"), r2 = g.at("r2");
  EXPECT_EQ(g.id(g.block_vertex(t.generated_block(r1, r2))), "B1");
  EXPECT_THROW(t.generated_block(r1, r1), DomainError);
  EXPECT_THROW(t.generated_block(r1, g.at("s1")), DomainError);
}

TEST(GeneratedBlock, BijectionOnCrossPairs) {
  auto t = build_td(2, 3);
  std::set<int> seen;
  for (int x : t.groups()[0]) {
    for (int y : t.groups()[1]) {
      int u = t.generated_block(x, y);
      EXPECT_TRUE(t.graph().adjacent(x, t.graph().block_vertex(u)));
      EXPECT_TRUE(t.graph().adjacent(y, t.graph().block_vertex(u)));
      seen.insert(u);
    }
  }
  EXPECT_EQ(seen.size(), 9u);
}

TEST(Canonical, Structure) {
  auto t = canonical_td_3_2();
  EXPECT_TRUE(verify_td(t).empty());
  const auto& g = t.graph();
  std::set<std::string> nb;
  for (Vertex b : g.neighbors(g.at("r3"))) nb.insert(g.id(b));
  EXPECT_EQ(nb, (std::set<std::string>{"B1", "B4"}));
}

TEST(Enumerate32, SingleClass) {
  auto e = enumerate_td_3_2();
  EXPECT_EQ(e.classes(), 1);
  EXPECT_EQ(e.raw_candidates, 8 * 8 * 8 * 8);
  EXPECT_GT(e.valid_candidates, 0);
  EXPECT_TRUE(designs_isomorphic(e.representatives[0], canonical_td_3_2()));
}

TEST(TdIo, RoundTrip) {
  auto t = build_td(4, 3);
  auto back = td_from_json(td_to_json(t));
  EXPECT_EQ(back.graph(), t.graph());
  EXPECT_EQ(back.groups(), t.groups());
  Json broken = td_to_json(t);
  broken["groups"][0][0] = "U0.0";
  EXPECT_THROW(td_from_json(broken), FormatError);
}
