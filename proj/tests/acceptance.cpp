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

// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "dcnd/construct.hpp"
#include "dcnd/dcn.hpp"
#include "dcnd/routing.hpp"
#include "dcnd/verify.hpp"
#include "oracles.hpp"

using namespace dcnd;

namespace {

constexpr std::uint64_t kSeed = 20260101;

struct Outcome {
  bool pass = true;
  std::string detail;
};

bool run(int id, const std::string& title, const std::function<Outcome()>& body) {
  auto t0 = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.2fs", s);
  std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << id << ": " << title << " ["
            << buf << "] " << o.detail << std::endl;
  return o.pass;
}

Outcome designs() {
  int checked = 0;
  for (int k : {2, 3, 4, 5, 7, 8, 9, 11, 13}) {
    for (int delta = 2; delta <= k + 1; ++delta) {
      auto t = build_td(delta, k);
      auto rep = verify_td(t);
      if (!rep.empty() || !oracle::is_transversal_design(t)) {
        return {false, "[" + std::to_string(delta) + "," + std::to_string(k) + "] invalid"};
      }
      ++checked;
    }
  }
  return {true, std::to_string(checked) + " designs valid"};
}

Outcome uniqueness() {
  auto e = enumerate_td_3_2();
  bool ok = e.classes() == 1 && designs_isomorphic(e.representatives[0], canonical_td_3_2()) &&
            designs_isomorphic(build_td(3, 2), canonical_td_3_2());
  return {ok, std::to_string(e.raw_candidates) + " candidates, " +
                  std::to_string(e.valid_candidates) + " valid, " +
                  std::to_string(e.classes()) + " class"};
}

Outcome line_diameters() {
  struct Case {
    std::string name;
    BipartiteGraph base;
    int delta, k;
  };
  std::vector<Case> cases = {{"cycle(5)", gen_cycle(5), 2, 3},
                             {"cycle(6)", gen_cycle(6), 2, 3},
                             {"circulant(12,3)", gen_circulant(12, 3), 3, 3},
                             {"double-cover(cycle(5))", double_cover_join(gen_cycle(5)), 3, 3}};
  std::string detail;
  for (auto& c : cases) {
    int l0 = oracle::side_diameter(c.base, true);
    if (l0 < 4) continue;
    auto h = two_step(c.base, build_td(c.delta, c.k));
    int l = oracle::side_diameter(h.h, true);
    if (l != l0 || !line_diameter_preserved(c.base, h)) {
      return {false, c.name + ": " + std::to_string(l0) + " -> " + std::to_string(l)};
    }
    detail += c.name + "=" + std::to_string(l) + " ";
  }
  return {true, detail};
}

Outcome table() {
  // Expected servers and switches per row.
  struct Row {
    std::string name;
    std::int64_t servers, switches;
  };
  std::vector<Row> want = {{"H*", 54720, 6840},          {"N_A^1(H*)", 3064320, 61560},
                           {"N_A^2(H*)", 437760, 102600}, {"N_A^3(H*)", 1751040, 82080},
                           {"N_B(H*)", 1532160, 61560},   {"Hbar*", 20480, 1280},
                           {"N_A^1(Hbar*)", 1228800, 21760}};
  auto rows = comparison_table();
  if (rows.size() != want.size() + 1) return {false, "row count"};
  for (std::size_t i = 0; i < want.size(); ++i) {
    const auto& r = rows[i + 1];
    if (r.network != want[i].name || r.servers != want[i].servers ||
        r.switches != want[i].switches || r.ports != 64) {
      return {false, "row " + want[i].name};
    }
  }
  auto c7 = dcn_counts({346, 346, 8, 8, 7, 1, 4, DcnMethod::a, 4});
  auto c8 = dcn_counts({346, 346, 8, 8, 8, 1, 4, DcnMethod::a, 4});
  bool ok = c7.servers == 406896 && c7.level1 == 16954 && c7.level2 == 9688 &&
            c8.servers == 708608 && c8.level1 == 22144 && c8.level2 == 11072;
  return {ok, "7 rows + 2 worked examples"};
}

Outcome one_to_one_sweep() {
  struct Case {
    std::string name;
    BipartiteGraph base;
    int delta, k;
  };
  std::vector<Case> cases = {{"cycle(5)+[2,3]", gen_cycle(5), 2, 3},
                             {"circulant(9,3)+[3,3]", gen_circulant(9, 3), 3, 3},
                             {"double-cover(cycle(5))+[3,2]", double_cover_join(gen_cycle(5)), 3, 2}};
  std::ostringstream detail;
  for (auto& c : cases) {
    auto cg = two_step(c.base, build_td(c.delta, c.k));
    const auto& h = cg.h;
    const auto& h0 = *cg.base;
    std::map<std::pair<int, int>, int> base_lambda;
    long long pairs = 0;
    for (int a = 0; a < h.block_count(); ++a) {
      for (int b = 0; b < h.block_count(); ++b) {
        if (a == b) continue;
        ++pairs;
        Vertex va = h.block_vertex(a), vb = h.block_vertex(b);
        std::string w = c.name + " " + h.id(va) + "->" + h.id(vb) + ": ";
        auto ps = route_one_to_one(cg, va, vb);
        for (const auto& p : ps.paths) {
          if (!oracle::is_alternating_path(h, p) || p.front() != va || p.back() != vb) {
            return {false, w + "invalid path"};
          }
        }
        if (!oracle::internally_disjoint(ps.paths)) return {false, w + "not disjoint"};
        int q1 = cg.copy_of(va), q2 = cg.copy_of(vb);
        int promised = c.delta, bound = 0;
        if (q1 == q2) {
          int shared = 0;
          for (Vertex x : h.neighbors(va)) shared += h.adjacent(x, vb);
          bound = c.delta - shared == 1 ? 6 : 4;
        } else {
          Vertex hq1 = h0.block_vertex(q1), hq2 = h0.block_vertex(q2);
          auto [it, fresh] = base_lambda.try_emplace({q1, q2}, 0);
          if (fresh) it->second = oracle::brute_disjoint_count(h0, hq1, hq2, false);
          int lambda = it->second;
          bool full = c.delta == c.k + 1 && lambda >= 2;
          promised = full ? c.delta : std::min(c.delta, c.k);
          for (const auto& p : ps.base_paths) {
            if (!oracle::is_alternating_path(h0, p) || p.front() != hq1 || p.back() != hq2) {
              return {false, w + "invalid base path"};
            }
          }
          if (ps.base_paths.empty() || !oracle::internally_disjoint(ps.base_paths)) {
            return {false, w + "bad base paths"};
          }
          int mu = oracle::longest(ps.base_paths);
          int shared = 0;
          for (Vertex p : h0.neighbors(hq1)) shared += h0.adjacent(p, hq2);
          bound = shared >= 2 || (shared == 1 && !full) ? 6 : mu + 4;
        }
        if (static_cast<int>(ps.paths.size()) != promised) return {false, w + "count"};
        if (oracle::longest(ps.paths) > bound) return {false, w + "too long"};
        if (ps.claimed_count != menger_count(h, va, vb, Disjointness::internal)) {
          return {false, w + "claimed count differs from max-flow"};
        }
      }
    }
    detail << c.name << " " << pairs << " pairs; ";
  }
  return {true, detail.str()};
}

TargetMultiset random_targets(const TransversalDesign& t, int u, int count, bool nodes_only,
                              std::mt19937_64& rng) {
  const auto& g = t.graph();
  std::uniform_int_distribution<int> node(0, g.node_count() - 1), blk(0, g.block_count() - 1);
  TargetMultiset ts;
  while (static_cast<int>(ts.size()) < count) {
    if (nodes_only || rng() % 2) {
      ts.push_back(Target::node(node(rng)));
    } else {
      int b = blk(rng);
      if (b != u) ts.push_back(Target::blk(b));
    }
  }
  return ts;
}

Outcome design_fan_out() {
  std::mt19937_64 rng(kSeed);
  std::ostringstream detail;
  for (auto [delta, k] : {std::pair{3, 3}, {4, 4}, {4, 5}}) {
    auto t = build_td(delta, k);
    const auto& g = t.graph();
    int all_node = 0;
    for (int trial = 0; trial < 2000; ++trial) {
      // First half mixed targets, second half node targets only.
      bool nodes_only = trial >= 1000;
      int u = static_cast<int>(rng() % g.block_count());
      auto ts = random_targets(t, u, delta, nodes_only, rng);
      auto ps = one_to_many_td(t, u, ts);
      bool nodes = true;
      for (std::size_t i = 0; i < ts.size(); ++i) {
        Vertex end = ts[i].block ? g.block_vertex(ts[i].index) : ts[i].index;
        nodes = nodes && !ts[i].block;
        const auto& p = ps.paths[i];
        if (!oracle::is_alternating_path(g, p) || p.front() != g.block_vertex(u) ||
            p.back() != end) {
          return {false, "invalid path"};
        }
      }
      if (!oracle::edge_disjoint(ps.paths)) return {false, "edge overlap"};
      if (oracle::longest(ps.paths) > 7) return {false, "length > 7"};
      if (nodes) {
        ++all_node;
        if (!oracle::internally_disjoint(ps.paths)) return {false, "interior overlap"};
      }
    }
    detail << "[" << delta << "," << k << "] 2000 trials (" << all_node << " all-node); ";
  }
  return {true, detail.str()};
}

Outcome design_fan_in() {
  std::mt19937_64 rng(kSeed + 1);
  std::ostringstream detail;
  for (auto [delta, k] : {std::pair{3, 3}, {4, 4}, {4, 5}}) {
    auto t = build_td(delta, k);
    const auto& g = t.graph();
    for (int trial = 0; trial < 1000; ++trial) {
      int d0 = static_cast<int>(rng() % delta);
      int m = 1 + static_cast<int>(rng() % std::min(delta, k));
      TargetMultiset ts;
      while (static_cast<int>(ts.size()) < m) {
        if (rng() % 2) {
          ts.push_back(Target::blk(static_cast<int>(rng() % g.block_count())));
        } else {
          int x = static_cast<int>(rng() % g.node_count());
          if (t.group_of(x) != d0) ts.push_back(Target::node(x));
        }
      }
      auto fan = fan_in_td(t, d0, ts);
      std::set<int> srcs(fan.sources.begin(), fan.sources.end());
      if (static_cast<int>(srcs.size()) != m) return {false, "sources repeat"};
      for (int i = 0; i < m; ++i) {
        const auto& p = fan.paths.paths[i];
        Vertex end = ts[i].block ? g.block_vertex(ts[i].index) : ts[i].index;
        if (t.group_of(fan.sources[i]) != d0 || p.front() != fan.sources[i] ||
            p.back() != end || !oracle::is_alternating_path(g, p)) {
          return {false, "invalid path"};
        }
      }
      if (!oracle::internally_disjoint(fan.paths.paths)) return {false, "interior overlap"};
      if (oracle::longest(fan.paths.paths) > 3) return {false, "length > 3"};
    }
    detail << "[" << delta << "," << k << "] 1000 trials; ";
  }
  return {true, detail.str()};
}

Outcome one_to_many_sweep() {
  auto cg = two_step(gen_circulant(9, 3), build_td(3, 3));
  const auto& h = cg.h;
  const auto& h0 = *cg.base;
  std::mt19937_64 rng(kSeed + 2);
  std::uniform_int_distribution<int> pick(0, h.block_count() - 1);
  int max_h = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    Vertex b = h.block_vertex(pick(rng));
    std::vector<Vertex> ts;
    while (ts.size() < 3) {
      Vertex x = h.block_vertex(pick(rng));
      if (x != b) ts.push_back(x);
    }
    auto ps = one_to_many(cg, b, ts);
    std::vector<Vertex> copies;
    for (Vertex x : ts) copies.push_back(h0.block_vertex(cg.copy_of(x)));
    int height = build_skeleton(h0, h0.block_vertex(cg.copy_of(b)), copies).height;
    max_h = std::max(max_h, height);
    for (std::size_t i = 0; i < ts.size(); ++i) {
      const auto& p = ps.paths[i];
      if (!oracle::is_alternating_path(h, p) || p.front() != b || p.back() != ts[i]) {
        return {false, "invalid path"};
      }
    }
    if (!oracle::edge_disjoint(ps.paths)) return {false, "edge overlap"};
    if (oracle::longest(ps.paths) > 3 * height / 2 + 7) return {false, "too long"};
  }
  return {true, "1000 trials, max skeleton height " + std::to_string(max_h)};
}

Outcome dcn_diameter_six() {
  struct Case {
    std::string name;
    BipartiteGraph base;
    int delta, k;
  };
  std::vector<Case> cases = {{"cycle(5)+[2,3]", gen_cycle(5), 2, 3},
                             {"circulant(9,3)+[3,3]", gen_circulant(9, 3), 3, 3},
                             {"double-cover(cycle(5))+[3,2]", double_cover_join(gen_cycle(5)), 3, 2}};
  std::string detail;
  for (auto& c : cases) {
    if (oracle::side_diameter(c.base, true) != 4) return {false, c.name + " base not 4"};
    auto cg = three_step(c.base, build_td(c.delta, c.k));
    auto net = method_a(cg, 1);
    int d = oracle::server_diameter(net);
    if (d != 6 || dcn_diameter(net) != 6) {
      return {false, c.name + " diameter " + std::to_string(d)};
    }
    detail += c.name + " ";
  }
  return {true, detail + "-> 6"};
}

}  // namespace

int main() {
  bool ok = true;
  ok &= run(1, "designs valid for all supported (delta, k)", designs);
  ok &= run(2, "[3,2]-design unique up to isomorphism", uniqueness);
  ok &= run(3, "line-diameter preserved by the 2-step method", line_diameters);
  ok &= run(4, "comparison table and worked examples", table);
  ok &= run(5, "one-to-one sweep on all block pairs", one_to_one_sweep);
  ok &= run(6, "one-to-many inside a design", design_fan_out);
  ok &= run(7, "many-to-one inside a design", design_fan_in);
  ok &= run(8, "one-to-many across the 2-step graph", one_to_many_sweep);
  ok &= run(9, "Method-A server diameter 6", dcn_diameter_six);
  return ok ? 0 : 1;
}
