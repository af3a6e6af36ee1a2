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

// Exhaustive and randomized checks of the routing constructions against the
// independent validator and max-flow counts.

#pragma once

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <thread>
#include <vector>

#include "dcnd/routing.hpp"

namespace dcnd {

struct SweepFailure {
  std::string witness;
  std::string reason;
};

struct SweepReport {
  std::string description;
  long long pairs_tested = 0;
  std::vector<SweepFailure> failures;
  double runtime_s = 0;

  bool ok() const { return failures.empty(); }
};

/// Runtime is left out so that identical runs give identical JSON.
inline Json sweep_to_json(const SweepReport& r) {
  Json j;
  j["description"] = r.description;
  j["pairs_tested"] = r.pairs_tested;
  Json f = Json::array();
  for (const auto& x : r.failures) f.push_back({{"witness", x.witness}, {"reason", x.reason}});
  j["failures"] = std::move(f);
  return j;
}

namespace detail {

// Runs check(i) for i in [0, n) on `jobs` threads; failures keep index order.
inline std::vector<SweepFailure> run_checks(
    long long n, int jobs,
    const std::function<std::optional<SweepFailure>(long long)>& check) {
  jobs = std::max(1, jobs);
  std::vector<std::optional<SweepFailure>> slot(static_cast<std::size_t>(n));
  std::atomic<long long> next{0};
  auto worker = [&] {
    for (long long i; (i = next.fetch_add(1)) < n;) {
      try {
        slot[i] = check(i);
      } catch (const std::exception& e) {
        slot[i] = SweepFailure{"#" + std::to_string(i), e.what()};
      }
    }
  };
  std::vector<std::thread> pool;
  for (int j = 1; j < jobs; ++j) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();
  std::vector<SweepFailure> out;
  for (auto& s : slot) {
    if (s) out.push_back(std::move(*s));
  }
  return out;
}

inline double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace detail

using OneToOneRouter = std::function<PathSet(const ConstructedGraph&, Vertex, Vertex)>;

/// Routes every ordered pair of distinct blocks of H and checks count,
/// disjointness, length bounds and agreement with the max-flow count.
/// `router` replaces the construction under test (fault injection).
inline SweepReport sweep_one_to_one(const ConstructedGraph& cg, int jobs = 1,
                                  const OneToOneRouter& router = route_one_to_one) {
  auto t0 = std::chrono::steady_clock::now();
  const auto& h = cg.h;
  const auto& h0 = *cg.base;
  const int nb = h.block_count();
  const int delta = cg.delta(), k = cg.k();
  SweepReport rep;
  rep.description = "one-to-one, all ordered block pairs, delta=" +
                    std::to_string(delta) + " k=" + std::to_string(k);
  rep.pairs_tested = static_cast<long long>(nb) * (nb - 1);

  auto check = [&](long long idx) -> std::optional<SweepFailure> {
    int a = static_cast<int>(idx / (nb - 1));
    int b = static_cast<int>(idx % (nb - 1));
    if (b >= a) ++b;
    Vertex va = h.block_vertex(a), vb = h.block_vertex(b);
    std::string w = h.id(va) + " -> " + h.id(vb);
    auto fail = [&](std::string why) { return SweepFailure{w, std::move(why)}; };

    auto ps = router(cg, va, vb);
    PathSet strict = ps;
    strict.mode = Disjointness::internal;
    auto report = assert_disjoint(strict);
    if (!report.empty()) return fail(report.front());
    for (const auto& p : ps.paths) {
      if (p.front() != va || p.back() != vb) return fail("wrong endpoints");
    }

    int q1 = cg.copy_of(va), q2 = cg.copy_of(vb);
    int promised = delta, bound = 6;
    if (q1 != q2) {
      Vertex hq1 = h0.block_vertex(q1), hq2 = h0.block_vertex(q2);
      int lambda = menger_count(h0, hq1, hq2, Disjointness::internal);
      const bool full = delta == k + 1 && lambda >= 2;
      promised = full ? delta : std::min(delta, k);
      // The base paths must be genuine disjoint paths between the copies.
      if (ps.base_paths.empty()) return fail("no base paths recorded");
      PathSet base;
      base.host = &h0;
      base.paths = ps.base_paths;
      base.claimed_count = static_cast<int>(base.paths.size());
      base.length_bound = h0.vertex_count();
      for (const auto& p : base.paths) {
        if (p.front() != hq1 || p.back() != hq2) return fail("base path endpoints");
      }
      if (auto r = assert_disjoint(base); !r.empty()) return fail("base paths: " + r.front());
      int mu = base.max_length();
      std::size_t shared = 0;
      for (Vertex p : h0.neighbors(hq1)) shared += h0.adjacent(p, hq2);
      // A single shared neighbour with a full family still needs one path
      // along a longer base path.
      bound = shared >= 2 || (shared == 1 && !full) ? 6 : mu + 4;
    } else {
      int common = 0;
      for (Vertex x : h.neighbors(va)) common += h.adjacent(x, vb);
      bound = delta - common == 1 ? 6 : 4;
    }
    if (static_cast<int>(ps.paths.size()) != promised) {
      return fail("count " + std::to_string(ps.paths.size()) + " != promised " +
                  std::to_string(promised));
    }
    if (ps.max_length() > bound) {
      return fail("length " + std::to_string(ps.max_length()) + " > " + std::to_string(bound));
    }
    int mc = menger_count(h, va, vb, Disjointness::internal);
    if (mc != ps.claimed_count) {
      return fail("claimed " + std::to_string(ps.claimed_count) + " != max-flow " +
                  std::to_string(mc));
    }
    return std::nullopt;
  };
  rep.failures = detail::run_checks(rep.pairs_tested, jobs, check);
  rep.runtime_s = detail::seconds_since(t0);
  return rep;
}

/// Seeded random one-to-many requests: a source block and Delta target
/// blocks drawn uniformly (repetition allowed, source excluded).
inline SweepReport sweep_one_to_many(const ConstructedGraph& cg, int trials,
                                  std::uint64_t seed, int jobs = 1) {
  auto t0 = std::chrono::steady_clock::now();
  const auto& h = cg.h;
  const auto& h0 = *cg.base;
  const int nb = h.block_count(), delta = cg.delta();
  if (nb < 2) throw DomainError("need at least two blocks");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> pick(0, nb - 1);
  std::vector<std::pair<Vertex, std::vector<Vertex>>> cases(trials);
  for (auto& [b, ts] : cases) {
    b = h.block_vertex(pick(rng));
    while (static_cast<int>(ts.size()) < delta) {
      Vertex x = h.block_vertex(pick(rng));
      if (x != b) ts.push_back(x);
    }
  }
  SweepReport rep;
  rep.description = "one-to-many, " + std::to_string(trials) +
                    " random requests, seed " + std::to_string(seed);
  rep.pairs_tested = trials;
  auto check = [&](long long i) -> std::optional<SweepFailure> {
    const auto& [b, ts] = cases[i];
    std::string w = h.id(b) + " -> {";
    for (std::size_t j = 0; j < ts.size(); ++j) w += (j ? ", " : "") + h.id(ts[j]);
    w += "}";
    auto fail = [&](std::string why) { return SweepFailure{w, std::move(why)}; };

    auto ps = one_to_many(cg, b, ts);
    std::vector<Vertex> copies;
    for (Vertex x : ts) copies.push_back(h0.block_vertex(cg.copy_of(x)));
    auto sk = build_skeleton(h0, h0.block_vertex(cg.copy_of(b)), copies);
    PathSet strict = ps;
    strict.mode = Disjointness::edge;
    strict.length_bound = 3 * sk.height / 2 + 7;
    strict.claimed_count = delta;
    if (auto r = assert_disjoint(strict); !r.empty()) return fail(r.front());
    for (std::size_t j = 0; j < ts.size(); ++j) {
      const auto& p = ps.paths[j];
      if (p.front() != b || p.back() != ts[j]) return fail("wrong endpoints");
    }
    return std::nullopt;
  };
  rep.failures = detail::run_checks(trials, jobs, check);
  rep.runtime_s = detail::seconds_since(t0);
  return rep;
}

}  // namespace dcnd
