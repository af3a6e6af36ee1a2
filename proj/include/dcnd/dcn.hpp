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

// Switch-centric networks built from a (Delta, delta)-bipartite graph H*.
//
// Method A merges c copies of H* at their nodes: each H* node becomes a
// level-1 switch with rho = delta - c*Delta pendant servers, each H* block
// becomes c level-2 switches. Method B pairs level-1 switches and dual-homes
// half of their servers.

#pragma once

#include <algorithm>
#include <cstdint>
#include <deque>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "dcnd/bigraph.hpp"
#include "dcnd/construct.hpp"
#include "dcnd/graph_io.hpp"

namespace dcnd {

enum class Role { server, level1, level2 };

inline const char* to_string(Role r) {
  switch (r) {
    case Role::server: return "server";
    case Role::level1: return "level1";
    case Role::level2: return "level2";
  }
  return "?";
}

class Dcn {
 public:
  int add(std::string id, Role role, int origin = -1, int copy = -1) {
    ids_.push_back(std::move(id));
    role_.push_back(role);
    origin_.push_back(origin);
    copy_.push_back(copy);
    non_blocking_.push_back(role == Role::level1);
    adj_.emplace_back();
    return static_cast<int>(ids_.size()) - 1;
  }

  void link(int a, int b) {
    if (a == b) throw FormatError("self link on '" + ids_[a] + "'");
    if (role_[a] == Role::server && role_[b] == Role::server) {
      throw DomainError("server-to-server link between '" + ids_[a] +
                        "' and '" + ids_[b] + "'");
    }
    adj_[a].push_back(b);
    adj_[b].push_back(a);
  }

  void finalize() {
    for (auto& nb : adj_) {
      std::sort(nb.begin(), nb.end());
      if (std::adjacent_find(nb.begin(), nb.end()) != nb.end()) {
        throw FormatError("parallel links in network");
      }
    }
  }

  int size() const { return static_cast<int>(ids_.size()); }
  const std::string& id(int v) const { return ids_[v]; }
  Role role(int v) const { return role_[v]; }
  /// level-1: H* node index; level-2: H* block index; servers: -1.
  int origin(int v) const { return origin_[v]; }
  /// level-2 switches: which of the c copies; otherwise -1.
  int copy(int v) const { return copy_[v]; }
  bool non_blocking(int v) const { return non_blocking_[v]; }
  void set_non_blocking(int v, bool nb) { non_blocking_[v] = nb; }
  const std::vector<int>& neighbors(int v) const { return adj_[v]; }
  int degree(int v) const { return static_cast<int>(adj_[v].size()); }

  int count(Role r) const {
    return static_cast<int>(std::count(role_.begin(), role_.end(), r));
  }
  int server_count() const { return count(Role::server); }
  int level1_count() const { return count(Role::level1); }
  int level2_count() const { return count(Role::level2); }
  int switch_count() const { return level1_count() + level2_count(); }

  std::vector<std::pair<int, int>> links() const {
    std::vector<std::pair<int, int>> out;
    for (int v = 0; v < size(); ++v) {
      for (int w : adj_[v]) {
        if (v < w) out.emplace_back(v, w);
      }
    }
    return out;
  }
  int link_count() const { return static_cast<int>(links().size()); }

  int ports_per_switch = 0;

  bool operator==(const Dcn& o) const {
    return ids_ == o.ids_ && role_ == o.role_ && adj_ == o.adj_ &&
           ports_per_switch == o.ports_per_switch &&
           non_blocking_ == o.non_blocking_;
  }

 private:
  std::vector<std::string> ids_;
  std::vector<Role> role_;
  std::vector<int> origin_;
  std::vector<int> copy_;
  std::vector<bool> non_blocking_;
  std::vector<std::vector<int>> adj_;
};

inline Dcn method_a(const BipartiteGraph& hstar, int c) {
  auto prof = degree_profile(hstar);
  if (!prof.regular || !prof.uniform) {
    throw DomainError("Method A needs a regular, uniform graph");
  }
  const int small = prof.d, big = prof.delta;  // (Delta, delta)
  if (small >= big) {
    throw DomainError("Method A needs node degree < block rank");
  }
  if (c < 1) throw DomainError("Method A needs c >= 1");
  const int rho = big - c * small;
  if (rho <= 0) {
    throw DomainError("Method A needs delta - c*Delta > 0, got " +
                      std::to_string(rho));
  }
  Dcn net;
  net.ports_per_switch = big;
  const int n = hstar.node_count(), e = hstar.block_count();
  for (int x = 0; x < n; ++x) {
    net.add("S1:" + hstar.id(hstar.node_vertex(x)), Role::level1, x);
  }
  for (int r = 0; r < c; ++r) {
    for (int b = 0; b < e; ++b) {
      net.add("S2:" + std::to_string(r) + ":" +
                  hstar.id(hstar.block_vertex(b)),
              Role::level2, b, r);
    }
  }
  for (int x = 0; x < n; ++x) {
    for (int s = 0; s < rho; ++s) {
      int v = net.add("srv:" + hstar.id(hstar.node_vertex(x)) + ":" +
                          std::to_string(s),
                      Role::server);
      net.link(x, v);
    }
  }
  for (auto [x, b] : hstar.edges()) {
    for (int r = 0; r < c; ++r) net.link(x, n + r * e + b);
  }
  net.finalize();
  return net;
}

inline Dcn method_a(const ConstructedGraph& hstar, int c) {
  return method_a(hstar.graph(), c);
}

/// Pairs level-1 switches in order of appearance; in each pair the first
/// loses floor(rho/2) and the second ceil(rho/2) of its highest-indexed
/// servers, and the survivors are linked to both switches.
inline Dcn method_b(const Dcn& in) {
  std::vector<int> level1;
  for (int v = 0; v < in.size(); ++v) {
    if (in.role(v) == Role::level1) level1.push_back(v);
  }
  if (level1.size() % 2 != 0) {
    throw DomainError("Method B needs an even number of level-1 switches");
  }
  auto servers_of = [&](int s) {
    std::vector<int> out;
    for (int w : in.neighbors(s)) {
      if (in.role(w) == Role::server) out.push_back(w);
    }
    return out;
  };
  int rho = -1;
  for (int s : level1) {
    int r = static_cast<int>(servers_of(s).size());
    if (rho == -1) rho = r;
    if (r != rho) {
      throw DomainError("Method B needs every level-1 switch to carry the same "
                        "number of servers");
    }
  }
  for (int v = 0; v < in.size(); ++v) {
    if (in.role(v) == Role::server && in.degree(v) != 1) {
      throw DomainError("Method B input must have single-homed servers");
    }
  }
  std::vector<char> removed(in.size(), 0);
  std::vector<int> partner(in.size(), -1);
  for (std::size_t i = 0; i < level1.size(); i += 2) {
    int a = level1[i], b = level1[i + 1];
    partner[a] = b;
    partner[b] = a;
    auto sa = servers_of(a), sb = servers_of(b);
    for (int j = 0; j < rho / 2; ++j) removed[sa[sa.size() - 1 - j]] = 1;
    for (int j = 0; j < (rho + 1) / 2; ++j) removed[sb[sb.size() - 1 - j]] = 1;
  }
  Dcn out;
  out.ports_per_switch = in.ports_per_switch;
  std::vector<int> renum(in.size(), -1);
  for (int v = 0; v < in.size(); ++v) {
    if (removed[v]) continue;
    renum[v] = out.add(in.id(v), in.role(v), in.origin(v), in.copy(v));
    out.set_non_blocking(renum[v], in.non_blocking(v));
  }
  for (auto [u, w] : in.links()) {
    if (removed[u] || removed[w]) continue;
    out.link(renum[u], renum[w]);
    int server = in.role(u) == Role::server ? u : (in.role(w) == Role::server ? w : -1);
    if (server != -1) {
      int sw = server == u ? w : u;
      out.link(renum[server], renum[partner[sw]]);
    }
  }
  out.finalize();
  return out;
}

/// Longest shortest server-to-server path, in links.
inline int dcn_diameter(const Dcn& net) {
  int best = 0;
  std::vector<int> dist(net.size());
  for (int s = 0; s < net.size(); ++s) {
    if (net.role(s) != Role::server) continue;
    std::fill(dist.begin(), dist.end(), -1);
    dist[s] = 0;
    std::deque<int> q{s};
    while (!q.empty()) {
      int u = q.front();
      q.pop_front();
      for (int w : net.neighbors(u)) {
        if (dist[w] == -1) {
          dist[w] = dist[u] + 1;
          q.push_back(w);
        }
      }
    }
    for (int t = 0; t < net.size(); ++t) {
      if (net.role(t) != Role::server) continue;
      if (dist[t] == -1) throw DomainError("network is disconnected");
      best = std::max(best, dist[t]);
    }
  }
  return best;
}

inline Json dcn_to_json(const Dcn& net) {
  Json j;
  Json servers = Json::array(), l1 = Json::array(), l2 = Json::array();
  Json blocking = Json::array();
  for (int v = 0; v < net.size(); ++v) {
    switch (net.role(v)) {
      case Role::server: servers.push_back(net.id(v)); break;
      case Role::level1: l1.push_back(net.id(v)); break;
      case Role::level2: l2.push_back(net.id(v)); break;
    }
    if (net.role(v) != Role::server && !net.non_blocking(v)) {
      blocking.push_back(net.id(v));
    }
  }
  Json links = Json::array();
  for (auto [a, b] : net.links()) links.push_back({net.id(a), net.id(b)});
  j["servers"] = std::move(servers);
  j["level1"] = std::move(l1);
  j["level2"] = std::move(l2);
  j["links"] = std::move(links);
  j["ports"] = net.ports_per_switch;
  j["blocking"] = std::move(blocking);
  return j;
}

inline Dcn dcn_from_json(const Json& j) {
  try {
    Dcn net;
    std::unordered_map<std::string, int> index;
    auto add_all = [&](const char* key, Role r) {
      for (const auto& id : j.at(key)) {
        auto s = id.get<std::string>();
        if (index.count(s)) throw FormatError("duplicate identifier '" + s + "'");
        index[s] = net.add(s, r);
      }
    };
    add_all("level1", Role::level1);
    add_all("level2", Role::level2);
    add_all("servers", Role::server);
    for (const auto& l : j.at("links")) {
      auto a = index.find(l.at(0).get<std::string>());
      auto b = index.find(l.at(1).get<std::string>());
      if (a == index.end() || b == index.end()) {
        throw FormatError("link references an unknown element");
      }
      net.link(a->second, b->second);
    }
    for (const auto& id : j.value("blocking", Json::array())) {
      auto it = index.find(id.get<std::string>());
      if (it == index.end()) throw FormatError("unknown blocking switch");
      net.set_non_blocking(it->second, false);
    }
    net.ports_per_switch = j.value("ports", 0);
    net.finalize();
    return net;
  } catch (const Json::exception& e) {
    throw FormatError(std::string("malformed network JSON: ") + e.what());
  }
}

inline std::string export_dcn_dot(const Dcn& net) {
  std::string out = "graph dcn {\n";
  for (int v = 0; v < net.size(); ++v) {
    const char* shape = net.role(v) == Role::server ? "circle"
                        : net.role(v) == Role::level1 ? "box"
                                                      : "diamond";
    out += "  " + detail::dot_quote(net.id(v)) + " [shape=" + shape + "];\n";
  }
  for (auto [a, b] : net.links()) {
    out += "  " + detail::dot_quote(net.id(a)) + " -- " + detail::dot_quote(net.id(b)) + ";\n";
  }
  out += "}\n";
  return out;
}

// Closed-form sizes.

enum class DcnMethod { plain, a, b };

inline DcnMethod dcn_method_from_string(const std::string& s) {
  if (s == "plain") return DcnMethod::plain;
  if (s == "a" || s == "A") return DcnMethod::a;
  if (s == "b" || s == "B") return DcnMethod::b;
  throw DomainError("method must be plain, a or b; got '" + s + "'");
}

struct DcnParams {
  std::int64_t n = 0, e = 0;  // base nodes and blocks
  int d = 0, delta = 0;       // base degree and rank
  int k = 0;
  int iterations = 1;
  int c = 1;
  DcnMethod method = DcnMethod::a;
  int base_line_diameter = 4;
};

struct DcnCounts {
  std::int64_t servers = 0;
  std::int64_t level1 = 0;
  std::int64_t level2 = 0;
  int ports = 0;
  int diameter_bound = 0;
  std::int64_t switches() const { return level1 + level2; }
};

/// Sizes of the network built from the 3-step graph H* of (n, e, d, delta)
/// and a [delta, k] design after `iterations` rounds. `plain` treats every
/// H* node as a server and every H* block as a switch.
inline DcnCounts dcn_counts(const DcnParams& p) {
  if (p.n < 1 || p.e < 1 || p.d < 1 || p.delta < 1 || p.k < 1 ||
      p.iterations < 1) {
    throw DomainError("counts need positive n, e, d, delta, k, iterations");
  }
  if (p.n * p.d != p.e * p.delta) {
    throw DomainError("n*d must equal e*delta for a (d, delta)-graph");
  }
  std::int64_t kpow = 1;
  for (int i = 0; i < p.iterations; ++i) kpow *= p.k;
  const std::int64_t hstar_nodes = p.e * kpow * kpow;
  const std::int64_t hstar_blocks = p.n * kpow;
  const std::int64_t rank = p.d * kpow;  // block rank of H*, i.e. ports

  DcnCounts out;
  out.ports = static_cast<int>(rank);
  if (p.method == DcnMethod::plain) {
    out.servers = hstar_nodes;
    out.level2 = hstar_blocks;
    out.diameter_bound = p.base_line_diameter;
    return out;
  }
  if (p.c < 1) throw DomainError("c must be >= 1");
  const std::int64_t rho = rank - static_cast<std::int64_t>(p.c) * p.delta;
  if (rho <= 0) {
    throw DomainError("delta - c*Delta must be positive, got " +
                      std::to_string(rho));
  }
  out.servers = hstar_nodes * rho;
  out.level1 = hstar_nodes;
  out.level2 = p.c * hstar_blocks;
  out.diameter_bound = p.base_line_diameter + 2;
  if (p.method == DcnMethod::b) {
    if (hstar_nodes % 2 != 0) {
      throw DomainError("Method B needs an even number of level-1 switches");
    }
    out.servers /= 2;
  }
  return out;
}

struct ComparisonRow {
  std::string network;
  int ports = 0;
  int diameter = 0;
  std::int64_t servers = 0;
  std::int64_t switches = 0;
};

/// The 64-port comparison: a literal Fat-Tree row, then rows recomputed from
/// the closed forms for an (8,8)-base with 855 nodes and an [8,8]-design, and
/// a (4,4)-base with 80 nodes and a [4,4]-design iterated twice.
inline std::vector<ComparisonRow> comparison_table() {
  std::vector<ComparisonRow> rows;
  rows.push_back({"Fat-Tree", 64, 6, 65536, 5120});
  auto row = [&](const std::string& name, DcnParams p) {
    auto c = dcn_counts(p);
    rows.push_back({name, c.ports, c.diameter_bound, c.servers, c.switches()});
  };
  DcnParams big{855, 855, 8, 8, 8, 1, 1, DcnMethod::plain, 4};
  row("H*", big);
  big.method = DcnMethod::a;
  row("N_A^1(H*)", big);
  big.c = 7;
  row("N_A^2(H*)", big);
  big.c = 4;
  row("N_A^3(H*)", big);
  big.c = 1;
  big.method = DcnMethod::b;
  row("N_B(H*)", big);
  DcnParams small{80, 80, 4, 4, 4, 2, 1, DcnMethod::plain, 4};
  row("Hbar*", small);
  small.method = DcnMethod::a;
  row("N_A^1(Hbar*)", small);
  return rows;
}

}  // namespace dcnd
