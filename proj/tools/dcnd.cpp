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

// dcnd: command-line front end. Every subcommand loads its inputs, calls one
// library operation, and prints the result.
//
// Exit codes: 0 success, 1 domain error, 2 input/format or usage error,
// 3 internal self-check failure.

#include <cstdint>
#include <cstdio>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "dcnd/construct.hpp"
#include "dcnd/dcn.hpp"
#include "dcnd/routing.hpp"
#include "dcnd/sweep.hpp"
#include "dcnd/tdesign.hpp"
#include "dcnd/verify.hpp"

namespace {

constexpr const char* kVersion = "1.0.0";

using dcnd::Json;

struct Globals {
  bool json = false;
  std::uint64_t seed = 1;
  int jobs = 1;
};

void emit(const Globals& g, const Json& j, const std::string& text) {
  if (g.json) {
    std::cout << j.dump(1) << "\n";
  } else {
    std::cout << text;
  }
}

dcnd::Vertex lookup(const dcnd::BipartiteGraph& g, const std::string& id) {
  auto v = g.find(id);
  if (!v) throw dcnd::DomainError("unknown element '" + id + "'");
  return *v;
}

std::string paths_text(const dcnd::PathSet& ps) {
  std::string s;
  for (const auto& p : ps.paths) {
    s += "  ";
    for (std::size_t i = 0; i < p.size(); ++i) s += (i ? " - " : "") + ps.host->id(p[i]);
    s += "\n";
  }
  return s;
}

// Splits "B[Q0,1],B[Q2,3]" on commas outside brackets.
std::vector<std::string> split_ids(const std::string& s) {
  std::vector<std::string> out(1);
  int depth = 0;
  for (char ch : s) {
    if (ch == '[') ++depth;
    if (ch == ']') --depth;
    if (ch == ',' && depth == 0) {
      out.emplace_back();
    } else {
      out.back() += ch;
    }
  }
  return out;
}

std::string report_text(const std::vector<std::string>& report) {
  if (report.empty()) return "pass\n";
  std::string s = "FAIL\n";
  for (const auto& r : report) s += "  " + r + "\n";
  return s;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Data-centre topologies from bipartite graphs and transversal designs"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_flag("--json", g.json, "Print reports as JSON");
  app.add_option("--seed", g.seed, "Seed for randomized checks")->capture_default_str();
  app.add_option("--jobs", g.jobs, "Worker threads for sweeps")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.set_version_flag("--version", kVersion);

  std::function<void()> action;
  std::string in = "-", out = "-", dot;

  // td
  auto* td = app.add_subcommand("td", "Transversal designs");
  td->require_subcommand(1);
  int delta = 0, k = 0;
  auto* td_build = td->add_subcommand("build", "Build a [delta, k] design");
  td_build->add_option("--delta", delta)->required();
  td_build->add_option("--k", k)->required();
  td_build->add_option("--out", out, "Output file, - for stdout");
  td_build->callback([&] {
    action = [&] {
      dcnd::write_text(out, dcnd::td_to_json(dcnd::build_td(delta, k)).dump(1) + "\n");
    };
  });
  auto* td_verify = td->add_subcommand("verify", "Check the design clauses");
  td_verify->add_option("--in", in, "Design file, - for stdin");
  td_verify->callback([&] {
    action = [&] {
      auto t = dcnd::td_from_json(dcnd::parse_json(dcnd::read_text(in)));
      auto report = dcnd::verify_td(t);
      emit(g, {{"pass", report.empty()}, {"failures", report}}, report_text(report));
      if (!report.empty()) throw dcnd::DomainError("design fails its clauses");
    };
  });

  // base
  auto* base = app.add_subcommand("base", "Base graph generators");
  base->require_subcommand(1);
  int n = 0;
  auto* base_cycle = base->add_subcommand("cycle", "Alternating cycle");
  base_cycle->add_option("--n", n)->required();
  base_cycle->add_option("--out", out);
  base_cycle->callback([&] {
    action = [&] { dcnd::save_graph(dcnd::gen_cycle(n), out); };
  });
  auto* base_circ = base->add_subcommand("circulant", "Circulant (delta, delta)-graph");
  base_circ->add_option("--n", n)->required();
  base_circ->add_option("--delta", delta)->required();
  base_circ->add_option("--out", out);
  base_circ->callback([&] {
    action = [&] { dcnd::save_graph(dcnd::gen_circulant(n, delta), out); };
  });
  auto* base_dc = base->add_subcommand("double-cover", "Join two copies of a square graph");
  base_dc->add_option("--in", in)->required();
  base_dc->add_option("--out", out);
  base_dc->callback([&] {
    action = [&] {
      dcnd::save_graph(dcnd::double_cover_join(dcnd::load_graph(in).graph), out);
    };
  });
  auto* base_info = base->add_subcommand("info", "Sizes, degrees and diameters of a graph");
  base_info->add_option("--in", in)->required();
  base_info->callback([&] {
    action = [&] {
      auto gr = dcnd::load_graph(in).graph;
      auto prof = dcnd::degree_profile(gr);
      bool conn = dcnd::is_connected(gr);
      Json j = {{"nodes", gr.node_count()}, {"blocks", gr.block_count()},
                {"edges", gr.edge_count()},  {"d", prof.d},
                {"delta", prof.delta},       {"regular", prof.regular},
                {"uniform", prof.uniform},   {"connected", conn}};
      std::string s = "nodes " + std::to_string(gr.node_count()) + ", blocks " +
                      std::to_string(gr.block_count()) + ", (d, delta) = (" +
                      std::to_string(prof.d) + ", " + std::to_string(prof.delta) + ")" +
                      (prof.regular && prof.uniform ? "" : " irregular") + "\n";
      if (conn) {
        j["diameter"] = dcnd::diameter(gr);
        j["line_diameter"] = dcnd::line_diameter(gr);
        s += "diameter " + std::to_string(dcnd::diameter(gr)) + ", line-diameter " +
             std::to_string(dcnd::line_diameter(gr)) + "\n";
      } else {
        s += "disconnected\n";
      }
      emit(g, j, s);
    };
  });

  // construct
  auto* cons = app.add_subcommand("construct", "2-step and 3-step constructions");
  cons->require_subcommand(1);
  std::string base_file, td_file;
  int iterations = 1;
  for (const char* name : {"two-step", "three-step"}) {
    bool three = std::string(name) == "three-step";
    auto* sc = cons->add_subcommand(name, three ? "Dual of the 2-step graph"
                                                : "Replace blocks by design copies");
    sc->add_option("--base", base_file)->required();
    sc->add_option("--td", td_file)->required();
    sc->add_option("--iterations", iterations)->capture_default_str();
    sc->add_option("--out", out);
    sc->add_option("--dot", dot, "Also write a DOT rendering");
    sc->callback([&, three] {
      action = [&, three] {
        auto h0 = dcnd::load_graph(base_file).graph;
        auto t = dcnd::td_from_json(dcnd::parse_json(dcnd::read_text(td_file)));
        auto cg = dcnd::iterate(h0, t, iterations);
        if (three) cg.h_star = dcnd::dual(cg.h);
        dcnd::save_graph(cg.graph(), out,
                         dcnd::construction_meta(h0, t, iterations, three));
        if (!dot.empty()) dcnd::write_text(dot, dcnd::export_dot(cg.graph()));
      };
    });
  }
  auto* cons_check = cons->add_subcommand("check-line-diameter",
                                          "Compare line-diameters of a construction and its base");
  cons_check->add_option("--graph", in)->required();
  cons_check->callback([&] {
    action = [&] {
      auto cg = dcnd::construction_from_saved(dcnd::load_graph(in));
      int base_ld = dcnd::line_diameter(*cg.base), ld = dcnd::line_diameter(cg.h);
      bool same = dcnd::line_diameter_preserved(*cg.base, cg);
      emit(g, {{"base_line_diameter", base_ld}, {"line_diameter", ld}, {"preserved", same}},
           "base " + std::to_string(base_ld) + ", constructed " + std::to_string(ld) +
               (same ? ": preserved\n" : ": CHANGED\n"));
      if (!same) throw dcnd::DomainError("line-diameter not preserved");
    };
  });

  // dcn
  auto* dcn = app.add_subcommand("dcn", "Switch-centric networks");
  dcn->require_subcommand(1);
  int c = 1;
  auto* dcn_a = dcn->add_subcommand("method-a", "Network from a 3-step graph");
  dcn_a->add_option("--in", in)->required();
  dcn_a->add_option("--c", c)->capture_default_str();
  dcn_a->add_option("--out", out);
  dcn_a->add_option("--dot", dot);
  dcn_a->callback([&] {
    action = [&] {
      auto net = dcnd::method_a(dcnd::load_graph(in).graph, c);
      dcnd::write_text(out, dcnd::dcn_to_json(net).dump(1) + "\n");
      if (!dot.empty()) dcnd::write_text(dot, dcnd::export_dcn_dot(net));
    };
  });
  auto* dcn_b = dcn->add_subcommand("method-b", "Dual-homed servers from a Method-A network");
  dcn_b->add_option("--in", in)->required();
  dcn_b->add_option("--out", out);
  dcn_b->add_option("--dot", dot);
  dcn_b->callback([&] {
    action = [&] {
      auto net = dcnd::method_b(dcnd::dcn_from_json(dcnd::parse_json(dcnd::read_text(in))));
      dcnd::write_text(out, dcnd::dcn_to_json(net).dump(1) + "\n");
      if (!dot.empty()) dcnd::write_text(dot, dcnd::export_dcn_dot(net));
    };
  });
  auto* dcn_info = dcn->add_subcommand("info", "Counts and server diameter of a network");
  dcn_info->add_option("--in", in)->required();
  dcn_info->callback([&] {
    action = [&] {
      auto net = dcnd::dcn_from_json(dcnd::parse_json(dcnd::read_text(in)));
      int diam = dcnd::dcn_diameter(net);
      emit(g,
           {{"servers", net.server_count()}, {"level1", net.level1_count()},
            {"level2", net.level2_count()}, {"ports", net.ports_per_switch},
            {"diameter", diam}},
           "servers " + std::to_string(net.server_count()) + ", level-1 " +
               std::to_string(net.level1_count()) + ", level-2 " +
               std::to_string(net.level2_count()) + ", ports " +
               std::to_string(net.ports_per_switch) + ", diameter " +
               std::to_string(diam) + "\n");
    };
  });
  dcnd::DcnParams params;
  std::string method = "a";
  auto* dcn_counts = dcn->add_subcommand("counts", "Closed-form sizes");
  dcn_counts->add_option("--n", params.n)->required();
  dcn_counts->add_option("--e", params.e)->required();
  dcn_counts->add_option("--d", params.d)->required();
  dcn_counts->add_option("--delta", params.delta)->required();
  dcn_counts->add_option("--k", params.k)->required();
  dcn_counts->add_option("--iterations", params.iterations)->capture_default_str();
  dcn_counts->add_option("--c", params.c)->capture_default_str();
  dcn_counts->add_option("--method", method, "plain, a or b")->capture_default_str();
  dcn_counts->add_option("--base-line-diameter", params.base_line_diameter)
      ->capture_default_str();
  dcn_counts->callback([&] {
    action = [&] {
      params.method = dcnd::dcn_method_from_string(method);
      auto r = dcnd::dcn_counts(params);
      emit(g,
           {{"servers", r.servers}, {"level1", r.level1}, {"level2", r.level2},
            {"switches", r.switches()}, {"ports", r.ports},
            {"diameter", r.diameter_bound}},
           "servers " + std::to_string(r.servers) + "\nswitches " +
               std::to_string(r.switches()) + " (level-1 " + std::to_string(r.level1) +
               ", level-2 " + std::to_string(r.level2) + ")\nports " +
               std::to_string(r.ports) + "\ndiameter " +
               std::to_string(r.diameter_bound) + "\n");
    };
  });
  auto* dcn_table = dcn->add_subcommand("table", "64-port comparison table");
  dcn_table->callback([&] {
    action = [&] {
      Json rows = Json::array();
      std::string s = "network          ports  diam      servers   switches\n";
      for (const auto& r : dcnd::comparison_table()) {
        rows.push_back({{"network", r.network}, {"ports", r.ports},
                        {"diameter", r.diameter}, {"servers", r.servers},
                        {"switches", r.switches}});
        char buf[128];
        std::snprintf(buf, sizeof buf, "%-15s %6d %5d %12lld %10lld\n", r.network.c_str(),
                      r.ports, r.diameter, static_cast<long long>(r.servers),
                      static_cast<long long>(r.switches));
        s += buf;
      }
      emit(g, rows, s);
    };
  });

  // route
  auto* route = app.add_subcommand("route", "Disjoint path families");
  route->require_subcommand(1);
  std::string src, dst, emit_paths;
  std::string targets;
  auto* r11 = route->add_subcommand("one-to-one", "Internally disjoint block-to-block paths");
  r11->add_option("--graph", in)->required();
  r11->add_option("--src", src)->required();
  r11->add_option("--dst", dst)->required();
  r11->add_option("--emit-paths", emit_paths, "Write the path JSON here");
  auto* r1n = route->add_subcommand("one-to-many", "Edge-disjoint paths to several blocks");
  r1n->add_option("--graph", in)->required();
  r1n->add_option("--src", src)->required();
  r1n->add_option("--targets", targets, "Comma-separated block ids")->required();
  r1n->add_option("--emit-paths", emit_paths);
  auto route_action = [&](bool many) {
    return [&, many] {
      auto cg = dcnd::construction_from_saved(dcnd::load_graph(in));
      auto b = lookup(cg.h, src);
      dcnd::PathSet ps;
      if (many) {
        std::vector<dcnd::Vertex> ts;
        for (const auto& id : split_ids(targets)) ts.push_back(lookup(cg.h, id));
        ps = dcnd::one_to_many(cg, b, ts);
      } else {
        ps = dcnd::route_one_to_one(cg, b, lookup(cg.h, dst));
      }
      auto j = dcnd::pathset_to_json(ps);
      if (!emit_paths.empty()) dcnd::write_text(emit_paths, j.dump(1) + "\n");
      emit(g, j,
           std::to_string(ps.paths.size()) + " " + to_string(ps.mode) +
               "-disjoint paths (" + ps.method + "), longest " +
               std::to_string(ps.max_length()) + ", bound " +
               std::to_string(ps.length_bound) + "\n" + paths_text(ps));
    };
  };
  r11->callback([&] { action = route_action(false); });
  r1n->callback([&] { action = route_action(true); });

  // verify
  auto* ver = app.add_subcommand("verify", "Independent checks");
  ver->require_subcommand(1);
  std::string paths_file, mode = "internal";
  std::string family = "one-to-one";
  int trials = 1000;
  auto* vp = ver->add_subcommand("paths", "Check a path file against a graph");
  vp->add_option("--graph", in)->required();
  vp->add_option("--paths", paths_file)->required();
  vp->add_option("--mode", mode)->check(CLI::IsMember({"internal", "edge"}));
  vp->callback([&] {
    action = [&] {
      auto gr = dcnd::load_graph(in).graph;
      auto ps = dcnd::pathset_from_json(dcnd::parse_json(dcnd::read_text(paths_file)), gr);
      ps.mode = dcnd::disjointness_from_string(mode);
      auto report = dcnd::assert_disjoint(ps);
      emit(g, {{"pass", report.empty()}, {"failures", report}}, report_text(report));
      if (!report.empty()) throw dcnd::DomainError("path set fails verification");
    };
  });
  auto* vm = ver->add_subcommand("menger", "Maximum number of disjoint paths");
  vm->add_option("--graph", in)->required();
  vm->add_option("--src", src)->required();
  vm->add_option("--dst", dst)->required();
  vm->add_option("--mode", mode)->check(CLI::IsMember({"internal", "edge"}));
  vm->callback([&] {
    action = [&] {
      auto gr = dcnd::load_graph(in).graph;
      int m = dcnd::menger_count(gr, lookup(gr, src), lookup(gr, dst),
                                 dcnd::disjointness_from_string(mode));
      emit(g, {{"count", m}, {"mode", mode}}, std::to_string(m) + "\n");
    };
  });
  auto* vs = ver->add_subcommand("sweep", "Exhaustive or randomized routing checks");
  vs->add_option("--graph", in)->required();
  vs->add_option("--family", family,
                 "one-to-one: all block pairs; one-to-many: random requests")
      ->check(CLI::IsMember({"one-to-one", "one-to-many"}))
      ->capture_default_str();
  vs->add_option("--trials", trials)->capture_default_str();
  vs->callback([&] {
    action = [&] {
      auto cg = dcnd::construction_from_saved(dcnd::load_graph(in));
      auto rep = family == "one-to-one" ? dcnd::sweep_one_to_one(cg, g.jobs)
                                          : dcnd::sweep_one_to_many(cg, trials, g.seed, g.jobs);
      std::string s = rep.description + ": " + std::to_string(rep.pairs_tested) +
                      " tested, " + std::to_string(rep.failures.size()) + " failures\n";
      for (std::size_t i = 0; i < rep.failures.size() && i < 20; ++i) {
        s += "  " + rep.failures[i].witness + ": " + rep.failures[i].reason + "\n";
      }
      std::cerr << "runtime " << rep.runtime_s << " s\n";
      emit(g, dcnd::sweep_to_json(rep), s);
      if (!rep.ok()) throw dcnd::DomainError("sweep found failures");
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  std::cerr << "dcnd " << kVersion << " seed=" << g.seed << "\n";
  try {
    if (action) action();
    return 0;
  } catch (const dcnd::DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const dcnd::FormatError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const dcnd::VerificationError& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  }
}
