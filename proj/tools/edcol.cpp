// edcol command-line tool. Talks to the library through the C API only.
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "edcol/edcol.h"

namespace {

constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct Failure {
  int code;
  std::string message;
};

void check(edcol_status s) {
  if (s == EDCOL_OK) return;
  std::string msg = edcol_last_error();
  if (int line = edcol_last_error_line(); s == EDCOL_E_PARSE && line > 0) msg += " (line " + std::to_string(line) + ")";
  throw Failure{s == EDCOL_E_INVALID || s == EDCOL_E_NULL ? kExitUsage : kExitFail, msg};
}

[[noreturn]] void usage(const std::string& msg) { throw Failure{kExitUsage, msg}; }

template <typename T, void (*Free)(T*)>
struct Deleter {
  void operator()(T* p) const { Free(p); }
};
using GraphPtr = std::unique_ptr<edcol_graph, Deleter<edcol_graph, edcol_graph_free>>;
using OrderPtr = std::unique_ptr<edcol_order, Deleter<edcol_order, edcol_order_free>>;
using ColoringPtr = std::unique_ptr<edcol_coloring, Deleter<edcol_coloring, edcol_coloring_free>>;
using DecompPtr = std::unique_ptr<edcol_decomp, Deleter<edcol_decomp, edcol_decomp_free>>;
using ReportPtr = std::unique_ptr<edcol_report, Deleter<edcol_report, edcol_report_free>>;

std::string take(char* s) {
  std::string out(s);
  edcol_string_free(s);
  return out;
}

GraphPtr read_graph(const std::string& path) {
  edcol_graph* g = nullptr;
  check(edcol_graph_read(path.c_str(), &g));
  return GraphPtr(g);
}

OrderPtr read_order(const std::string& path) {
  edcol_order* o = nullptr;
  check(edcol_order_read(path.c_str(), &o));
  return OrderPtr(o);
}

DecompPtr read_decomp(const std::string& path) {
  edcol_decomp* d = nullptr;
  check(edcol_decomp_read(path.c_str(), &d));
  return DecompPtr(d);
}

// Writes to `path`, or to stdout when empty.
void emit(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << text)) throw Failure{kExitFail, "cannot write " + path};
}

void emit_graph(const std::string& path, const edcol_graph* g) {
  char* s = nullptr;
  check(edcol_graph_format(g, &s));
  emit(path, take(s));
}

void emit_order(const std::string& path, const edcol_order* o) {
  char* s = nullptr;
  check(edcol_order_format(o, &s));
  emit(path, take(s));
}

int parse_radius(const std::string& k) {
  if (k == "inf") return EDCOL_INFINITY;
  try {
    std::size_t used = 0;
    int v = std::stoi(k, &used);
    if (used == k.size()) return v;
  } catch (const std::exception&) {
  }
  usage("--k must be a non-negative integer or 'inf'");
}

edcol_access parse_kind(const std::string& kind) {
  if (kind == "col") return EDCOL_STRONG;
  if (kind == "wcol") return EDCOL_WEAK;
  if (kind == "dcol") return EDCOL_DIST;
  usage("--kind must be col, wcol or dcol");
}

edcol_format parse_format(const std::string& f) { return f == "jsonl" ? EDCOL_JSONL : EDCOL_TSV; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact distance graphs and generalised colouring numbers"};
  app.require_subcommand(1);
  app.set_version_flag("--version", edcol_version());

  std::string out_path;
  std::string graph_path;

  // gen
  auto* gen = app.add_subcommand("gen", "Generate a graph family");
  std::string family;
  std::vector<int> params;
  std::string base_path, order_out;
  gen->add_option("family", family, "PATH CYCLE COMPLETE REG_TREE GKP LIK SNP AKP G4 G5 GT SUBDIVISION")->required();
  gen->add_option("params", params, "Integer parameters");
  gen->add_option("--base", base_path, "Base graph for G5 and SUBDIVISION");
  gen->add_option("--order", order_out, "Write the prescribed order here");
  gen->add_option("-o", out_path, "Output graph file");

  // derive
  auto* derive = app.add_subcommand("derive", "Exact distance, exact power, power or odd-union graph");
  std::string derive_kind, derive_p, derive_mode = "distance";
  derive->add_option("kind", derive_kind, "exact-distance | exact-power | power | odd-union")
      ->required()
      ->check(CLI::IsMember({"exact-distance", "exact-power", "power", "odd-union"}));
  derive->add_option("graph", graph_path)->required();
  derive->add_option("--p", derive_p, "Positive integer; 'all' for odd-union in distance mode")->required();
  derive->add_option("--mode", derive_mode, "odd-union mode")->check(CLI::IsMember({"distance", "path"}));
  derive->add_option("-o", out_path);

  // order
  auto* order = app.add_subcommand("order", "Heuristic linear order");
  std::string strategy;
  int root = 1;
  order->add_option("graph", graph_path)->required();
  order->add_option("--strategy", strategy)->required()->check(CLI::IsMember({"degeneracy", "bfs", "td-dfs"}));
  order->add_option("--root", root, "Root for bfs");
  order->add_option("-o", out_path);

  // colnum
  auto* colnum = app.add_subcommand("colnum", "col_k / wcol_k / dcol_k for an order, or exactly");
  std::string kind, k_text, order_path;
  bool exact = false;
  std::int64_t time_limit = 0;
  colnum->add_option("graph", graph_path)->required();
  colnum->add_option("--kind", kind)->required();
  colnum->add_option("--k", k_text, "Radius or 'inf'")->required();
  auto* exact_flag = colnum->add_flag("--exact", exact, "Minimise over all orders");
  colnum->add_option("--order", order_path)->excludes(exact_flag);
  colnum->add_option("--time-limit-ms", time_limit, "Budget for --exact (0 = none)");
  colnum->add_option("-o", out_path, "Write the witness order (with --exact)");

  // color
  auto* color = app.add_subcommand("color", "Constructive colourings");
  std::string method;
  int p = 0;
  bool verify = false;
  color->add_option("graph", graph_path)->required();
  color->add_option("--method", method)->required()->check(CLI::IsMember({"thm10-odd", "thm10-even", "thm11", "greedy"}));
  color->add_option("--p", p, "Distance p (radius for greedy with --k absent)");
  color->add_option("--order", order_path)->required();
  color->add_option("--kind", kind, "Back-set kind for greedy");
  color->add_option("--k", k_text, "Back-set radius for greedy");
  color->add_flag("--verify", verify, "Check properness on the target graph");
  color->add_option("-o", out_path);

  // chi / omega
  std::int64_t budget = 0;
  auto* chi = app.add_subcommand("chi", "Exact chromatic number");
  chi->add_option("graph", graph_path)->required();
  chi->add_option("--budget-ms,--time-limit-ms", budget);
  chi->add_option("-o", out_path, "Write the witness colouring");
  auto* omega = app.add_subcommand("omega", "Exact clique number");
  omega->add_option("graph", graph_path)->required();
  omega->add_option("--budget-ms,--time-limit-ms", budget);

  // decomp
  auto* decomp = app.add_subcommand("decomp", "Decomposition checks and pipeline");
  std::string decomp_action, decomp_path, profile = "LINEAR(2,1)";
  bool strict = false;
  int k_max = -1;
  decomp->add_option("action", decomp_action, "check | flat | contract | order | peel")
      ->required()
      ->check(CLI::IsMember({"check", "flat", "contract", "order", "peel"}));
  decomp->add_option("graph", graph_path)->required();
  decomp->add_option("decomposition", decomp_path);
  decomp->add_flag("--strict", strict, "Remove parts j <= i before taking components");
  decomp->add_option("--profile", profile, "LINEAR(a,b) or f0,f1,...");
  decomp->add_option("--k-max", k_max, "Largest radius for flat (default 2p-1)");
  decomp->add_option("--p", p, "Target p for the default k-max");
  decomp->add_option("--root", root, "First vertex for peel");
  decomp->add_option("-o", out_path);

  // bound
  auto* bound = app.add_subcommand("bound", "Closed-form bounds");
  std::string formula;
  edcol_bound_params bp{};
  bound->add_option("--formula", formula)->required();
  bound->add_option("--k", bp.k);
  bound->add_option("--t", bp.t);
  bound->add_option("--g", bp.g);
  bound->add_option("--f", bp.f);
  bound->add_option("--p", bp.p);
  bound->add_option("--q", bp.q);
  bound->add_option("--col", bp.col);

  // verify / report
  std::uint64_t seed = 20170131;
  std::string format = "tsv";
  std::int64_t suite_budget = 600000;
  auto* verify_cmd = app.add_subcommand("verify", "Run one verification suite");
  std::string suite;
  verify_cmd->add_option("suite", suite)->required();
  auto* report_cmd = app.add_subcommand("report", "Run several suites into one report");
  std::vector<std::string> suites;
  report_cmd->add_option("suites", suites, "Default: all suites");
  for (auto* cmd : {verify_cmd, report_cmd}) {
    cmd->add_option("--seed", seed);
    cmd->add_option("--time-limit-ms", suite_budget, "Budget per check group (0 = none)");
    cmd->add_option("--format", format)->check(CLI::IsMember({"tsv", "jsonl"}));
    cmd->add_option("-o", out_path);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : kExitUsage;
  }

  try {
    if (*gen) {
      GraphPtr base;
      if (!base_path.empty()) base = read_graph(base_path);
      edcol_graph* g = nullptr;
      edcol_order* o = nullptr;
      check(edcol_generate(family.c_str(), params.data(), params.size(), base.get(), &g, &o));
      GraphPtr graph(g);
      OrderPtr prescribed(o);
      emit_graph(out_path, graph.get());
      if (!order_out.empty()) {
        if (!prescribed) usage(family + " has no prescribed order");
        check(edcol_order_write(prescribed.get(), order_out.c_str()));
      }
      return 0;
    }

    if (*derive) {
      GraphPtr g = read_graph(graph_path);
      int pv = 0;
      if (derive_p == "all") {
        if (derive_kind != "odd-union") usage("--p all is only valid for odd-union");
        pv = EDCOL_ALL_ODD;
      } else {
        pv = parse_radius(derive_p);
      }
      edcol_derived k = derive_kind == "exact-distance" ? EDCOL_EXACT_DISTANCE
                        : derive_kind == "exact-power"  ? EDCOL_EXACT_POWER
                        : derive_kind == "power"        ? EDCOL_POWER
                        : derive_mode == "path"         ? EDCOL_ODD_UNION_PATH
                                                        : EDCOL_ODD_UNION_DISTANCE;
      edcol_graph* h = nullptr;
      check(edcol_derive(g.get(), k, pv, &h));
      GraphPtr out(h);
      emit_graph(out_path, out.get());
      return 0;
    }

    if (*order) {
      GraphPtr g = read_graph(graph_path);
      edcol_strategy s = strategy == "degeneracy" ? EDCOL_DEGENERACY : strategy == "bfs" ? EDCOL_BFS_ROOT : EDCOL_TD_DFS;
      edcol_order* o = nullptr;
      check(edcol_heuristic_order(g.get(), s, root, &o));
      OrderPtr ord(o);
      emit_order(out_path, ord.get());
      return 0;
    }

    if (*colnum) {
      GraphPtr g = read_graph(graph_path);
      edcol_access a = parse_kind(kind);
      int radius = parse_radius(k_text);
      if (exact) {
        int value = 0, optimal = 0;
        edcol_order* w = nullptr;
        check(edcol_exact_colnum(g.get(), a, radius, time_limit, &value, &optimal, &w));
        OrderPtr witness(w);
        std::cout << kind << ' ' << k_text << ' ' << value << ' ' << (optimal ? "EXACT" : "UPPER_BOUND") << '\n';
        if (!out_path.empty()) emit_order(out_path, witness.get());
        return 0;
      }
      if (order_path.empty()) usage("colnum needs --exact or --order");
      OrderPtr o = read_order(order_path);
      int value = 0;
      check(edcol_eval_colnum(g.get(), o.get(), a, radius, &value));
      std::cout << kind << ' ' << k_text << ' ' << value << '\n';
      return 0;
    }

    if (*color) {
      GraphPtr g = read_graph(graph_path);
      OrderPtr o = read_order(order_path);
      edcol_method m = method == "thm10-odd"    ? EDCOL_ODD_P
                       : method == "thm10-even" ? EDCOL_EVEN_P
                       : method == "thm11"      ? EDCOL_SIGNATURE
                                                : EDCOL_GREEDY;
      edcol_access a = EDCOL_WEAK;
      int radius = p;
      if (m == EDCOL_GREEDY) {
        if (!kind.empty()) a = parse_kind(kind);
        if (!k_text.empty()) radius = parse_radius(k_text);
        if (kind.empty() || radius == 0) usage("greedy needs --kind and --k");
      } else if (p < 1) {
        usage("--p must be a positive integer");
      }
      edcol_coloring* c = nullptr;
      check(edcol_color(g.get(), o.get(), m, p, a, radius, &c));
      ColoringPtr col(c);
      char* text = nullptr;
      check(edcol_coloring_format(col.get(), &text));
      emit(out_path, take(text));
      std::cerr << "palette " << edcol_coloring_palette_size(col.get()) << '\n';
      if (verify) {
        edcol_graph* target = nullptr;
        if (m == EDCOL_GREEDY)
          check(edcol_derive(g.get(), EDCOL_EXACT_DISTANCE, 1, &target));
        else if (m == EDCOL_SIGNATURE)
          check(edcol_derive(g.get(), EDCOL_ODD_UNION_DISTANCE, p, &target));
        else
          check(edcol_derive(g.get(), EDCOL_EXACT_DISTANCE, p, &target));
        GraphPtr h(target);
        int proper = 0, u = 0, v = 0;
        check(edcol_verify_proper(h.get(), col.get(), &proper, &u, &v));
        if (!proper) {
          std::cerr << "not proper: edge " << u << ' ' << v << '\n';
          return kExitFail;
        }
        std::cerr << "proper\n";
      }
      return 0;
    }

    if (*chi) {
      GraphPtr h = read_graph(graph_path);
      int is_exact = 0, lower = 0, upper = 0;
      edcol_coloring* w = nullptr;
      check(edcol_chromatic_number(h.get(), budget, &is_exact, &lower, &upper, &w));
      ColoringPtr witness(w);
      if (is_exact)
        std::cout << "chi " << upper << " EXACT\n";
      else
        std::cout << "chi " << lower << ' ' << upper << " BOUNDS\n";
      if (!out_path.empty()) {
        check(edcol_coloring_write(witness.get(), out_path.c_str()));
      }
      return 0;
    }

    if (*omega) {
      GraphPtr h = read_graph(graph_path);
      int value = 0, optimal = 0;
      int* clique = nullptr;
      std::size_t len = 0;
      check(edcol_clique_number(h.get(), budget, &value, &optimal, &clique, &len));
      std::cout << "omega " << value << (optimal ? " EXACT" : " LOWER_BOUND") << "\nclique";
      for (std::size_t i = 0; i < len; ++i) std::cout << ' ' << clique[i];
      std::cout << '\n';
      edcol_ints_free(clique);
      return 0;
    }

    if (*decomp) {
      GraphPtr g = read_graph(graph_path);
      if (decomp_action == "peel") {
        edcol_decomp* d = nullptr;
        check(edcol_decomp_peel(g.get(), root, &d));
        DecompPtr dec(d);
        char* s = nullptr;
        check(edcol_decomp_format(dec.get(), &s));
        emit(out_path, take(s));
        return 0;
      }
      if (decomp_path.empty()) usage("decomp " + decomp_action + " needs a decomposition file");
      DecompPtr d = read_decomp(decomp_path);
      if (decomp_action == "check") {
        int connected = 0, width = 0;
        int* widths = nullptr;
        std::size_t n = 0;
        check(edcol_decomp_check(g.get(), d.get(), strict ? 1 : 0, &connected, &width, &widths, &n));
        std::cout << "connected " << (connected ? "true" : "false") << "\nwidth " << width << "\nwidths";
        for (std::size_t i = 0; i < n; ++i) std::cout << ' ' << widths[i];
        std::cout << '\n';
        edcol_ints_free(widths);
        return 0;
      }
      if (decomp_action == "flat") {
        if (k_max < 0) {
          if (p < 1) usage("flat needs --k-max or --p");
          k_max = 2 * p - 1;
        }
        int flat = 0;
        edcol_flat_violation v{};
        check(edcol_decomp_flat(g.get(), d.get(), profile.c_str(), k_max, &flat, &v));
        if (flat) {
          std::cout << "flat true\n";
          return 0;
        }
        std::cout << "flat false\nviolation part " << v.part << " vertex " << v.vertex << " k " << v.k << " count "
                  << v.count << " bound " << v.bound << '\n';
        return kExitFail;
      }
      if (decomp_action == "contract") {
        edcol_graph* h = nullptr;
        check(edcol_decomp_contract(g.get(), d.get(), &h));
        GraphPtr out(h);
        emit_graph(out_path, out.get());
        return 0;
      }
      edcol_order* o = nullptr;
      check(edcol_decomp_order(g.get(), d.get(), &o));
      OrderPtr ord(o);
      emit_order(out_path, ord.get());
      return 0;
    }

    if (*bound) {
      std::uint64_t value = 0;
      check(edcol_bound(formula.c_str(), &bp, &value));
      std::cout << value << '\n';
      return 0;
    }

    if (*verify_cmd || *report_cmd) {
      if (*verify_cmd) suites = {suite};
      if (suites.empty())
        suites = {"PAPER_TABLE", "FAMILY_PROPERTIES", "COLORING_PROPERTIES", "ORDER_SANDWICH", "DECOMP_CHECKS"};
      ReportPtr all(edcol_report_new());
      if (!all) throw Failure{kExitFail, edcol_last_error()};
      for (const auto& name : suites) {
        edcol_report* r = nullptr;
        check(edcol_run_suite(name.c_str(), suite_budget, seed, &r));
        ReportPtr part(r);
        check(edcol_report_merge(all.get(), part.get()));
      }
      char* text = nullptr;
      check(edcol_report_format(all.get(), parse_format(format), &text));
      emit(out_path, take(text));
      return edcol_report_any_fail(all.get()) ? kExitFail : 0;
    }
  } catch (const Failure& f) {
    std::cerr << "error: " << f.message << '\n';
    return f.code;
  }
  return 0;
}
