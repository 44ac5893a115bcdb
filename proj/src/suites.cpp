#include "edcol/suites.hpp"

#include <algorithm>
#include <array>
#include <random>

#include "edcol/chi.hpp"
#include "edcol/coloring.hpp"
#include "edcol/decomp.hpp"
#include "edcol/error.hpp"
#include "edcol/families.hpp"
#include "edcol/graph.hpp"
#include "edcol/orderings.hpp"

namespace edcol {

namespace {

using Rng = std::mt19937_64;

std::string str(int v) { return std::to_string(v); }

Graph random_graph(int n, double density, Rng& rng) {
  std::bernoulli_distribution coin(density);
  std::vector<Edge> edges;
  for (Vertex u = 1; u <= n; ++u)
    for (Vertex v = u + 1; v <= n; ++v)
      if (coin(rng)) edges.push_back({u, v});
  return Graph(n, edges);
}

Graph random_bipartite(int n, double density, Rng& rng) {
  std::bernoulli_distribution coin(density), side(0.5);
  std::vector<char> left(static_cast<std::size_t>(n) + 1);
  for (Vertex v = 1; v <= n; ++v) left[static_cast<std::size_t>(v)] = side(rng);
  std::vector<Edge> edges;
  for (Vertex u = 1; u <= n; ++u)
    for (Vertex v = u + 1; v <= n; ++v)
      if (left[static_cast<std::size_t>(u)] != left[static_cast<std::size_t>(v)] && coin(rng)) edges.push_back({u, v});
  return Graph(n, edges);
}

Graph random_tree(int n, Rng& rng) {
  std::vector<Edge> edges;
  for (Vertex v = 2; v <= n; ++v) {
    std::uniform_int_distribution<Vertex> parent(1, v - 1);
    edges.push_back({parent(rng), v});
  }
  return Graph(n, edges);
}

LinearOrder random_order(int n, Rng& rng) {
  std::vector<Vertex> perm(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) perm[static_cast<std::size_t>(i)] = i + 1;
  std::shuffle(perm.begin(), perm.end(), rng);
  return LinearOrder(std::move(perm));
}

Graph triangulated_grid(int rows, int cols) {
  GraphBuilder b(rows * cols);
  auto id = [&](int i, int j) { return i * cols + j + 1; };
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) {
      if (j + 1 < cols) b.add_edge(id(i, j), id(i, j + 1));
      if (i + 1 < rows) b.add_edge(id(i, j), id(i + 1, j));
      if (i + 1 < rows && j + 1 < cols) b.add_edge(id(i, j), id(i + 1, j + 1));
    }
  return b.build();
}

// Stacked triangulation: every face of the previous round gets a new vertex.
Graph apollonian(int rounds) {
  GraphBuilder b(3);
  b.add_edge(1, 2);
  b.add_edge(2, 3);
  b.add_edge(1, 3);
  std::vector<std::array<Vertex, 3>> faces{{1, 2, 3}};
  for (int r = 0; r < rounds; ++r) {
    std::vector<std::array<Vertex, 3>> next;
    for (const auto& f : faces) {
      Vertex v = b.add_vertex();
      for (Vertex x : f) b.add_edge(v, x);
      next.push_back({f[0], f[1], v});
      next.push_back({f[0], v, f[2]});
      next.push_back({v, f[1], f[2]});
    }
    faces = std::move(next);
  }
  return b.build();
}

Graph octahedron() {
  GraphBuilder b(6);
  for (Vertex u = 1; u <= 6; ++u)
    for (Vertex v = u + 1; v <= 6; ++v)
      if (!(u % 2 == 1 && v == u + 1)) b.add_edge(u, v);
  return b.build();
}

Graph icosahedron() {
  constexpr std::array<std::array<Vertex, 2>, 30> kEdges{{
      {1, 2}, {1, 3}, {1, 4}, {1, 5}, {1, 6},   {2, 3},   {3, 4},   {4, 5},   {5, 6},   {2, 6},
      {2, 7}, {3, 7}, {3, 8}, {4, 8}, {4, 9},   {5, 9},   {5, 10},  {6, 10},  {6, 11},  {2, 11},
      {7, 8}, {8, 9}, {9, 10}, {10, 11}, {7, 11}, {7, 12}, {8, 12}, {9, 12}, {10, 12}, {11, 12},
  }};
  GraphBuilder b(12);
  for (const auto& e : kEdges) b.add_edge(e[0], e[1]);
  return b.build();
}

// Runs exact chi and records `name` against `expected`, or skips on budget.
void check_chi(Report& r, const std::string& name, const Graph& h, int expected, Relation rel, Deadline deadline,
               int known_lower = 0) {
  ChiResult chi = chromatic_number(h, deadline, known_lower);
  if (chi.status != ChiStatus::Exact) {
    r.skip(name, (rel == Relation::Equal ? "" : rel == Relation::AtMost ? "<=" : ">=") + str(expected), "budget");
    return;
  }
  r.check(name, expected, chi.value, rel);
}

void chi_g4(Report& r, Deadline deadline) {
  check_chi(r, "chi_g4_d3", exact_distance_graph(load_g4(), 3), 5, Relation::Equal, deadline);
}

void chi_gt(Report& r, int t, const std::string& name, Relation rel, Deadline deadline) {
  Graph g = build_gt(t);
  Graph h = exact_distance_graph(g, 3);
  const int expected = 2 * (t - 2) + 1;
  auto cert = construction_certificate(g);
  std::optional<int> lb = cert ? certified_lower_bound(h, *cert, deadline) : std::nullopt;
  if (lb)
    r.check(name + "_certified_lb", expected, *lb, Relation::AtLeast);
  else
    r.skip(name + "_certified_lb", ">=" + str(expected), "budget");
  ChiResult chi = chromatic_number(h, deadline, lb.value_or(0));
  if (rel == Relation::Equal) r.check(name + "_colouring_ub", expected, chi.upper, Relation::AtMost);
  r.check_true(name + "_colouring_proper", verify_proper(h, chi.witness).proper);
  if (chi.status == ChiStatus::Exact)
    r.check(name, expected, chi.value, rel);
  else
    r.skip(name, str(expected), "budget");
}

void g4_structure(Report& r, Deadline deadline) { r.merge(validate_g4(load_g4(), deadline)); }

void lik_counts(Report& r) {
  for (auto [i, k] : {std::pair{1, 2}, {1, 5}, {2, 3}}) {
    Graph g = lik_graph(i, k);
    const std::string tag = "lik_" + str(i) + "_" + str(k);
    r.check(tag + "_vertices", 4 + 6 * (i - 1) + 4 * k, g.vertex_count(), Relation::Equal);
    r.check(tag + "_edges_d" + str(i + 2), 6 * k * k, static_cast<std::int64_t>(exact_distance_graph(g, i + 2).edge_count()),
            Relation::Equal);
  }
}

void snp_bounds(Report& r, Deadline deadline) {
  for (auto [n, p] : {std::pair{3, 3}, {4, 3}, {3, 5}}) {
    FamilyOutput s = snp_graph(n, p);
    const std::string tag = "snp_" + str(n) + "_" + str(p);
    check_chi(r, tag + "_chi_d" + str(p), exact_distance_graph(s.graph, p), n, Relation::Equal, deadline);
    r.check(tag + "_wcol_" + str(p - 1), p + 1, eval_colnum(s.graph, *s.prescribed_order, {Access::Weak, p - 1}),
            Relation::AtMost);
  }
}

void akp_bounds(Report& r, Deadline deadline) {
  for (auto [k, p] : {std::pair{4, 3}, {4, 5}}) {
    FamilyOutput a = akp_graph(k, p);
    const std::string tag = "akp_" + str(k) + "_" + str(p);
    auto girth = odd_girth(a.graph);
    r.check(tag + "_odd_girth", p, girth.value_or(0), Relation::Equal);
    CliqueResult w = clique_number(exact_power_graph(a.graph, p), deadline);
    r.check(tag + "_omega_e" + str(p), k, w.value, Relation::AtLeast);
    r.check(tag + "_wcol_" + str(p), p - 1, eval_colnum(a.graph, *a.prescribed_order, {Access::Weak, p}),
            Relation::AtMost);
  }
}

void tree_powers(Report& r, Deadline deadline) {
  for (int delta : {3, 4}) {
    Graph t = regular_tree(delta, 2);
    Graph e2 = exact_power_graph(t, 2), e4 = exact_power_graph(t, 4);
    const std::string tag = "tree_" + str(delta);
    check_chi(r, tag + "_chi_e2", e2, delta, Relation::Equal, deadline);
    check_chi(r, tag + "_chi_e4", e4, delta, Relation::Equal, deadline);
    check_chi(r, tag + "_chi_e2_e4", graph_union(e2, e4), delta * (delta - 1) + 1, Relation::Equal, deadline);
  }
}

void bound_table(Report& r) {
  auto eval = [](BoundFormula f, BoundParams p) { return static_cast<std::int64_t>(eval_bound_formula(f, p)); };
  r.check("bound_planar_p3", 143, eval(BoundFormula::PlanarDcol, {.k = 5}), Relation::Equal);
  r.check("bound_outerplanar_p3", 13, eval(BoundFormula::TreewidthDcol, {.k = 5, .t = 2}), Relation::Equal);
  r.check("bound_genus1_p3", 165, eval(BoundFormula::GenusDcol, {.k = 5, .g = 1}), Relation::Equal);
  r.check("bound_planar_wcol_k2", 30, eval(BoundFormula::PlanarWcol, {.k = 2}), Relation::Equal);
  r.check("bound_planar_wcol_p3", 231, eval(BoundFormula::PlanarWcol, {.k = 5}), Relation::Equal);
}

// Random corpus shared by the two colouring sweeps: n in 6..14, density 0.1..0.5.
std::vector<Graph> colouring_corpus(Rng& rng) {
  std::vector<Graph> out;
  for (int i = 0; i < 200; ++i) {
    int n = 6 + i % 9;
    double density = 0.1 + 0.05 * ((i / 9) % 9);
    out.push_back(random_graph(n, density, rng));
  }
  return out;
}

std::vector<LinearOrder> sweep_orders(const Graph& g, Rng& rng) {
  return {random_order(g.vertex_count(), rng), heuristic_order(g, OrderStrategy::Degeneracy),
          heuristic_order(g, OrderStrategy::BfsRoot)};
}

struct Tally {
  int cases = 0;
  int violations = 0;
  void count(bool ok) {
    ++cases;
    violations += ok ? 0 : 1;
  }
};

void record(Report& r, const std::string& name, const Tally& t, bool complete) {
  if (complete)
    r.check(name, 0, t.violations, Relation::Equal);
  else
    r.skip(name, "0", "budget");
}

void exact_distance_sweep(Report& r, Deadline deadline, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<Graph> corpus = colouring_corpus(rng);
  Tally odd_proper, odd_palette, odd_chain, even_proper, even_palette;
  int graphs = 0;
  bool complete = true;
  for (const Graph& g : corpus) {
    if (deadline.expired()) {
      complete = false;
      break;
    }
    ++graphs;
    const int delta = std::max(g.max_degree(), 1);
    for (const LinearOrder& L : sweep_orders(g, rng)) {
      for (int p : {1, 3, 5}) {
        Coloring c = color_exact_distance_odd(g, L, p);
        int dcol = eval_colnum(g, L, {Access::Dist, 2 * p - 1});
        int wcol = eval_colnum(g, L, {Access::Weak, 2 * p - 1});
        odd_proper.count(verify_proper(exact_distance_graph(g, p), c).proper);
        odd_palette.count(c.palette_size() <= dcol);
        odd_chain.count(dcol <= wcol);
      }
      for (int p : {2, 4}) {
        Coloring c = color_exact_distance_even(g, L, p);
        even_proper.count(verify_proper(exact_distance_graph(g, p), c).proper);
        even_palette.count(c.palette_size() <= eval_colnum(g, L, {Access::Dist, 2 * p}) * delta);
      }
    }
  }
  if (complete)
    r.check("sweep_dist_graphs", 200, graphs, Relation::AtLeast);
  else
    r.skip("sweep_dist_graphs", ">=200", "budget");
  record(r, "sweep_dist_odd_proper", odd_proper, complete);
  record(r, "sweep_dist_odd_palette_le_dcol", odd_palette, complete);
  record(r, "sweep_dist_odd_dcol_le_wcol", odd_chain, complete);
  record(r, "sweep_dist_even_proper", even_proper, complete);
  record(r, "sweep_dist_even_palette_le_dcol_delta", even_palette, complete);
}

void signature_sweep(Report& r, Deadline deadline, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<Graph> corpus = colouring_corpus(rng);
  Tally dist_proper, path_proper, palette;
  int graphs = 0;
  bool complete = true;
  for (const Graph& g : corpus) {
    if (deadline.expired()) {
      complete = false;
      break;
    }
    ++graphs;
    auto girth = odd_girth(g);
    std::array<Graph, 3> dist_union, path_union;
    for (int i = 0; i < 3; ++i) {
      int p = 2 * i + 1;
      dist_union[static_cast<std::size_t>(i)] = odd_union_graph(g, p, UnionMode::Distance);
      if (!girth || *girth >= p + 1) path_union[static_cast<std::size_t>(i)] = odd_union_graph(g, p, UnionMode::Path);
    }
    for (const LinearOrder& L : sweep_orders(g, rng))
      for (int i = 0; i < 3; ++i) {
        int p = 2 * i + 1;
        Coloring c = signature_coloring(g, L, p);
        dist_proper.count(verify_proper(dist_union[static_cast<std::size_t>(i)], c).proper);
        if (!girth || *girth >= p + 1) path_proper.count(verify_proper(path_union[static_cast<std::size_t>(i)], c).proper);
        BoundParams bp;
        bp.p = p;
        bp.q = eval_colnum(g, L, {Access::Weak, p});
        palette.count(static_cast<std::uint64_t>(c.palette_size()) <= eval_bound_formula(BoundFormula::SignatureCount, bp));
      }
  }
  if (complete)
    r.check("sweep_sig_graphs", 200, graphs, Relation::AtLeast);
  else
    r.skip("sweep_sig_graphs", ">=200", "budget");
  record(r, "sweep_sig_dist_union_proper", dist_proper, complete);
  record(r, "sweep_sig_path_union_proper", path_proper, complete);
  record(r, "sweep_sig_palette", palette, complete);
}

bool subset(const std::vector<Vertex>& a, const std::vector<Vertex>& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

void order_sandwich(Report& r, Deadline deadline, std::uint64_t seed) {
  Rng rng(seed);
  Tally r_in_d, d_in_q, half_in_d, ky;
  int graphs = 0;
  bool complete = true;
  for (int i = 0; i < 500 && complete; ++i) {
    if (deadline.expired()) {
      complete = false;
      break;
    }
    int n = 2 + i % 7;
    Graph g = random_graph(n, 0.15 + 0.1 * ((i / 7) % 6), rng);
    ++graphs;
    for (const LinearOrder& L : {random_order(n, rng), heuristic_order(g, OrderStrategy::Degeneracy)})
      for (int k = 1; k <= 5; ++k) {
        auto R = access_sets(g, L, {Access::Strong, k});
        auto D = access_sets(g, L, {Access::Dist, k});
        auto Q = access_sets(g, L, {Access::Weak, k});
        auto H = access_sets(g, L, {Access::Weak, k / 2 + 1});
        for (Vertex y = 1; y <= n; ++y) {
          const auto idx = static_cast<std::size_t>(y);
          r_in_d.count(subset(R[idx], D[idx]));
          d_in_q.count(subset(D[idx], Q[idx]));
          half_in_d.count(subset(H[idx], D[idx]));
        }
      }
    if (n <= 7)
      for (int k = 1; k <= 5; ++k) {
        ColnumResult w = exact_colnum(g, {Access::Weak, k}, deadline);
        ColnumResult c = exact_colnum(g, {Access::Strong, k}, deadline);
        if (!w.optimal || !c.optimal) {
          complete = false;
          break;
        }
        BoundParams bp;
        bp.col = c.value;
        bp.k = k;
        ky.count(static_cast<std::uint64_t>(w.value) <= eval_bound_formula(BoundFormula::KiersteadYang, bp));
      }
  }
  if (complete)
    r.check("sandwich_graphs", 500, graphs, Relation::AtLeast);
  else
    r.skip("sandwich_graphs", ">=500", "budget");
  record(r, "sandwich_r_in_d", r_in_d, complete);
  record(r, "sandwich_d_in_q", d_in_q, complete);
  record(r, "sandwich_q_half_in_d", half_in_d, complete);
  record(r, "sandwich_kierstead_yang", ky, complete);
}

int ceil_log2(int x) {
  int r = 0;
  while ((1 << r) < x) ++r;
  return r;
}

void infinity_identities(Report& r, Deadline deadline) {
  struct Known {
    std::string name;
    Graph g;
    int tw;
    int td;
  };
  std::vector<Known> cases;
  for (int n = 2; n <= 7; ++n) cases.push_back({"P" + str(n), path_graph(n), 1, ceil_log2(n + 1)});
  for (int n = 3; n <= 6; ++n) cases.push_back({"C" + str(n), cycle_graph(n), 2, 1 + ceil_log2(n)});
  for (int n = 2; n <= 5; ++n) cases.push_back({"K" + str(n), complete_graph(n), n - 1, n});
  for (const auto& c : cases) {
    ColnumResult col = exact_colnum(c.g, {Access::Strong, kInfinity}, deadline);
    ColnumResult wcol = exact_colnum(c.g, {Access::Weak, kInfinity}, deadline);
    if (col.optimal)
      r.check("inf_col_" + c.name, c.tw + 1, col.value, Relation::Equal);
    else
      r.skip("inf_col_" + c.name, str(c.tw + 1), "budget");
    if (wcol.optimal)
      r.check("inf_wcol_" + c.name, c.td, wcol.value, Relation::Equal);
    else
      r.skip("inf_wcol_" + c.name, str(c.td), "budget");
    try {
      r.check("inf_td_" + c.name, c.td, treedepth_exact(c.g, deadline), Relation::Equal);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::Budget) throw;
      r.skip("inf_td_" + c.name, str(c.td), "budget");
    }
  }
}

void bipartite_parity(Report& r, Deadline deadline, std::uint64_t seed) {
  Rng rng(seed);
  Tally bip, chi;
  bool complete = true;
  int graphs = 0;
  for (int i = 0; i < 100; ++i) {
    Graph g = random_bipartite(6 + i % 15, 0.2 + 0.05 * ((i / 15) % 7), rng);
    Graph h = odd_union_graph(g, kAllOdd, UnionMode::Distance);
    bip.count(!odd_girth(h).has_value());
    ChiResult c = chromatic_number(h, deadline);
    if (c.status != ChiStatus::Exact) {
      complete = false;
      break;
    }
    chi.count(c.value <= 2);
    ++graphs;
  }
  if (complete)
    r.check("bipartite_graphs", 100, graphs, Relation::AtLeast);
  else
    r.skip("bipartite_graphs", ">=100", "budget");
  record(r, "bipartite_odd_union_bipartite", bip, complete);
  record(r, "bipartite_odd_union_chi_le_2", chi, complete);
}

void decomp_pipeline(Report& r, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<std::pair<std::string, Graph>> inputs{
      {"path5", path_graph(5)},          {"path9", path_graph(9)},
      {"path16", path_graph(16)},        {"tree3_2", regular_tree(3, 2)},
      {"tree3_3", regular_tree(3, 3)},   {"tree4_2", regular_tree(4, 2)},
      {"octahedron", octahedron()},      {"icosahedron", icosahedron()},
      {"stacked2", apollonian(2)},       {"stacked3", apollonian(3)},
      {"trigrid3", triangulated_grid(3, 3)}, {"trigrid4", triangulated_grid(4, 4)},
  };
  for (int i = 1; i <= 4; ++i) inputs.emplace_back("randtree" + str(i), random_tree(8 + 3 * i, rng));
  constexpr int t = 2;
  for (const auto& [name, g] : inputs) {
    const std::string tag = "decomp_" + name;
    Decomposition d = peel_shortest_paths(g);
    DecompositionCheck c = check_decomposition(g, d);
    r.check_true(tag + "_connected", c.connected);
    r.check(tag + "_width", t, c.width, Relation::AtMost);
    FlatCheck flat = check_flat(g, d, FlatnessProfile::linear(2, 1), 9);
    r.check_true(tag + "_flat", flat.flat);
    if (!c.connected) continue;
    Graph h = contract(g, d);
    r.check(tag + "_contract_col_inf", t + 1,
            eval_colnum(h, LinearOrder::identity(h.vertex_count()), {Access::Strong, kInfinity}), Relation::AtMost);
    LinearOrder L = flatbound_order(g, d);
    for (int k = 1; k <= 5; ++k) {
      BoundParams bp;
      bp.k = k;
      bp.t = t;
      bp.f = 2 * k + 1;
      r.check(tag + "_dcol_" + str(k), static_cast<std::int64_t>(eval_bound_formula(BoundFormula::FlatboundDcol, bp)),
              eval_colnum(g, L, {Access::Dist, k}), Relation::AtMost);
    }
  }
}

void gkp_cliques(Report& r, Deadline deadline) {
  constexpr int k = 3;
  for (int p : {4, 5}) {
    Graph g = gkp_graph(k, p);
    const std::string tag = "gkp_" + str(k) + "_" + str(p);
    int level = k;
    for (int i = 1; i < p / 2; ++i) level *= k - 1;
    CliqueResult w = clique_number(exact_power_graph(g, p), deadline);
    r.check(tag + "_omega_e" + str(p), level, w.value, Relation::AtLeast);
    r.check(tag + "_max_degree", p % 2 == 0 ? 2 * k : 3 * k, g.max_degree(), Relation::AtMost);
  }
}

void gt_growth(Report& r, Deadline deadline) {
  Graph g5 = build_g5(Graph(1));
  r.check("g5_k1_vertices", 9, g5.vertex_count(), Relation::Equal);
  DistanceTable d = bounded_distances(g5, *g5.find_label("z'"), 9);
  r.check("g5_k1_copy_distance_to_z", 3, std::max(d.at(1), d.at(2)), Relation::Equal);
  r.check("g5_g4_vertices", 4 * 23 + 5, build_gt(5).vertex_count(), Relation::Equal);
  chi_gt(r, 6, "chi_g6_d3", Relation::AtLeast, deadline);
}

constexpr std::array<std::pair<Suite, const char*>, 5> kSuiteNames{{
    {Suite::PaperTable, "PAPER_TABLE"},
    {Suite::FamilyProperties, "FAMILY_PROPERTIES"},
    {Suite::ColoringProperties, "COLORING_PROPERTIES"},
    {Suite::OrderSandwich, "ORDER_SANDWICH"},
    {Suite::DecompChecks, "DECOMP_CHECKS"},
}};

}  // namespace

std::optional<Suite> suite_from_name(std::string_view name) {
  for (const auto& [s, n] : kSuiteNames)
    if (name == n) return s;
  return std::nullopt;
}

const char* suite_name(Suite s) {
  for (const auto& [t, n] : kSuiteNames)
    if (t == s) return n;
  return "?";
}

std::vector<CheckGroup> suite_groups(Suite s) {
  switch (s) {
    case Suite::PaperTable:
      return {CheckGroup::ChiG4, CheckGroup::ChiG5, CheckGroup::G4Structure, CheckGroup::BoundTable};
    case Suite::FamilyProperties:
      return {CheckGroup::LikCounts, CheckGroup::SnpBounds,  CheckGroup::AkpBounds, CheckGroup::TreePowers,
              CheckGroup::GkpCliques, CheckGroup::GtGrowth, CheckGroup::BipartiteParity};
    case Suite::ColoringProperties:
      return {CheckGroup::ExactDistanceSweep, CheckGroup::SignatureSweep};
    case Suite::OrderSandwich:
      return {CheckGroup::OrderSandwich, CheckGroup::InfinityIdentities};
    case Suite::DecompChecks:
      return {CheckGroup::DecompPipeline};
  }
  return {};
}

Report run_group(CheckGroup group, std::int64_t budget_ms, std::uint64_t seed) {
  Report r;
  Deadline deadline = Deadline::after_ms(budget_ms);
  switch (group) {
    case CheckGroup::ChiG4: chi_g4(r, deadline); break;
    case CheckGroup::ChiG5: chi_gt(r, 5, "chi_g5_d3", Relation::Equal, deadline); break;
    case CheckGroup::G4Structure: g4_structure(r, deadline); break;
    case CheckGroup::LikCounts: lik_counts(r); break;
    case CheckGroup::SnpBounds: snp_bounds(r, deadline); break;
    case CheckGroup::AkpBounds: akp_bounds(r, deadline); break;
    case CheckGroup::TreePowers: tree_powers(r, deadline); break;
    case CheckGroup::BoundTable: bound_table(r); break;
    case CheckGroup::ExactDistanceSweep: exact_distance_sweep(r, deadline, seed); break;
    case CheckGroup::SignatureSweep: signature_sweep(r, deadline, seed); break;
    case CheckGroup::OrderSandwich: order_sandwich(r, deadline, seed); break;
    case CheckGroup::InfinityIdentities: infinity_identities(r, deadline); break;
    case CheckGroup::BipartiteParity: bipartite_parity(r, deadline, seed); break;
    case CheckGroup::DecompPipeline: decomp_pipeline(r, seed); break;
    case CheckGroup::GkpCliques: gkp_cliques(r, deadline); break;
    case CheckGroup::GtGrowth: gt_growth(r, deadline); break;
  }
  return r;
}

Report run_suite(const SuiteSpec& spec) {
  Report r;
  r.add({"seed", std::to_string(spec.seed), std::to_string(spec.seed), Status::Pass, {}});
  for (CheckGroup g : suite_groups(spec.suite)) r.merge(run_group(g, spec.budget_ms, spec.seed));
  return r;
}

}  // namespace edcol
