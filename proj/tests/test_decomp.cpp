#include <random>

#include "doctest.h"
#include "edcol/decomp.hpp"
#include "edcol/error.hpp"
#include "edcol/families.hpp"
#include "oracles.hpp"

using namespace edcol;

namespace {

Decomposition parts(int n, std::vector<std::vector<Vertex>> p) { return Decomposition{n, std::move(p)}; }

// Components via Floyd distances; counts earlier parts with an edge into each.
int width_oracle(const Graph& g, const Decomposition& d) {
  const int n = g.vertex_count();
  std::vector<int> owner(static_cast<std::size_t>(n) + 1);
  for (int i = 0; i < d.size(); ++i)
    for (Vertex v : d.parts[static_cast<std::size_t>(i)]) owner[static_cast<std::size_t>(v)] = i;
  int best = 0;
  for (int i = 0; i < d.size(); ++i) {
    std::vector<Edge> kept;
    for (const Edge& e : g.edges())
      if (owner[static_cast<std::size_t>(e.u)] >= i && owner[static_cast<std::size_t>(e.v)] >= i) kept.push_back(e);
    auto dist = oracle::floyd(Graph(n, kept));
    for (Vertex v = 1; v <= n; ++v) {
      if (owner[static_cast<std::size_t>(v)] < i) continue;
      std::set<int> seen;
      for (Vertex u = 1; u <= n; ++u) {
        if (owner[static_cast<std::size_t>(u)] < i || dist[v][u] >= oracle::kInf) continue;
        for (Vertex w : g.neighbors(u))
          if (owner[static_cast<std::size_t>(w)] < i) seen.insert(owner[static_cast<std::size_t>(w)]);
      }
      best = std::max(best, static_cast<int>(seen.size()));
    }
  }
  return best;
}

}  // namespace

TEST_CASE("decomposition widths") {
  Graph k3 = oracle::complete(3);
  for (auto order : {std::vector<Vertex>{1, 2, 3}, {3, 1, 2}, {2, 3, 1}}) {
    Decomposition d = parts(3, {{order[0]}, {order[1]}, {order[2]}});
    CHECK(check_decomposition(k3, d).width == 2);
    CHECK(check_decomposition(k3, d, true).width == 2);
  }
  CHECK(check_decomposition(k3, parts(3, {{1, 2, 3}})).width == 0);
  CHECK(check_decomposition(k3, parts(3, {{1, 2, 3}}), true).width == 0);

  Graph p4 = oracle::path(4);
  DecompositionCheck c = check_decomposition(p4, parts(4, {{2, 3}, {1}, {4}}));
  CHECK(c.connected);
  CHECK(c.width == 1);
  CHECK(c.widths == std::vector<int>{0, 1, 1});
  CHECK(check_decomposition(p4, parts(4, {{2, 3}, {1}, {4}}), true).widths == std::vector<int>{1, 1, 0});
  CHECK_FALSE(check_decomposition(p4, parts(4, {{1, 3}, {2, 4}})).connected);

  CHECK_THROWS_AS(check_decomposition(p4, parts(4, {{1, 2}, {2, 3, 4}})), Error);
  CHECK_THROWS_AS(check_decomposition(p4, parts(4, {{1, 2}, {3}})), Error);
  CHECK_THROWS_AS(check_decomposition(p4, parts(4, {{1, 2, 3, 4}, {}})), Error);
}

TEST_CASE("widths agree with the oracle") {
  std::mt19937_64 rng(29);
  for (int rep = 0; rep < 80; ++rep) {
    Graph g = oracle::random_graph(9, 0.3, rng);
    LinearOrder L = oracle::random_order(9, rng);
    std::vector<std::vector<Vertex>> p;
    for (Vertex v : L.perm()) {
      if (p.empty() || rng() % 3 == 0) p.emplace_back();
      p.back().push_back(v);
    }
    Decomposition d = parts(9, p);
    CHECK(check_decomposition(g, d).width == width_oracle(g, d));
    CHECK(check_decomposition(g, d, true).width == width_oracle(g, d));
  }
}

TEST_CASE("flatness") {
  Graph g = oracle::cycle(6);
  Decomposition singletons = parts(6, {{1}, {2}, {3}, {4}, {5}, {6}});
  CHECK(check_flat(g, singletons, FlatnessProfile::linear(0, 1), 5).flat);

  Graph star = oracle::from_edges(5, {{1, 2}, {1, 3}, {1, 4}, {1, 5}});
  FlatCheck f = check_flat(star, parts(5, {{1, 2, 3, 4, 5}}), FlatnessProfile::linear(2, 1), 1);
  CHECK_FALSE(f.flat);
  REQUIRE(f.violation);
  CHECK(f.violation->part == 1);
  CHECK(f.violation->vertex == 1);
  CHECK(f.violation->k == 1);
  CHECK(f.violation->count == 5);

  Graph p6 = oracle::path(6);
  CHECK(check_flat(p6, parts(6, {{1, 2, 3, 4, 5, 6}}), FlatnessProfile::linear(2, 1), 9).flat);

  CHECK(FlatnessProfile::parse("LINEAR(2,1)").at(3) == 7);
  CHECK(FlatnessProfile::parse("1,3,5").at(2) == 5);
  CHECK_THROWS_AS(FlatnessProfile::parse("1,3,5").at(3), Error);
  CHECK_THROWS_AS(FlatnessProfile::parse("3,1"), Error);
  CHECK_THROWS_AS(FlatnessProfile::parse("LINEAR(2)"), Error);
  CHECK_THROWS_AS(check_flat(p6, parts(6, {{1, 2, 3, 4, 5, 6}}), FlatnessProfile::parse("1,3"), 2), Error);
}

TEST_CASE("optimal paths meet balls in at most 2k+1 vertices") {
  std::mt19937_64 rng(31);
  for (int rep = 0; rep < 60; ++rep) {
    Graph g = oracle::random_graph(12, 0.2, rng);
    auto dist = oracle::floyd(g);
    Vertex a = 1 + static_cast<int>(rng() % 12), b = 1 + static_cast<int>(rng() % 12);
    if (dist[a][b] >= oracle::kInf) continue;
    std::vector<Vertex> path{a};
    for (Vertex v = a; v != b;)
      for (Vertex w : g.neighbors(v))
        if (dist[w][b] == dist[v][b] - 1) {
          path.push_back(w);
          v = w;
          break;
        }
    for (Vertex y = 1; y <= 12; ++y)
      for (int k = 0; k <= 4; ++k) {
        int hits = 0;
        for (Vertex v : path) hits += dist[y][v] <= k;
        CHECK(hits <= 2 * k + 1);
      }
  }
}

TEST_CASE("contract and flatbound order") {
  Graph k3 = oracle::complete(3);
  CHECK(contract(k3, parts(3, {{1}, {2}, {3}})) == k3);
  CHECK(contract(k3, parts(3, {{1, 2}, {3}})).edge_count() == 1);
  CHECK_THROWS_AS(contract(oracle::path(3), parts(3, {{1, 3}, {2}})), Error);
  CHECK(flatbound_order(k3, parts(3, {{1}, {2}, {3}})) == LinearOrder::identity(3));
  CHECK(flatbound_order(oracle::path(4), parts(4, {{3, 2}, {4}, {1}})).perm()[1] == 3);
}

TEST_CASE("peeled decompositions meet the flatbound dcol bound") {
  std::vector<Graph> inputs{path_graph(9), regular_tree(3, 3), oracle::cycle(7), complete_graph(4)};
  for (const Graph& g : inputs) {
    Decomposition d = peel_shortest_paths(g);
    DecompositionCheck c = check_decomposition(g, d);
    CHECK(c.connected);
    CHECK(check_flat(g, d, FlatnessProfile::linear(2, 1), 9).flat);
    Graph h = contract(g, d);
    CHECK(eval_colnum(h, LinearOrder::identity(h.vertex_count()), {Access::Strong, kInfinity}) <= c.width + 1);
    LinearOrder L = flatbound_order(g, d);
    for (int k = 1; k <= 5; ++k) {
      BoundParams p;
      p.k = k;
      p.t = std::max(c.width, 1);
      p.f = 2 * k + 1;
      CHECK(static_cast<std::uint64_t>(eval_colnum(g, L, {Access::Dist, k})) <=
            eval_bound_formula(BoundFormula::FlatboundDcol, p));
    }
  }
}

TEST_CASE("strong infinity bound gives the weak bound") {
  for (const Graph& g : {regular_tree(3, 3), path_graph(8)}) {
    LinearOrder L = heuristic_order(g, OrderStrategy::BfsRoot);
    int t = eval_colnum(g, L, {Access::Strong, kInfinity}) - 1;
    for (int k = 1; k <= 4; ++k)
      CHECK(static_cast<std::uint64_t>(eval_colnum(g, L, {Access::Weak, k}) - 1) <= binomial(k + t, t) - 1);
  }
}

TEST_CASE("decomposition files") {
  Decomposition d = parts(4, {{2, 3}, {1}, {4}});
  std::string text = format_decomposition(d);
  CHECK(text == "p decomp 4 3\nh 1 2\nh 1 3\nh 2 1\nh 3 4\n");
  Decomposition back = parse_decomposition(text);
  CHECK(back.parts == d.parts);
  CHECK_THROWS_AS(parse_decomposition("h 1 1\n"), ParseError);
  CHECK_THROWS_AS(parse_decomposition("p decomp 2 1\nh 1 1\n"), ParseError);
  CHECK_THROWS_AS(parse_decomposition("p decomp 2 1\nh 1 1\nh 1 1\n"), ParseError);
  CHECK_THROWS_AS(parse_decomposition("p decomp 2 1\nh 2 1\nh 1 2\n"), ParseError);
  CHECK_THROWS_AS(parse_decomposition("p decomp 2 1\nh 1 3\n"), ParseError);
}

TEST_CASE("bound formulas") {
  BoundParams p;
  p.k = 5;
  CHECK(eval_bound_formula(BoundFormula::PlanarDcol, p) == 143);
  CHECK(eval_bound_formula(BoundFormula::PlanarWcol, p) == 231);
  p.g = 1;
  CHECK(eval_bound_formula(BoundFormula::GenusDcol, p) == 165);
  p.t = 2;
  CHECK(eval_bound_formula(BoundFormula::TreewidthDcol, p) == 13);
  p.t = 5;
  CHECK(eval_bound_formula(BoundFormula::MinorFreeFlat, p) == 22);
  p.k = 2;
  CHECK(eval_bound_formula(BoundFormula::PlanarWcol, p) == 30);
  p.p = 3;
  p.q = 4;
  CHECK(eval_bound_formula(BoundFormula::SignatureCount, p) == 81);
  p.col = 3;
  CHECK(eval_bound_formula(BoundFormula::KiersteadYang, p) == 9);
  p.t = 3;
  CHECK_THROWS_AS(eval_bound_formula(BoundFormula::MinorFreeFlat, p), Error);
  p.p = 2;
  CHECK_THROWS_AS(eval_bound_formula(BoundFormula::SignatureCount, p), Error);
  p.col = 1000;
  p.k = 10;
  try {
    eval_bound_formula(BoundFormula::KiersteadYang, p);
    FAIL("expected overflow");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::OutOfRange);
  }
  CHECK(bound_formula_from_name("planar-dcol") == BoundFormula::PlanarDcol);
  CHECK(binomial(4, 2) == 6);
  CHECK(binomial(2, 4) == 0);
}
