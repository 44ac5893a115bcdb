#include <random>

#include "doctest.h"
#include "edcol/coloring.hpp"
#include "edcol/error.hpp"
#include "edcol/families.hpp"
#include "oracles.hpp"

using namespace edcol;

namespace {

Coloring from_list(std::initializer_list<int> colours) {
  Coloring c(static_cast<int>(colours.size()));
  Vertex v = 1;
  for (int x : colours) c.set(v++, x);
  return c;
}

}  // namespace

TEST_CASE("verify_proper") {
  CHECK(verify_proper(oracle::complete(3), from_list({1, 2, 3})).proper);
  auto bad = verify_proper(oracle::path(2), from_list({1, 1}));
  CHECK_FALSE(bad.proper);
  CHECK(bad.violation == Edge{1, 2});
  auto first = verify_proper(oracle::complete(4), from_list({1, 2, 2, 1}));
  CHECK(first.violation == Edge{1, 4});
  CHECK_THROWS_AS(verify_proper(oracle::path(2), from_list({1, 0})), Error);
}

TEST_CASE("colouring file round trip") {
  Coloring c = from_list({2, 1, 2});
  c.set_legend(1, "(1,2)");
  c.set_legend(2, "(3,1)");
  std::string text = format_coloring(c);
  CHECK(parse_coloring(text) == c);
  CHECK_THROWS_AS(parse_coloring("1 1\n1 2\n"), ParseError);
  CHECK_THROWS_AS(parse_coloring("1 1\n3 1\n"), ParseError);
  try {
    parse_coloring("1 1\n2 x\n");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
  }
}

TEST_CASE("greedy back colouring") {
  Coloring k3 = greedy_back_coloring(oracle::complete(3), LinearOrder::identity(3), {Access::Strong, 1});
  CHECK(k3 == from_list({1, 2, 3}));
  Graph c5 = oracle::cycle(5);
  Coloring c = greedy_back_coloring(c5, LinearOrder::identity(5), {Access::Weak, 2});
  CHECK(verify_proper(c5, c).proper);
  std::mt19937_64 rng(7);
  for (int rep = 0; rep < 40; ++rep) {
    Graph g = oracle::random_graph(9, 0.35, rng);
    LinearOrder L = oracle::random_order(9, rng);
    for (Access a : {Access::Weak, Access::Strong, Access::Dist})
      for (int r = 1; r <= 3; ++r)
        CHECK(greedy_back_coloring(g, L, {a, r}).palette_size() <= eval_colnum(g, L, {a, r}));
  }
}

TEST_CASE("odd exact-distance colouring") {
  Graph c6 = oracle::cycle(6);
  Coloring c = color_exact_distance_odd(c6, LinearOrder::identity(6), 3);
  CHECK(verify_proper(exact_distance_graph(c6, 3), c).proper);
  CHECK_THROWS_AS(color_exact_distance_odd(c6, LinearOrder::identity(6), 2), Error);

  Graph g4 = load_g4();
  Graph h = exact_distance_graph(g4, 3);
  LinearOrder L = heuristic_order(g4, OrderStrategy::Degeneracy);
  Coloring a = color_exact_distance_odd(g4, L, 3);
  CHECK(verify_proper(h, a).proper);
  CHECK(a.palette_size() >= 5);
  CHECK(a.palette_size() <= eval_colnum(g4, L, {Access::Dist, 5}));

  std::mt19937_64 rng(11);
  for (int rep = 0; rep < 60; ++rep) {
    Graph g = oracle::random_graph(10, 0.25, rng);
    LinearOrder o = oracle::random_order(10, rng);
    Coloring p1 = color_exact_distance_odd(g, o, 1);
    CHECK(verify_proper(g, p1).proper);
    CHECK(p1.palette_size() <= eval_colnum(g, o, {Access::Strong, 1}));
  }
}

TEST_CASE("even exact-distance colouring") {
  Graph star = oracle::from_edges(5, {{1, 2}, {1, 3}, {1, 4}, {1, 5}});
  std::mt19937_64 rng(3);
  for (int rep = 0; rep < 10; ++rep) {
    LinearOrder L = oracle::random_order(5, rng);
    CHECK(verify_proper(exact_distance_graph(star, 2), color_exact_distance_even(star, L, 2)).proper);
  }
  Graph p3 = oracle::path(3);
  Coloring c = color_exact_distance_even(p3, LinearOrder::identity(3), 2);
  CHECK(c.color(1) != c.color(3));
  CHECK_THROWS_AS(color_exact_distance_even(p3, LinearOrder::identity(3), 3), Error);

  Graph isolated(3, std::vector<Edge>{{1, 2}});
  CHECK(color_exact_distance_even(isolated, LinearOrder::identity(3), 2).complete());

  for (int rep = 0; rep < 60; ++rep) {
    Graph g = oracle::random_graph(11, 0.3, rng);
    if (!oracle::bipartite(g)) continue;
    LinearOrder L = oracle::random_order(11, rng);
    for (int p : {2, 4}) {
      Coloring e = color_exact_distance_even(g, L, p);
      CHECK(verify_proper(exact_distance_graph(g, p), e).proper);
      CHECK(e.palette_size() <= eval_colnum(g, L, {Access::Dist, 2 * p}) * std::max(g.max_degree(), 1));
    }
  }
}

TEST_CASE("even colouring legend uses pairs") {
  Graph p4 = oracle::path(4);
  Coloring c = color_exact_distance_even(p4, LinearOrder::identity(4), 2);
  REQUIRE_FALSE(c.legend().empty());
  for (const auto& [id, text] : c.legend()) {
    CHECK(text.front() == '(');
    CHECK(text.back() == ')');
  }
}

TEST_CASE("signature colouring") {
  Graph c7 = oracle::cycle(7);
  std::mt19937_64 rng(5);
  for (int rep = 0; rep < 10; ++rep) {
    LinearOrder L = oracle::random_order(7, rng);
    Coloring s = signature_coloring(c7, L, 3);
    CHECK(verify_proper(odd_union_graph(c7, 3, UnionMode::Distance), s).proper);
  }
  CHECK_THROWS_AS(signature_coloring(c7, LinearOrder::identity(7), 2), Error);

  for (int rep = 0; rep < 60; ++rep) {
    Graph g = oracle::random_graph(9, 0.3, rng);
    LinearOrder L = oracle::random_order(9, rng);
    for (int p : {1, 3, 5}) {
      Coloring s = signature_coloring(g, L, p);
      CHECK(verify_proper(odd_union_graph(g, p, UnionMode::Distance), s).proper);
      auto girth = odd_girth(g);
      if (!girth || *girth >= p + 1) CHECK(verify_proper(odd_union_graph(g, p, UnionMode::Path), s).proper);
      int q = eval_colnum(g, L, {Access::Weak, p});
      double cap = 1;
      for (int i = 0; i < q; ++i) cap *= p / 2 + 2;
      CHECK(s.palette_size() <= cap);
    }
  }
}

TEST_CASE("properness depends only on the partition") {
  Graph g = oracle::cycle(6);
  Coloring c = from_list({1, 2, 1, 2, 1, 2});
  Coloring renamed = from_list({7, 3, 7, 3, 7, 3});
  CHECK(verify_proper(g, c).proper == verify_proper(g, renamed).proper);
}
