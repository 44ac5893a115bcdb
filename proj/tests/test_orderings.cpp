#include <random>

#include "doctest.h"
#include "edcol/error.hpp"
#include "edcol/orderings.hpp"
#include "oracles.hpp"

using namespace edcol;

namespace {

std::vector<Vertex> ids(std::initializer_list<Vertex> v) { return v; }

}  // namespace

TEST_CASE("order file round trip and validation") {
  LinearOrder L = parse_order("2\n1\n3\n");
  CHECK(L.rank(2) == 0);
  CHECK(L.less(1, 3));
  CHECK(format_order(L) == "2\n1\n3\n");
  CHECK_THROWS_AS(parse_order("1\n1\n"), ParseError);
  CHECK_THROWS_AS(parse_order("1\n3\n"), ParseError);
  CHECK_THROWS_AS(LinearOrder(ids({1, 1})), Error);
}

TEST_CASE("access sets on P3") {
  Graph p3 = oracle::path(3);
  LinearOrder L(ids({2, 1, 3}));
  CHECK(access_set(p3, L, {Access::Weak, 2}, 3) == ids({2}));
  CHECK(access_set(p3, LinearOrder::identity(3), {Access::Weak, 2}, 3) == ids({1, 2}));
  for (Access a : {Access::Weak, Access::Strong, Access::Dist})
    CHECK(access_set(p3, L, {a, 3}, 2).empty());
}

TEST_CASE("colouring numbers of cliques") {
  for (int n = 1; n <= 5; ++n)
    for (Access a : {Access::Weak, Access::Strong, Access::Dist}) {
      CHECK(eval_colnum(oracle::complete(n), LinearOrder::identity(n), {a, 1}) == n);
      CHECK(exact_colnum(oracle::complete(n), {a, 1}).value == n);
    }
}

TEST_CASE("exact colnum on P3 and C5") {
  auto r = exact_colnum(oracle::path(3), {Access::Weak, 2});
  CHECK(r.value == 2);
  CHECK(r.optimal);
  CHECK(r.witness.at(0) == 2);

  for (Access a : {Access::Weak, Access::Strong, Access::Dist})
    for (int k = 1; k <= 3; ++k) {
      auto c5 = exact_colnum(oracle::cycle(5), {a, k});
      CHECK(c5.value == oracle::exact_colnum(oracle::cycle(5), a, k));
      CHECK(eval_colnum(oracle::cycle(5), c5.witness, {a, k}) == c5.value);
    }
}

TEST_CASE("access sets agree with path enumeration") {
  std::mt19937_64 rng(42);
  for (int trial = 0; trial < 120; ++trial) {
    int n = 2 + trial % 8;
    Graph g = oracle::random_graph(n, 0.2 + 0.1 * (trial % 5), rng);
    LinearOrder L = oracle::random_order(n, rng);
    for (int k = 1; k <= 5; ++k)
      for (Access a : {Access::Weak, Access::Strong, Access::Dist}) {
        auto sets = access_sets(g, L, {a, k});
        for (Vertex y = 1; y <= n; ++y) {
          auto want = oracle::access_set(g, L, a, k, y);
          CHECK(sets[y] == want);
          CHECK(access_set(g, L, {a, k}, y) == want);
        }
      }
  }
}

TEST_CASE("exact colnum agrees with exhaustive enumeration") {
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 40; ++trial) {
    int n = 2 + trial % 6;
    Graph g = oracle::random_graph(n, 0.3 + 0.05 * (trial % 6), rng);
    for (Access a : {Access::Weak, Access::Strong, Access::Dist}) {
      int k = 1 + trial % 4;
      auto r = exact_colnum(g, {a, k});
      CHECK(r.optimal);
      CHECK(r.value == oracle::exact_colnum(g, a, k));
      CHECK(eval_colnum(g, r.witness, {a, k}) == r.value);
    }
  }
}

TEST_CASE("exact colnum witness is the least optimal order") {
  Graph c5 = oracle::cycle(5);
  auto r = exact_colnum(c5, {Access::Weak, 2});
  std::vector<Vertex> perm{1, 2, 3, 4, 5};
  do {
    if (oracle::colnum(c5, LinearOrder(perm), Access::Weak, 2) == r.value) break;
  } while (std::next_permutation(perm.begin(), perm.end()));
  CHECK(r.witness == LinearOrder(perm));
}

TEST_CASE("budget exhaustion is reported") {
  std::mt19937_64 rng(1);
  Graph g = oracle::random_graph(40, 0.3, rng);
  auto r = exact_colnum(g, {Access::Weak, 4}, Deadline::after_ms(1));
  CHECK_FALSE(r.optimal);
  CHECK(eval_colnum(g, r.witness, {Access::Weak, 4}) == r.value);
}

TEST_CASE("heuristic orders") {
  Graph tree = oracle::from_edges(7, {{1, 2}, {1, 3}, {2, 4}, {2, 5}, {3, 6}, {3, 7}});
  LinearOrder bfs = heuristic_order(tree, OrderStrategy::BfsRoot);
  CHECK(bfs == LinearOrder::identity(7));
  for (int k = 1; k <= 4; ++k) CHECK(eval_colnum(tree, bfs, {Access::Weak, k}) <= k + 1);

  LinearOrder deg = heuristic_order(oracle::complete(4), OrderStrategy::Degeneracy);
  CHECK(eval_colnum(oracle::complete(4), deg, {Access::Weak, 1}) == 4);

  Graph c6 = oracle::cycle(6);
  int v = eval_colnum(c6, heuristic_order(c6, OrderStrategy::Degeneracy), {Access::Weak, 2});
  CHECK(v >= exact_colnum(c6, {Access::Weak, 2}).value);
  CHECK(v >= 3);
  CHECK(v <= 4);

  LinearOrder td = heuristic_order(oracle::path(4), OrderStrategy::TdDfs);
  CHECK(td == LinearOrder::identity(4));
  Graph split = oracle::from_edges(4, {{1, 2}, {3, 4}});
  CHECK(heuristic_order(split, OrderStrategy::BfsRoot, 3) == LinearOrder(ids({3, 4, 1, 2})));
}

TEST_CASE("weak access distance") {
  Graph p3 = oracle::path(3);
  LinearOrder L = LinearOrder::identity(3);
  CHECK(weak_access_distance(p3, L, 2, 2) == std::optional<int>(0));
  CHECK(weak_access_distance(p3, L, 3, 1) == std::optional<int>(2));
  CHECK_FALSE(weak_access_distance(p3, L, 1, 3).has_value());
  LinearOrder M(ids({2, 1, 3}));
  CHECK_FALSE(weak_access_distance(p3, M, 3, 1).has_value());
}

TEST_CASE("tree-depth") {
  CHECK(treedepth_exact(oracle::path(3)) == 2);
  CHECK(treedepth_exact(oracle::path(7)) == 3);
  for (int n = 1; n <= 6; ++n) CHECK(treedepth_exact(oracle::complete(n)) == n);
  CHECK(treedepth_exact(Graph(3)) == 1);
  CHECK(treedepth_exact(Graph(0)) == 0);
}

TEST_CASE("set sandwich and radius monotonicity") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 100; ++trial) {
    int n = 3 + trial % 6;
    Graph g = oracle::random_graph(n, 0.35, rng);
    LinearOrder L = oracle::random_order(n, rng);
    for (int k = 1; k <= 5; ++k) {
      auto r = access_sets(g, L, {Access::Strong, k});
      auto d = access_sets(g, L, {Access::Dist, k});
      auto q = access_sets(g, L, {Access::Weak, k});
      auto qh = access_sets(g, L, {Access::Weak, k / 2 + 1});
      auto q1 = access_sets(g, L, {Access::Weak, k + 1});
      auto r1 = access_sets(g, L, {Access::Strong, k + 1});
      for (Vertex y = 1; y <= n; ++y) {
        CHECK(std::includes(d[y].begin(), d[y].end(), r[y].begin(), r[y].end()));
        CHECK(std::includes(q[y].begin(), q[y].end(), d[y].begin(), d[y].end()));
        CHECK(std::includes(d[y].begin(), d[y].end(), qh[y].begin(), qh[y].end()));
        CHECK(std::includes(q1[y].begin(), q1[y].end(), q[y].begin(), q[y].end()));
        CHECK(std::includes(r1[y].begin(), r1[y].end(), r[y].begin(), r[y].end()));
      }
    }
  }
}

TEST_CASE("two weak-access paths combine") {
  // x weakly k-accessible from y and z weakly l-accessible from y: one of
  // x, z is weakly (k+l)-accessible from the other
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 60; ++trial) {
    int n = 3 + trial % 6;
    Graph g = oracle::random_graph(n, 0.35, rng);
    LinearOrder L = oracle::random_order(n, rng);
    for (Vertex y = 1; y <= n; ++y)
      for (Vertex x = 1; x <= n; ++x)
        for (Vertex z = 1; z <= n; ++z) {
          if (x == z || x == y || z == y) continue;
          auto k = weak_access_distance(g, L, y, x);
          auto l = weak_access_distance(g, L, y, z);
          if (!k || !l) continue;
          auto a = weak_access_distance(g, L, z, x);
          auto b = weak_access_distance(g, L, x, z);
          CHECK(((a && *a <= *k + *l) || (b && *b <= *k + *l)));
        }
  }
}
