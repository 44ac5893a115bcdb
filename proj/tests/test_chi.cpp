#include <random>

#include "doctest.h"
#include "edcol/chi.hpp"
#include "edcol/families.hpp"
#include "oracles.hpp"

using namespace edcol;

TEST_CASE("chromatic and clique numbers of small graphs") {
  CHECK(chromatic_number(oracle::complete(4)).value == 4);
  CHECK(chromatic_number(oracle::cycle(5)).value == 3);
  CHECK(chromatic_number(oracle::cycle(6)).value == 2);
  CHECK(chromatic_number(Graph(0)).value == 0);
  CHECK(chromatic_number(Graph(3)).value == 1);
  CHECK(clique_number(oracle::cycle(5)).value == 2);
  CHECK(clique_number(oracle::complete(5)).clique == std::vector<Vertex>{1, 2, 3, 4, 5});
}

TEST_CASE("chi and omega agree with exhaustive search") {
  std::mt19937_64 rng(19);
  for (int rep = 0; rep < 150; ++rep) {
    int n = 3 + static_cast<int>(rng() % 7);
    Graph g = oracle::random_graph(n, 0.2 + 0.1 * static_cast<double>(rep % 6), rng);
    ChiResult r = chromatic_number(g);
    REQUIRE(r.status == ChiStatus::Exact);
    CHECK(r.value == oracle::chromatic_number(g));
    CHECK(verify_proper(g, r.witness).proper);
    CHECK(r.witness.palette_size() == r.value);
    CliqueResult w = clique_number(g);
    CHECK(w.value == oracle::clique_number(g));
    CHECK(w.value <= r.value);
    for (std::size_t i = 0; i < w.clique.size(); ++i)
      for (std::size_t j = i + 1; j < w.clique.size(); ++j) CHECK(g.adjacent(w.clique[i], w.clique[j]));
  }
}

TEST_CASE("bipartite graphs need at most two colours") {
  std::mt19937_64 rng(23);
  for (int rep = 0; rep < 40; ++rep) {
    Graph g = oracle::random_graph(12, 0.3, rng);
    if (!oracle::bipartite(g)) continue;
    CHECK(chromatic_number(g).value <= 2);
  }
}

TEST_CASE("expired budget gives bounds, never a wrong exact value") {
  Graph g = exact_distance_graph(build_gt(5), 3);
  Deadline d = Deadline::after_ms(1);
  ChiResult r = chromatic_number(g, d);
  CHECK(r.lower <= 7);
  CHECK(r.upper >= 7);
  if (r.status == ChiStatus::Exact) CHECK(r.value == 7);
}

TEST_CASE("apex pair certificates") {
  Graph g4 = load_g4();
  Graph h = exact_distance_graph(g4, 3);
  auto cert = construction_certificate(g4);
  REQUIRE(cert);
  CHECK(certified_lower_bound(h, *cert) == 5);

  ApexPairCertificate broken = *cert;
  broken.apex = broken.left;
  CHECK_FALSE(certified_lower_bound(h, broken));
  broken = *cert;
  broken.second = broken.first;
  CHECK_FALSE(certified_lower_bound(h, broken));

  Graph g5 = build_gt(5);
  auto c5 = construction_certificate(g5);
  REQUIRE(c5);
  Graph h5 = exact_distance_graph(g5, 3);
  auto lb = certified_lower_bound(h5, *c5);
  CHECK(lb == 7);
  ChiResult r = chromatic_number(h5, Deadline::after_ms(60000), *lb);
  CHECK(r.status == ChiStatus::Exact);
  CHECK(r.value == 7);
  CHECK(verify_proper(h5, r.witness).proper);

  CHECK_FALSE(construction_certificate(oracle::cycle(5)));
}
