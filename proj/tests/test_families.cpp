#include <cmath>

#include "doctest.h"
#include "edcol/chi.hpp"
#include "edcol/error.hpp"
#include "edcol/families.hpp"
#include "oracles.hpp"

using namespace edcol;

namespace {

Graph without_edge(const Graph& g, Edge drop) {
  std::vector<Edge> kept;
  for (const Edge& e : g.edges())
    if (e != drop) kept.push_back(e);
  Graph out(g.vertex_count(), kept);
  for (const auto& [v, name] : g.labels()) out.set_label(v, name);
  return out;
}

}  // namespace

TEST_CASE("family names") {
  CHECK(family_from_name("REG_TREE") == Family::RegTree);
  CHECK(std::string(family_name(Family::Subdivision)) == "SUBDIVISION");
  CHECK_FALSE(family_from_name("reg_tree"));
}

TEST_CASE("small families") {
  CHECK(path_graph(4).edge_count() == 3);
  CHECK(cycle_graph(5) == oracle::cycle(5));
  CHECK(complete_graph(4).edge_count() == 6);
  CHECK(regular_tree(3, 2).vertex_count() == 10);
  CHECK(regular_tree(4, 2).vertex_count() == 17);
  CHECK_THROWS_AS(regular_tree(1, 2), Error);
  CHECK_THROWS_AS(cycle_graph(2), Error);
  CHECK_THROWS_AS(generate({Family::Snp, {3}, std::nullopt}), Error);
}

TEST_CASE("generators are deterministic") {
  for (FamilySpec spec : {FamilySpec{Family::Gkp, {3, 5}, std::nullopt}, FamilySpec{Family::Lik, {2, 3}, std::nullopt},
                          FamilySpec{Family::Snp, {4, 3}, std::nullopt}, FamilySpec{Family::Akp, {4, 5}, std::nullopt}}) {
    FamilyOutput a = generate(spec), b = generate(spec);
    CHECK(a.graph.edges() == b.graph.edges());
    CHECK(a.prescribed_order == b.prescribed_order);
  }
}

TEST_CASE("LIK vertex counts") {
  for (auto [i, k] : {std::pair{1, 2}, {1, 5}, {2, 3}, {3, 1}})
    CHECK(lik_graph(i, k).vertex_count() == 4 + 6 * (i - 1) + 4 * k);
  CHECK(exact_distance_graph(lik_graph(1, 2), 3).edge_count() == 24);
}

TEST_CASE("SNP and AKP") {
  FamilyOutput s = snp_graph(3, 3);
  CHECK(s.graph.vertex_count() == 9);
  CHECK(s.graph.edge_count() == 9);
  REQUIRE(s.prescribed_order);
  CHECK(s.prescribed_order->at(0) == 1);

  FamilyOutput a = akp_graph(4, 5);
  CHECK(a.graph.vertex_count() == 8);
  CHECK(odd_girth(a.graph) == 5);
  REQUIRE(a.prescribed_order);
  CHECK(a.prescribed_order->at(0) == 1);
  CHECK(a.prescribed_order->at(1) == 4);
  CHECK(clique_number(exact_power_graph(a.graph, 5)).value >= 4);
}

TEST_CASE("GKP structure") {
  for (int p : {4, 5}) {
    Graph g = gkp_graph(3, p);
    CHECK(g.max_degree() <= (p % 2 == 0 ? 6 : 9));
    int level = 3;
    for (int i = 1; i < p / 2; ++i) level *= 2;
    CHECK(clique_number(exact_power_graph(g, p)).value >= level);
  }
  CHECK_THROWS_AS(gkp_graph(3, 3), Error);
}

TEST_CASE("subdivision") {
  Graph s = subdivide(oracle::complete(3), 2);
  CHECK(s.vertex_count() == 9);
  CHECK(s == generate({Family::Snp, {3, 3}, std::nullopt}).graph);
  CHECK(subdivide(oracle::cycle(4), 0) == oracle::cycle(4));
}

TEST_CASE("G4 validation") {
  Graph g4 = load_g4();
  CHECK(g4.vertex_count() == 23);
  Report ok = validate_g4(g4);
  CHECK(ok.count(Status::Pass) == static_cast<int>(ok.entries().size()));
  CHECK(ok.find("g4_chi_d3")->computed == "5");

  Graph c5 = oracle::cycle(5);
  for (Vertex v = 1; v <= 5; ++v) c5.set_label(v, "x_" + std::to_string(v) + "^1");
  CHECK(validate_g4(c5).any_fail());

  for (const Edge& e : g4.edges()) {
    Report r = validate_g4(without_edge(g4, e));
    CHECK(r.any_fail());
  }
  CHECK_THROWS_AS(load_g4("/nonexistent/g4.gr"), Error);
}

TEST_CASE("G5 gadget") {
  Graph k1(1);
  Graph g = build_g5(k1);
  CHECK(g.vertex_count() == 9);
  Vertex z = *g.find_label("z'");
  DistanceTable d = bounded_distances(g, z, 9);
  CHECK(d.at(1) == 3);
  CHECK(d.at(2) == 3);
  CHECK(build_g5(oracle::cycle(5)).vertex_count() == 25);
  CHECK(build_gt(5).vertex_count() == 4 * 23 + 5);
  CHECK(build_gt(4) == load_g4());
  CHECK_THROWS_AS(build_gt(3), Error);
}
