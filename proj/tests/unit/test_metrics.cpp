#include <doctest.h>

#include <cmath>

#include "dynet/experiments.hpp"
#include "dynet/generators.hpp"
#include "dynet/metrics.hpp"
#include "oracles.hpp"

using namespace dynet;

TEST_CASE("bfs distances on paths, demo graph and split graphs") {
  SUBCASE("path") {
    Graph g{{0, 1}, {1, 2}};
    auto d = bfs_distances(g, 0);
    CHECK(d.at(0) == Distance::hops(0));
    CHECK(d.at(1) == Distance::hops(1));
    CHECK(d.at(2) == Distance::hops(2));
  }
  SUBCASE("demo graph from vertex 7") {
    auto d = bfs_distances(worked_example_graph(), 7);
    CHECK(d.at(9) == Distance::hops(5));
    CHECK(d.at(3) == Distance::hops(2));
    CHECK(d.at(5) == Distance::hops(1));
  }
  SUBCASE("two components") {
    Graph g{{0, 1}, {2, 3}};
    auto d = bfs_distances(g, 0);
    CHECK(d.at(2).is_unreachable());
    CHECK(d.at(3).is_unreachable());
  }
  SUBCASE("unknown source") {
    Graph g{{0, 1}};
    CHECK_THROWS_WITH(bfs_distances(g, 9), "vertex not found");
  }
}

TEST_CASE("center profile on known graphs") {
  SUBCASE("demo graph") {
    auto p = center_profile(worked_example_graph());
    CHECK(p.radius == Distance::hops(3));
    CHECK(p.diameter == Distance::hops(5));
    CHECK(p.center == std::vector<VertexId>{1, 3});
  }
  SUBCASE("path of three") {
    auto p = center_profile(Graph{{0, 1}, {1, 2}});
    CHECK(p.radius == Distance::hops(1));
    CHECK(p.diameter == Distance::hops(2));
    CHECK(p.center == std::vector<VertexId>{1});
  }
  SUBCASE("complete graph") {
    auto p = center_profile(complete_graph(4));
    CHECK(p.radius == Distance::hops(1));
    CHECK(p.diameter == Distance::hops(1));
    CHECK(p.center.size() == 4);
  }
  SUBCASE("disconnected graph has an empty center") {
    auto p = center_profile(Graph{{0, 1}, {2, 3}});
    CHECK(p.radius.is_unreachable());
    CHECK(p.diameter.is_unreachable());
    CHECK(p.center.empty());
    CHECK(p.ecc.at(0).is_unreachable());
  }
  SUBCASE("empty graph is an error") { CHECK_THROWS(center_profile(Graph{})); }
}

TEST_CASE("center profile matches the all-pairs relaxation oracle") {
  Rng rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 2 + rng.below(39);
    Graph g = oracle::random_connected_graph(n, 0.1, rng);
    auto got = center_profile(g);
    auto want = oracle::center_oracle(g);
    REQUIRE(got.radius == Distance::hops(want.radius));
    REQUIRE(got.diameter == Distance::hops(want.diameter));
    REQUIRE(got.center == want.center);
    for (VertexId v : g.vertices())
      REQUIRE(got.ecc.at(v) ==
              Distance::hops(oracle::all_pairs(g).eccentricity(v)));
  }
}

TEST_CASE("eccentricity equals the max of single-source distances") {
  Rng rng(13);
  for (int trial = 0; trial < 50; ++trial) {
    Graph g = oracle::random_connected_graph(2 + rng.below(20), 0.2, rng);
    auto p = center_profile(g);
    for (VertexId v : g.vertices()) {
      Distance far = Distance::hops(0);
      for (const auto& [w, d] : bfs_distances(g, v)) far = std::max(far, d);
      REQUIRE(p.ecc.at(v) == far);
    }
  }
}

TEST_CASE("radius <= diameter <= 2 radius on connected graphs") {
  Rng rng(17);
  for (int trial = 0; trial < 100; ++trial) {
    Graph g = oracle::random_connected_graph(2 + rng.below(30), 0.15, rng);
    auto p = center_profile(g);
    REQUIRE(p.radius <= p.diameter);
    REQUIRE(p.diameter.value() <= 2 * p.radius.value());
  }
}

TEST_CASE("betweenness on small fixtures") {
  SUBCASE("path puts all load on the middle") {
    auto b = betweenness(Graph{{0, 1}, {1, 2}});
    CHECK(b.at(1) == doctest::Approx(1.0));
    CHECK(b.at(0) == doctest::Approx(0.0));
    CHECK(b.at(2) == doctest::Approx(0.0));
  }
  SUBCASE("four-cycle splits opposite pairs") {
    auto b = betweenness(cycle_graph(4));
    for (VertexId v : {0, 1, 2, 3}) CHECK(b.at(v) == doctest::Approx(0.5));
  }
  SUBCASE("demo graph brokers") {
    auto b = betweenness(worked_example_graph());
    CHECK(b.at(3) == doctest::Approx(24.0));
    CHECK(b.at(2) == doctest::Approx(20.0));
  }
}

TEST_CASE("betweenness matches exhaustive path enumeration") {
  Rng rng(19);
  int checked = 0;
  while (checked < 200) {
    const std::size_t n = 2 + rng.below(7);
    Graph g = oracle::random_graph(n, 0.4, rng);
    if (g.edge_count() == 0) continue;
    ++checked;
    auto got = betweenness(g);
    auto want = oracle::betweenness_oracle(g);
    for (VertexId v : g.vertices())
      REQUIRE(got.at(v) == doctest::Approx(want.at(v)).epsilon(1e-9));
  }
}

TEST_CASE("clustering coefficient fixtures") {
  CHECK(clustering_coefficient(complete_graph(3)) == doctest::Approx(1.0));
  Graph star{{0, 1}, {0, 2}, {0, 3}, {0, 4}};
  CHECK(clustering_coefficient(star) == doctest::Approx(0.0));
  Graph tri_pendant{{0, 1}, {0, 2}, {1, 2}, {0, 3}};
  CHECK(clustering_coefficient(tri_pendant) == doctest::Approx(7.0 / 12.0));
  CHECK_THROWS(clustering_coefficient(Graph{}));
}

TEST_CASE("core numbers by iterative pruning") {
  SUBCASE("cycle is a 2-core") {
    auto cores = k_core_decomposition(cycle_graph(10));
    for (const auto& [v, c] : cores) CHECK(c == 2);
  }
  SUBCASE("star is a 1-core") {
    Graph star{{0, 1}, {0, 2}, {0, 3}, {0, 4}};
    auto cores = k_core_decomposition(star);
    for (const auto& [v, c] : cores) CHECK(c == 1);
  }
  SUBCASE("clique with a pendant") {
    Graph g = complete_graph(4);
    g.add_edge(0, 9);
    auto cores = k_core_decomposition(g);
    CHECK(cores.at(0) == 3);
    CHECK(cores.at(1) == 3);
    CHECK(cores.at(9) == 1);
  }
}

TEST_CASE("cp coefficient vanishes on symmetric graphs") {
  SUBCASE("complete graph, exactly zero") {
    CHECK(cp_coefficient(complete_graph(6), 5, 1) == doctest::Approx(0.0));
  }
  SUBCASE("twelve-cycle within monte carlo noise") {
    CHECK(std::abs(cp_coefficient(cycle_graph(12), 20, 1)) < 0.05);
  }
  SUBCASE("disconnected input is an error") {
    CHECK_THROWS(cp_coefficient(Graph{{0, 1}, {2, 3}}, 5, 1));
  }
}

TEST_CASE("largest component extraction") {
  Graph g{{0, 1}, {1, 2}, {5, 6}};
  auto comp = largest_component(g);
  CHECK(comp == std::vector<VertexId>{0, 1, 2});
  Graph sub = induced_subgraph(g, comp);
  CHECK(sub.vertex_count() == 3);
  CHECK(sub.edge_count() == 2);
}
