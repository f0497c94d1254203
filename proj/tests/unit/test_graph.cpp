#include <doctest.h>

#include "dynet/experiments.hpp"
#include "dynet/graph.hpp"
#include "dynet/metrics.hpp"
#include "oracles.hpp"

using namespace dynet;

TEST_CASE("distance ordering puts unreachable above every finite value") {
  CHECK(Distance::hops(0) < Distance::hops(1));
  CHECK(Distance::hops(1000000) < Distance::unreachable());
  CHECK(Distance::unreachable() == Distance::unreachable());
  CHECK(Distance::hops(3) == Distance::hops(3));
  CHECK(Distance::hops(3).to_string() == "3");
  CHECK(Distance::unreachable().to_string() == "inf");
}

TEST_CASE("edges are symmetric, simple and counted once") {
  Graph g;
  CHECK(g.add_edge(1, 2));
  CHECK_FALSE(g.add_edge(2, 1));
  CHECK(g.has_edge(2, 1));
  CHECK(g.edge_count() == 1);
  CHECK(g.degree(1) == 1);
  CHECK_THROWS(g.add_edge(3, 3));
  CHECK(g.remove_edge(1, 2));
  CHECK_FALSE(g.remove_edge(1, 2));
  CHECK(g.edge_count() == 0);
  CHECK(g.has_vertex(1));  // endpoints survive removal
}

TEST_CASE("vertices and neighbors come back sorted") {
  Graph g{{5, 1}, {5, 9}, {5, 3}};
  auto ns = g.neighbors(5);
  CHECK(std::vector<VertexId>(ns.begin(), ns.end()) ==
        std::vector<VertexId>{1, 3, 9});
  CHECK(g.vertices() == std::vector<VertexId>{1, 3, 5, 9});
  CHECK_THROWS_WITH(g.neighbors(42), "vertex not found");
}

TEST_CASE("union keeps both edge sets and is idempotent") {
  Graph g{{1, 2}};
  Graph h{{2, 3}};
  Graph u = graph_oplus(g, h);
  CHECK(u.vertex_count() == 3);
  CHECK(u.edge_count() == 2);
  CHECK(graph_oplus(g, Graph{}) == g);
  CHECK(graph_oplus(u, g) == u);
}

TEST_CASE("union is commutative and associative on random graphs") {
  Rng rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    Graph a = oracle::random_graph(8, 0.3, rng);
    Graph b = oracle::random_graph(8, 0.3, rng);
    Graph c = oracle::random_graph(8, 0.3, rng);
    CHECK(graph_oplus(a, b) == graph_oplus(b, a));
    CHECK(graph_oplus(graph_oplus(a, b), c) ==
          graph_oplus(a, graph_oplus(b, c)));
  }
}

TEST_CASE("star attachment equals union with the star as a graph") {
  Graph g = worked_example_graph();
  Star s{0, {3, 8}};
  Graph via_star = attach_star(g, s);
  Graph star_graph{{0, 3}, {0, 8}};
  CHECK(via_star == graph_oplus(g, star_graph));
  CHECK(via_star.degree(0) == 2);

  CHECK_THROWS(attach_star(g, Star{0, {99}}));

  Graph with_isolated_hub = attach_star(g, Star{0, {}});
  CHECK(with_isolated_hub.has_vertex(0));
  CHECK(with_isolated_hub.edge_count() == g.edge_count());
}

TEST_CASE("worked example composed with a fresh edge stretches distances") {
  Graph g = worked_example_graph();
  Graph h;
  h.add_edge(9, 11);
  Graph u = graph_oplus(g, h);
  CHECK(u.vertex_count() == 11);
  auto dist = bfs_distances(u, 7);
  CHECK(dist.at(11) == Distance::hops(6));
}
