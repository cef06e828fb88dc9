#include <doctest.h>

#include "crit2/graph.hpp"

using namespace crit2;

TEST_CASE("multigraph keeps parallel edges") {
  MultiGraph g(3);
  g.add_edge(0, 1);
  g.add_edge(1, 0);
  g.add_edge(1, 2);
  CHECK(g.edge_count() == 3);
  CHECK(g.multiplicity(0, 1) == 2);
  CHECK(g.degree(1) == 3);
  CHECK(g.neighbors(1) == std::vector<Vertex>{0, 2});
  CHECK(max_degree_raw(g) == 3);
  CHECK(simple_graph(g).edge_count() == 2);
}

TEST_CASE("loops are rejected") {
  MultiGraph g(2);
  CHECK_THROWS_AS(g.add_edge(1, 1), Error);
}

TEST_CASE("edge list and json roundtrip") {
  MultiGraph g(4);
  g.add_edge(0, 1);
  g.add_edge(0, 1);
  g.add_edge(2, 3);
  CHECK(from_edge_list(to_edge_list(g)) == g);
  CHECK(from_json(to_json(g)) == g);
  CHECK(to_dot(g).find("2 -- 3") != std::string::npos);
}

TEST_CASE("connectivity and balls") {
  MultiGraph path(5);
  for (int i = 0; i + 1 < 5; ++i) path.add_edge(i, i + 1);
  CHECK(is_connected(path));
  CHECK(bfs_distances(path, 0)[4] == 4);
  Ball b = bfs_ball(path, 2, 1);
  CHECK(b.graph.vertex_count() == 3);
  CHECK(b.graph.edge_count() == 2);
  MultiGraph two(2);
  CHECK_FALSE(is_connected(two));
}
