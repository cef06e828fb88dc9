#include <doctest.h>

#include "crit2/builder.hpp"
#include "crit2/oracle.hpp"
#include "crit2/structural.hpp"

using namespace crit2;

TEST_CASE("sizes of built graphs") {
  auto check = [](const char* sig, int v, int e) {
    LabeledGraph b = build(tokenize(sig));
    CHECK(b.graph.vertex_count() == v);
    CHECK(b.graph.edge_count() == e);
  };
  check("VIAdLAALAALDBLHdL", 26, 48);
  check("AIVLAIVLAIVL", 12, 24);
  check("HdLHdLHdLHdLHdL", 30, 50);
  check("DDLDDLDDL", 9, 21);
}

TEST_CASE("labels trace tiles") {
  Signature s = tokenize("VIAdLAALAALDBLHdL");
  LabeledGraph b = build(s);
  REQUIRE(b.labels.size() == 26);
  REQUIRE(b.edge_tile.size() == 48);
  REQUIRE(b.tile_vertices.size() == 5);
  std::vector<int> walls(5, 0);
  for (const auto& l : b.labels)
    if (l.role != Role::Interior) ++walls[l.tile];
  for (int w : walls) CHECK(w == 2);
  for (size_t t = 0; t < 5; ++t)
    for (EdgeId e : b.tile_edges[t]) CHECK(b.edge_tile[e] == int(t));
}

TEST_CASE("rotations build isomorphic graphs") {
  Signature s = tokenize("VIAdLAALAALDBLHdL");
  auto g = build(s).graph;
  for (long k = 1; k < 5; ++k) CHECK(oracle::isomorphic(build(rotate(s, k)).graph, g));
}

TEST_CASE("the reverse reading builds the same graph") {
  for (int seed = 0; seed < 10; ++seed) {
    Signature s = random_signature(5, 300 + seed);
    CHECK(oracle::isomorphic(build(s).graph, build(reverse_reading(s)).graph));
  }
}

TEST_CASE("built graphs are 3-connected") {
  for (int seed = 0; seed < 10; ++seed)
    CHECK(oracle::is_3_connected(build(random_signature(3 + 2 * (seed % 3), seed)).graph));
}

TEST_CASE("build is deterministic") {
  Signature s = random_signature(9, 7);
  CHECK(build(s).graph == build(s).graph);
}
