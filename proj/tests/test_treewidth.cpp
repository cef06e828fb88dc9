#include <doctest.h>

#include "crit2/builder.hpp"
#include "crit2/oracle.hpp"
#include "crit2/treewidth.hpp"

using namespace crit2;

TEST_CASE("tile classes") {
  CHECK(classify_tile(parse_tile_name("HdL")) == TileKind::Messy);
  CHECK(classify_tile(parse_tile_name("VIAdL")) == TileKind::Messy);
  CHECK(classify_tile(parse_tile_name("BBL")) == TileKind::Neat);
  CHECK(classify_tile(parse_tile_name("DDL")) == TileKind::Neat);
  CHECK(messy_count(tokenize("VIAdLAALAALDBLHdL")) == 2);
}

TEST_CASE("treewidth anchors") {
  CHECK(treewidth(tokenize("HdLHdLHdLHdLHdL")) == 5);
  CHECK(treewidth(tokenize("DDLDDLDDLDDLDDL")) == 4);
  CHECK(treewidth(tokenize("AALAALAAL")) == 3);
  CHECK(treewidth(tokenize("VIAdLAALAALDBLHdL")) == 4);
  CHECK(oracle::exact_treewidth(build(tokenize("DDLDDLDDLDDLDDL")).graph) == 4);
  CHECK(oracle::exact_treewidth(build(tokenize("AALAALAAL")).graph) == 3);
}

TEST_CASE("decompositions validate at the claimed width") {
  for (const char* sig : {"HdLHdLHdLHdLHdL", "DDLDDLDDLDDLDDL", "VIAdLAALAALDBLHdL", "AALAALAAL"}) {
    Signature s = tokenize(sig);
    auto b = build(s);
    auto check = validate_decomposition(b.graph, build_tree_decomposition(s, b));
    CHECK(check.ok);
    CHECK(check.width == treewidth(s));
  }
  for (int seed = 0; seed < 30; ++seed) {
    Signature s = random_signature(3 + 2 * (seed % 6), 11000 + seed);
    auto b = build(s);
    auto check = validate_decomposition(b.graph, build_tree_decomposition(s, b));
    CHECK(check.ok);
    CHECK(check.width == treewidth(s));
  }
}

TEST_CASE("validator catches broken decompositions") {
  MultiGraph g(4);
  g.add_edge(0, 1);
  g.add_edge(1, 2);
  g.add_edge(2, 3);
  TreeDecomposition all{{{0, 1, 2, 3}}, {}};
  auto ok = validate_decomposition(g, all);
  CHECK(ok.ok);
  CHECK(ok.width == 3);
  TreeDecomposition missing{{{0, 1}, {2, 3}}, {{0, 1}}};
  auto c1 = validate_decomposition(g, missing);
  CHECK_FALSE(c1.ok);
  CHECK(c1.violation.find("(1)") != std::string::npos);
  TreeDecomposition split{{{0, 1}, {1, 2}, {2, 3}, {0}}, {{0, 1}, {1, 2}, {2, 3}}};
  auto c2 = validate_decomposition(g, split);
  CHECK_FALSE(c2.ok);
  CHECK(c2.violation.find("(2)") != std::string::npos);
}

TEST_CASE("hourglass cubed") {
  MultiGraph h = hourglass_cubed();
  CHECK(h.vertex_count() == 9);
  CHECK(oracle::exact_treewidth(h) == 5);
}

TEST_CASE("hourglass minor witnesses") {
  for (const char* sig : {"HdLHdLHdLHdLHdL", "HdLDDLDDLHdLHdL", "VIAdLBALHLDDL AIVL"}) {
    Signature s = tokenize(sig);
    auto b = build(s);
    CHECK(validate_minor_witness(b.graph, hourglass_minor_witness(s, b)) == "");
  }
  CHECK_THROWS_AS(hourglass_minor_witness(tokenize("DDLDDLDDLDDLDDL")), Error);
}

TEST_CASE("minor validator rejects bad models") {
  Signature s = tokenize("HdLHdLHdLHdLHdL");
  auto b = build(s);
  auto w = hourglass_minor_witness(s, b);
  auto broken = w;
  broken.branch_sets[0].push_back(broken.branch_sets[1].front());
  CHECK(validate_minor_witness(b.graph, broken) != "");
}

TEST_CASE("elimination and path decompositions are valid") {
  auto g = build(random_signature(7, 3)).graph;
  std::vector<Vertex> order(g.vertex_count());
  for (int i = 0; i < g.vertex_count(); ++i) order[i] = i;
  CHECK(validate_decomposition(g, decomposition_from_elimination(g, order)).ok);
  CHECK(validate_decomposition(g, path_decomposition_from_order(g, order)).ok);
  CHECK(validate_decomposition(g, min_fill_decomposition(g)).ok);
}
