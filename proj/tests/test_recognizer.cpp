#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "crit2/builder.hpp"
#include "crit2/oracle.hpp"
#include "crit2/recognizer.hpp"

using namespace crit2;

namespace {

MultiGraph petersen() {
  MultiGraph g(10);
  for (int i = 0; i < 5; ++i) {
    g.add_edge(i, (i + 1) % 5);
    g.add_edge(i, i + 5);
    g.add_edge(5 + i, 5 + (i + 2) % 5);
  }
  return g;
}

MultiGraph complete(int n) {
  MultiGraph g(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
  return g;
}

}  // namespace

TEST_CASE("tile matches") {
  auto g = build(tokenize("DDLDDLDDL")).graph;
  auto m = find_tile_matches(g, 0);
  REQUIRE_FALSE(m.empty());
  bool dd = false;
  for (const auto& t : m) dd = dd || t.tile_name.str() == "DDL";
  CHECK(dd);
  CHECK(find_tile_matches(complete(5), 0).empty());
}

TEST_CASE("worked example roundtrips") {
  Signature s = tokenize("VIAdLAALAALDBLHdL");
  auto r = recognize(build(s).graph);
  REQUIRE(r);
  CHECK(*r == canonicalize(s));
}

TEST_CASE("recognized signatures rebuild the input") {
  for (int seed = 0; seed < 40; ++seed) {
    Signature s = random_signature(3 + 2 * (seed % 6), 21000 + seed);
    auto g = build(s).graph;
    auto r = recognize(g);
    REQUIRE(r);
    // unique up to rotation and reading direction
    CHECK((*r == canonicalize(s) || *r == canonicalize(reverse_reading(s))));
    CHECK(oracle::isomorphic(build(*r).graph, g));
  }
}

TEST_CASE("relabelled input is still recognized") {
  Signature s = random_signature(7, 5);
  auto g = build(s).graph;
  int n = g.vertex_count();
  std::vector<Vertex> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), std::mt19937(11));
  MultiGraph h(n);
  for (int e = g.edge_count() - 1; e >= 0; --e) h.add_edge(perm[g.edge(e).b], perm[g.edge(e).a]);
  auto r = recognize(h);
  REQUIRE(r);
  CHECK(oracle::isomorphic(build(*r).graph, g));
}

TEST_CASE("non-members are rejected") {
  CHECK_FALSE(recognize(petersen()));
  CHECK_FALSE(recognize(complete(5)));
  MultiGraph k33(6);
  for (int i = 0; i < 3; ++i)
    for (int j = 3; j < 6; ++j) k33.add_edge(i, j);
  CHECK_FALSE(recognize(k33));
  for (int seed = 0; seed < 10; ++seed) CHECK_FALSE(recognize(random_regular_graph(20, 3, seed)));
  for (int seed = 0; seed < 10; ++seed) CHECK_FALSE(recognize(random_regular_graph(20, 4, seed)));
}

TEST_CASE("damaged members are rejected") {
  Signature s = tokenize("VIAdLAALAALDBLHdL");
  auto g = build(s).graph;
  for (EdgeId drop = 0; drop < g.edge_count(); drop += 5) {
    MultiGraph h(g.vertex_count());
    for (EdgeId e = 0; e < g.edge_count(); ++e)
      if (e != drop) h.add_edge(g.edge(e).a, g.edge(e).b);
    CHECK_FALSE(recognize(h));
  }
}

TEST_CASE("even cyclic joins are rejected") {
  const Tile* t = &elementary_tile(parse_tile_name("DDL")).tile;
  auto even = cyclic_join({t, t, t, t});
  auto r = recognize_detailed(even.graph);
  CHECK_FALSE(r.signature);
  CHECK(r.reason == "parity failure");
}

TEST_CASE("rejection reasons") {
  CHECK(recognize_detailed(complete(5)).reason == "too few vertices");
  CHECK(recognize_detailed(petersen()).reason == "degree bound");
  CHECK(recognize_detailed(build(tokenize("DDLDDLDDL")).graph).reason.empty());
}
