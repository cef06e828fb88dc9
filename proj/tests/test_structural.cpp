#include <doctest.h>

#include "crit2/builder.hpp"
#include "crit2/oracle.hpp"
#include "crit2/structural.hpp"

using namespace crit2;

TEST_CASE("order and size") {
  CHECK(order_size(tokenize("VIAdLAALAALDBLHdL")) == std::pair{26, 48});
  CHECK(order_size(tokenize("DDLDDLDDL")) == std::pair{9, 21});
  CHECK(order_size(tokenize("AALAALAAL")) == std::pair{15, 27});
}

TEST_CASE("max degree") {
  CHECK(max_degree(tokenize("VIAdLAALAALDBLHdL")) == 6);
  CHECK(max_degree(tokenize("VVLVVLVVL")) == 4);
  CHECK(max_degree(tokenize("DBdLDBdLDBdL")) == 5);
}

TEST_CASE("clique number") {
  CHECK(clique_number(tokenize("DDdLDDdLDDdL")) == 2);
  CHECK(clique_number(tokenize("DDLDDLDDL")) == 3);
  CHECK(clique_number(tokenize("VIAdLAALAALDBLHdL")) == 3);
}

TEST_CASE("closed forms against the built graph") {
  for (int seed = 0; seed < 40; ++seed) {
    Signature s = random_signature(3 + 2 * (seed % 5), 900 + seed);
    LabeledGraph b = build(s);
    auto [v, e] = order_size(s);
    CHECK(v == b.graph.vertex_count());
    CHECK(e == b.graph.edge_count());
    CHECK(max_degree(s) == max_degree_raw(b.graph));
    CHECK(clique_number(s) == oracle::max_clique(b.graph));
    CHECK_FALSE(oracle::has_k4(b.graph));
  }
}

TEST_CASE("hamiltonian cycles") {
  for (const char* sig : {"DDLDDLDDL", "VIAdLAALAALDBLHdL", "AIVLAIVLAIVL", "HdLHdLHdL"}) {
    Signature s = tokenize(sig);
    auto b = build(s);
    auto c = hamiltonian_cycle(s, b);
    CHECK(int(c.size()) == b.graph.vertex_count());
    CHECK(oracle::has_hamiltonian_cycle_witness(b.graph, c));
  }
  for (int seed = 0; seed < 30; ++seed) {
    Signature s = random_signature(7, seed);
    auto b = build(s);
    CHECK(oracle::has_hamiltonian_cycle_witness(b.graph, hamiltonian_cycle(s, b)));
  }
}

TEST_CASE("matching and edge cover") {
  Signature ex = tokenize("VIAdLAALAALDBLHdL");
  auto b = build(ex);
  auto mc = matching_and_cover(ex, b);
  CHECK(mc.matching.size() == 13);
  CHECK(mc.cover.size() == 13);
  CHECK(oracle::is_matching(b.graph, mc.matching));
  CHECK(oracle::is_edge_cover(b.graph, mc.cover));
  Signature d = tokenize("DDLDDLDDL");
  auto bd = build(d);
  auto md = matching_and_cover(d, bd);
  CHECK(md.matching.size() == 4);
  CHECK(md.cover.size() == 5);
  CHECK(oracle::is_edge_cover(bd.graph, md.cover));
}
