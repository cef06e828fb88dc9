#pragma once

#include <vector>

#include "crit2/graph.hpp"

// Brute-force ground truth for small graphs. Guards throw Error when exceeded.
namespace crit2::oracle {

int brute_chromatic_number(const MultiGraph& g);
// A proper colouring with k colours (1..k) or empty when none exists.
std::vector<int> brute_coloring(const MultiGraph& g, int k);
int brute_chromatic_index(const MultiGraph& g);
bool edge_colorable(const MultiGraph& g, int k);
int exact_treewidth(const MultiGraph& g);
int max_clique(const MultiGraph& g);
bool is_bipartite(const MultiGraph& g);
bool has_triangle(const MultiGraph& g);
bool has_k4(const MultiGraph& g);
bool has_hamiltonian_cycle_witness(const MultiGraph& g, const std::vector<Vertex>& cycle);
bool is_proper_coloring(const MultiGraph& g, const std::vector<int>& color);
bool is_proper_edge_coloring(const MultiGraph& g, const std::vector<int>& color);
bool is_matching(const MultiGraph& g, const std::vector<EdgeId>& edges);
bool is_edge_cover(const MultiGraph& g, const std::vector<EdgeId>& edges);
bool is_3_connected(const MultiGraph& g);
// Isomorphism of multigraphs (edge multiplicities respected).
bool isomorphic(const MultiGraph& a, const MultiGraph& b);

}  // namespace crit2::oracle
