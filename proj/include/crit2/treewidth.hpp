#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "crit2/graph.hpp"
#include "crit2/signature.hpp"

namespace crit2 {

enum class TileKind { Neat, Messy };

struct TreeDecomposition {
  std::vector<std::vector<Vertex>> bags;
  std::vector<std::pair<int, int>> tree_edges;
};

struct DecompositionCheck {
  bool ok = false;
  int width = -1;
  std::string violation;  // empty when ok
};

struct MinorWitness {
  MultiGraph model;
  std::vector<std::vector<Vertex>> branch_sets;  // indexed by model vertex
};

TileKind classify_tile(const TileName& name);
int messy_count(const Signature& s);
int treewidth(const Signature& s);

TreeDecomposition build_tree_decomposition(const Signature& s);
TreeDecomposition build_tree_decomposition(const Signature& s, const LabeledGraph& built);
DecompositionCheck validate_decomposition(const MultiGraph& g, const TreeDecomposition& d);

// Cyclic join of three hourglass tiles; the hourglass tile has triangles
// {x1, y1, c} and {x2, y2, c}.
MultiGraph hourglass_cubed();
MinorWitness hourglass_minor_witness(const Signature& s);
MinorWitness hourglass_minor_witness(const Signature& s, const LabeledGraph& built);
// Empty string when the branch sets form a valid minor model in g.
std::string validate_minor_witness(const MultiGraph& g, const MinorWitness& w);

// Path decomposition whose bags follow a vertex order (vertex separation).
TreeDecomposition path_decomposition_from_order(const MultiGraph& g,
                                                const std::vector<Vertex>& order);
// Bags from an elimination order; vertices missing from the order are ignored.
TreeDecomposition decomposition_from_elimination(const MultiGraph& g,
                                                 const std::vector<Vertex>& order);
// Greedy min-fill elimination.
TreeDecomposition min_fill_decomposition(const MultiGraph& g);

}  // namespace crit2
