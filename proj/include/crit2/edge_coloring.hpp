#pragma once

#include <optional>
#include <string>
#include <vector>

#include "crit2/graph.hpp"
#include "crit2/signature.hpp"

namespace crit2 {

// Colours on a wall interface: the single edge and the set of mutually adjacent
// edges at the other wall vertex. Written a/bc in comments.
struct EdgeClass {
  int single = 0;
  std::vector<int> set;  // sorted
  bool operator==(const EdgeClass&) const = default;
  bool operator<(const EdgeClass& o) const {
    return single != o.single ? single < o.single : set < o.set;
  }
};

struct EdgeTransition {
  EdgeClass in;
  EdgeClass out;
};

struct EdgePropagationTable {
  TileName name;
  int k = 0;
  int left_arity = 2;
  int right_arity = 2;
  // inputs are canonical (colours 1.. by first use); outputs use the same colours
  std::vector<EdgeTransition> transitions;
  bool admits(const EdgeClass& in, const EdgeClass& out) const;
};

struct NamedPropagation {
  std::string name;
  EdgeClass in, out;
};
// P2, P23, P3, P32a, P32b, Pw, Ps with 1-based colours.
const std::vector<NamedPropagation>& named_edge_propagations();
const NamedPropagation& named_edge_propagation(const std::string& name);

// Whether the tile has an edge colouring with k colours realising in -> out.
bool tile_admits(const TileName& name, int k, const EdgeClass& in, const EdgeClass& out);

EdgePropagationTable tile_edge_propagations(const TileName& name, int k, int left_arity,
                                            int right_arity);

// Edge colouring (colours 1..k) by transfer DP, or nullopt.
std::optional<std::vector<int>> edge_coloring_dp(const Signature& s, const LabeledGraph& built,
                                                 int k);
int chromatic_index(const Signature& s);
int chromatic_index(const Signature& s, const LabeledGraph& built);
std::vector<int> construct_edge_coloring(const Signature& s);
std::vector<int> construct_edge_coloring(const Signature& s, const LabeledGraph& built);

}  // namespace crit2
