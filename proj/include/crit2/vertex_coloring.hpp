#pragma once

#include <array>
#include <optional>
#include <set>
#include <vector>

#include "crit2/graph.hpp"
#include "crit2/signature.hpp"

namespace crit2 {

// Colours of (x1, x2, y1, y2) relabelled by first occurrence, e.g. a/b -> c/b is {0,1,2,1}.
using VertexPattern = std::array<int, 4>;

VertexPattern canonical_pattern(VertexPattern colors);

struct VertexPropagationTable {
  TileName name;
  int k = 0;
  std::set<VertexPattern> patterns;
  bool contains(const VertexPattern& p) const { return patterns.count(canonical_pattern(p)) > 0; }
};

const VertexPropagationTable& tile_vertex_propagations(const TileName& name, int k);

enum class ParityRule { EvenLFrames, OddLFrames };

// Closed-form bipartiteness test on the signature. EvenLFrames agrees with the
// 2-colouring oracle on built graphs; OddLFrames is the literal published wording.
bool is_bipartite_by_characterization(const Signature& s,
                                      ParityRule rule = ParityRule::EvenLFrames);

// Transfer DP over the tile sequence; colours are 1..k.
std::optional<std::vector<int>> coloring_dp(const Signature& s, const LabeledGraph& built, int k);
int chromatic_number(const Signature& s);
int chromatic_number(const Signature& s, const LabeledGraph& built);
std::vector<int> construct_coloring(const Signature& s, int k);

}  // namespace crit2
