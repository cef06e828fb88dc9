#pragma once

#include <optional>
#include <string>
#include <vector>

#include "crit2/graph.hpp"
#include "crit2/signature.hpp"

namespace crit2 {

struct TileMatch {
  TileName tile_name;
  std::vector<Vertex> vertex_map;  // catalog tile vertex -> input vertex
};

// Tile-isomorphic embeddings of catalog tiles that use v, searched inside the
// radius-8 ball around v. Vertex ids are those of g.
std::vector<TileMatch> find_tile_matches(const MultiGraph& g, Vertex v);

struct Recognition {
  std::optional<Signature> signature;
  std::string reason;  // why it was rejected; empty when accepted
};

// The signature is canonical and the smaller of the two reading directions.
Recognition recognize_detailed(const MultiGraph& g);
std::optional<Signature> recognize(const MultiGraph& g);

}  // namespace crit2
