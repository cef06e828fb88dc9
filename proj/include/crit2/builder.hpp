#pragma once

#include <vector>

#include "crit2/catalog.hpp"
#include "crit2/graph.hpp"
#include "crit2/signature.hpp"

namespace crit2 {

// Right-invert every tile, join them in order, then cyclize.
// Tile i's right wall (y1, y2) becomes tile i+1's left wall (x2, x1).
LabeledGraph cyclic_join(const std::vector<const Tile*>& tiles);
LabeledGraph build(const Signature& s);

}  // namespace crit2
