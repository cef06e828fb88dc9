#include "crit2/builder.hpp"

#include <numeric>

namespace crit2 {

LabeledGraph cyclic_join(const std::vector<const Tile*>& tiles) {
  size_t n = tiles.size();
  if (n == 0) throw Error("nothing to join");
  std::vector<std::vector<Vertex>> vmaps(n);
  std::vector<std::vector<EdgeId>> emaps(n);

  Tile acc = invert_right(*tiles[0]);
  vmaps[0].resize(acc.graph.vertex_count());
  std::iota(vmaps[0].begin(), vmaps[0].end(), 0);
  emaps[0].resize(acc.graph.edge_count());
  std::iota(emaps[0].begin(), emaps[0].end(), 0);
  for (size_t i = 1; i < n; ++i) vmaps[i] = join_into(acc, invert_right(*tiles[i]), &emaps[i]);

  std::vector<Vertex> cyc;
  LabeledGraph lg = cyclize(acc, &cyc);
  lg.edge_tile.assign(lg.graph.edge_count(), -1);
  for (size_t i = 0; i < n; ++i) {
    for (auto& v : vmaps[i]) v = cyc[v];
    for (EdgeId e : emaps[i]) lg.edge_tile[e] = static_cast<int>(i);
  }
  lg.tile_vertices = std::move(vmaps);
  lg.tile_edges = std::move(emaps);
  return lg;
}

LabeledGraph build(const Signature& s) {
  const auto& cat = Catalog::instance();
  std::vector<const Tile*> tiles;
  tiles.reserve(s.size());
  for (const auto& t : s.tiles()) tiles.push_back(&cat.entry(t).tile);
  return cyclic_join(tiles);
}

}  // namespace crit2
