#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "crit2/graph.hpp"
#include "crit2/signature.hpp"

namespace crit2 {

struct Tile {
  MultiGraph graph;
  std::array<Vertex, 2> left_wall{};   // (x1, x2)
  std::array<Vertex, 2> right_wall{};  // (y1, y2)
  std::vector<VertexLabel> labels;
  int tiles = 1;  // elementary tiles joined into this one
};

struct Point {
  double x = 0, y = 0;
};

// Cyclic counter-clockwise order of darts around each vertex. Dart 2e leaves
// edge(e).a, dart 2e+1 leaves edge(e).b.
using Rotation = std::vector<std::vector<int>>;

inline int dart_tail(const MultiGraph& g, int d) {
  return d % 2 == 0 ? g.edge(d / 2).a : g.edge(d / 2).b;
}
inline int dart_head(const MultiGraph& g, int d) {
  return d % 2 == 0 ? g.edge(d / 2).b : g.edge(d / 2).a;
}

// Faces of a rotation system as dart cycles.
std::vector<std::vector<int>> trace_faces(const MultiGraph& g, const Rotation& rot);

struct CatalogEntry {
  TileName name;
  Tile tile;
  Rotation rotation;
  std::vector<Point> position;
  std::vector<std::string> vertex_names;
  char top_path_letter = 'D';
  char bottom_path_letter = 'D';
  bool has_double_edge_in_picture = false;
  bool messy = false;
  std::vector<Vertex> identification_vertices;
  // edges at y1, i.e. how many mutually adjacent output edges the tile has
  int output_arity = 2;
};

// Branch sets of an hourglass minor whose triangles run along the two rails,
// {x1, y1, c} and {x2, y2, c}: 0 holds x1, 1 holds x2, 2 holds y1, 3 holds y2,
// 4 is the centre, -1 deleted.
std::optional<std::vector<int>> tile_hourglass_model(const Tile& t);

class Catalog {
 public:
  // Parses and validates; throws Error on any failed check.
  static Catalog load(const std::string& path);
  // Catalog at $CRIT2_CATALOG or the built-in default path, loaded once.
  static const Catalog& instance();

  const CatalogEntry& entry(const TileName& name) const;
  const std::vector<CatalogEntry>& entries() const { return entries_; }
  std::vector<std::string> validation_report() const { return report_; }

 private:
  std::vector<CatalogEntry> entries_;
  std::map<TileName, size_t> index_;
  std::vector<std::string> report_;
};

const CatalogEntry& elementary_tile(const TileName& name);

Tile join(const Tile& t1, const Tile& t2);
// Appends t2 to t1 in place; returns the map from t2's vertices to t1's.
std::vector<Vertex> join_into(Tile& t1, const Tile& t2, std::vector<EdgeId>* edge_map = nullptr);
Tile invert_right(const Tile& t);
Tile invert_left(const Tile& t);
// vertex_map receives old vertex -> new vertex.
LabeledGraph cyclize(const Tile& t, std::vector<Vertex>* vertex_map = nullptr);

}  // namespace crit2
