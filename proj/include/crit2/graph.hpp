#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

namespace crit2 {

using Vertex = int;
using EdgeId = int;

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Edge {
  Vertex a;
  Vertex b;
};

// Loopless multigraph. Edge ids are positions in the edge list and never change.
class MultiGraph {
 public:
  MultiGraph() = default;
  explicit MultiGraph(int n);

  Vertex add_vertex();
  EdgeId add_edge(Vertex a, Vertex b);

  int vertex_count() const { return static_cast<int>(inc_.size()); }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const Edge& edge(EdgeId e) const { return edges_[e]; }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<EdgeId>& incident(Vertex v) const { return inc_[v]; }
  int degree(Vertex v) const { return static_cast<int>(inc_[v].size()); }
  Vertex other(EdgeId e, Vertex v) const {
    return edges_[e].a == v ? edges_[e].b : edges_[e].a;
  }
  bool valid(Vertex v) const { return v >= 0 && v < vertex_count(); }

  int multiplicity(Vertex u, Vertex v) const;
  bool adjacent(Vertex u, Vertex v) const { return multiplicity(u, v) > 0; }
  // distinct neighbours, sorted
  std::vector<Vertex> neighbors(Vertex v) const;

  bool operator==(const MultiGraph& o) const;

 private:
  std::vector<Edge> edges_;
  std::vector<std::vector<EdgeId>> inc_;
};

enum class Role { LeftWall1, LeftWall2, Interior };

struct VertexLabel {
  int tile = 0;
  Role role = Role::Interior;
};

// A built graph plus the trace of which tile every vertex and edge came from.
struct LabeledGraph {
  MultiGraph graph;
  std::vector<VertexLabel> labels;
  std::vector<int> edge_tile;
  // per tile: catalog-local vertex id -> graph vertex, local edge id -> graph edge
  std::vector<std::vector<Vertex>> tile_vertices;
  std::vector<std::vector<EdgeId>> tile_edges;
};

MultiGraph from_edge_list(std::string_view text);
std::string to_edge_list(const MultiGraph& g);
std::string to_dot(const MultiGraph& g);
nlohmann::json to_json(const MultiGraph& g);
MultiGraph from_json(const nlohmann::json& j);

struct Ball {
  MultiGraph graph;
  std::vector<Vertex> to_host;  // ball vertex -> host vertex
};

// Induced subgraph on all vertices within distance r of v.
Ball bfs_ball(const MultiGraph& g, Vertex v, int r);
std::vector<int> bfs_distances(const MultiGraph& g, Vertex v);

int max_degree_raw(const MultiGraph& g);
bool is_connected(const MultiGraph& g);
// Same vertex set, parallel edges collapsed.
MultiGraph simple_graph(const MultiGraph& g);
MultiGraph induced_subgraph(const MultiGraph& g, const std::vector<Vertex>& keep,
                            std::vector<Vertex>* to_host = nullptr);

// Simple d-regular graph by the pairing model, retried until simple.
MultiGraph random_regular_graph(int n, int d, std::uint64_t seed);

}  // namespace crit2
