#include "crit2/graph.hpp"

#include <algorithm>
#include <charconv>
#include <deque>
#include <random>
#include <sstream>
#include <unordered_map>

namespace crit2 {

MultiGraph::MultiGraph(int n) : inc_(n) {}

Vertex MultiGraph::add_vertex() {
  inc_.emplace_back();
  return vertex_count() - 1;
}

EdgeId MultiGraph::add_edge(Vertex a, Vertex b) {
  if (!valid(a) || !valid(b)) throw Error("edge endpoint out of range");
  if (a == b) throw Error("loop at vertex " + std::to_string(a));
  EdgeId id = edge_count();
  edges_.push_back({a, b});
  inc_[a].push_back(id);
  inc_[b].push_back(id);
  return id;
}

int MultiGraph::multiplicity(Vertex u, Vertex v) const {
  const auto& small = inc_[u].size() <= inc_[v].size() ? inc_[u] : inc_[v];
  Vertex from = inc_[u].size() <= inc_[v].size() ? u : v;
  Vertex to = from == u ? v : u;
  int m = 0;
  for (EdgeId e : small)
    if (other(e, from) == to) ++m;
  return m;
}

std::vector<Vertex> MultiGraph::neighbors(Vertex v) const {
  std::vector<Vertex> out;
  out.reserve(inc_[v].size());
  for (EdgeId e : inc_[v]) out.push_back(other(e, v));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool MultiGraph::operator==(const MultiGraph& o) const {
  if (vertex_count() != o.vertex_count() || edge_count() != o.edge_count()) return false;
  for (EdgeId e = 0; e < edge_count(); ++e)
    if (edges_[e].a != o.edges_[e].a || edges_[e].b != o.edges_[e].b) return false;
  return true;
}

namespace {

bool parse_int(std::string_view tok, int& out) {
  if (tok.empty()) return false;
  auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), out);
  return ec == std::errc() && p == tok.data() + tok.size() && out >= 0;
}

}  // namespace

MultiGraph from_edge_list(std::string_view text) {
  std::vector<Edge> es;
  int maxv = -1;
  int lineno = 0;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(line);
    std::vector<std::string> toks;
    for (std::string t; ls >> t;) toks.push_back(t);
    if (toks.empty()) continue;
    int u = 0, v = 0;
    if (toks.size() != 2 || !parse_int(toks[0], u) || !parse_int(toks[1], v))
      throw Error("malformed edge on line " + std::to_string(lineno));
    if (u == v) throw Error("loop on line " + std::to_string(lineno));
    es.push_back({u, v});
    maxv = std::max({maxv, u, v});
  }
  if (es.empty()) throw Error("empty input");
  MultiGraph g(maxv + 1);
  for (auto [a, b] : es) g.add_edge(a, b);
  return g;
}

std::string to_edge_list(const MultiGraph& g) {
  std::string out;
  for (const auto& e : g.edges()) out += std::to_string(e.a) + " " + std::to_string(e.b) + "\n";
  return out;
}

std::string to_dot(const MultiGraph& g) {
  std::string out = "graph G {\n";
  for (Vertex v = 0; v < g.vertex_count(); ++v) out += "  " + std::to_string(v) + ";\n";
  for (const auto& e : g.edges())
    out += "  " + std::to_string(e.a) + " -- " + std::to_string(e.b) + ";\n";
  return out + "}\n";
}

nlohmann::json to_json(const MultiGraph& g) {
  nlohmann::json es = nlohmann::json::array();
  for (const auto& e : g.edges()) es.push_back({e.a, e.b});
  return {{"n", g.vertex_count()}, {"edges", es}};
}

MultiGraph from_json(const nlohmann::json& j) {
  MultiGraph g(j.at("n").get<int>());
  for (const auto& e : j.at("edges")) g.add_edge(e.at(0).get<int>(), e.at(1).get<int>());
  return g;
}

std::vector<int> bfs_distances(const MultiGraph& g, Vertex v) {
  std::vector<int> dist(g.vertex_count(), -1);
  std::deque<Vertex> q{v};
  dist[v] = 0;
  while (!q.empty()) {
    Vertex u = q.front();
    q.pop_front();
    for (EdgeId e : g.incident(u)) {
      Vertex w = g.other(e, u);
      if (dist[w] < 0) {
        dist[w] = dist[u] + 1;
        q.push_back(w);
      }
    }
  }
  return dist;
}

MultiGraph induced_subgraph(const MultiGraph& g, const std::vector<Vertex>& keep,
                            std::vector<Vertex>* to_host) {
  std::vector<int> local(g.vertex_count(), -1);
  for (size_t i = 0; i < keep.size(); ++i) local[keep[i]] = static_cast<int>(i);
  MultiGraph h(static_cast<int>(keep.size()));
  for (const auto& e : g.edges())
    if (local[e.a] >= 0 && local[e.b] >= 0) h.add_edge(local[e.a], local[e.b]);
  if (to_host) *to_host = keep;
  return h;
}

Ball bfs_ball(const MultiGraph& g, Vertex v, int r) {
  if (!g.valid(v)) throw Error("invalid vertex id " + std::to_string(v));
  // bounded BFS; the ball must not cost more than its own size
  std::vector<Vertex> order{v};
  std::unordered_map<Vertex, int> dist;
  dist[v] = 0;
  for (size_t i = 0; i < order.size(); ++i) {
    Vertex u = order[i];
    if (dist[u] == r) continue;
    for (EdgeId e : g.incident(u)) {
      Vertex w = g.other(e, u);
      if (!dist.count(w)) {
        dist[w] = dist[u] + 1;
        order.push_back(w);
      }
    }
  }
  std::sort(order.begin(), order.end());
  Ball b;
  b.to_host = order;
  std::unordered_map<Vertex, int> local;
  for (size_t i = 0; i < order.size(); ++i) local[order[i]] = static_cast<int>(i);
  b.graph = MultiGraph(static_cast<int>(order.size()));
  std::vector<EdgeId> es;
  for (Vertex u : order)
    for (EdgeId e : g.incident(u)) {
      Vertex w = g.other(e, u);
      auto it = local.find(w);
      if (it != local.end() && u < w) es.push_back(e);
    }
  std::sort(es.begin(), es.end());
  for (EdgeId e : es) b.graph.add_edge(local[g.edge(e).a], local[g.edge(e).b]);
  return b;
}

int max_degree_raw(const MultiGraph& g) {
  int d = 0;
  for (Vertex v = 0; v < g.vertex_count(); ++v) d = std::max(d, g.degree(v));
  return d;
}

bool is_connected(const MultiGraph& g) {
  if (g.vertex_count() == 0) return true;
  auto d = bfs_distances(g, 0);
  return std::none_of(d.begin(), d.end(), [](int x) { return x < 0; });
}

MultiGraph simple_graph(const MultiGraph& g) {
  MultiGraph h(g.vertex_count());
  for (Vertex u = 0; u < g.vertex_count(); ++u)
    for (Vertex w : g.neighbors(u))
      if (u < w) h.add_edge(u, w);
  return h;
}

MultiGraph random_regular_graph(int n, int d, std::uint64_t seed) {
  if (n <= d || (n * d) % 2) throw Error("no simple regular graph with these parameters");
  std::mt19937_64 rng(seed);
  std::vector<Vertex> points;
  for (Vertex v = 0; v < n; ++v) points.insert(points.end(), d, v);
  for (int attempt = 0; attempt < 10000; ++attempt) {
    std::shuffle(points.begin(), points.end(), rng);
    MultiGraph g(n);
    bool simple = true;
    for (size_t i = 0; i < points.size() && simple; i += 2) {
      Vertex a = points[i], b = points[i + 1];
      if (a == b || g.adjacent(a, b)) simple = false;
      else g.add_edge(a, b);
    }
    if (simple) return g;
  }
  throw Error("pairing model did not produce a simple graph");
}

}  // namespace crit2
