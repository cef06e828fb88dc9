#include "crit2/vertex_coloring.hpp"

#include <functional>
#include <map>
#include <mutex>

#include "crit2/builder.hpp"
#include "crit2/catalog.hpp"

namespace crit2 {

VertexPattern canonical_pattern(VertexPattern colors) {
  std::map<int, int> relabel;
  VertexPattern out{};
  for (int i = 0; i < 4; ++i) {
    auto it = relabel.try_emplace(colors[i], static_cast<int>(relabel.size())).first;
    out[i] = it->second;
  }
  return out;
}

namespace {

// Proper k-colouring of a tile with the listed vertices pinned; colours 0..k-1.
std::optional<std::vector<int>> color_tile(const MultiGraph& g, int k,
                                           const std::vector<std::pair<Vertex, int>>& pinned) {
  int n = g.vertex_count();
  std::vector<int> col(n, -1);
  for (auto [v, c] : pinned) {
    if (col[v] >= 0 && col[v] != c) return std::nullopt;
    col[v] = c;
  }
  for (const auto& e : g.edges())
    if (col[e.a] >= 0 && col[e.a] == col[e.b]) return std::nullopt;
  std::vector<Vertex> order;
  for (Vertex v = 0; v < n; ++v)
    if (col[v] < 0) order.push_back(v);
  std::function<bool(size_t)> rec = [&](size_t i) -> bool {
    if (i == order.size()) return true;
    Vertex v = order[i];
    for (int c = 0; c < k; ++c) {
      bool ok = true;
      for (EdgeId e : g.incident(v))
        if (col[g.other(e, v)] == c) {
          ok = false;
          break;
        }
      if (!ok) continue;
      col[v] = c;
      if (rec(i + 1)) return true;
    }
    col[v] = -1;
    return false;
  };
  if (!rec(0)) return std::nullopt;
  return col;
}

}  // namespace

const VertexPropagationTable& tile_vertex_propagations(const TileName& name, int k) {
  static std::mutex mu;
  static std::map<std::pair<TileName, int>, VertexPropagationTable> cache;
  std::lock_guard lock(mu);
  auto key = std::make_pair(name, k);
  if (auto it = cache.find(key); it != cache.end()) return it->second;
  const auto& t = elementary_tile(name).tile;
  VertexPropagationTable table{name, k, {}};
  std::array<Vertex, 4> walls = {t.left_wall[0], t.left_wall[1], t.right_wall[0], t.right_wall[1]};
  // restricted growth strings of length 4 = set partitions of the walls
  for (int b = 0; b < 1; ++b)
    for (int c = 0; c <= 1; ++c)
      for (int d = 0; d <= std::max(b, c) + 1; ++d)
        for (int e = 0; e <= std::max({b, c, d}) + 1; ++e) {
          VertexPattern p{b, c, d, e};
          if (std::max({b, c, d, e}) >= k) continue;
          std::vector<std::pair<Vertex, int>> pin;
          for (int i = 0; i < 4; ++i) pin.push_back({walls[i], p[i]});
          if (color_tile(t.graph, k, pin)) table.patterns.insert(p);
        }
  return cache.emplace(key, std::move(table)).first->second;
}

bool is_bipartite_by_characterization(const Signature& s, ParityRule rule) {
  auto pair_ok = [](const TileName& a, const TileName& b) {
    if (a.picture == "DD" && a.frame == Frame::dL) return b.picture == "DD";
    if (a.picture == "DD" && a.frame == Frame::L) return b.picture == "H";
    if (a.picture == "H" && a.frame == Frame::dL) return b.picture == "H";
    if (a.picture == "H" && a.frame == Frame::L) return b.picture == "DD";
    return false;
  };
  long n = static_cast<long>(s.size());
  for (long i = 0; i < n; ++i)
    if (!pair_ok(s.at(i), s.at(i + 1))) return false;
  for (long r = 0; r < n; ++r) {
    if (s.at(r).picture != "H") continue;
    int l_even = 0;
    for (long i = 0; i < n; i += 2) l_even += s.at(r + i).frame == Frame::L;
    bool parity_ok = rule == ParityRule::EvenLFrames ? l_even % 2 == 0 : l_even % 2 == 1;
    if (parity_ok) return true;
  }
  return false;
}

std::optional<std::vector<int>> coloring_dp(const Signature& s, const LabeledGraph& built, int k) {
  if (k < 1) return std::nullopt;
  size_t n = s.size();
  // The initial left wall is fixed to colours (0,0) or (0,1); the state is the
  // concrete colour pair on the current left wall.
  for (int init2 = 0; init2 < std::min(k, 2); ++init2) {
    std::array<int, 2> init{0, init2};
    std::vector<std::map<std::array<int, 2>, std::array<int, 2>>> back(n + 1);
    back[0][init] = init;
    for (size_t i = 0; i < n; ++i) {
      const auto& table = tile_vertex_propagations(s[i], k);
      for (const auto& [cur, prev] : back[i]) {
        for (int y1 = 0; y1 < k; ++y1)
          for (int y2 = 0; y2 < k; ++y2) {
            if (!table.contains({cur[0], cur[1], y1, y2})) continue;
            std::array<int, 2> next{y2, y1};
            if (i + 1 == n && next != init) continue;
            back[i + 1].try_emplace(next, cur);
          }
      }
      if (back[i + 1].empty()) break;
    }
    if (back[n].empty()) continue;
    // replay: left wall colours of every tile
    std::vector<std::array<int, 2>> wallc(n + 1);
    wallc[n] = init;
    for (size_t i = n; i > 0; --i) wallc[i - 1] = back[i].at(wallc[i]);
    std::vector<int> color(built.graph.vertex_count(), -1);
    for (size_t i = 0; i < n; ++i) {
      const auto& t = elementary_tile(s[i]).tile;
      std::array<int, 2> out = wallc[i + 1];
      std::vector<std::pair<Vertex, int>> pin = {{t.left_wall[0], wallc[i][0]},
                                                 {t.left_wall[1], wallc[i][1]},
                                                 {t.right_wall[0], out[1]},
                                                 {t.right_wall[1], out[0]}};
      auto local = color_tile(t.graph, k, pin);
      if (!local) throw Error("internal: tile re-solve failed");
      for (Vertex v = 0; v < t.graph.vertex_count(); ++v)
        color[built.tile_vertices[i][v]] = (*local)[v] + 1;
    }
    return color;
  }
  return std::nullopt;
}

int chromatic_number(const Signature& s, const LabeledGraph& built) {
  for (int k = 2; k <= 4; ++k)
    if (coloring_dp(s, built, k)) return k;
  throw Error("internal: no 4-colouring found for " + s.str());
}

int chromatic_number(const Signature& s) { return chromatic_number(s, build(s)); }

std::vector<int> construct_coloring(const Signature& s, int k) {
  auto built = build(s);
  auto c = coloring_dp(s, built, k);
  if (!c) throw Error("no proper " + std::to_string(k) + "-colouring of " + s.str());
  return *c;
}

}  // namespace crit2
