#include "crit2/recognizer.hpp"

#include <algorithm>
#include <functional>
#include <optional>

#include "crit2/catalog.hpp"

namespace crit2 {

namespace {

// Catalog tiles with dL frames first; the walk prefers them.
const std::vector<const CatalogEntry*>& search_order() {
  static const std::vector<const CatalogEntry*> order = [] {
    std::vector<const CatalogEntry*> out;
    for (const auto& e : Catalog::instance().entries()) out.push_back(&e);
    std::stable_sort(out.begin(), out.end(), [](const auto* a, const auto* b) {
      return (a->name.frame == Frame::dL) > (b->name.frame == Frame::dL);
    });
    return out;
  }();
  return order;
}

bool is_wall(const Tile& t, Vertex u) {
  return u == t.left_wall[0] || u == t.left_wall[1] || u == t.right_wall[0] ||
         u == t.right_wall[1];
}

// Backtracking embedding of one tile. `fixed` pre-assigns tile vertices; `ok`
// says whether a host vertex may take a given tile vertex. host_degree gives
// the true degree in the input graph (the host may be a ball).
void match_tile(const Tile& t, const MultiGraph& h, const std::vector<int>& host_degree,
                std::vector<Vertex> phi, const std::function<bool(Vertex, Vertex)>& ok,
                const std::function<void(const std::vector<Vertex>&)>& emit) {
  const auto& tg = t.graph;
  int k = tg.vertex_count();
  // placement order: BFS from the pre-assigned vertices
  std::vector<Vertex> order, parent(k, -1);
  std::vector<char> seen(k, 0);
  for (Vertex u = 0; u < k; ++u)
    if (phi[u] >= 0) {
      seen[u] = 1;
      order.push_back(u);
    }
  size_t fixed = order.size();
  for (size_t i = 0; i < order.size(); ++i)
    for (Vertex w : tg.neighbors(order[i]))
      if (!seen[w]) {
        seen[w] = 1;
        parent[w] = order[i];
        order.push_back(w);
      }
  if (static_cast<int>(order.size()) != k) return;
  auto degree_ok = [&](Vertex u, Vertex x) {
    return is_wall(t, u) ? host_degree[x] >= tg.degree(u) : host_degree[x] == tg.degree(u);
  };
  auto consistent = [&](size_t upto, Vertex u) {
    for (size_t j = 0; j < upto; ++j) {
      Vertex w = order[j];
      if (w == u) continue;
      int have = h.multiplicity(phi[u], phi[w]), want = tg.multiplicity(u, w);
      // two wall vertices may also be joined by edges of a neighbouring tile
      if (is_wall(t, u) && is_wall(t, w) ? have < want : have != want) return false;
    }
    return true;
  };
  for (size_t i = 0; i < fixed; ++i) {
    Vertex u = order[i];
    if (!degree_ok(u, phi[u]) || !consistent(i, u)) return;
    for (size_t j = 0; j < i; ++j)
      if (phi[order[j]] == phi[u]) return;
  }
  auto taken = [&](Vertex x) { return std::find(phi.begin(), phi.end(), x) != phi.end(); };
  std::function<void(size_t)> rec = [&](size_t i) {
    if (i == order.size()) {
      emit(phi);
      return;
    }
    Vertex u = order[i];
    for (Vertex x : h.neighbors(phi[parent[u]])) {
      if (taken(x) || !ok(u, x) || !degree_ok(u, x)) continue;
      phi[u] = x;
      if (consistent(i, u)) rec(i + 1);
      phi[u] = -1;
    }
  };
  rec(fixed);
}

}  // namespace

std::vector<TileMatch> find_tile_matches(const MultiGraph& g, Vertex v) {
  std::vector<TileMatch> out;
  if (!g.valid(v) || max_degree_raw(g) > 6) return out;
  auto ball = bfs_ball(g, v, 8);
  const auto& h = ball.graph;
  std::vector<int> deg(h.vertex_count());
  Vertex centre = -1;
  for (Vertex x = 0; x < h.vertex_count(); ++x) {
    deg[x] = g.degree(ball.to_host[x]);
    if (ball.to_host[x] == v) centre = x;
  }
  for (const auto* ce : search_order()) {
    const auto& t = ce->tile;
    for (Vertex u = 0; u < t.graph.vertex_count(); ++u) {
      std::vector<Vertex> phi(t.graph.vertex_count(), -1);
      phi[u] = centre;
      match_tile(t, h, deg, phi, [](Vertex, Vertex) { return true; },
                 [&](const std::vector<Vertex>& m) {
                   TileMatch tm{ce->name, {}};
                   for (Vertex x : m) tm.vertex_map.push_back(ball.to_host[x]);
                   out.push_back(std::move(tm));
                 });
    }
  }
  return out;
}

Recognition recognize_detailed(const MultiGraph& g) {
  Recognition r;
  int n = g.vertex_count();
  if (n < 9) {
    r.reason = "too few vertices";
    return r;
  }
  int delta = max_degree_raw(g);
  if (delta > 6 || delta <= 3) {
    r.reason = "degree bound";
    return r;
  }
  if (!is_connected(g)) {
    r.reason = "disconnected";
    return r;
  }
  std::vector<int> deg(n);
  for (Vertex v = 0; v < n; ++v) deg[v] = g.degree(v);
  auto seeds = find_tile_matches(g, 0);
  if (seeds.empty()) {
    r.reason = "no seed tile";
    return r;
  }
  bool parity_seen = false;
  std::vector<int> vertex_use(n, 0);
  std::vector<char> edge_used(g.edge_count(), 0);
  int used_vertices = 0, used_edges = 0;

  // marks the vertices and edges of a match; returns false on an edge clash
  // edges a match takes: for each tile edge pair the first unused host edges
  auto edges_of = [&](const Tile& t, const std::vector<Vertex>& phi) {
    std::vector<EdgeId> es;
    int k = t.graph.vertex_count();
    for (Vertex u = 0; u < k; ++u)
      for (Vertex w = u + 1; w < k; ++w) {
        int want = t.graph.multiplicity(u, w);
        if (!want) continue;
        for (EdgeId e : g.incident(phi[u]))
          if (want > 0 && g.other(e, phi[u]) == phi[w] && !edge_used[e]) {
            es.push_back(e);
            --want;
          }
        if (want > 0) return std::optional<std::vector<EdgeId>>{};
      }
    return std::optional<std::vector<EdgeId>>{es};
  };
  struct Frame {
    const CatalogEntry* entry;
    std::vector<Vertex> phi;
    std::vector<EdgeId> edges;
  };
  auto apply = [&](const Frame& f, int sign) {
    for (Vertex x : f.phi) {
      if (sign > 0 && vertex_use[x]++ == 0) ++used_vertices;
      if (sign < 0 && --vertex_use[x] == 0) --used_vertices;
    }
    for (EdgeId e : f.edges) edge_used[e] = sign > 0;
    used_edges += sign * static_cast<int>(f.edges.size());
  };

  for (const auto& seed : seeds) {
    const auto* xe = &Catalog::instance().entry(seed.tile_name);
    const auto& xt = xe->tile;
    Vertex home1 = seed.vertex_map[xt.left_wall[0]], home2 = seed.vertex_map[xt.left_wall[1]];
    auto seed_edges = edges_of(xt, seed.vertex_map);
    if (!seed_edges) continue;
    std::vector<Frame> walk{{xe, seed.vertex_map, *seed_edges}};
    std::vector<std::vector<Frame>> options;
    apply(walk.back(), +1);
    bool accepted = false;
    // candidates for the next tile after the current end of the walk
    auto next_options = [&]() {
      std::vector<Frame> opts;
      const auto& cur = walk.back();
      Vertex a1 = cur.phi[cur.entry->tile.right_wall[1]];  // becomes x1
      Vertex a2 = cur.phi[cur.entry->tile.right_wall[0]];  // becomes x2
      for (const auto* ce : search_order()) {
        const auto& t = ce->tile;
        std::vector<Vertex> phi(t.graph.vertex_count(), -1);
        phi[t.left_wall[0]] = a1;
        phi[t.left_wall[1]] = a2;
        auto ok = [&](Vertex u, Vertex x) {
          if (x == home1) return u == t.right_wall[1];
          if (x == home2) return u == t.right_wall[0];
          return vertex_use[x] == 0;
        };
        match_tile(t, g, deg, phi, ok, [&](const std::vector<Vertex>& m) {
          auto es = edges_of(t, m);
          if (!es) return;
          // closing onto the start must use both start wall vertices
          bool c1 = m[t.right_wall[1]] == home1, c2 = m[t.right_wall[0]] == home2;
          if (c1 != c2) return;
          opts.push_back({ce, m, std::move(*es)});
        });
      }
      std::reverse(opts.begin(), opts.end());  // popped from the back
      return opts;
    };
    options.push_back(next_options());
    while (!options.empty() && !accepted) {
      auto& opts = options.back();
      if (opts.empty()) {
        options.pop_back();
        apply(walk.back(), -1);
        walk.pop_back();
        continue;
      }
      Frame f = std::move(opts.back());
      opts.pop_back();
      const auto& t = f.entry->tile;
      bool closes = f.phi[t.right_wall[1]] == home1;
      apply(f, +1);
      walk.push_back(f);
      if (closes) {
        if (walk.size() % 2 == 1 && walk.size() >= 3 && used_edges == g.edge_count() &&
            used_vertices == n) {
          accepted = true;
          break;
        }
        if (walk.size() % 2 == 0) parity_seen = true;
        apply(walk.back(), -1);
        walk.pop_back();
        continue;
      }
      options.push_back(next_options());
    }
    if (accepted) {
      std::vector<TileName> names;
      for (const auto& f : walk) names.push_back(f.entry->name);
      // both reading directions give the same graph; report the smaller one
      Signature a = canonicalize(Signature(names));
      Signature b = canonicalize(reverse_reading(a));
      r.signature = b < a ? b : a;
      return r;
    }
  }
  r.reason = parity_seen ? "parity failure" : "walk failure";
  return r;
}

std::optional<Signature> recognize(const MultiGraph& g) { return recognize_detailed(g).signature; }

}  // namespace crit2
