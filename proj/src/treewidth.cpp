#include "crit2/treewidth.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>
#include <set>

#include "crit2/builder.hpp"
#include "crit2/catalog.hpp"

namespace crit2 {

TileKind classify_tile(const TileName& name) {
  return elementary_tile(name).messy ? TileKind::Messy : TileKind::Neat;
}

int messy_count(const Signature& s) {
  int c = 0;
  for (const auto& t : s.tiles()) c += classify_tile(t) == TileKind::Messy;
  return c;
}

int treewidth(const Signature& s) {
  int messy = messy_count(s);
  if (s.size() == 3) {
    bool small = std::all_of(s.tiles().begin(), s.tiles().end(), [](const TileName& t) {
      const auto& p = t.picture;
      return t.frame == Frame::L && p.size() == 2 && (p[0] == 'A' || p[0] == 'D') &&
             (p[1] == 'A' || p[1] == 'D');
    });
    if (small) return 3;
  }
  return messy >= 3 ? 5 : 4;
}

namespace {

// Unplaced vertices are skipped; extra edges only stretch bag ranges.
TreeDecomposition path_bags(const MultiGraph& g, const std::vector<Vertex>& order,
                            const std::vector<std::pair<Vertex, Vertex>>& extra) {
  int n = g.vertex_count();
  std::vector<int> pos(n, -1), last(n, -1);
  for (size_t i = 0; i < order.size(); ++i) pos[order[i]] = static_cast<int>(i);
  for (Vertex u = 0; u < n; ++u) {
    last[u] = pos[u];
    for (EdgeId e : g.incident(u)) last[u] = std::max(last[u], pos[g.other(e, u)]);
  }
  for (auto [a, b] : extra) {
    last[a] = std::max(last[a], pos[b]);
    last[b] = std::max(last[b], pos[a]);
  }
  TreeDecomposition d;
  d.bags.assign(order.size(), {});
  for (Vertex u = 0; u < n; ++u)
    if (pos[u] >= 0)
      for (int i = pos[u]; i <= last[u]; ++i) d.bags[i].push_back(u);
  for (size_t i = 0; i + 1 < d.bags.size(); ++i)
    d.tree_edges.push_back({static_cast<int>(i), static_cast<int>(i + 1)});
  return d;
}

}  // namespace

TreeDecomposition path_decomposition_from_order(const MultiGraph& g,
                                                const std::vector<Vertex>& order) {
  return path_bags(g, order, {});
}

TreeDecomposition decomposition_from_elimination(const MultiGraph& g,
                                                 const std::vector<Vertex>& order) {
  int n = g.vertex_count();
  std::vector<int> pos(n, -1);
  for (size_t i = 0; i < order.size(); ++i) pos[order[i]] = static_cast<int>(i);
  std::vector<std::set<Vertex>> adj(n);
  for (const auto& e : g.edges())
    if (pos[e.a] >= 0 && pos[e.b] >= 0) {
      adj[e.a].insert(e.b);
      adj[e.b].insert(e.a);
    }
  TreeDecomposition d;
  d.bags.resize(order.size());
  int prev_root = -1;
  for (size_t i = 0; i < order.size(); ++i) {
    Vertex v = order[i];
    std::vector<Vertex> higher;
    for (Vertex w : adj[v])
      if (pos[w] > static_cast<int>(i)) higher.push_back(w);
    for (Vertex x : higher)
      for (Vertex y : higher)
        if (x != y) adj[x].insert(y);
    auto bag = higher;
    bag.push_back(v);
    std::sort(bag.begin(), bag.end());
    d.bags[i] = bag;
    if (higher.empty()) {
      if (prev_root >= 0) d.tree_edges.push_back({prev_root, static_cast<int>(i)});
      prev_root = static_cast<int>(i);
      continue;
    }
    Vertex parent = *std::min_element(higher.begin(), higher.end(),
                                      [&](Vertex x, Vertex y) { return pos[x] < pos[y]; });
    d.tree_edges.push_back({static_cast<int>(i), pos[parent]});
  }
  return d;
}

TreeDecomposition min_fill_decomposition(const MultiGraph& g) {
  int n = g.vertex_count();
  std::vector<std::set<Vertex>> adj(n);
  for (const auto& e : g.edges()) {
    adj[e.a].insert(e.b);
    adj[e.b].insert(e.a);
  }
  std::vector<char> gone(n, 0);
  std::vector<Vertex> order;
  for (int step = 0; step < n; ++step) {
    Vertex best = -1;
    long best_fill = -1;
    for (Vertex v = 0; v < n; ++v) {
      if (gone[v]) continue;
      long fill = 0;
      for (auto x = adj[v].begin(); x != adj[v].end(); ++x)
        for (auto y = std::next(x); y != adj[v].end(); ++y)
          if (!adj[*x].count(*y)) ++fill;
      if (best < 0 || fill < best_fill ||
          (fill == best_fill && adj[v].size() < adj[best].size())) {
        best = v;
        best_fill = fill;
      }
    }
    Vertex v = best;
    gone[v] = 1;
    order.push_back(v);
    for (Vertex x : adj[v])
      for (Vertex y : adj[v])
        if (x != y) adj[x].insert(y);
    for (Vertex x : adj[v]) adj[x].erase(v);
    adj[v].clear();
  }
  return decomposition_from_elimination(g, order);
}

DecompositionCheck validate_decomposition(const MultiGraph& g, const TreeDecomposition& d) {
  DecompositionCheck r;
  int nb = static_cast<int>(d.bags.size());
  int n = g.vertex_count();
  if (nb == 0) {
    r.violation = n ? "no bags" : "";
    r.ok = n == 0;
    return r;
  }
  // the bag graph must be a tree
  if (static_cast<int>(d.tree_edges.size()) != nb - 1) {
    r.violation = "tree: wrong number of tree edges";
    return r;
  }
  std::vector<std::vector<int>> tadj(nb);
  for (auto [a, b] : d.tree_edges) {
    if (a < 0 || b < 0 || a >= nb || b >= nb || a == b) {
      r.violation = "tree: bad tree edge";
      return r;
    }
    tadj[a].push_back(b);
    tadj[b].push_back(a);
  }
  {
    std::vector<char> seen(nb, 0);
    std::vector<int> st{0};
    seen[0] = 1;
    int cnt = 1;
    while (!st.empty()) {
      int x = st.back();
      st.pop_back();
      for (int y : tadj[x])
        if (!seen[y]) {
          seen[y] = 1;
          ++cnt;
          st.push_back(y);
        }
    }
    if (cnt != nb) {
      r.violation = "tree: bag graph is disconnected";
      return r;
    }
  }
  std::vector<std::vector<int>> where(n);
  int width = -1;
  for (int i = 0; i < nb; ++i) {
    width = std::max(width, static_cast<int>(d.bags[i].size()) - 1);
    for (Vertex v : d.bags[i]) {
      if (!g.valid(v)) {
        r.violation = "bag holds an invalid vertex";
        return r;
      }
      where[v].push_back(i);
    }
  }
  for (Vertex v = 0; v < n; ++v)
    if (where[v].empty()) {
      r.violation = "condition (1): vertex " + std::to_string(v) + " is in no bag";
      return r;
    }
  for (const auto& e : g.edges()) {
    bool found = false;
    for (int i : where[e.a])
      if (std::binary_search(d.bags[i].begin(), d.bags[i].end(), e.b) ||
          std::find(d.bags[i].begin(), d.bags[i].end(), e.b) != d.bags[i].end()) {
        found = true;
        break;
      }
    if (!found) {
      r.violation = "condition (1): edge " + std::to_string(e.a) + "-" + std::to_string(e.b) +
                    " is in no bag";
      return r;
    }
  }
  std::vector<char> in(nb, 0), seen(nb, 0);
  for (Vertex v = 0; v < n; ++v) {
    for (int i : where[v]) in[i] = 1;
    std::vector<int> st{where[v][0]};
    seen[where[v][0]] = 1;
    size_t cnt = 1;
    std::vector<int> touched{where[v][0]};
    while (!st.empty()) {
      int x = st.back();
      st.pop_back();
      for (int y : tadj[x])
        if (in[y] && !seen[y]) {
          seen[y] = 1;
          touched.push_back(y);
          ++cnt;
          st.push_back(y);
        }
    }
    for (int i : where[v]) in[i] = 0;
    for (int i : touched) seen[i] = 0;
    if (cnt != where[v].size()) {
      r.violation = "condition (2): bags containing vertex " + std::to_string(v) +
                    " are not connected";
      return r;
    }
  }
  r.ok = true;
  r.width = width;
  return r;
}

namespace {
// Exact elimination of `elim` in h, where the vertices of `gone` count as
// eliminated already. Bag = 1 + vertices reachable through eliminated ones.
struct Elimination {
  int bag = 0;
  std::vector<Vertex> order;
};

Elimination eliminate_exact(const MultiGraph& h, const std::vector<Vertex>& elim,
                            const std::vector<Vertex>& gone) {
  int n = h.vertex_count();
  int m = static_cast<int>(elim.size());
  std::vector<int> bit(n, -1);
  for (int i = 0; i < m; ++i) bit[elim[i]] = i;
  std::vector<char> pre(n, 0);
  for (Vertex v : gone) pre[v] = 1;
  std::vector<std::vector<Vertex>> nb(n);
  for (Vertex v = 0; v < n; ++v) nb[v] = h.neighbors(v);
  auto q_size = [&](unsigned S, int i) {
    std::vector<char> seen(n, 0);
    std::vector<Vertex> st{elim[i]};
    seen[elim[i]] = 1;
    int out = 0;
    while (!st.empty()) {
      Vertex x = st.back();
      st.pop_back();
      for (Vertex w : nb[x]) {
        if (seen[w]) continue;
        seen[w] = 1;
        bool eliminated = pre[w] || (bit[w] >= 0 && (S >> bit[w] & 1u));
        if (eliminated)
          st.push_back(w);
        else
          ++out;
      }
    }
    return out + 1;
  };
  unsigned full = m ? (1u << m) - 1 : 0;
  std::vector<int> best(std::size_t(1) << m, 1 << 20), choice(std::size_t(1) << m, -1);
  best[0] = 0;
  for (unsigned S = 0; S < full; ++S)
    for (int i = 0; i < m; ++i) {
      if (S >> i & 1u) continue;
      unsigned T = S | (1u << i);
      int c = std::max(best[S], q_size(S, i));
      if (c < best[T]) {
        best[T] = c;
        choice[T] = i;
      }
    }
  Elimination r;
  r.bag = best[full];
  for (unsigned S = full; S; S &= ~(1u << choice[S])) r.order.push_back(elim[choice[S]]);
  std::reverse(r.order.begin(), r.order.end());
  return r;
}

// Interior of a tile eliminated while all four wall vertices stay.
Elimination branch_uncached(const Tile& t) {
  std::vector<Vertex> inner;
  for (Vertex v = 0; v < t.graph.vertex_count(); ++v)
    if (v != t.left_wall[0] && v != t.left_wall[1] && v != t.right_wall[0] &&
        v != t.right_wall[1])
      inner.push_back(v);
  auto r = eliminate_exact(t.graph, inner, {});
  r.bag = std::max(r.bag, 4);
  return r;
}

// One step of the sweep: everything eliminated so far is a blob touching the
// start wall and two far vertices. Eliminates the start wall and the interior.
Elimination step_uncached(const Tile& t, bool left_to_right) {
  MultiGraph h = t.graph;
  auto start = left_to_right ? t.left_wall : t.right_wall;
  auto end = left_to_right ? t.right_wall : t.left_wall;
  Vertex blob = h.add_vertex(), far1 = h.add_vertex(), far2 = h.add_vertex();
  h.add_edge(blob, start[0]);
  h.add_edge(blob, start[1]);
  h.add_edge(blob, far1);
  h.add_edge(blob, far2);
  std::vector<Vertex> elim;
  for (Vertex v = 0; v < t.graph.vertex_count(); ++v)
    if (v != end[0] && v != end[1]) elim.push_back(v);
  return eliminate_exact(h, elim, {blob});
}

const Elimination& tile_branch(const TileName& name) {
  static std::mutex mu;
  static std::map<TileName, Elimination> cache;
  std::lock_guard lock(mu);
  if (auto it = cache.find(name); it != cache.end()) return it->second;
  return cache.emplace(name, branch_uncached(elementary_tile(name).tile)).first->second;
}

const Elimination& tile_step(const TileName& name, bool left_to_right) {
  static std::mutex mu;
  static std::map<std::pair<TileName, bool>, Elimination> cache;
  std::lock_guard lock(mu);
  auto key = std::make_pair(name, left_to_right);
  if (auto it = cache.find(key); it != cache.end()) return it->second;
  return cache.emplace(key, step_uncached(elementary_tile(name).tile, left_to_right))
      .first->second;
}

// Eliminate the interior of tile X, sweep rightwards from X to Y and leftwards
// from X to Y, then finish Y. Bags hold the blob's two far vertices, the front
// and one more vertex, so messy tiles only hurt at X and Y.
TreeDecomposition sweep_decomposition(const Signature& s, const LabeledGraph& built) {
  long n = static_cast<long>(s.size());
  auto idx = [&](long i) { return static_cast<size_t>(((i % n) + n) % n); };
  std::vector<int> lr(n), rl(n), br(n);
  for (long i = 0; i < n; ++i) {
    lr[i] = tile_step(s[i], true).bag;
    rl[i] = tile_step(s[i], false).bag;
    br[i] = tile_branch(s[i]).bag;
  }
  int best = 1 << 20;
  long best_x = 0, best_b = 0;
  // long rings: only a few anchors, the expensive tiles among them
  std::vector<long> anchors;
  for (long x = 0; x < n; ++x)
    if (n <= 64 || x < 3 || classify_tile(s[x]) == TileKind::Messy) anchors.push_back(x);
  if (anchors.size() > 8) anchors.resize(8);
  std::vector<int> right(n), left(n);
  for (long x : anchors) {
    // right[j]: max over tiles x+1 .. x+j; left[j]: tiles x-1 .. x-j
    right[0] = left[0] = 0;
    for (long j = 1; j < n; ++j) {
      right[j] = std::max(right[j - 1], lr[idx(x + j)]);
      left[j] = std::max(left[j - 1], rl[idx(x - j)]);
    }
    for (long b = 0; b + 2 <= n; ++b) {
      // Y is x+b+1, leftwards n-2-b tiles
      int c = std::max({br[x], right[b], left[n - 2 - b], br[idx(x + b + 1)]});
      if (c < best) {
        best = c;
        best_x = x;
        best_b = b;
      }
    }
  }
  std::vector<Vertex> order;
  auto push = [&](long i, const Elimination& e) {
    for (Vertex v : e.order) order.push_back(built.tile_vertices[idx(i)][v]);
  };
  push(best_x, tile_branch(s[best_x]));
  for (long j = 1; j <= best_b; ++j) push(best_x + j, tile_step(s[idx(best_x + j)], true));
  for (long j = 1; j <= n - 2 - best_b; ++j)
    push(best_x - j, tile_step(s[idx(best_x - j)], false));
  long y = best_x + best_b + 1;
  push(y, tile_branch(s[idx(y)]));
  const auto& ty = elementary_tile(s[idx(y)]).tile;
  for (Vertex v : {ty.left_wall[0], ty.left_wall[1], ty.right_wall[0], ty.right_wall[1]})
    order.push_back(built.tile_vertices[idx(y)][v]);
  return decomposition_from_elimination(built.graph, order);
}
}  // namespace

TreeDecomposition build_tree_decomposition(const Signature& s, const LabeledGraph& built) {
  std::vector<TreeDecomposition> candidates;
  candidates.push_back(sweep_decomposition(s, built));
  if (built.graph.vertex_count() <= 400) candidates.push_back(min_fill_decomposition(built.graph));
  auto width = [](const TreeDecomposition& d) {
    size_t w = 0;
    for (const auto& b : d.bags) w = std::max(w, b.size());
    return w;
  };
  return *std::min_element(candidates.begin(), candidates.end(),
                           [&](const auto& x, const auto& y) { return width(x) < width(y); });
}

TreeDecomposition build_tree_decomposition(const Signature& s) {
  return build_tree_decomposition(s, build(s));
}

namespace {

Tile hourglass_tile() {
  Tile t;
  t.graph = MultiGraph(5);  // x1 x2 y1 y2 c
  t.graph.add_edge(0, 2);
  t.graph.add_edge(0, 4);
  t.graph.add_edge(2, 4);
  t.graph.add_edge(1, 3);
  t.graph.add_edge(1, 4);
  t.graph.add_edge(3, 4);
  t.left_wall = {0, 1};
  t.right_wall = {2, 3};
  t.labels = {{0, Role::LeftWall1}, {0, Role::LeftWall2}, {0, Role::Interior}, {0, Role::Interior}, {0, Role::Interior}};
  return t;
}

LabeledGraph hourglass_cubed_labeled() {
  static const Tile h = hourglass_tile();
  return cyclic_join({&h, &h, &h});
}

// Two vertex-disjoint paths x1 -> y1 and x2 -> y2 inside a tile.
const std::array<std::vector<Vertex>, 2>& tile_rails(const TileName& name) {
  static std::mutex mu;
  static std::map<TileName, std::array<std::vector<Vertex>, 2>> cache;
  std::lock_guard lock(mu);
  if (auto it = cache.find(name); it != cache.end()) return it->second;
  const auto& t = elementary_tile(name).tile;
  const auto& g = t.graph;
  int n = g.vertex_count();
  std::array<std::vector<Vertex>, 2> found;
  std::vector<char> used(n, 0);
  auto bfs = [&](Vertex from, Vertex to) -> std::vector<Vertex> {
    std::vector<Vertex> par(n, -2);
    std::vector<Vertex> q{from};
    par[from] = -1;
    for (size_t i = 0; i < q.size(); ++i)
      for (Vertex w : g.neighbors(q[i]))
        if (par[w] == -2 && !used[w]) {
          par[w] = q[i];
          q.push_back(w);
        }
    if (par[to] == -2) return {};
    std::vector<Vertex> p;
    for (Vertex v = to; v != -1; v = par[v]) p.push_back(v);
    std::reverse(p.begin(), p.end());
    return p;
  };
  std::vector<Vertex> path{t.left_wall[0]};
  std::vector<char> on(n, 0);
  on[t.left_wall[0]] = 1;
  bool done = false;
  // enumerate simple paths for the top rail, take the first leaving room for the bottom one
  std::function<void(Vertex)> dfs = [&](Vertex u) {
    if (done) return;
    if (u == t.right_wall[0]) {
      std::fill(used.begin(), used.end(), 0);
      for (Vertex v : path) used[v] = 1;
      auto other = bfs(t.left_wall[1], t.right_wall[1]);
      if (!other.empty()) {
        found = {path, other};
        done = true;
      }
      return;
    }
    for (Vertex w : g.neighbors(u)) {
      if (on[w] || w == t.left_wall[1] || w == t.right_wall[1]) continue;
      on[w] = 1;
      path.push_back(w);
      dfs(w);
      path.pop_back();
      on[w] = 0;
      if (done) return;
    }
  };
  dfs(t.left_wall[0]);
  if (!done) throw Error("internal: no rails in " + name.str());
  return cache.emplace(name, found).first->second;
}

}  // namespace

MultiGraph hourglass_cubed() { return hourglass_cubed_labeled().graph; }

std::string validate_minor_witness(const MultiGraph& g, const MinorWitness& w) {
  int k = w.model.vertex_count();
  if (static_cast<int>(w.branch_sets.size()) != k) return "wrong number of branch sets";
  std::vector<int> owner(g.vertex_count(), -1);
  for (int i = 0; i < k; ++i) {
    if (w.branch_sets[i].empty()) return "empty branch set " + std::to_string(i);
    for (Vertex v : w.branch_sets[i]) {
      if (!g.valid(v)) return "invalid host vertex";
      if (owner[v] >= 0) return "branch sets overlap at vertex " + std::to_string(v);
      owner[v] = i;
    }
  }
  for (int i = 0; i < k; ++i) {
    std::vector<Vertex> st{w.branch_sets[i][0]};
    std::set<Vertex> seen{st[0]};
    while (!st.empty()) {
      Vertex u = st.back();
      st.pop_back();
      for (Vertex x : g.neighbors(u))
        if (owner[x] == i && seen.insert(x).second) st.push_back(x);
    }
    if (seen.size() != w.branch_sets[i].size())
      return "branch set " + std::to_string(i) + " is not connected";
  }
  std::set<std::pair<int, int>> realized;
  for (const auto& e : g.edges()) {
    int a = owner[e.a], b = owner[e.b];
    if (a >= 0 && b >= 0 && a != b) realized.insert({std::min(a, b), std::max(a, b)});
  }
  for (const auto& e : w.model.edges())
    if (!realized.count({std::min(e.a, e.b), std::max(e.a, e.b)}))
      return "model edge " + std::to_string(e.a) + "-" + std::to_string(e.b) + " not realized";
  return "";
}

MinorWitness hourglass_minor_witness(const Signature& s, const LabeledGraph& built) {
  long n = static_cast<long>(s.size());
  std::vector<long> messy;
  for (long i = 0; i < n; ++i)
    if (classify_tile(s[i]) == TileKind::Messy) messy.push_back(i);
  if (messy.size() < 3) throw Error("fewer than 3 messy tiles");
  messy.resize(3);
  auto model = hourglass_cubed_labeled();
  std::array<std::vector<int>, 3> local;
  for (int j = 0; j < 3; ++j) {
    auto m = tile_hourglass_model(elementary_tile(s[messy[j]]).tile);
    if (!m) throw Error("internal: messy tile without hourglass model");
    local[j] = *m;
  }
  // rails from messy tile j's right wall to messy tile j+1's left wall
  struct Gap {
    std::vector<Vertex> rail_from_y1, rail_from_y2;  // host vertices, both ends included
  };
  std::array<Gap, 3> gaps;
  for (int j = 0; j < 3; ++j) {
    long a = messy[j], b = j + 1 < 3 ? messy[j + 1] : messy[0] + n;
    const auto& ta = elementary_tile(s[a]).tile;
    Vertex r1 = built.tile_vertices[a][ta.right_wall[0]];
    Vertex r2 = built.tile_vertices[a][ta.right_wall[1]];
    std::vector<Vertex> p1{r1}, p2{r2};
    for (long i = a + 1; i < b; ++i) {
      size_t ti = static_cast<size_t>(i % n);
      const auto& rails = tile_rails(s[ti]);
      const auto& vm = built.tile_vertices[ti];
      // x1 of this tile is y2 of the previous one
      auto& from_x1 = p1.back() == vm[elementary_tile(s[ti]).tile.left_wall[0]] ? p1 : p2;
      auto& from_x2 = &from_x1 == &p1 ? p2 : p1;
      for (size_t k = 1; k < rails[0].size(); ++k) from_x1.push_back(vm[rails[0][k]]);
      for (size_t k = 1; k < rails[1].size(); ++k) from_x2.push_back(vm[rails[1][k]]);
    }
    gaps[j] = {p1, p2};
  }
  for (int flips = 0; flips < 8; ++flips) {
    MinorWitness w;
    w.model = model.graph;
    w.branch_sets.assign(model.graph.vertex_count(), {});
    std::vector<std::set<Vertex>> sets(model.graph.vertex_count());
    auto role = [&](int j, int r) {
      bool f = flips & (1 << j);
      static const int swap_role[5] = {1, 0, 3, 2, 4};
      return f ? swap_role[r] : r;
    };
    for (int j = 0; j < 3; ++j) {
      long t = messy[j];
      for (size_t v = 0; v < local[j].size(); ++v) {
        int r = local[j][v];
        if (r < 0) continue;
        // model role for this host branch
        int mr = role(j, r);
        Vertex model_v = model.tile_vertices[j][mr];
        sets[model_v].insert(built.tile_vertices[t][v]);
      }
    }
    // rails join the branch set that holds their first host vertex
    for (int j = 0; j < 3; ++j)
      for (const auto* rail : {&gaps[j].rail_from_y1, &gaps[j].rail_from_y2}) {
        int holder = -1;
        for (size_t m = 0; m < sets.size(); ++m)
          if (sets[m].count(rail->front())) holder = static_cast<int>(m);
        if (holder < 0) continue;
        for (Vertex v : *rail) sets[holder].insert(v);
      }
    for (size_t m = 0; m < sets.size(); ++m)
      w.branch_sets[m].assign(sets[m].begin(), sets[m].end());
    if (validate_minor_witness(built.graph, w).empty()) return w;
  }
  throw Error("internal: no consistent hourglass minor for " + s.str());
}

MinorWitness hourglass_minor_witness(const Signature& s) {
  return hourglass_minor_witness(s, build(s));
}

}  // namespace crit2
