#include "crit2/structural.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>

#include "crit2/builder.hpp"
#include "crit2/catalog.hpp"

namespace crit2 {

std::pair<int, int> order_size(const Signature& s) {
  auto c = symbol_counts(s);
  int V = 3 * c.L + c.dL + c.A + c.V + 0 * c.D + 2 * c.H + 2 * c.B - c.I;
  int E = 5 * c.L + 2 * c.dL + 2 * c.A + 2 * c.V + c.D + 3 * c.H + 4 * c.B - c.I;
  return {V, E};
}

int max_degree(const Signature& s) {
  auto ad = [](char c) { return c == 'A' || c == 'D'; };
  for (size_t i = 0; i < s.size(); ++i) {
    const auto& t1 = s[i];
    const auto& t2 = s.at(static_cast<long>(i) + 1);
    if (t1.frame == Frame::L && ad(top_path(t1.picture)) && ad(bottom_path(t2.picture)))
      return 6;
  }
  auto c = symbol_counts(s);
  return c.A + c.D > 0 ? 5 : 4;
}

int clique_number(const Signature& s) {
  for (size_t i = 0; i < s.size(); ++i) {
    const auto& p = s[i].picture;
    if (p != "DD" && p != "H") return 3;
    if (p == "DD" && s[i].frame == Frame::L && s.at(static_cast<long>(i) + 1).picture == "DD")
      return 3;
  }
  return 2;
}

namespace {

// Edge subsets of a tile that can be its share of a Hamiltonian cycle: interior
// vertices get degree 2, walls at most 2, and no cycle closes inside the tile.
const std::vector<std::vector<EdgeId>>& path_systems(const TileName& name) {
  static std::mutex mu;
  static std::map<TileName, std::vector<std::vector<EdgeId>>> cache;
  std::lock_guard lock(mu);
  auto it = cache.find(name);
  if (it != cache.end()) return it->second;
  const auto& t = elementary_tile(name).tile;
  const auto& g = t.graph;
  int n = g.vertex_count(), m = g.edge_count();
  std::vector<char> wall(n, 0);
  for (Vertex v : t.left_wall) wall[v] = 1;
  for (Vertex v : t.right_wall) wall[v] = 1;
  std::vector<std::vector<EdgeId>> out;
  std::vector<int> deg(n, 0);
  std::vector<EdgeId> chosen;
  // remaining[v][i]: edges at v with index >= i
  std::vector<std::vector<int>> remaining(n, std::vector<int>(m + 1, 0));
  for (int i = m - 1; i >= 0; --i)
    for (Vertex v = 0; v < n; ++v)
      remaining[v][i] = remaining[v][i + 1] + (g.edge(i).a == v || g.edge(i).b == v);
  auto acyclic = [&]() {
    std::vector<int> parent(n);
    for (int v = 0; v < n; ++v) parent[v] = v;
    std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
    for (EdgeId e : chosen) {
      int a = find(g.edge(e).a), b = find(g.edge(e).b);
      if (a == b) return false;
      parent[a] = b;
    }
    return true;
  };
  std::function<void(int)> rec = [&](int i) {
    for (Vertex v = 0; v < n; ++v)
      if (!wall[v] && deg[v] + remaining[v][i] < 2) return;
    if (i == m) {
      if (acyclic()) out.push_back(chosen);
      return;
    }
    rec(i + 1);
    Vertex a = g.edge(i).a, b = g.edge(i).b;
    if (deg[a] < 2 && deg[b] < 2) {
      ++deg[a];
      ++deg[b];
      chosen.push_back(i);
      rec(i + 1);
      chosen.pop_back();
      --deg[a];
      --deg[b];
    }
  };
  rec(0);
  return cache.emplace(name, std::move(out)).first->second;
}

struct Tracked {
  Vertex v;
  int deg;
  Vertex end;  // other end of the path through v when deg == 1, else v
};

using HamState = std::vector<Tracked>;  // sorted by vertex id

std::vector<int> encode(const HamState& st) {
  std::vector<int> k;
  for (const auto& t : st) {
    k.push_back(t.v);
    k.push_back(t.deg);
    k.push_back(t.end);
  }
  return k;
}

}  // namespace

std::vector<Vertex> hamiltonian_cycle(const Signature& s, const LabeledGraph& built) {
  const auto& g = built.graph;
  size_t n = s.size();
  auto left_wall = [&](size_t i) {
    const auto& t = elementary_tile(s[i]).tile;
    return std::array<Vertex, 2>{built.tile_vertices[i][t.left_wall[0]],
                                 built.tile_vertices[i][t.left_wall[1]]};
  };
  std::array<Vertex, 2> init = left_wall(0);
  struct Back {
    std::vector<int> prev;
    int choice;
  };
  std::vector<std::map<std::vector<int>, Back>> layers(n + 1);
  std::map<std::vector<int>, HamState> states;
  HamState start;
  for (Vertex v : init) start.push_back({v, 0, v});
  std::sort(start.begin(), start.end(), [](auto& a, auto& b) { return a.v < b.v; });
  states[encode(start)] = start;
  layers[0][encode(start)] = {{}, -1};
  std::vector<int> final_key;

  for (size_t i = 0; i < n; ++i) {
    const auto& ce = elementary_tile(s[i]);
    const auto& vm = built.tile_vertices[i];
    const auto& systems = path_systems(s[i]);
    bool last = i + 1 == n;
    std::array<Vertex, 2> next_wall = last ? init : left_wall(i + 1);
    std::map<std::vector<int>, HamState> next_states;
    for (const auto& [key, st] : states) {
      for (size_t f = 0; f < systems.size(); ++f) {
        // small working set: tracked vertices plus the tile's vertices
        std::vector<Tracked> work = st;
        work.reserve(64);
        auto slot = [&](Vertex v) -> Tracked& {
          for (auto& t : work)
            if (t.v == v) return t;
          work.push_back({v, 0, v});
          return work.back();
        };
        for (Vertex v : vm) slot(v);
        bool ok = true;
        int closed = 0;
        for (EdgeId le : systems[f]) {
          Vertex a = vm[ce.tile.graph.edge(le).a], b = vm[ce.tile.graph.edge(le).b];
          Tracked& ta = slot(a);
          Tracked& tb = slot(b);
          if (ta.deg >= 2 || tb.deg >= 2) {
            ok = false;
            break;
          }
          Vertex ea = ta.end, eb = tb.end;
          ++ta.deg;
          ++tb.deg;
          if (ea == b) {
            ++closed;
            continue;
          }
          slot(ea).end = eb;
          slot(eb).end = ea;
          if (ta.deg == 2) ta.end = a;
          if (tb.deg == 2) tb.end = b;
        }
        if (!ok) continue;
        if (closed > (last ? 1 : 0)) continue;
        HamState ns;
        for (const auto& t : work) {
          bool keep = t.v == init[0] || t.v == init[1] || t.v == next_wall[0] || t.v == next_wall[1];
          if (!keep && t.deg != 2) {
            ok = false;
            break;
          }
          if (keep) ns.push_back(t);
        }
        if (!ok) continue;
        if (last) {
          if (closed != 1) continue;
          if (!std::all_of(ns.begin(), ns.end(), [](const Tracked& t) { return t.deg == 2; }))
            continue;
        }
        std::sort(ns.begin(), ns.end(), [](auto& a, auto& b) { return a.v < b.v; });
        for (auto& t : ns)
          if (t.deg != 1) t.end = t.v;
        auto nk = encode(ns);
        if (!layers[i + 1].count(nk)) {
          layers[i + 1][nk] = {key, static_cast<int>(f)};
          next_states[nk] = ns;
          if (last && final_key.empty()) final_key = nk;
        }
      }
    }
    states = std::move(next_states);
    if (states.empty()) throw Error("no Hamiltonian cycle found for " + s.str());
  }
  if (final_key.empty()) throw Error("no Hamiltonian cycle found for " + s.str());

  std::vector<EdgeId> cycle_edges;
  std::vector<int> key = final_key;
  for (size_t i = n; i-- > 0;) {
    const auto& b = layers[i + 1].at(key);
    for (EdgeId le : path_systems(s[i])[b.choice]) cycle_edges.push_back(built.tile_edges[i][le]);
    key = b.prev;
  }
  // walk the cycle
  std::vector<std::vector<EdgeId>> at(g.vertex_count());
  for (EdgeId e : cycle_edges) {
    at[g.edge(e).a].push_back(e);
    at[g.edge(e).b].push_back(e);
  }
  std::vector<Vertex> order{0};
  EdgeId prev = -1;
  Vertex cur = 0;
  for (int step = 1; step < g.vertex_count(); ++step) {
    EdgeId e = at[cur][0] == prev ? at[cur][1] : at[cur][0];
    cur = g.other(e, cur);
    prev = e;
    order.push_back(cur);
  }
  return order;
}

std::vector<Vertex> hamiltonian_cycle(const Signature& s) { return hamiltonian_cycle(s, build(s)); }

MatchingCover matching_and_cover(const Signature& s, const LabeledGraph& built) {
  const auto& g = built.graph;
  auto cyc = hamiltonian_cycle(s, built);
  int n = static_cast<int>(cyc.size());
  auto edge_between = [&](Vertex a, Vertex b) {
    for (EdgeId e : g.incident(a))
      if (g.other(e, a) == b) return e;
    throw Error("cycle uses a missing edge");
  };
  MatchingCover mc;
  for (int i = 0; i + 1 < n; i += 2) mc.matching.push_back(edge_between(cyc[i], cyc[i + 1]));
  mc.cover = mc.matching;
  if (n % 2 == 1) mc.cover.push_back(edge_between(cyc[n - 1], cyc[0]));
  return mc;
}

MatchingCover matching_and_cover(const Signature& s) { return matching_and_cover(s, build(s)); }

}  // namespace crit2
