#include "crit2/oracle.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <set>

namespace crit2::oracle {

namespace {

void guard(bool ok, const char* what) {
  if (!ok) throw Error(std::string("oracle size guard exceeded: ") + what);
}

}  // namespace

std::vector<int> brute_coloring(const MultiGraph& g, int k) {
  guard(g.vertex_count() <= 30, "|V| <= 30");
  int n = g.vertex_count();
  std::vector<int> color(n, 0);
  std::vector<std::vector<Vertex>> nb(n);
  for (Vertex v = 0; v < n; ++v) nb[v] = g.neighbors(v);
  // DSATUR-like dynamic order: most coloured neighbours first
  std::function<bool(int, int)> rec = [&](int done, int used) -> bool {
    if (done == n) return true;
    Vertex best = -1;
    int best_sat = -1, best_deg = -1;
    for (Vertex v = 0; v < n; ++v) {
      if (color[v]) continue;
      unsigned mask = 0;
      for (Vertex w : nb[v])
        if (color[w]) mask |= 1u << color[w];
      int sat = __builtin_popcount(mask);
      int deg = static_cast<int>(nb[v].size());
      if (sat > best_sat || (sat == best_sat && deg > best_deg)) {
        best = v;
        best_sat = sat;
        best_deg = deg;
      }
    }
    // colours above used+1 are symmetric
    for (int c = 1; c <= std::min(k, used + 1); ++c) {
      bool ok = true;
      for (Vertex w : nb[best])
        if (color[w] == c) {
          ok = false;
          break;
        }
      if (!ok) continue;
      color[best] = c;
      if (rec(done + 1, std::max(used, c))) return true;
      color[best] = 0;
    }
    return false;
  };
  if (!rec(0, 0)) return {};
  return color;
}

int brute_chromatic_number(const MultiGraph& g) {
  guard(g.vertex_count() <= 30, "|V| <= 30");
  if (g.vertex_count() == 0) return 0;
  for (int k = 1;; ++k)
    if (!brute_coloring(g, k).empty()) return k;
}

bool edge_colorable(const MultiGraph& g, int k) {
  guard(g.edge_count() <= 30, "|E| <= 30");
  int m = g.edge_count();
  std::vector<int> color(m, 0);
  // order edges by BFS so that constraints bite early
  std::vector<EdgeId> order;
  std::vector<char> placed(m, 0);
  std::vector<char> seen(g.vertex_count(), 0);
  for (Vertex s = 0; s < g.vertex_count(); ++s) {
    if (seen[s]) continue;
    std::vector<Vertex> q{s};
    seen[s] = 1;
    for (size_t i = 0; i < q.size(); ++i)
      for (EdgeId e : g.incident(q[i])) {
        if (!placed[e]) {
          placed[e] = 1;
          order.push_back(e);
        }
        Vertex w = g.other(e, q[i]);
        if (!seen[w]) {
          seen[w] = 1;
          q.push_back(w);
        }
      }
  }
  std::function<bool(int, int)> rec = [&](int i, int used) -> bool {
    if (i == m) return true;
    EdgeId e = order[i];
    for (int c = 1; c <= std::min(k, used + 1); ++c) {
      bool ok = true;
      for (Vertex v : {g.edge(e).a, g.edge(e).b})
        for (EdgeId f : g.incident(v))
          if (color[f] == c) ok = false;
      if (!ok) continue;
      color[e] = c;
      if (rec(i + 1, std::max(used, c))) return true;
      color[e] = 0;
    }
    return false;
  };
  return rec(0, 0);
}

int brute_chromatic_index(const MultiGraph& g) {
  guard(g.edge_count() <= 30, "|E| <= 30");
  if (g.edge_count() == 0) return 0;
  for (int k = max_degree_raw(g);; ++k)
    if (edge_colorable(g, k)) return k;
}

int exact_treewidth(const MultiGraph& g) {
  guard(g.vertex_count() <= 18, "|V| <= 18");
  int n = g.vertex_count();
  if (n == 0) return -1;
  std::vector<std::uint32_t> adj(n, 0);
  for (const auto& e : g.edges()) {
    adj[e.a] |= 1u << e.b;
    adj[e.b] |= 1u << e.a;
  }
  std::uint32_t full = n == 32 ? ~0u : (1u << n) - 1;
  // tw(S) = min over v in S of max(tw(S - v), |Q(S - v, v)|), where Q(S, v) are the
  // vertices outside S + v reachable from v through S.
  std::vector<std::int8_t> tw(std::size_t(1) << n, 0);
  tw[0] = -1;
  for (std::uint32_t S = 1; S <= full; ++S) {
    int best = 127;
    for (std::uint32_t rest = S; rest; rest &= rest - 1) {
      int v = __builtin_ctz(rest);
      std::uint32_t T = S & ~(1u << v);
      if (tw[T] >= best) continue;
      std::uint32_t comp = 1u << v, frontier = comp;
      while (frontier) {
        int u = __builtin_ctz(frontier);
        frontier &= frontier - 1;
        std::uint32_t nx = adj[u] & T & ~comp;
        comp |= nx;
        frontier |= nx;
      }
      std::uint32_t nbr = 0;
      for (std::uint32_t c = comp; c; c &= c - 1) nbr |= adj[__builtin_ctz(c)];
      nbr &= ~comp & ~T & full;
      int q = __builtin_popcount(nbr);
      best = std::min(best, std::max<int>(tw[T], q));
    }
    tw[S] = static_cast<std::int8_t>(best);
  }
  return tw[full];
}

int max_clique(const MultiGraph& g) {
  guard(g.vertex_count() <= 5000, "|V| <= 5000");
  int n = g.vertex_count();
  if (n == 0) return 0;
  int best = 1;
  std::vector<std::vector<Vertex>> nb(n);
  for (Vertex v = 0; v < n; ++v) nb[v] = g.neighbors(v);
  std::function<void(std::vector<Vertex>&, std::vector<Vertex>)> grow =
      [&](std::vector<Vertex>& clique, std::vector<Vertex> cand) {
        best = std::max(best, static_cast<int>(clique.size()));
        for (size_t i = 0; i < cand.size(); ++i) {
          if (clique.size() + (cand.size() - i) <= static_cast<size_t>(best)) return;
          Vertex v = cand[i];
          std::vector<Vertex> next;
          for (size_t j = i + 1; j < cand.size(); ++j)
            if (std::binary_search(nb[v].begin(), nb[v].end(), cand[j])) next.push_back(cand[j]);
          clique.push_back(v);
          grow(clique, next);
          clique.pop_back();
        }
      };
  for (Vertex v = 0; v < n; ++v) {
    std::vector<Vertex> cand;
    for (Vertex w : nb[v])
      if (w > v) cand.push_back(w);
    std::vector<Vertex> clique{v};
    grow(clique, cand);
  }
  return best;
}

bool is_bipartite(const MultiGraph& g) {
  std::vector<int> side(g.vertex_count(), -1);
  for (Vertex s = 0; s < g.vertex_count(); ++s) {
    if (side[s] >= 0) continue;
    side[s] = 0;
    std::vector<Vertex> st{s};
    while (!st.empty()) {
      Vertex u = st.back();
      st.pop_back();
      for (EdgeId e : g.incident(u)) {
        Vertex w = g.other(e, u);
        if (side[w] < 0) {
          side[w] = 1 - side[u];
          st.push_back(w);
        } else if (side[w] == side[u]) {
          return false;
        }
      }
    }
  }
  return true;
}

bool has_triangle(const MultiGraph& g) { return max_clique(g) >= 3; }
bool has_k4(const MultiGraph& g) { return max_clique(g) >= 4; }

bool has_hamiltonian_cycle_witness(const MultiGraph& g, const std::vector<Vertex>& cycle) {
  int n = g.vertex_count();
  if (n < 3 || static_cast<int>(cycle.size()) != n) return false;
  std::vector<char> seen(n, 0);
  for (Vertex v : cycle) {
    if (!g.valid(v) || seen[v]) return false;
    seen[v] = 1;
  }
  for (int i = 0; i < n; ++i)
    if (!g.adjacent(cycle[i], cycle[(i + 1) % n])) return false;
  return true;
}

bool is_proper_coloring(const MultiGraph& g, const std::vector<int>& color) {
  if (static_cast<int>(color.size()) != g.vertex_count()) return false;
  if (std::any_of(color.begin(), color.end(), [](int c) { return c < 1; })) return false;
  for (const auto& e : g.edges())
    if (color[e.a] == color[e.b]) return false;
  return true;
}

bool is_proper_edge_coloring(const MultiGraph& g, const std::vector<int>& color) {
  if (static_cast<int>(color.size()) != g.edge_count()) return false;
  if (std::any_of(color.begin(), color.end(), [](int c) { return c < 1; })) return false;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    std::vector<int> cs;
    for (EdgeId e : g.incident(v)) cs.push_back(color[e]);
    std::sort(cs.begin(), cs.end());
    if (std::adjacent_find(cs.begin(), cs.end()) != cs.end()) return false;
  }
  return true;
}

bool is_matching(const MultiGraph& g, const std::vector<EdgeId>& edges) {
  std::vector<char> used(g.vertex_count(), 0);
  for (EdgeId e : edges) {
    if (e < 0 || e >= g.edge_count()) return false;
    for (Vertex v : {g.edge(e).a, g.edge(e).b}) {
      if (used[v]) return false;
      used[v] = 1;
    }
  }
  return true;
}

bool is_edge_cover(const MultiGraph& g, const std::vector<EdgeId>& edges) {
  std::vector<char> hit(g.vertex_count(), 0);
  for (EdgeId e : edges) {
    if (e < 0 || e >= g.edge_count()) return false;
    hit[g.edge(e).a] = hit[g.edge(e).b] = 1;
  }
  return std::all_of(hit.begin(), hit.end(), [](char c) { return c != 0; });
}

bool is_3_connected(const MultiGraph& g) {
  int n = g.vertex_count();
  if (n < 4) return false;
  std::vector<char> removed(n, 0);
  auto connected_without = [&]() {
    Vertex s = 0;
    while (removed[s]) ++s;
    std::vector<char> seen(n, 0);
    std::vector<Vertex> st{s};
    seen[s] = 1;
    int cnt = 1;
    while (!st.empty()) {
      Vertex u = st.back();
      st.pop_back();
      for (EdgeId e : g.incident(u)) {
        Vertex w = g.other(e, u);
        if (!seen[w] && !removed[w]) {
          seen[w] = 1;
          ++cnt;
          st.push_back(w);
        }
      }
    }
    int alive = static_cast<int>(std::count(removed.begin(), removed.end(), 0));
    return cnt == alive;
  };
  if (!connected_without()) return false;
  for (Vertex a = 0; a < n; ++a) {
    removed[a] = 1;
    for (Vertex b = a + 1; b < n; ++b) {
      removed[b] = 1;
      bool ok = connected_without();
      removed[b] = 0;
      if (!ok) return false;
    }
    removed[a] = 0;
  }
  return true;
}

namespace {

// Colour refinement on multigraphs; returns stable colour classes.
std::vector<long> refine(const MultiGraph& g) {
  int n = g.vertex_count();
  std::vector<long> col(n);
  for (Vertex v = 0; v < n; ++v) col[v] = g.degree(v);
  for (int round = 0; round < n; ++round) {
    std::map<std::vector<long>, long> ids;
    std::vector<std::vector<long>> sig(n);
    for (Vertex v = 0; v < n; ++v) {
      sig[v].push_back(col[v]);
      std::vector<long> nb;
      for (EdgeId e : g.incident(v)) nb.push_back(col[g.other(e, v)]);
      std::sort(nb.begin(), nb.end());
      sig[v].insert(sig[v].end(), nb.begin(), nb.end());
      ids.emplace(sig[v], 0);
    }
    long k = 0;
    for (auto& [s, id] : ids) id = k++;
    std::vector<long> next(n);
    for (Vertex v = 0; v < n; ++v) next[v] = ids[sig[v]];
    bool same = std::set<long>(next.begin(), next.end()).size() ==
                std::set<long>(col.begin(), col.end()).size();
    col = next;
    if (same) break;
  }
  return col;
}

}  // namespace

bool isomorphic(const MultiGraph& a, const MultiGraph& b) {
  if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
  int n = a.vertex_count();
  // refine on the disjoint union so colours are comparable across both graphs
  MultiGraph u(2 * n);
  for (const auto& e : a.edges()) u.add_edge(e.a, e.b);
  for (const auto& e : b.edges()) u.add_edge(e.a + n, e.b + n);
  auto col = refine(u);
  std::vector<long> ca(col.begin(), col.begin() + n), cb(col.begin() + n, col.end());
  auto sa = ca, sb = cb;
  std::sort(sa.begin(), sa.end());
  std::sort(sb.begin(), sb.end());
  if (sa != sb) return false;
  std::vector<Vertex> map(n, -1), inv(n, -1);
  // match vertices in order of rarest colour class first
  std::map<long, int> freq;
  for (long c : ca) ++freq[c];
  // BFS-ish order: prefer vertices adjacent to already ordered ones
  std::vector<Vertex> ord;
  std::vector<char> in(n, 0);
  while (static_cast<int>(ord.size()) < n) {
    Vertex best = -1;
    int best_conn = -1;
    for (Vertex v = 0; v < n; ++v) {
      if (in[v]) continue;
      int conn = 0;
      for (Vertex w : a.neighbors(v)) conn += in[w];
      if (best < 0 || conn > best_conn || (conn == best_conn && freq[ca[v]] < freq[ca[best]])) {
        best = v;
        best_conn = conn;
      }
    }
    in[best] = 1;
    ord.push_back(best);
  }
  std::function<bool(int)> rec = [&](int i) -> bool {
    if (i == n) return true;
    Vertex v = ord[i];
    for (Vertex w = 0; w < n; ++w) {
      if (inv[w] >= 0 || cb[w] != ca[v]) continue;
      bool ok = true;
      for (Vertex x : a.neighbors(v))
        if (map[x] >= 0 && a.multiplicity(v, x) != b.multiplicity(w, map[x])) {
          ok = false;
          break;
        }
      if (ok)
        for (Vertex y : b.neighbors(w))
          if (inv[y] >= 0 && !a.adjacent(v, inv[y])) {
            ok = false;
            break;
          }
      if (!ok) continue;
      map[v] = w;
      inv[w] = v;
      if (rec(i + 1)) return true;
      map[v] = -1;
      inv[w] = -1;
    }
    return false;
  };
  return rec(0);
}

}  // namespace crit2::oracle
