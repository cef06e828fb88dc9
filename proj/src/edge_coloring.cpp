#include "crit2/edge_coloring.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>
#include <shared_mutex>

#include "crit2/builder.hpp"
#include "crit2/catalog.hpp"

namespace crit2 {

const std::vector<NamedPropagation>& named_edge_propagations() {
  static const std::vector<NamedPropagation> list = {
      {"P2", {1, {1, 2}}, {1, {1, 2}}},      {"P23", {1, {1, 2}}, {2, {1, 2, 3}}},
      {"P3", {1, {1, 2, 3}}, {2, {1, 2, 3}}}, {"P32a", {1, {1, 2, 3}}, {1, {1, 2}}},
      {"P32b", {1, {1, 2, 3}}, {2, {1, 2}}},  {"Pw", {1, {1, 2}}, {3, {1, 3}}},
      {"Ps", {1, {1, 2}}, {1, {1, 3}}}};
  return list;
}

const NamedPropagation& named_edge_propagation(const std::string& name) {
  for (const auto& p : named_edge_propagations())
    if (p.name == name) return p;
  throw Error("unknown propagation " + name);
}

namespace {

// Colours 1..k. Returns colours of the tile's local edges or nullopt.
std::optional<std::vector<int>> solve_tile(const TileName& name, int k, const EdgeClass& in,
                                           const EdgeClass& out) {
  const auto& ce = elementary_tile(name);
  const auto& t = ce.tile;
  const auto& g = t.graph;
  if (static_cast<int>(out.set.size()) != g.degree(t.right_wall[0])) return std::nullopt;
  int m = g.edge_count();
  std::vector<unsigned> dom(m, ((1u << (k + 1)) - 1) & ~1u);
  unsigned in_set = 0, out_set = 0;
  for (int c : in.set) in_set |= 1u << c;
  for (int c : out.set) out_set |= 1u << c;
  for (EdgeId e = 0; e < m; ++e)
    for (Vertex v : {g.edge(e).a, g.edge(e).b}) {
      if (v == t.left_wall[0]) dom[e] &= ~(1u << in.single);
      if (v == t.left_wall[1]) dom[e] &= ~in_set;
      if (v == t.right_wall[1]) dom[e] &= 1u << out.single;
      if (v == t.right_wall[0]) dom[e] &= out_set;
    }
  std::vector<EdgeId> order(m);
  for (EdgeId e = 0; e < m; ++e) order[e] = e;
  std::sort(order.begin(), order.end(), [&](EdgeId a, EdgeId b) {
    return __builtin_popcount(dom[a]) < __builtin_popcount(dom[b]);
  });
  std::vector<unsigned> used(g.vertex_count(), 0);
  std::vector<int> col(m, 0);
  std::function<bool(int)> rec = [&](int i) -> bool {
    if (i == m) return true;
    EdgeId e = order[i];
    Vertex a = g.edge(e).a, b = g.edge(e).b;
    unsigned avail = dom[e] & ~used[a] & ~used[b];
    for (int c = 1; c <= k; ++c) {
      if (!(avail & (1u << c))) continue;
      col[e] = c;
      used[a] |= 1u << c;
      used[b] |= 1u << c;
      if (rec(i + 1)) return true;
      used[a] &= ~(1u << c);
      used[b] &= ~(1u << c);
    }
    return false;
  };
  if (!rec(0)) return std::nullopt;
  return col;
}

// Feasibility depends only on how many colours fall in each of the 16 membership
// classes (single in, set in, single out, set out).
std::vector<int> class_key(int k, const EdgeClass& in, const EdgeClass& out) {
  std::vector<int> key(17, 0);
  key[16] = k;
  for (int c = 1; c <= k; ++c) {
    int bits = (in.single == c) | (std::count(in.set.begin(), in.set.end(), c) ? 2 : 0) |
               (out.single == c ? 4 : 0) |
               (std::count(out.set.begin(), out.set.end(), c) ? 8 : 0);
    ++key[bits];
  }
  return key;
}

struct FeasCache {
  std::shared_mutex mu;
  std::map<std::pair<TileName, std::vector<int>>, bool> map;
};

FeasCache& feas_cache() {
  static FeasCache c;
  return c;
}

std::vector<std::vector<int>> subsets(int k, int size) {
  std::vector<std::vector<int>> out;
  for (unsigned m = 0; m < (1u << k); ++m) {
    if (__builtin_popcount(m) != size) continue;
    std::vector<int> s;
    for (int c = 0; c < k; ++c)
      if (m & (1u << c)) s.push_back(c + 1);
    out.push_back(s);
  }
  return out;
}

std::vector<EdgeClass> all_classes(int k, int arity) {
  std::vector<EdgeClass> out;
  for (int a = 1; a <= k; ++a)
    for (auto& s : subsets(k, arity)) out.push_back({a, s});
  return out;
}

}  // namespace

bool tile_admits(const TileName& name, int k, const EdgeClass& in, const EdgeClass& out) {
  if (k > 30) throw Error("too many colours");
  auto key = std::make_pair(name, class_key(k, in, out));
  auto& cache = feas_cache();
  {
    std::shared_lock lock(cache.mu);
    if (auto it = cache.map.find(key); it != cache.map.end()) return it->second;
  }
  bool ok = solve_tile(name, k, in, out).has_value();
  std::unique_lock lock(cache.mu);
  cache.map[key] = ok;
  return ok;
}

bool EdgePropagationTable::admits(const EdgeClass& in, const EdgeClass& out) const {
  return tile_admits(name, k, in, out);
}

EdgePropagationTable tile_edge_propagations(const TileName& name, int k, int left_arity,
                                            int right_arity) {
  if (k > 7) throw Error("colour budget above 7");
  if (left_arity != 2 && left_arity != 3) throw Error("left arity must be 2 or 3");
  if (right_arity != elementary_tile(name).output_arity)
    throw Error("right arity of " + name.str() + " is " +
                std::to_string(elementary_tile(name).output_arity));
  EdgePropagationTable t{name, k, left_arity, right_arity, {}};
  // canonical inputs: single colour 1, the set either contains it or not
  std::vector<EdgeClass> ins;
  std::vector<int> with, without;
  for (int c = 1; c <= left_arity; ++c) with.push_back(c);
  for (int c = 2; c <= left_arity + 1; ++c) without.push_back(c);
  ins.push_back({1, with});
  if (left_arity + 1 <= k) ins.push_back({1, without});
  for (const auto& in : ins)
    for (const auto& out : all_classes(k, right_arity))
      if (tile_admits(name, k, in, out)) t.transitions.push_back({in, out});
  return t;
}

std::optional<std::vector<int>> edge_coloring_dp(const Signature& s, const LabeledGraph& built,
                                                 int k) {
  if (k < 1 || k > 30) return std::nullopt;
  size_t n = s.size();
  std::vector<int> arity(n);
  for (size_t i = 0; i < n; ++i) arity[i] = elementary_tile(s[i]).output_arity;
  int a0 = arity[n - 1];
  if (a0 + 1 > k + 1) return std::nullopt;
  std::vector<std::vector<EdgeClass>> outs_by_arity(4);
  for (int a = 2; a <= 3; ++a)
    if (a <= k) outs_by_arity[a] = all_classes(k, a);
  std::vector<EdgeClass> inits;
  {
    std::vector<int> with, without;
    for (int c = 1; c <= a0; ++c) with.push_back(c);
    for (int c = 2; c <= a0 + 1; ++c) without.push_back(c);
    if (a0 <= k) inits.push_back({1, with});
    if (a0 + 1 <= k) inits.push_back({1, without});
  }
  for (const auto& init : inits) {
    std::vector<std::map<EdgeClass, EdgeClass>> back(n + 1);
    back[0][init] = init;
    for (size_t i = 0; i < n; ++i) {
      for (const auto& [cur, prev] : back[i])
        for (const auto& out : outs_by_arity[arity[i]]) {
          if (i + 1 == n && !(out == init)) continue;
          if (back[i + 1].count(out)) continue;
          if (tile_admits(s[i], k, cur, out)) back[i + 1][out] = cur;
        }
      if (back[i + 1].empty()) break;
    }
    if (back[n].empty()) continue;
    std::vector<EdgeClass> io(n + 1);
    io[n] = init;
    for (size_t i = n; i > 0; --i) io[i - 1] = back[i].at(io[i]);
    std::vector<int> color(built.graph.edge_count(), 0);
    for (size_t i = 0; i < n; ++i) {
      auto local = solve_tile(s[i], k, io[i], io[i + 1]);
      if (!local) throw Error("internal: edge tile re-solve failed");
      for (size_t e = 0; e < local->size(); ++e) color[built.tile_edges[i][e]] = (*local)[e];
    }
    return color;
  }
  return std::nullopt;
}

int chromatic_index(const Signature& s, const LabeledGraph& built) {
  int delta = max_degree_raw(built.graph);
  for (int k = delta; k <= std::max(7, delta + 1); ++k)
    if (edge_coloring_dp(s, built, k)) return k;
  throw Error("internal: no edge colouring within budget for " + s.str());
}

int chromatic_index(const Signature& s) { return chromatic_index(s, build(s)); }

std::vector<int> construct_edge_coloring(const Signature& s, const LabeledGraph& built) {
  int k = chromatic_index(s, built);
  return *edge_coloring_dp(s, built, k);
}

std::vector<int> construct_edge_coloring(const Signature& s) {
  return construct_edge_coloring(s, build(s));
}

}  // namespace crit2
