#include "crit2/drawing.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <optional>
#include <sstream>
#include <tuple>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>
#include <json.hpp>

#include "crit2/builder.hpp"

namespace crit2 {

MultiGraph planarization(const MultiGraph& g,
                         const std::array<std::pair<EdgeId, EdgeId>, 2>& c) {
  int n = g.vertex_count(), m = g.edge_count();
  MultiGraph p(n + 2);
  std::vector<Edge> edges = g.edges();
  std::vector<Edge> extra;
  for (int k = 0; k < 2; ++k) {
    Vertex d = n + k;
    for (EdgeId e : {c[k].first, c[k].second}) {
      extra.push_back({d, edges[e].b});
      edges[e].b = d;
    }
  }
  for (int e = 0; e < m; ++e) p.add_edge(edges[e].a, edges[e].b);
  for (const auto& e : extra) p.add_edge(e.a, e.b);
  return p;
}

DrawingCheck verify_certificate(const MultiGraph& g, const DrawingCertificate& c) {
  DrawingCheck r;
  int m = g.edge_count();
  std::vector<EdgeId> all;
  for (const auto& [e, f] : c.crossings) {
    if (e < 0 || f < 0 || e >= m || f >= m) {
      r.violation = "crossing refers to a missing edge";
      return r;
    }
    all.push_back(e);
    all.push_back(f);
  }
  auto sorted = all;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    r.violation = "1-planarity: an edge is crossed twice";
    return r;
  }
  for (const auto& [e, f] : c.crossings) {
    const auto &x = g.edge(e), &y = g.edge(f);
    if (x.a == y.a || x.a == y.b || x.b == y.a || x.b == y.b) {
      r.violation = "good drawing: adjacent edges " + std::to_string(e) + " and " +
                    std::to_string(f) + " cross";
      return r;
    }
  }
  auto p = planarization(g, c.crossings);
  if (static_cast<int>(c.rotation.size()) != p.vertex_count()) {
    r.violation = "rotation has the wrong number of vertices";
    return r;
  }
  for (Vertex v = 0; v < p.vertex_count(); ++v) {
    std::vector<int> want;
    for (EdgeId e : p.incident(v)) want.push_back(p.edge(e).a == v ? 2 * e : 2 * e + 1);
    auto have = c.rotation[v];
    std::sort(want.begin(), want.end());
    std::sort(have.begin(), have.end());
    if (want != have) {
      r.violation = "rotation at vertex " + std::to_string(v) + " does not list its darts";
      return r;
    }
  }
  for (int k = 0; k < 2; ++k) {
    Vertex d = g.vertex_count() + k;
    const auto& rot = c.rotation[d];
    if (rot.size() != 4) {
      r.violation = "dummy vertex without degree 4";
      return r;
    }
    // strands of e are darts of e and |E|+2k
    auto strand = [&](int dart) {
      int e = dart / 2;
      return e == c.crossings[k].first || e == m + 2 * k ? 0 : 1;
    };
    for (int i = 0; i < 4; ++i)
      if (strand(rot[i]) == strand(rot[(i + 1) % 4])) {
        r.violation = "strands at dummy " + std::to_string(d) + " do not alternate";
        return r;
      }
  }
  if (!is_connected(p)) {
    r.violation = "planarization is disconnected";
    return r;
  }
  r.faces = static_cast<int>(trace_faces(p, c.rotation).size());
  if (p.vertex_count() - p.edge_count() + r.faces != 2) {
    r.violation = "Euler: V'-E'+F = " +
                  std::to_string(p.vertex_count() - p.edge_count() + r.faces) + ", not 2";
    return r;
  }
  r.ok = true;
  return r;
}

namespace {

using BGraph = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS,
                                     boost::property<boost::vertex_index_t, int>,
                                     boost::property<boost::edge_index_t, int>>;

struct End {
  int u, du, w, dw;  // planarization darts at each end, -1 inside a wheel
};

// The planarization with each dummy replaced by a wheel, which pins the cyclic
// order of its four strands. Wheel k: hub n + 5k, rims n + 5k + 1 .. 4 attached
// to the ends of e.a, f.a, e.b, f.b. Edges in `removed` are left out.
BGraph wheel_graph(const MultiGraph& g, const std::vector<std::pair<EdgeId, EdgeId>>& c,
                   const std::vector<EdgeId>& removed, std::vector<End>& ends) {
  int n = g.vertex_count(), m = g.edge_count();
  int k_count = static_cast<int>(c.size());
  BGraph bg(n + 5 * k_count);
  ends.clear();
  auto add = [&](int u, int du, int w, int dw) {
    boost::add_edge(u, w, static_cast<int>(ends.size()), bg);
    ends.push_back({u, du, w, dw});
  };
  std::vector<char> skip(m, 0);
  for (const auto& [e, f] : c) skip[e] = skip[f] = 1;
  for (EdgeId e : removed) skip[e] = 1;
  for (int e = 0; e < m; ++e)
    if (!skip[e]) add(g.edge(e).a, 2 * e, g.edge(e).b, 2 * e + 1);
  for (int k = 0; k < k_count; ++k) {
    int hub = n + 5 * k;
    auto [e, f] = c[k];
    std::array<std::pair<Vertex, int>, 4> strand = {{{g.edge(e).a, 2 * e},
                                                     {g.edge(f).a, 2 * f},
                                                     {g.edge(e).b, 2 * (m + 2 * k) + 1},
                                                     {g.edge(f).b, 2 * (m + 2 * k + 1) + 1}}};
    for (int i = 0; i < 4; ++i) {
      int rim = hub + 1 + i;
      add(strand[i].first, strand[i].second, rim, -1);
      add(hub, -1, rim, -1);
      add(rim, -1, hub + 1 + (i + 1) % 4, -1);
    }
  }
  return bg;
}

bool planar(const MultiGraph& g, const std::vector<std::pair<EdgeId, EdgeId>>& c,
            const std::vector<EdgeId>& removed) {
  std::vector<End> ends;
  auto bg = wheel_graph(g, c, removed, ends);
  return boost::boyer_myrvold_planarity_test(bg);
}

std::optional<Rotation> embed(const MultiGraph& g,
                              const std::array<std::pair<EdgeId, EdgeId>, 2>& c) {
  int n = g.vertex_count(), m = g.edge_count();
  std::vector<End> ends;
  auto bg = wheel_graph(g, {c[0], c[1]}, {}, ends);
  std::vector<std::vector<boost::graph_traits<BGraph>::edge_descriptor>> emb(n + 10);
  bool ok = boost::boyer_myrvold_planarity_test(
      boost::boyer_myrvold_params::graph = bg,
      boost::boyer_myrvold_params::embedding =
          boost::make_iterator_property_map(emb.begin(), get(boost::vertex_index, bg)));
  if (!ok) return std::nullopt;
  auto eidx = get(boost::edge_index, bg);
  Rotation rot(n + 2);
  for (Vertex v = 0; v < n; ++v)
    for (auto ed : emb[v]) {
      const auto& x = ends[eidx[ed]];
      rot[v].push_back(x.u == v ? x.du : x.dw);
    }
  for (int k = 0; k < 2; ++k) {
    auto [e, f] = c[k];
    std::array<int, 4> at_dummy = {2 * e + 1, 2 * f + 1, 2 * (m + 2 * k), 2 * (m + 2 * k + 1)};
    int hub = n + 5 * k;
    for (auto ed : emb[hub]) {
      const auto& x = ends[eidx[ed]];
      int rim = x.u == hub ? x.w : x.u;
      rot[n + k].push_back(at_dummy[rim - hub - 1]);
    }
  }
  return rot;
}

bool adjacent_edges(const MultiGraph& g, EdgeId e, EdgeId f) {
  const auto &x = g.edge(e), &y = g.edge(f);
  return x.a == y.a || x.a == y.b || x.b == y.a || x.b == y.b;
}

// A crossing edge named by its tile offset (-1, 0, +1 around the twist tile)
// and its edge id inside that elementary tile.
struct LocalEdge {
  int offset;
  EdgeId edge;
};
using LocalChoice = std::array<std::pair<LocalEdge, LocalEdge>, 2>;

// All crossing choices that draw the three-tile ring (t-1, t, t+1); cached.
const std::vector<LocalChoice>& window_choices(const TileName& a, const TileName& b,
                                               const TileName& c) {
  static std::mutex mu;
  static std::map<std::tuple<TileName, TileName, TileName>, std::vector<LocalChoice>> cache;
  {
    std::lock_guard lock(mu);
    if (auto it = cache.find({a, b, c}); it != cache.end()) return it->second;
  }
  auto ring = cyclic_join({&elementary_tile(a).tile, &elementary_tile(b).tile,
                           &elementary_tile(c).tile});
  const auto& g = ring.graph;
  std::vector<LocalEdge> local(g.edge_count());
  for (int w = 0; w < 3; ++w)
    for (size_t i = 0; i < ring.tile_edges[w].size(); ++i)
      local[ring.tile_edges[w][i]] = {w - 1, static_cast<EdgeId>(i)};
  // edges of the twist tile first
  std::vector<EdgeId> cand;
  for (int w : {1, 0, 2})
    for (EdgeId e : ring.tile_edges[w]) cand.push_back(e);
  std::vector<std::pair<EdgeId, EdgeId>> pairs;
  for (size_t i = 0; i < cand.size(); ++i)
    for (size_t j = i + 1; j < cand.size(); ++j)
      if (!adjacent_edges(g, cand[i], cand[j])) pairs.push_back({cand[i], cand[j]});
  std::vector<LocalChoice> out;
  for (size_t x = 0; x < pairs.size() && out.size() < 2; ++x) {
    // one crossing drawn; the other must vanish when one of its edges goes
    std::vector<char> frees(g.edge_count(), 0);
    int free_count = 0;
    for (EdgeId h : cand)
      if (h != pairs[x].first && h != pairs[x].second && planar(g, {pairs[x]}, {h})) {
        frees[h] = 1;
        ++free_count;
      }
    if (free_count < 2) continue;
    for (size_t y = x + 1; y < pairs.size() && out.size() < 2; ++y) {
      auto [e, f] = pairs[x];
      auto [u, v] = pairs[y];
      if (e == u || e == v || f == u || f == v || !frees[u] || !frees[v]) continue;
      if (!planar(g, {pairs[x], pairs[y]}, {})) continue;
      out.push_back({{{local[e], local[f]}, {local[u], local[v]}}});
    }
  }
  std::lock_guard lock(mu);
  return cache.emplace(std::make_tuple(a, b, c), std::move(out)).first->second;
}

std::optional<DrawingCertificate> try_tile(const Signature& s, const LabeledGraph& built,
                                           long t) {
  long n = static_cast<long>(s.size());
  auto idx = [&](long i) { return static_cast<size_t>(((i % n) + n) % n); };
  const auto& g = built.graph;
  for (const auto& choice : window_choices(s[idx(t - 1)], s[idx(t)], s[idx(t + 1)])) {
    auto global = [&](LocalEdge le) { return built.tile_edges[idx(t + le.offset)][le.edge]; };
    std::array<std::pair<EdgeId, EdgeId>, 2> c = {{{global(choice[0].first), global(choice[0].second)},
                                                   {global(choice[1].first), global(choice[1].second)}}};
    auto rot = embed(g, c);
    if (!rot) continue;
    DrawingCertificate cert{c, std::move(*rot), static_cast<int>(t)};
    if (verify_certificate(g, cert).ok) return cert;
  }
  return std::nullopt;
}

}  // namespace

DrawingCertificate build_drawing(const Signature& s, const LabeledGraph& built) {
  // canonical rotation order, I-free pictures first
  auto canon = canonicalize(s);
  long n = static_cast<long>(s.size());
  long shift = 0;
  for (long r = 0; r < n; ++r)
    if (rotate(s, r) == canon) {
      shift = r;
      break;
    }
  std::vector<size_t> order;
  for (int pass = 0; pass < 2; ++pass)
    for (long j = 0; j < n; ++j) {
      size_t t = static_cast<size_t>((j + shift) % n);
      bool has_i = s[t].picture.find('I') != std::string::npos;
      if (has_i == (pass == 1)) order.push_back(t);
    }
  for (size_t t : order)
    if (auto c = try_tile(s, built, static_cast<long>(t))) return *c;
  throw Error("no 2-crossing drawing found for " + s.str());
}

DrawingCertificate build_drawing(const Signature& s) { return build_drawing(s, build(s)); }

std::string certificate_json(const DrawingCertificate& c) {
  nlohmann::json j;
  j["crossings"] = {{c.crossings[0].first, c.crossings[0].second},
                    {c.crossings[1].first, c.crossings[1].second}};
  nlohmann::json rot = nlohmann::json::object();
  for (size_t v = 0; v < c.rotation.size(); ++v) rot[std::to_string(v)] = c.rotation[v];
  j["rotation"] = rot;
  j["twist_tile"] = c.twist_tile;
  return j.dump();
}

std::string certificate_dot(const MultiGraph& g, const DrawingCertificate& c) {
  auto p = planarization(g, c.crossings);
  std::ostringstream out;
  out << "graph planarization {\n";
  for (Vertex v = g.vertex_count(); v < p.vertex_count(); ++v)
    out << "  " << v << " [shape=point];\n";
  for (const auto& e : p.edges()) out << "  " << e.a << " -- " << e.b << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace crit2
