#include "crit2/catalog.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <set>
#include <sstream>

namespace crit2 {

std::vector<std::vector<int>> trace_faces(const MultiGraph& g, const Rotation& rot) {
  int darts = 2 * g.edge_count();
  std::vector<int> pos(darts, -1);
  for (Vertex v = 0; v < g.vertex_count(); ++v)
    for (size_t i = 0; i < rot[v].size(); ++i) pos[rot[v][i]] = static_cast<int>(i);
  std::vector<char> used(darts, 0);
  std::vector<std::vector<int>> faces;
  for (int d0 = 0; d0 < darts; ++d0) {
    if (used[d0]) continue;
    std::vector<int> face;
    for (int d = d0; !used[d];) {
      used[d] = 1;
      face.push_back(d);
      int back = d ^ 1;
      Vertex h = dart_head(g, d);
      const auto& r = rot[h];
      d = r[(pos[back] + 1) % r.size()];
    }
    faces.push_back(std::move(face));
  }
  return faces;
}

namespace {

struct RawVertex {
  std::string name;
  Point p;
  std::string side;
};

struct RawEdge {
  std::string a, b;
  std::optional<Point> bend;
};

struct FrameRec {
  std::string name;
  std::vector<RawVertex> verts;
  std::array<std::string, 4> corners;  // TL TR BR BL
  std::vector<RawEdge> edges;
};

struct PictureRec {
  std::string name;
  char top = 0, bottom = 0;
  std::vector<RawVertex> verts;
  std::vector<std::string> ident;
  std::vector<RawEdge> edges;
  bool messy = false;
  bool messy_given = false;
};

[[noreturn]] void fail(const std::string& path, int line, const std::string& msg) {
  throw Error(path + ":" + std::to_string(line) + ": " + msg);
}

RawEdge parse_edge(std::istringstream& ls, const std::string& path, int line) {
  RawEdge e;
  if (!(ls >> e.a >> e.b)) fail(path, line, "edge needs two endpoints");
  std::string kw;
  if (ls >> kw) {
    Point b;
    if (kw != "bend" || !(ls >> b.x >> b.y)) fail(path, line, "expected 'bend x y'");
    e.bend = b;
  }
  return e;
}

void parse_file(const std::string& path, std::vector<FrameRec>& frames,
                std::vector<PictureRec>& pics) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open catalog " + path);
  std::string raw;
  int line = 0;
  FrameRec* fr = nullptr;
  PictureRec* pr = nullptr;
  while (std::getline(in, raw)) {
    ++line;
    if (auto h = raw.find('#'); h != std::string::npos) raw.resize(h);
    std::istringstream ls(raw);
    std::string kw;
    if (!(ls >> kw)) continue;
    if (kw == "frame" || kw == "picture") {
      if (fr || pr) fail(path, line, "nested record");
      std::string name;
      if (!(ls >> name)) fail(path, line, "record without name");
      if (kw == "frame") {
        frames.push_back({});
        fr = &frames.back();
        fr->name = name;
      } else {
        pics.push_back({});
        pr = &pics.back();
        pr->name = name;
      }
    } else if (kw == "end") {
      if (!fr && !pr) fail(path, line, "'end' outside a record");
      fr = nullptr;
      pr = nullptr;
    } else if (kw == "vertex") {
      RawVertex v;
      if (!(ls >> v.name >> v.p.x >> v.p.y)) fail(path, line, "bad vertex");
      if (pr) {
        if (!(ls >> v.side)) fail(path, line, "picture vertex needs a side");
        static const std::set<std::string> sides = {"top", "right", "bottom", "left", "inner"};
        if (!sides.count(v.side)) fail(path, line, "unknown side " + v.side);
        pr->verts.push_back(v);
      } else if (fr) {
        fr->verts.push_back(v);
      } else {
        fail(path, line, "vertex outside a record");
      }
    } else if (kw == "edge") {
      if (!fr && !pr) fail(path, line, "edge outside a record");
      auto e = parse_edge(ls, path, line);
      (fr ? fr->edges : pr->edges).push_back(e);
    } else if (kw == "corners") {
      if (!fr) fail(path, line, "corners outside a frame");
      for (auto& c : fr->corners)
        if (!(ls >> c)) fail(path, line, "corners needs four names");
    } else if (kw == "paths") {
      std::string t, b;
      if (!pr || !(ls >> t >> b) || t.size() != 1 || b.size() != 1)
        fail(path, line, "bad paths line");
      pr->top = t[0];
      pr->bottom = b[0];
    } else if (kw == "ident") {
      std::string v;
      if (!pr || !(ls >> v)) fail(path, line, "bad ident line");
      pr->ident.push_back(v);
    } else if (kw == "messy") {
      std::string v;
      if (!pr || !(ls >> v) || (v != "yes" && v != "no")) fail(path, line, "bad messy line");
      pr->messy = v == "yes";
      pr->messy_given = true;
    } else {
      fail(path, line, "unknown keyword " + kw);
    }
  }
  if (fr || pr) throw Error(path + ": unterminated record");
}

double side_param(const std::string& side, Point p) {
  if (side == "top") return p.x;
  if (side == "bottom") return p.x;
  if (side == "right") return 1.0 - p.y;
  return 1.0 - p.y;  // left
}

CatalogEntry compose(const FrameRec& fr, const PictureRec& pr) {
  CatalogEntry ce;
  ce.name = {pr.name, fr.name == "dL" ? Frame::dL : Frame::L};
  std::map<std::string, Vertex> id;
  for (const auto& v : fr.verts) {
    id[v.name] = static_cast<Vertex>(ce.vertex_names.size());
    ce.vertex_names.push_back(v.name);
    ce.position.push_back(v.p);
  }
  auto pv = pr.verts;
  std::stable_sort(pv.begin(), pv.end(), [](const RawVertex& a, const RawVertex& b) {
    if (a.p.x != b.p.x) return a.p.x < b.p.x;
    return a.p.y > b.p.y;
  });
  for (const auto& v : pv) {
    if (id.count(v.name)) throw Error(ce.name.str() + ": vertex name clash " + v.name);
    id[v.name] = static_cast<Vertex>(ce.vertex_names.size());
    ce.vertex_names.push_back(v.name);
    ce.position.push_back(v.p);
  }
  static const std::array<std::string, 4> corner_alias = {"TL", "TR", "BR", "BL"};
  for (int i = 0; i < 4; ++i) {
    if (!id.count(fr.corners[i])) throw Error("frame " + fr.name + ": bad corner");
    id[corner_alias[i]] = id[fr.corners[i]];
  }
  auto resolve = [&](const std::string& n) {
    auto it = id.find(n);
    if (it == id.end()) throw Error(ce.name.str() + ": unknown vertex " + n);
    return it->second;
  };

  MultiGraph g(static_cast<int>(ce.vertex_names.size()));
  std::vector<std::optional<Point>> bends;
  auto add = [&](Vertex a, Vertex b, std::optional<Point> bend) {
    g.add_edge(a, b);
    bends.push_back(bend);
  };
  const std::array<std::tuple<std::string, std::string, std::string>, 4> sides = {
      std::tuple{"top", "TL", "TR"}, {"right", "TR", "BR"}, {"bottom", "BL", "BR"},
      {"left", "TL", "BL"}};
  for (const auto& [side, from, to] : sides) {
    std::vector<const RawVertex*> on;
    for (const auto& v : pv)
      if (v.side == side) on.push_back(&v);
    std::sort(on.begin(), on.end(), [&](const RawVertex* a, const RawVertex* b) {
      return side_param(side, a->p) < side_param(side, b->p);
    });
    Vertex prev = resolve(from);
    for (const auto* v : on) {
      add(prev, id[v->name], std::nullopt);
      prev = id[v->name];
    }
    add(prev, resolve(to), std::nullopt);
  }
  size_t picture_edges_begin = bends.size();
  for (const auto& e : pr.edges) add(resolve(e.a), resolve(e.b), e.bend);
  size_t picture_edges_end = bends.size();
  for (const auto& e : fr.edges) add(resolve(e.a), resolve(e.b), e.bend);

  for (size_t e = picture_edges_begin; e < picture_edges_end; ++e)
    if (g.multiplicity(g.edge(static_cast<EdgeId>(e)).a, g.edge(static_cast<EdgeId>(e)).b) > 1)
      ce.has_double_edge_in_picture = true;

  // rotation from geometry
  ce.rotation.assign(g.vertex_count(), {});
  std::vector<double> angle(2 * g.edge_count());
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    for (int side = 0; side < 2; ++side) {
      Vertex from = side == 0 ? g.edge(e).a : g.edge(e).b;
      Vertex to = side == 0 ? g.edge(e).b : g.edge(e).a;
      Point target = bends[e] ? *bends[e] : ce.position[to];
      Point p = ce.position[from];
      angle[2 * e + side] = std::atan2(target.y - p.y, target.x - p.x);
      ce.rotation[from].push_back(2 * e + side);
    }
  }
  for (auto& r : ce.rotation) {
    std::sort(r.begin(), r.end(), [&](int a, int b) { return angle[a] < angle[b]; });
    for (size_t i = 0; i + 1 < r.size(); ++i)
      if (std::abs(angle[r[i]] - angle[r[i + 1]]) < 1e-9)
        throw Error(ce.name.str() + ": two edges leave a vertex in the same direction");
  }

  ce.tile.graph = std::move(g);
  ce.tile.left_wall = {resolve("x1"), resolve("x2")};
  ce.tile.right_wall = {resolve("y1"), resolve("y2")};
  ce.tile.labels.assign(ce.tile.graph.vertex_count(), {0, Role::Interior});
  ce.tile.labels[ce.tile.left_wall[0]].role = Role::LeftWall1;
  ce.tile.labels[ce.tile.left_wall[1]].role = Role::LeftWall2;
  ce.top_path_letter = pr.top;
  ce.bottom_path_letter = pr.bottom;
  ce.messy = pr.messy;
  for (const auto& n : pr.ident) ce.identification_vertices.push_back(resolve(n));
  ce.output_arity = ce.tile.graph.degree(ce.tile.right_wall[0]);
  return ce;
}

bool has_triangle(const MultiGraph& g) {
  for (Vertex a = 0; a < g.vertex_count(); ++a)
    for (Vertex b : g.neighbors(a))
      if (b > a)
        for (Vertex c : g.neighbors(b))
          if (c > b && g.adjacent(a, c)) return true;
  return false;
}

// Returns "" when fine, else a description of the first problem.
std::string check_entry(const CatalogEntry& ce) {
  const auto& g = ce.tile.graph;
  const auto& p = ce.name.picture;
  auto cnt = [&](char c) { return static_cast<int>(std::count(p.begin(), p.end(), c)); };
  int dl = ce.name.frame == Frame::dL;
  int V = 2 + 3 + dl + cnt('A') + cnt('V') + 2 * cnt('H') + 2 * cnt('B') - cnt('I');
  int E = 5 + 2 * dl + 2 * cnt('A') + 2 * cnt('V') + cnt('D') + 3 * cnt('H') + 4 * cnt('B') -
          cnt('I');
  if (g.vertex_count() != V || g.edge_count() != E)
    return "counts " + std::to_string(g.vertex_count()) + "/" + std::to_string(g.edge_count()) +
           " expected " + std::to_string(V) + "/" + std::to_string(E);
  bool tri_expected = cnt('A') + cnt('V') + cnt('B') > 0;
  if (has_triangle(g) != tri_expected) return "triangle census";
  if (ce.top_path_letter != top_path(p) || ce.bottom_path_letter != bottom_path(p))
    return "path letters";
  std::set<Vertex> walls(ce.tile.left_wall.begin(), ce.tile.left_wall.end());
  walls.insert(ce.tile.right_wall.begin(), ce.tile.right_wall.end());
  if (walls.size() != 4) return "walls not distinct";
  if (g.degree(ce.tile.right_wall[1]) != 1) return "y2 is not a degree-1 vertex";
  if (ce.output_arity != 2 && ce.output_arity != 3) return "output arity";
  if (!is_connected(g)) return "disconnected";
  auto faces = trace_faces(g, ce.rotation);
  if (g.vertex_count() - g.edge_count() + static_cast<int>(faces.size()) != 2)
    return "stored rotation is not planar";
  // walls on one face in cyclic order x1, x2, y2, y1 (either orientation)
  std::vector<Vertex> want = {ce.tile.left_wall[0], ce.tile.left_wall[1], ce.tile.right_wall[1],
                              ce.tile.right_wall[0]};
  bool outer = false;
  for (const auto& f : faces) {
    std::vector<Vertex> seq;
    for (int d : f)
      if (walls.count(dart_tail(g, d)) &&
          (seq.empty() || seq.back() != dart_tail(g, d)))
        seq.push_back(dart_tail(g, d));
    std::vector<Vertex> firsts;
    for (Vertex v : seq)
      if (std::find(firsts.begin(), firsts.end(), v) == firsts.end()) firsts.push_back(v);
    if (firsts.size() != 4) continue;
    for (int dir = 0; dir < 2 && !outer; ++dir) {
      auto w = want;
      if (dir) std::reverse(w.begin(), w.end());
      for (int r = 0; r < 4 && !outer; ++r) {
        std::rotate(w.begin(), w.begin() + 1, w.end());
        if (w == firsts) outer = true;
      }
    }
  }
  if (!outer) return "walls are not on a common face in order x1 x2 y2 y1";
  if (tile_hourglass_model(ce.tile).has_value() != ce.messy) return "messy flag";
  return "";
}

}  // namespace

std::optional<std::vector<int>> tile_hourglass_model(const Tile& t) {
  const auto& g = t.graph;
  int n = g.vertex_count();
  std::vector<int> assign(n, -2);
  assign[t.left_wall[0]] = 0;
  assign[t.left_wall[1]] = 1;
  assign[t.right_wall[0]] = 2;
  assign[t.right_wall[1]] = 3;
  std::vector<Vertex> free;
  for (Vertex v = 0; v < n; ++v)
    if (assign[v] == -2) free.push_back(v);
  auto connected_set = [&](int s) {
    Vertex start = -1;
    int size = 0;
    for (Vertex v = 0; v < n; ++v)
      if (assign[v] == s) {
        ++size;
        if (start < 0) start = v;
      }
    if (size == 0) return false;
    std::vector<char> seen(n, 0);
    std::vector<Vertex> st{start};
    seen[start] = 1;
    int reached = 1;
    while (!st.empty()) {
      Vertex u = st.back();
      st.pop_back();
      for (EdgeId e : g.incident(u)) {
        Vertex w = g.other(e, u);
        if (!seen[w] && assign[w] == s) {
          seen[w] = 1;
          ++reached;
          st.push_back(w);
        }
      }
    }
    return reached == size;
  };
  auto touches = [&](int s1, int s2) {
    for (const auto& e : g.edges())
      if ((assign[e.a] == s1 && assign[e.b] == s2) || (assign[e.a] == s2 && assign[e.b] == s1))
        return true;
    return false;
  };
  std::function<bool(size_t)> rec = [&](size_t i) -> bool {
    if (i == free.size()) {
      for (int s = 0; s < 5; ++s)
        if (!connected_set(s)) return false;
      // triangles {x1, y1, c} and {x2, y2, c}
      return touches(0, 2) && touches(1, 3) && touches(4, 0) && touches(4, 1) &&
             touches(4, 2) && touches(4, 3);
    }
    for (int s = -1; s < 5; ++s) {
      assign[free[i]] = s;
      if (rec(i + 1)) return true;
    }
    assign[free[i]] = -2;
    return false;
  };
  if (!rec(0)) return std::nullopt;
  return assign;
}

Catalog Catalog::load(const std::string& path) {
  std::vector<FrameRec> frames;
  std::vector<PictureRec> pics;
  parse_file(path, frames, pics);
  Catalog c;
  std::set<std::string> seen_pics;
  for (const auto& p : pics) {
    if (!is_picture(p.name)) throw Error(path + ": unknown picture " + p.name);
    if (!seen_pics.insert(p.name).second) throw Error(path + ": duplicate picture " + p.name);
    if (!p.messy_given) throw Error(path + ": picture " + p.name + " lacks a messy line");
  }
  if (seen_pics.size() != picture_names().size()) throw Error(path + ": missing pictures");
  std::set<std::string> seen_frames;
  for (const auto& f : frames) {
    if (f.name != "L" && f.name != "dL") throw Error(path + ": unknown frame " + f.name);
    if (!seen_frames.insert(f.name).second) throw Error(path + ": duplicate frame " + f.name);
    if (f.verts.size() < 4 || f.verts[0].name != "x1" || f.verts[1].name != "x2" ||
        f.verts[2].name != "y1" || f.verts[3].name != "y2")
      throw Error(path + ": frame " + f.name + " must start with x1 x2 y1 y2");
  }
  if (seen_frames.size() != 2) throw Error(path + ": need frames L and dL");
  for (const auto& f : frames)
    for (const auto& p : pics) c.entries_.push_back(compose(f, p));
  std::sort(c.entries_.begin(), c.entries_.end(),
            [](const CatalogEntry& a, const CatalogEntry& b) { return a.name < b.name; });
  for (size_t i = 0; i < c.entries_.size(); ++i) {
    const auto& ce = c.entries_[i];
    c.index_[ce.name] = i;
    std::string problem = check_entry(ce);
    if (!problem.empty()) throw Error("catalog tile " + ce.name.str() + ": " + problem);
    c.report_.push_back(ce.name.str() + " V=" + std::to_string(ce.tile.graph.vertex_count()) +
                        " E=" + std::to_string(ce.tile.graph.edge_count()) +
                        (ce.messy ? " messy" : " neat"));
  }
  return c;
}

const Catalog& Catalog::instance() {
  static const Catalog c = [] {
    const char* env = std::getenv("CRIT2_CATALOG");
    return load(env && *env ? env : CRIT2_DEFAULT_CATALOG);
  }();
  return c;
}

const CatalogEntry& Catalog::entry(const TileName& name) const {
  auto it = index_.find(name);
  if (it == index_.end()) throw Error("unknown tile " + name.str());
  return entries_[it->second];
}

const CatalogEntry& elementary_tile(const TileName& name) {
  return Catalog::instance().entry(name);
}

std::vector<Vertex> join_into(Tile& t1, const Tile& t2, std::vector<EdgeId>* edge_map) {
  int offset = t1.tiles;
  t1.tiles += t2.tiles;
  std::vector<Vertex> map(t2.graph.vertex_count(), -1);
  for (int i = 0; i < 2; ++i) {
    map[t2.left_wall[i]] = t1.right_wall[i];
    VertexLabel l = t2.labels[t2.left_wall[i]];
    t1.labels[t1.right_wall[i]] = {l.tile + offset, l.role};
  }
  for (Vertex v = 0; v < t2.graph.vertex_count(); ++v) {
    if (map[v] >= 0) continue;
    map[v] = t1.graph.add_vertex();
    VertexLabel l = t2.labels[v];
    t1.labels.push_back({l.tile + offset, l.role});
  }
  if (edge_map) edge_map->clear();
  for (const auto& e : t2.graph.edges()) {
    EdgeId id = t1.graph.add_edge(map[e.a], map[e.b]);
    if (edge_map) edge_map->push_back(id);
  }
  t1.right_wall = {map[t2.right_wall[0]], map[t2.right_wall[1]]};
  return map;
}

Tile join(const Tile& t1, const Tile& t2) {
  Tile out = t1;
  join_into(out, t2);
  return out;
}

Tile invert_right(const Tile& t) {
  Tile out = t;
  std::swap(out.right_wall[0], out.right_wall[1]);
  return out;
}

Tile invert_left(const Tile& t) {
  Tile out = t;
  std::swap(out.left_wall[0], out.left_wall[1]);
  std::swap(out.labels[out.left_wall[0]], out.labels[out.left_wall[1]]);
  return out;
}

LabeledGraph cyclize(const Tile& t, std::vector<Vertex>* vertex_map) {
  const auto& g = t.graph;
  for (Vertex a : t.left_wall)
    for (Vertex b : t.right_wall)
      if (a == b) throw Error("cyclize: walls overlap");
  std::vector<Vertex> map(g.vertex_count(), -1);
  int next = 0;
  for (Vertex v = 0; v < g.vertex_count(); ++v)
    if (v != t.right_wall[0] && v != t.right_wall[1]) map[v] = next++;
  map[t.right_wall[0]] = map[t.left_wall[0]];
  map[t.right_wall[1]] = map[t.left_wall[1]];
  LabeledGraph lg;
  lg.graph = MultiGraph(next);
  lg.labels.assign(next, {});
  for (Vertex v = 0; v < g.vertex_count(); ++v)
    if (v != t.right_wall[0] && v != t.right_wall[1]) lg.labels[map[v]] = t.labels[v];
  for (const auto& e : g.edges()) lg.graph.add_edge(map[e.a], map[e.b]);
  if (vertex_map) *vertex_map = map;
  return lg;
}

}  // namespace crit2
