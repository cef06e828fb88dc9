#include "crit2/signature.hpp"

#include <algorithm>
#include <cctype>
#include <random>

#include "crit2/graph.hpp"

namespace crit2 {

const std::vector<std::string>& picture_names() {
  static const std::vector<std::string> names = {
      "DD", "DV", "DB", "DA", "VD", "VV", "VB", "VA", "BD", "BV", "BB",
      "BA", "AD", "AV", "AB", "AA", "VIA", "AIV", "BIA", "AIB", "H"};
  return names;
}

bool is_picture(std::string_view p) {
  const auto& n = picture_names();
  return std::find(n.begin(), n.end(), p) != n.end();
}

std::vector<TileName> all_tile_names() {
  std::vector<TileName> out;
  for (const auto& p : picture_names()) {
    out.push_back({p, Frame::L});
    out.push_back({p, Frame::dL});
  }
  std::sort(out.begin(), out.end());
  return out;
}

TileName parse_tile_name(std::string_view text) {
  std::string t(text);
  TileName n;
  if (t.size() >= 2 && t.ends_with("dL")) {
    n.picture = t.substr(0, t.size() - 2);
    n.frame = Frame::dL;
  } else if (t.size() >= 1 && t.ends_with("L")) {
    n.picture = t.substr(0, t.size() - 1);
    n.frame = Frame::L;
  } else {
    throw Error("tile name without frame: " + t);
  }
  if (!is_picture(n.picture)) throw Error("unknown picture: " + n.picture);
  return n;
}

char top_path(const std::string& picture) { return picture.front(); }
char bottom_path(const std::string& picture) { return picture.back(); }

Signature::Signature(std::vector<TileName> tiles) : tiles_(std::move(tiles)) {
  if (tiles_.size() < 3) throw Error("a signature needs at least 3 tiles");
  if (tiles_.size() % 2 == 0) throw Error("even number of tiles");
  for (const auto& t : tiles_)
    if (!is_picture(t.picture)) throw Error("unknown picture: " + t.picture);
}

const TileName& Signature::at(long i) const {
  long n = static_cast<long>(tiles_.size());
  return tiles_[((i % n) + n) % n];
}

std::string Signature::str() const { return render(*this); }

Signature tokenize(std::string_view text) {
  std::vector<TileName> tiles;
  std::string cur;
  for (char ch : text) {
    if (std::isspace(static_cast<unsigned char>(ch))) continue;
    if (std::string_view("ABDVHIdL").find(ch) == std::string_view::npos)
      throw Error(std::string("unexpected character '") + ch + "'");
    cur += ch;
    if (ch == 'L') {
      tiles.push_back(parse_tile_name(cur));
      cur.clear();
    }
  }
  if (!cur.empty()) throw Error("dangling characters: " + cur);
  return Signature(std::move(tiles));
}

std::string render(const Signature& s) {
  std::string out;
  for (const auto& t : s.tiles()) out += t.str();
  return out;
}

Signature rotate(const Signature& s, long k) {
  std::vector<TileName> out;
  out.reserve(s.size());
  for (size_t i = 0; i < s.size(); ++i) out.push_back(s.at(static_cast<long>(i) + k));
  return Signature(std::move(out));
}

Signature reverse_reading(const Signature& s) {
  long n = static_cast<long>(s.size());
  std::vector<TileName> out;
  out.reserve(s.size());
  for (long i = 0; i < n; ++i) {
    std::string pic = s.at(n - 1 - i).picture;
    std::reverse(pic.begin(), pic.end());
    out.push_back({pic, s.at(n - 2 - i).frame});
  }
  return Signature(std::move(out));
}

Signature canonicalize(const Signature& s) {
  // Booth-style least rotation would be linear; the quadratic scan only compares
  // until the first difference, which is short for random inputs.
  const auto& t = s.tiles();
  size_t n = t.size(), best = 0;
  for (size_t r = 1; r < n; ++r) {
    for (size_t i = 0; i < n; ++i) {
      const auto& a = t[(r + i) % n];
      const auto& b = t[(best + i) % n];
      if (a == b) continue;
      if (a < b) best = r;
      break;
    }
  }
  return rotate(s, static_cast<long>(best));
}

SymbolCounts symbol_counts(const Signature& s) {
  SymbolCounts c;
  for (const auto& t : s.tiles()) {
    ++c.L;
    if (t.frame == Frame::dL) ++c.dL;
    for (char ch : t.picture) {
      switch (ch) {
        case 'A': ++c.A; break;
        case 'V': ++c.V; break;
        case 'D': ++c.D; break;
        case 'H': ++c.H; break;
        case 'B': ++c.B; break;
        case 'I': ++c.I; break;
      }
    }
  }
  return c;
}

Signature random_signature(int n_tiles, std::uint64_t seed, const std::vector<TileName>& pool) {
  if (n_tiles < 3 || n_tiles % 2 == 0) throw Error("tile count must be odd and at least 3");
  if (pool.empty()) throw Error("empty tile pool");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<size_t> pick(0, pool.size() - 1);
  std::vector<TileName> tiles;
  for (int i = 0; i < n_tiles; ++i) tiles.push_back(pool[pick(rng)]);
  return Signature(std::move(tiles));
}

Signature random_signature(int n_tiles, std::uint64_t seed) {
  static const auto pool = all_tile_names();
  return random_signature(n_tiles, seed, pool);
}

long enumerate_signatures(int n_tiles, const std::vector<TileName>& subset, bool dedup,
                          const std::function<void(const Signature&)>& visit) {
  if (n_tiles < 3 || n_tiles % 2 == 0) throw Error("tile count must be odd and at least 3");
  if (subset.empty()) throw Error("empty tile subset");
  std::vector<size_t> idx(n_tiles, 0);
  long visited = 0;
  for (;;) {
    std::vector<TileName> tiles;
    for (size_t i : idx) tiles.push_back(subset[i]);
    Signature s(std::move(tiles));
    if (!dedup || canonicalize(s) == s) {
      visit(s);
      ++visited;
    }
    int p = n_tiles - 1;
    while (p >= 0 && ++idx[p] == subset.size()) idx[p--] = 0;
    if (p < 0) break;
  }
  return visited;
}

std::vector<Signature> enumerate_signatures(int n_tiles, const std::vector<TileName>& subset,
                                            bool dedup) {
  std::vector<Signature> out;
  enumerate_signatures(n_tiles, subset, dedup, [&](const Signature& s) { out.push_back(s); });
  return out;
}

}  // namespace crit2
