#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace crit2 {

enum class Frame { L, dL };

struct TileName {
  std::string picture;
  Frame frame = Frame::L;

  std::string str() const { return picture + (frame == Frame::dL ? "dL" : "L"); }
  // order: picture string first, then frame string ("L" < "dL")
  std::strong_ordering operator<=>(const TileName& o) const {
    if (auto c = picture <=> o.picture; c != 0) return c;
    return static_cast<int>(frame) <=> static_cast<int>(o.frame);
  }
  bool operator==(const TileName& o) const = default;
};

const std::vector<std::string>& picture_names();
bool is_picture(std::string_view p);
std::vector<TileName> all_tile_names();
TileName parse_tile_name(std::string_view text);

// Letters of the top and bottom path; H stands on both.
char top_path(const std::string& picture);
char bottom_path(const std::string& picture);

// Odd-length (>= 3) cyclic sequence of tile names.
class Signature {
 public:
  explicit Signature(std::vector<TileName> tiles);

  const std::vector<TileName>& tiles() const { return tiles_; }
  size_t size() const { return tiles_.size(); }
  const TileName& operator[](size_t i) const { return tiles_[i]; }
  // cyclic access
  const TileName& at(long i) const;
  std::string str() const;
  bool operator==(const Signature& o) const = default;
  bool operator<(const Signature& o) const { return tiles_ < o.tiles_; }

 private:
  std::vector<TileName> tiles_;
};

Signature tokenize(std::string_view text);
std::string render(const Signature& s);
Signature rotate(const Signature& s, long k);
Signature canonicalize(const Signature& s);
// The same graph read in the opposite direction: tile order and each picture
// reversed, frames moved one tile along. Builds an isomorphic graph.
Signature reverse_reading(const Signature& s);

struct SymbolCounts {
  int L = 0, dL = 0, A = 0, V = 0, D = 0, H = 0, B = 0, I = 0;
  bool operator==(const SymbolCounts&) const = default;
};

SymbolCounts symbol_counts(const Signature& s);

Signature random_signature(int n_tiles, std::uint64_t seed);
Signature random_signature(int n_tiles, std::uint64_t seed, const std::vector<TileName>& pool);

// Visits all |subset|^n sequences; with dedup only the canonical representative of each
// rotation class is visited. Returns the number of visited signatures.
long enumerate_signatures(int n_tiles, const std::vector<TileName>& subset, bool dedup,
                          const std::function<void(const Signature&)>& visit);
std::vector<Signature> enumerate_signatures(int n_tiles, const std::vector<TileName>& subset,
                                            bool dedup);

}  // namespace crit2
