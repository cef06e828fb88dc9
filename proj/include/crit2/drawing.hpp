#pragma once

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "crit2/catalog.hpp"
#include "crit2/graph.hpp"
#include "crit2/signature.hpp"

namespace crit2 {

// Two crossing edge pairs plus a rotation system of the planarization.
//
// Planarization: crossing k gets dummy vertex |V|+k. For the pair (e, f) the
// edge ids e and f keep their first endpoint and end at the dummy; new edges
// |E|+2k and |E|+2k+1 run from the dummy to the second endpoints of e and f.
struct DrawingCertificate {
  std::array<std::pair<EdgeId, EdgeId>, 2> crossings{};
  Rotation rotation;  // darts leaving each planarization vertex, cyclic order
  int twist_tile = -1;
};

struct DrawingCheck {
  bool ok = false;
  int faces = 0;
  std::string violation;
};

MultiGraph planarization(const MultiGraph& g, const std::array<std::pair<EdgeId, EdgeId>, 2>& c);
DrawingCertificate build_drawing(const Signature& s);
DrawingCertificate build_drawing(const Signature& s, const LabeledGraph& built);
DrawingCheck verify_certificate(const MultiGraph& g, const DrawingCertificate& c);

std::string certificate_json(const DrawingCertificate& c);
// DOT of the planarization; dummies drawn as points.
std::string certificate_dot(const MultiGraph& g, const DrawingCertificate& c);

}  // namespace crit2
