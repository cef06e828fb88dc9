#pragma once

#include <utility>
#include <vector>

#include "crit2/graph.hpp"
#include "crit2/signature.hpp"

namespace crit2 {

std::pair<int, int> order_size(const Signature& s);
int max_degree(const Signature& s);
int clique_number(const Signature& s);
// Vertex ids refer to build(s).
std::vector<Vertex> hamiltonian_cycle(const Signature& s);
std::vector<Vertex> hamiltonian_cycle(const Signature& s, const LabeledGraph& built);

struct MatchingCover {
  std::vector<EdgeId> matching;
  std::vector<EdgeId> cover;
};
MatchingCover matching_and_cover(const Signature& s);
MatchingCover matching_and_cover(const Signature& s, const LabeledGraph& built);

}  // namespace crit2
