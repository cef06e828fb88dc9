#include "crit2/report.hpp"

#include "crit2/builder.hpp"
#include "crit2/drawing.hpp"
#include "crit2/edge_coloring.hpp"
#include "crit2/structural.hpp"
#include "crit2/treewidth.hpp"
#include "crit2/vertex_coloring.hpp"

namespace crit2 {

nlohmann::json full_report(const Signature& s, const ReportOptions& opt) {
  LabeledGraph built = build(s);
  const MultiGraph& g = built.graph;
  auto [nv, ne] = order_size(s);
  MatchingCover mc = matching_and_cover(s, built);
  DrawingCertificate cert = build_drawing(s, built);
  DrawingCheck dc = verify_certificate(g, cert);
  int chi = chromatic_number(s, built);

  nlohmann::json r;
  r["schema"] = 1;
  r["signature"] = canonicalize(s).str();
  r["tiles"] = s.size();
  r["V"] = nv;
  r["E"] = ne;
  r["max_degree"] = max_degree(s);
  r["clique"] = clique_number(s);
  r["edge_cover"] = mc.cover.size();
  r["perfect_matching"] = 2 * mc.matching.size() == static_cast<size_t>(nv);
  r["scr"] = 2;
  r["drawing"] = {{"crossings", nlohmann::json::array()},
                  {"verified", dc.ok},
                  {"twist_tile", cert.twist_tile}};
  for (auto [e, f] : cert.crossings) r["drawing"]["crossings"].push_back({e, f});
  r["bipartite"] = is_bipartite_by_characterization(s);
  r["chromatic_number"] = chi;
  r["chromatic_index"] = chromatic_index(s, built);
  r["treewidth"] = treewidth(s);
  r["messy_tiles"] = messy_count(s);

  if (opt.witnesses) {
    nlohmann::json w;
    w["coloring"] = construct_coloring(s, chi);
    w["edge_coloring"] = construct_edge_coloring(s, built);
    w["hamiltonian_cycle"] = hamiltonian_cycle(s, built);
    w["matching"] = mc.matching;
    w["edge_cover"] = mc.cover;
    TreeDecomposition td = build_tree_decomposition(s, built);
    w["decomposition"] = {{"bags", td.bags}, {"tree_edges", td.tree_edges}};
    w["drawing"] = nlohmann::json::parse(certificate_json(cert));
    r["witnesses"] = w;
  }
  return r;
}

std::string check_report(const nlohmann::json& r) {
  int v = r.at("V"), e = r.at("E"), chi = r.at("chromatic_number");
  int cover = r.at("edge_cover"), delta = r.at("max_degree"), tw = r.at("treewidth");
  if (cover != (v + 1) / 2) return "edge cover != ceil(V/2)";
  if ((chi >= 2) != (e > 0)) return "chromatic number vs edges";
  if (chi > 4) return "chromatic number above 4";
  if (int(r.at("chromatic_index")) < delta) return "chromatic index below max degree";
  if (tw < 3 || tw > 5) return "treewidth outside 3..5";
  if (r.at("bipartite").get<bool>() != (chi == 2)) return "bipartite flag vs chromatic number";
  return {};
}

}  // namespace crit2
