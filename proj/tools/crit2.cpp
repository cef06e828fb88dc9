#include <algorithm>
#include <fstream>
#include <future>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "crit2/builder.hpp"
#include "crit2/catalog.hpp"
#include "crit2/drawing.hpp"
#include "crit2/edge_coloring.hpp"
#include "crit2/oracle.hpp"
#include "crit2/recognizer.hpp"
#include "crit2/report.hpp"
#include "crit2/structural.hpp"
#include "crit2/treewidth.hpp"
#include "crit2/vertex_coloring.hpp"

using namespace crit2;
using nlohmann::json;

namespace {

constexpr int kOk = 0, kRejected = 1, kUsage = 2;

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

int fail(const std::string& kind, const std::string& msg) {
  emit({{"error", {{"kind", kind}, {"message", msg}}}});
  return kRejected;
}

std::string read_input(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path);
  return {std::istreambuf_iterator<char>(in), {}};
}

MultiGraph parse_graph(const std::string& text) {
  auto p = text.find_first_not_of(" \t\r\n");
  if (p != std::string::npos && text[p] == '{') return from_json(json::parse(text));
  return from_edge_list(text);
}

std::string graph_out(const MultiGraph& g, const std::string& fmt) {
  if (fmt == "dot") return to_dot(g);
  if (fmt == "edgelist") return to_edge_list(g);
  return to_json(g).dump(2) + "\n";
}

std::vector<TileName> parse_subset(const std::string& text) {
  std::vector<TileName> out;
  if (text.empty()) return all_tile_names();
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) out.push_back(parse_tile_name(item));
  return out;
}

struct Check {
  std::string name;
  bool ok = true;
  bool skipped = false;
  std::string detail;
};

// Cross-checks of every closed form and constructor against oracles, guarded by size.
std::vector<Check> verify_one(const Signature& s) {
  std::vector<Check> out;
  auto add = [&](std::string name, bool ok, std::string detail = {}) {
    out.push_back({std::move(name), ok, false, std::move(detail)});
  };
  auto skip = [&](std::string name) { out.push_back({std::move(name), true, true, {}}); };
  LabeledGraph built = build(s);
  const MultiGraph& g = built.graph;
  int n = g.vertex_count();
  auto [nv, ne] = order_size(s);
  add("order_size", nv == n && ne == g.edge_count());
  add("max_degree", max_degree(s) == max_degree_raw(g));
  add("hamiltonian_cycle", oracle::has_hamiltonian_cycle_witness(g, hamiltonian_cycle(s, built)));
  MatchingCover mc = matching_and_cover(s, built);
  add("edge_cover", oracle::is_edge_cover(g, mc.cover) && oracle::is_matching(g, mc.matching) &&
                        static_cast<int>(mc.cover.size()) == (n + 1) / 2);
  if (n <= 60)
    add("clique", clique_number(s) == oracle::max_clique(g));
  else
    skip("clique");
  add("bipartite", is_bipartite_by_characterization(s) == oracle::is_bipartite(g));
  int chi = chromatic_number(s, built);
  add("coloring", oracle::is_proper_coloring(g, construct_coloring(s, chi)));
  if (n <= 30)
    add("chromatic_number", chi == oracle::brute_chromatic_number(g));
  else
    skip("chromatic_number");
  auto ec = construct_edge_coloring(s, built);
  int used = ec.empty() ? 0 : *std::max_element(ec.begin(), ec.end());
  add("edge_coloring", oracle::is_proper_edge_coloring(g, ec) &&
                           used == chromatic_index(s, built) && used >= max_degree_raw(g));
  int tw = treewidth(s);
  auto dc = validate_decomposition(g, build_tree_decomposition(s, built));
  add("decomposition", dc.ok && dc.width == tw, dc.violation);
  if (n <= 18)
    add("treewidth", oracle::exact_treewidth(g) == tw);
  else
    skip("treewidth");
  if (tw == 5) {
    std::string v = validate_minor_witness(g, hourglass_minor_witness(s, built));
    add("hourglass_minor", v.empty(), v);
  }
  auto cert = build_drawing(s, built);
  auto check = verify_certificate(g, cert);
  add("drawing", check.ok, check.violation);
  auto r = recognize(g);
  add("recognize", r && oracle::isomorphic(build(*r).graph, g));
  return out;
}

template <class T, class F>
auto parallel_map(const std::vector<T>& items, F f) {
  using R = decltype(f(items[0]));
  std::vector<R> out(items.size());
  unsigned workers = std::max(1u, std::min<unsigned>(std::thread::hardware_concurrency(), 8));
  std::atomic<size_t> next{0};
  std::vector<std::future<void>> jobs;
  for (unsigned w = 0; w < workers; ++w)
    jobs.push_back(std::async(std::launch::async, [&] {
      for (size_t i; (i = next++) < items.size();) out[i] = f(items[i]);
    }));
  for (auto& j : jobs) j.get();
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Build, recognize and analyse 2-crossing-critical graphs from tile signatures"};
  app.require_subcommand(1);

  std::string sig_text, format = "json", input = "-", subset;
  int k = 3, tiles = 3, count = 0;
  std::uint64_t seed = 1;
  bool witnesses = false, with_decomposition = false, with_report = false;
  std::vector<std::string> sig_list;

  auto* parse = app.add_subcommand("parse", "Tokenize and canonicalize a signature");
  parse->add_option("signature", sig_text)->required();

  auto* build_cmd = app.add_subcommand("build", "Build the graph of a signature");
  build_cmd->add_option("signature", sig_text)->required();
  build_cmd->add_option("--format", format)->check(CLI::IsMember({"json", "dot", "edgelist"}));

  auto* rec = app.add_subcommand("recognize", "Recover a signature from a graph");
  rec->add_option("input", input, "edge list or JSON graph file, - for stdin");

  auto* props = app.add_subcommand("props", "Full property report");
  props->add_option("signature", sig_text)->required();
  props->add_flag("--witnesses", witnesses);

  auto* color = app.add_subcommand("color", "Proper vertex colouring with k colours");
  color->add_option("signature", sig_text)->required();
  color->add_option("-k", k)->check(CLI::Range(1, 16));

  auto* ecolor = app.add_subcommand("edge-color", "Edge colouring with chromatic-index colours");
  ecolor->add_option("signature", sig_text)->required();

  auto* twc = app.add_subcommand("treewidth", "Treewidth, optionally with a decomposition");
  twc->add_option("signature", sig_text)->required();
  twc->add_flag("--decomposition", with_decomposition);

  auto* draw = app.add_subcommand("draw", "Drawing certificate with two crossings");
  draw->add_option("signature", sig_text)->required();
  draw->add_option("--format", format)->check(CLI::IsMember({"json", "dot"}));

  auto* en = app.add_subcommand("enumerate", "List signatures, exhaustive or sampled");
  en->add_option("--tiles", tiles)->required();
  en->add_option("--subset", subset, "comma-separated tile names");
  en->add_option("--count", count, "sample this many instead of enumerating");
  en->add_option("--seed", seed);
  en->add_flag("--report", with_report);

  auto* ver = app.add_subcommand("verify", "Oracle cross-checks for signatures");
  ver->add_option("signatures", sig_list)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  std::optional<Signature> parsed;
  try {
    Catalog::instance();
  } catch (const Error& e) {
    return fail("catalog", e.what());
  }
  try {
    if (!sig_text.empty()) parsed = tokenize(sig_text);
  } catch (const Error& e) {
    return fail("parse", e.what());
  }

  try {
    if (parsed) {
      const Signature& sig = *parsed;
      if (*parse) {
        json j;
        j["signature"] = sig.str();
        j["canonical"] = canonicalize(sig).str();
        j["tiles"] = json::array();
        for (const auto& t : sig.tiles()) j["tiles"].push_back(t.str());
        auto c = symbol_counts(sig);
        j["counts"] = {{"L", c.L}, {"dL", c.dL}, {"A", c.A}, {"V", c.V},
                       {"D", c.D}, {"H", c.H}, {"B", c.B}, {"I", c.I}};
        emit(j);
      } else if (*build_cmd) {
        std::cout << graph_out(build(sig).graph, format);
      } else if (*props) {
        emit(full_report(sig, {witnesses}));
      } else if (*color) {
        LabeledGraph built = build(sig);
        auto c = coloring_dp(sig, built, k);
        if (!c) {
          emit({{"colorable", false}, {"k", k}});
          return kRejected;
        }
        emit({{"colorable", true}, {"k", k}, {"coloring", *c}});
      } else if (*ecolor) {
        LabeledGraph built = build(sig);
        emit({{"chromatic_index", chromatic_index(sig, built)},
              {"coloring", construct_edge_coloring(sig, built)}});
      } else if (*twc) {
        json j{{"treewidth", treewidth(sig)}, {"messy_tiles", messy_count(sig)}};
        if (with_decomposition) {
          LabeledGraph built = build(sig);
          auto d = build_tree_decomposition(sig, built);
          auto check = validate_decomposition(built.graph, d);
          j["decomposition"] = {{"bags", d.bags}, {"tree_edges", d.tree_edges},
                                {"width", check.width}, {"valid", check.ok}};
        }
        emit(j);
      } else if (*draw) {
        LabeledGraph built = build(sig);
        auto cert = build_drawing(sig, built);
        if (format == "dot") {
          std::cout << certificate_dot(built.graph, cert);
        } else {
          json j = json::parse(certificate_json(cert));
          j["verified"] = verify_certificate(built.graph, cert).ok;
          emit(j);
        }
      }
    } else if (*rec) {
      MultiGraph g = parse_graph(read_input(input));
      auto r = recognize_detailed(g);
      if (!r.signature) {
        emit({{"accepted", false}, {"reason", r.reason}});
        return kRejected;
      }
      emit({{"accepted", true}, {"signature", r.signature->str()}});
    } else if (*en) {
      auto pool = parse_subset(subset);
      std::vector<Signature> sigs;
      if (count > 0) {
        for (int i = 0; i < count; ++i)
          sigs.push_back(canonicalize(random_signature(tiles, seed + i, pool)));
      } else {
        sigs = enumerate_signatures(tiles, pool, true);
      }
      std::sort(sigs.begin(), sigs.end());
      json j = json::array();
      if (with_report) {
        auto reports = parallel_map(sigs, [](const Signature& s) { return full_report(s); });
        for (auto& r : reports) j.push_back(std::move(r));
      } else {
        for (const auto& s : sigs) j.push_back(s.str());
      }
      emit(j);
    } else if (*ver) {
      std::vector<Signature> sigs;
      for (const auto& t : sig_list) sigs.push_back(tokenize(t));
      auto results = parallel_map(sigs, verify_one);
      bool all = true;
      json j = json::array();
      for (size_t i = 0; i < sigs.size(); ++i) {
        json checks = json::array();
        for (const auto& c : results[i]) {
          all = all && c.ok;
          json cj{{"name", c.name}, {"ok", c.ok}};
          if (c.skipped) cj["skipped"] = true;
          if (!c.detail.empty()) cj["detail"] = c.detail;
          checks.push_back(cj);
        }
        j.push_back({{"signature", sigs[i].str()}, {"checks", checks}});
      }
      emit(j);
      return all ? kOk : kRejected;
    }
  } catch (const Error& e) {
    return fail("error", e.what());
  } catch (const json::exception& e) {
    return fail("input", e.what());
  }
  return kOk;
}
