#include <doctest.h>

#include <sys/wait.h>

#include <cstdio>
#include <fstream>
#include <json.hpp>
#include <string>

#include "crit2/builder.hpp"

using namespace crit2;

namespace {

struct Run {
  int code = -1;
  std::string out;
};

Run run(const std::string& args) {
  std::string cmd = std::string(CRIT2_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* p = popen(cmd.c_str(), "r");
  Run r;
  char buf[4096];
  size_t n;
  while ((n = fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, n);
  int status = pclose(p);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

}  // namespace

TEST_CASE("props on the worked example") {
  Run r = run("props VIAdLAALAALDBLHdL");
  REQUIRE(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["schema"] == 1);
  CHECK(j["V"] == 26);
  CHECK(j["E"] == 48);
  CHECK(j["max_degree"] == 6);
  CHECK(j["clique"] == 3);
  CHECK(j["edge_cover"] == 13);
  CHECK(j["scr"] == 2);
  CHECK(j["drawing"]["crossings"].size() == 2);
  CHECK(j["drawing"]["verified"] == true);
  CHECK(j["chromatic_number"] == 3);
  CHECK(j["chromatic_index"] == 6);
  CHECK(j["treewidth"] == 4);
  CHECK(j["messy_tiles"] == 2);
  CHECK(j["bipartite"] == false);
}

TEST_CASE("parse errors are structured") {
  Run r = run("parse AALQ");
  CHECK(r.code == 1);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["error"]["kind"] == "parse");
}

TEST_CASE("usage errors exit 2") {
  CHECK(run("").code == 2);
  CHECK(run("frobnicate").code == 2);
  CHECK(run("color").code == 2);
}

TEST_CASE("color exit codes") {
  CHECK(run("color AIVLAIVLAIVL -k 3").code == 1);
  Run r = run("color AIVLAIVLAIVL -k 4");
  CHECK(r.code == 0);
  CHECK(nlohmann::json::parse(r.out)["coloring"].size() == 12);
}

TEST_CASE("build then recognize") {
  std::string path = "crit2_cli_test.txt";
  Run b = run("build VIAdLAALAALDBLHdL --format edgelist > " + path);
  CHECK(b.code == 0);
  Run r = run("recognize " + path);
  CHECK(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["accepted"] == true);
  CHECK(j["signature"] == "AALAALDBLHdLVIAdL");
  std::ofstream(path) << "0 1\n1 2\n2 0\n";
  CHECK(run("recognize " + path).code == 1);
  std::remove(path.c_str());
}

TEST_CASE("treewidth with decomposition") {
  Run r = run("treewidth HdLHdLHdLHdLHdL --decomposition");
  CHECK(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["treewidth"] == 5);
  CHECK(j["decomposition"]["valid"] == true);
  CHECK(j["decomposition"]["width"] == 5);
}

TEST_CASE("draw and edge-color") {
  CHECK(nlohmann::json::parse(run("draw AIVLAIVLAIVL").out)["verified"] == true);
  CHECK(run("draw AIVLAIVLAIVL --format dot").out.rfind("graph", 0) == 0);
  CHECK(nlohmann::json::parse(run("edge-color VVLVVLVVLVVLVVL").out)["chromatic_index"] == 4);
}

TEST_CASE("enumerate is deterministic") {
  Run a = run("enumerate --tiles 3 --subset DDL,DDdL,HL,HdL");
  auto j = nlohmann::json::parse(a.out);
  CHECK(j.size() == 24);
  CHECK(std::is_sorted(j.begin(), j.end()));
  Run s1 = run("enumerate --tiles 5 --count 4 --seed 9 --report");
  Run s2 = run("enumerate --tiles 5 --count 4 --seed 9 --report");
  CHECK(s1.out == s2.out);
  CHECK(nlohmann::json::parse(s1.out).size() == 4);
}

TEST_CASE("verify runs the oracle cross-checks") {
  Run r = run("verify VIAdLAALAALDBLHdL DDLDDLDDL");
  CHECK(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  REQUIRE(j.size() == 2);
  for (const auto& item : j)
    for (const auto& c : item["checks"]) CHECK_MESSAGE(c["ok"] == true, c.dump());
}

TEST_CASE("catalog override") {
  Run r = run("parse DDLDDLDDL");
  CHECK(r.code == 0);
  std::string cmd = "CRIT2_CATALOG=/nonexistent " + std::string(CRIT2_CLI_PATH) +
                    " parse DDLDDLDDL >/dev/null 2>&1";
  int status = std::system(cmd.c_str());
  CHECK(WEXITSTATUS(status) == 1);
}
