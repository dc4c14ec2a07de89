#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "grascat/cli.hpp"
#include "grascat/cluster.hpp"
#include "grascat/gvec.hpp"
#include "grascat/io.hpp"

using namespace grascat;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "grascat");
  std::ostringstream out;
  std::ostringstream err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string golden(const std::string& name) {
  std::ifstream in(std::string(GRASCAT_DATA_DIR) + "/golden/" + name + ".txt");
  REQUIRE(in.good());
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace

TEST_CASE("reference tables match the golden files") {
  for (const std::string which : {"hom39", "hom48", "kgrid", "gvectors"}) {
    Run r = run({"paper-tables", "--which", which, "--format", "table"});
    CHECK(r.code == 0);
    CHECK(r.out == golden(which));
  }
}

TEST_CASE("reference tables in JSON agree with the library") {
  Run r = run({"paper-tables", "--which", "gvectors"});
  REQUIRE(r.code == 0);
  Json j = Json::parse(r.out);
  CHECK(j.is_object());
  CHECK(r.out.find("gr39_T1") != std::string::npos);
}

TEST_CASE("g-vector of the 3x3 tableau") {
  Run r = run({"gvec", "--k", "3", "--n", "9", "--rows", "1 2 3/4 5 6/7 8 9", "--format", "table"});
  CHECK(r.code == 0);
  CHECK(r.out == "(0, -1, -1, 0, 1, -1, 0, 1, 1, 0, 0, 1, 1, 0, 0, 0, 0, 1, 0)\n");

  Run j = run({"gvec", "--k", "3", "--n", "9", "--rows", "1 2 3/4 5 6/7 8 9"});
  REQUIRE(j.code == 0);
  Json parsed = Json::parse(j.out);
  GVector g = gvector_from_json(parsed);
  CHECK(g.coords == std::vector<long long>{0, -1, -1, 0, 1, -1, 0, 1, 1, 0, 0, 1, 1, 0, 0, 0, 0, 1, 0});
  CHECK(parsed["seed"] == "gr3_9");
}

TEST_CASE("trivial tableaux reduce to the empty tableau") {
  Run r = run({"tableau", "reduce", "--k", "3", "--n", "6", "--rows", "1 4/2 5/3 6"});
  REQUIRE(r.code == 0);
  Json j = Json::parse(r.out);
  CHECK(tableau_from_json(j["reduced"]).is_empty());
  CHECK(j["trivial_columns"] == 2);
  CHECK(tableau_from_json(j["input"]) == make_tableau(3, 6, {{1, 4}, {2, 5}, {3, 6}}));
}

TEST_CASE("exit codes") {
  Run none = run({});
  CHECK(none.code == 2);
  CHECK(none.err.rfind("usage error:", 0) == 0);

  Run bad_option = run({"gvec", "--k", "3", "--n", "9", "--rows", "1/2/3", "--format", "xml"});
  CHECK(bad_option.code == 2);
  CHECK(bad_option.err.rfind("usage error:", 0) == 0);

  Run help = run({"--help"});
  CHECK(help.code == 0);
  CHECK(help.out.find("paper-tables") != std::string::npos);

  Run bad_tableau = run({"tableau", "reduce", "--k", "3", "--n", "6", "--rows", "3/2/1"});
  CHECK(bad_tableau.code == 1);
  Json err = Json::parse(bad_tableau.out);
  CHECK(err["error"]["code"] == "InvalidTableau");
  CHECK(err["error"]["message"].is_string());
}

TEST_CASE("seed output round-trips through JSON") {
  Run r = run({"seed", "show", "--k", "3", "--n", "9"});
  REQUIRE(r.code == 0);
  Seed s = seed_from_json(Json::parse(r.out));
  Seed expect = grassmannian_initial_seed(3, 9);
  CHECK(s.quiver == expect.quiver);
  CHECK(s.labels == expect.labels);
}

TEST_CASE("seed mutation along a path") {
  Run r = run({"seed", "mutate", "--k", "3", "--n", "9", "--path", "0,4,6,7,8,0,3,9"});
  REQUIRE(r.code == 0);
  Seed s = seed_from_json(Json::parse(r.out));
  CHECK(reduce(s.labels[9]) == make_tableau(3, 9, {{1, 1, 3, 3}, {2, 2, 6, 7}, {4, 5, 8, 9}}));
}

TEST_CASE("E-invariant of the 3x3 tableau") {
  Run r = run({"einv", "--k", "3", "--n", "9", "--rows", "1 2 3/4 5 6/7 8 9", "--samples", "20", "--rng-seed", "5"});
  REQUIRE(r.code == 0);
  Json j = Json::parse(r.out);
  CHECK(j["e"]["value"] == 1);
  CHECK(j["real"]["value"] == false);
}

TEST_CASE("braid relations from the command line") {
  Run r = run({"braid", "check", "--k", "3", "--n", "6", "--trials", "3", "--seed", "1"});
  REQUIRE(r.code == 0);
  Json j = Json::parse(r.out);
  for (const auto& [name, counts] : j["relations"].items()) CHECK(counts["exact"] == 3);
  CHECK(j["generic_preserved"] == 3);
}
