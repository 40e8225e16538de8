#include <json.hpp>
#include <sstream>

#include "doctest.h"
#include "ocpoly/cli.hpp"
#include "ocpoly/rational.hpp"

using namespace ocpoly;
using Json = nlohmann::ordered_json;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = run_command(args, out, err);
  return {code, out.str(), err.str()};
}

std::string data(const std::string& name) { return std::string(OCPOLY_DATA_DIR) + "/" + name; }

Json run_json(std::vector<std::string> args) {
  args.push_back("--format");
  args.push_back("json");
  auto r = run(args);
  REQUIRE(r.code == 0);
  auto j = Json::parse(r.out);
  CHECK(j.dump(2) + "\n" == r.out);
  return j;
}

}  // namespace

TEST_CASE("volume of the larger fork partition") {
  auto r = run({"volume", "--input", data("fork-large.poset")});
  CHECK(r.code == 0);
  CHECK(r.out.find("5/24") != std::string::npos);
  auto j = run_json({"volume", "--input", data("fork-large.poset")});
  CHECK(j["volume"] == "5/24");
  CHECK(j["normalized_volume"] == "5/1");
}

TEST_CASE("integral reports the half-integral witness") {
  auto j = run_json({"integral", "--input", data("four-cycle-half.poset")});
  CHECK(j["integral"] == false);
  CHECK(j["witness"] == Json::array({"1/2", "1/2", "1/2", "1/2"}));
  auto k = run_json({"integral", "--input", data("four-cycle-integral.poset")});
  CHECK(k["integral"] == true);
  CHECK(k["witness"].is_null());
}

TEST_CASE("invariants of the new-type polytope") {
  auto j = run_json({"invariants", "--input", data("new-type-6.poset")});
  CHECK(j["d"] == 6);
  CHECK(j["vertex_count"] == 10);
  CHECK(j["facets"] == 13);
  CHECK(j["integral"] == true);
  CHECK(j["lattice_counts"]["1"] == 10);
  CHECK(j["vertices"].size() == 10);
  auto two = run_json({"invariants", "--input", data("new-type-6.poset"), "--dilations", "2"});
  CHECK(two["lattice_counts"].size() == 2);
}

TEST_CASE("rationals are p/q strings and vertices are sorted") {
  auto j = run_json({"vertices", "--input", data("four-cycle-half.poset")});
  std::vector<Point> seen;
  for (const auto& v : j["vertices"]) {
    Point row;
    for (const auto& x : v) {
      auto s = x.get<std::string>();
      CHECK(s.find('/') != std::string::npos);
      CHECK(to_string(parse_rational(s)) == s);
      row.push_back(parse_rational(s));
    }
    seen.push_back(row);
  }
  CHECK(std::is_sorted(seen.begin(), seen.end()));
}

TEST_CASE("hrep lists the mixed chain system") {
  auto j = run_json({"hrep", "--input", data("seven-chain.poset")});
  CHECK(j["halfspaces_count"] == 19);
  std::vector<std::string> texts;
  for (const auto& h : j["halfspaces"]) texts.push_back(h["text"]);
  for (const char* t : {"-x1 + x2 <= 0", "-x4 + x5 <= 0", "-x5 + x6 <= 0", "x2 + x3 + x4 <= 1", "x6 + x7 <= 1"})
    CHECK(std::find(texts.begin(), texts.end(), t) != texts.end());
}

TEST_CASE("facets and equiv") {
  auto f = run_json({"facets", "--input", data("new-type-6.poset")});
  CHECK(f["facets"] == 13);
  auto e = run_json({"equiv", data("x.poset"), data("x-mixed.poset")});
  CHECK(e["verdict"] == "equivalent");
  CHECK(e["map"]["matrix"].size() == 5);
  auto n = run_json({"equiv", data("x.poset"), data("fork-order.poset")});
  CHECK(n["verdict"] == "distinct");
  CHECK(n["reason"] == "dimension");
  CHECK(n["map"].is_null());
}

TEST_CASE("search-partitions and descent-max") {
  auto s = run_json({"search-partitions", "--input", data("chain-6.poset")});
  CHECK(s["partition_count"] == 32);
  CHECK(s["max_volume"] == "13/360");
  auto d = run_json({"descent-max", "5"});
  CHECK(d["max_beta"] == 11);
  CHECK(d["predicted_attained"] == true);
}

TEST_CASE("verify prints one line per assertion") {
  auto r = run({"verify", "fibonacci-family"});
  CHECK(r.code == 0);
  CHECK(r.out.find("FAIL") == std::string::npos);
  auto j = run_json({"verify", "volume-example"});
  CHECK(j["suite"] == "volume-example");
  CHECK(j["passed"] == true);
}

TEST_CASE("exit codes") {
  CHECK(run({}).code == exit_usage_error);
  CHECK(run({"frobnicate"}).code == exit_usage_error);
  CHECK(run({"volume"}).code == exit_usage_error);
  CHECK(run({"volume", "--input", data("x.poset"), "--format", "xml"}).code == exit_usage_error);
  CHECK(run({"verify", "no-such-suite"}).code == exit_usage_error);
  CHECK(run({"descent-max"}).code == exit_usage_error);
  CHECK(run({"--help"}).code == exit_ok);
  auto missing = run({"volume", "--input", data("missing.poset")});
  CHECK(missing.code == exit_domain_error);
  CHECK_FALSE(missing.err.empty());
  CHECK(run({"descent-max", "11"}).code == exit_domain_error);
}

TEST_CASE("output is byte-identical across runs") {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"invariants", "--input", data("new-type-6.poset"), "--format", "json"},
           {"equiv", data("x.poset"), data("x-mixed.poset")},
           {"hrep", "--input", data("seven-chain.poset")}}) {
    auto a = run(args), b = run(args);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
  }
}
