#include <cstdio>
#include <fstream>
#include <sstream>

#include "butson/catalog.hpp"
#include "butson/cli.hpp"
#include "butson/textio.hpp"
#include "doctest.h"
#include "json.hpp"

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args, const std::string& input = "") {
  args.insert(args.begin(), "butson");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::istringstream in(input);
  std::ostringstream out;
  std::ostringstream err;
  const int code = butson::run_cli(static_cast<int>(argv.size()), argv.data(), in, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("catalog list and show") {
  const auto list = run({"catalog", "list"});
  CHECK(list.code == butson::kExitOk);
  CHECK(list.out.find("A40_printed") != std::string::npos);

  const auto show = run({"catalog", "show", "F6", "--json"});
  REQUIRE(show.code == butson::kExitOk);
  const auto doc = nlohmann::json::parse(show.out);
  CHECK(doc["q"] == 6);
  CHECK(doc["n"] == 6);
  CHECK(doc["matrix"][2][3] == 0);
  CHECK(doc["matrix"][1][5] == 5);

  CHECK(run({"catalog", "show", "nope"}).code == butson::kExitUsage);
}

TEST_CASE("verify exit codes") {
  CHECK(run({"verify", "A1"}).code == butson::kExitOk);
  CHECK(run({"verify", "catalog:A2_printed"}).code == butson::kExitFalse);
  const auto ones = "BH 3 2\n0 0\n0 0\n";
  const auto r = run({"verify", "-"}, ones);
  CHECK(r.code == butson::kExitFalse);
  CHECK(r.out == "hadamard: false\n");
  CHECK(run({"verify", "-"}, butson::format_matrix(butson::get("M6").embed())).code == butson::kExitOk);
  CHECK(run({"verify", "-"}, "garbage").code == butson::kExitUsage);
  CHECK(run({"verify"}).code == butson::kExitUsage);
  CHECK(run({"frobnicate"}).code == butson::kExitUsage);
}

TEST_CASE("matrix files are read from disk") {
  const std::string path = "cli_test_matrix.txt";
  {
    std::ofstream f(path);
    f << butson::format_matrix(butson::get("A3"));
  }
  CHECK(run({"verify", path}).code == butson::kExitOk);
  std::remove(path.c_str());
}

TEST_CASE("charpoly JSON carries exact coefficients") {
  const auto r = run({"charpoly", "M6", "--json"});
  REQUIRE(r.code == butson::kExitOk);
  const auto doc = nlohmann::json::parse(r.out);
  const auto& e = doc["charpoly"]["e"];
  REQUIRE(e.size() == 7);
  CHECK(e[0] == nlohmann::json::array({-216, 0}));
  CHECK(e[2] == nlohmann::json::array({108, 0}));
  CHECK(e[6] == nlohmann::json::array({1, 0}));
}

TEST_CASE("spectrum JSON") {
  const auto r = run({"spectrum", "M6", "--json"});
  REQUIRE(r.code == butson::kExitOk);
  const auto doc = nlohmann::json::parse(r.out);
  REQUIRE(doc["spectrum"].size() == 2);
  CHECK(doc["spectrum"][0]["re"] == -1.0);
  CHECK(doc["spectrum"][0]["mult"] == 3);
  CHECK(doc["spectrum"][1]["re"] == 1.0);
}

TEST_CASE("dephase output reparses to the standard form") {
  const auto r = run({"dephase", "A10"});
  REQUIRE(r.code == butson::kExitOk);
  const auto parsed = butson::parse_matrix(r.out);
  CHECK(std::get<butson::ButsonMatrix>(parsed) == butson::get("A01"));
}

TEST_CASE("defect") {
  const auto r = run({"defect", "F6", "--json"});
  REQUIRE(r.code == butson::kExitOk);
  CHECK(nlohmann::json::parse(r.out)["defect"] == 4);
  CHECK(run({"defect", "A1"}).out == "defect: 0\n");
  CHECK(run({"defect", "A40_printed"}).code == butson::kExitFalse);
}

TEST_CASE("equivalence") {
  const auto r = run({"equiv", "standard", "M6", "M61", "--json"});
  REQUIRE(r.code == butson::kExitOk);
  const auto doc = nlohmann::json::parse(r.out);
  CHECK(doc["equiv"]["equivalent"] == true);
  CHECK(doc["equiv"]["witness"]["q"] == 4);
  CHECK(doc["equiv"]["witness"]["row_perm"].size() == 6);

  CHECK(run({"equiv", "unitary", "M6", "M61"}).code == butson::kExitFalse);
  CHECK(run({"equiv", "standard", "A1", "F6"}).code == butson::kExitFalse);
  CHECK(run({"equiv", "sideways", "A1", "A2"}).code == butson::kExitUsage);
}

TEST_CASE("report") {
  const auto md = run({"report"});
  CHECK(md.code == butson::kExitOk);
  CHECK(md.out.find("C11") != std::string::npos);
  const auto js = run({"report", "--json"});
  CHECK(js.code == butson::kExitOk);
  CHECK(nlohmann::json::parse(js.out)["refuted"] == false);
}

TEST_CASE("complex input is rejected where exact arithmetic is needed") {
  const auto c = butson::format_matrix(butson::get("M6").embed());
  CHECK(run({"charpoly", "-"}, c).code == butson::kExitUsage);
}
