#include <sstream>

#include "cli.hpp"
#include "doctest.h"
#include "json.hpp"

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args, const std::string& stdin_text = "") {
  args.insert(args.begin(), "srginv");
  std::istringstream in(stdin_text);
  std::ostringstream out, err;
  const int code = srginv::cli::run(args, in, out, err);
  return {code, out.str(), err.str()};
}

const std::string kData = SRGINV_TEST_DATA_DIR;

}  // namespace

TEST_CASE("cli check-srg") {
  auto pet = run({"check-srg", "--out", "table", kData + "/petersen.g6"});
  CHECK(pet.code == 0);
  CHECK(pet.out.find("10-3-0-1") != std::string::npos);

  auto k3 = run({"check-srg", "--out", "table", kData + "/k3.rows"});
  CHECK(k3.code == 0);
  CHECK(k3.out.find("3-2-1-?") != std::string::npos);

  auto bad = run({"check-srg", kData + "/path3.g6"});
  CHECK(bad.code == 1);
  const auto j = nlohmann::json::parse(bad.out);
  CHECK(j[0]["srg"] == false);
  CHECK(j[0]["reason"].get<std::string>().find("not regular") != std::string::npos);

  auto from_stdin = run({"check-srg", "--out", "table"}, "Bw\n");
  CHECK(from_stdin.code == 0);
  CHECK(from_stdin.out.find("3-2-1-?") != std::string::npos);
}

TEST_CASE("cli vertex-inv") {
  auto rook = run({"vertex-inv", "--powers", "3", kData + "/rook4.g6"});
  REQUIRE(rook.code == 0);
  const auto j = nlohmann::json::parse(rook.out);
  CHECK(j["graphs"][0]["graph_signature"] == nlohmann::json(std::vector<std::vector<int>>(16, {12})));
  CHECK(j["graphs"][0]["partition"].size() == 1);

  auto pet = run({"vertex-inv", "--mode", "sortdiag", kData + "/petersen.g6"});
  const auto p = nlohmann::json::parse(pet.out);
  CHECK(p["graphs"][0]["signatures"][0] == nlohmann::json({0, 0, 0}));
  CHECK(p["graphs"][0]["partition"].size() == 1);

  auto two = run({"vertex-inv", kData + "/rook4.g6", kData + "/shrikhande.g6"});
  CHECK(nlohmann::json::parse(two.out)["distinct_signatures"] == 2);
}

TEST_CASE("cli overflow and modulus") {
  auto overflow = run({"vertex-inv", "--powers", "3,70", kData + "/rook4.g6"});
  CHECK(overflow.code == 1);
  CHECK(overflow.err.find("overflow") != std::string::npos);
  auto mod = run({"vertex-inv", "--modulus", "--powers", "3,70", kData + "/rook4.g6"});
  CHECK(mod.code == 0);
  CHECK(nlohmann::json::parse(mod.out)["mod_reduced"] == true);
}

TEST_CASE("cli edge-inv") {
  auto k3 = run({"edge-inv", "--powers", "2", kData + "/k3.rows"});
  REQUIRE(k3.code == 0);
  const auto j = nlohmann::json::parse(k3.out);
  CHECK(j["graphs"][0]["powers"][0]["trace"] == nlohmann::json({18}));

  auto pet = run({"edge-inv", "--mode", "sortdiag", "--powers", "2", kData + "/petersen.g6"});
  const auto p = nlohmann::json::parse(pet.out);
  const auto& edges = p["graphs"][0]["powers"][0]["edges"];
  CHECK(edges.size() == 15);
  CHECK(edges[0][2] == 5);
  CHECK(p["graphs"][0]["powers"][0]["blocks"].size() == 1);

  CHECK(run({"edge-inv", "--powers", "1", kData + "/k3.rows"}).code == 1);
}

TEST_CASE("cli compare") {
  auto diff = run({"compare", "--out", "table", kData + "/rook4.g6", kData + "/shrikhande.g6"});
  CHECK(diff.code == 0);
  CHECK(diff.out.find("distinguished: stage 1") != std::string::npos);

  auto same = run({"compare", "--out", "table", kData + "/rook4.g6", kData + "/rook4.g6"});
  CHECK(same.code == 2);
  CHECK(same.out.find("indistinguishable by ladder") != std::string::npos);

  auto json = run({"compare", kData + "/rook4.g6", kData + "/shrikhande.g6"});
  CHECK(nlohmann::json::parse(json.out)["stage"] == 1);
}

TEST_CASE("cli report and usage errors") {
  auto rep = run({"report", "--jobs", "2", kData + "/rook4.g6"});
  CHECK(rep.code == 0);
  CHECK(nlohmann::json::parse(rep.out)["totals"]["graphs"] == 1);

  CHECK(run({}).code == 1);
  CHECK(run({"nonsense"}).code == 1);
  CHECK(run({"vertex-inv", "--mode", "bogus"}).code == 1);
  CHECK(run({"vertex-inv", "--powers", "4,3", kData + "/rook4.g6"}).code == 1);
  CHECK(run({"check-srg", kData + "/missing.g6"}).code == 1);
  CHECK(run({"--help"}).code == 0);
}
