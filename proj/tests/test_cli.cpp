#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "equiareal/cli/commands.hpp"

using namespace equiareal;
using namespace equiareal::cli;

namespace {

struct Run {
  int code;
  std::string out, err;
  Json json() const { return Json::parse(out); }
};

Run invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "equiareal");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  int code = run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

double num(const Json& v) { return std::stod(v.get<std::string>()); }

}  // namespace

TEST_CASE("triangles") {
  auto a = invoke({"triangles", "--family", "sol1", "--t", "4"});
  CHECK(a.code == 0);
  auto j = a.json();
  CHECK(j["sides_x"] == Json::array({"63232^2", "71825^2", "76032^2"}));
  CHECK(j["sides_y"] == Json::array({"104593^2", "61776^2", "88400^2"}));
  CHECK(j["sixteen_area_squared"] == "1617508083022593897795364438996422549375");
  CHECK(j["rational_area"] == false);

  auto b = invoke({"triangles", "--family", "sol2", "--t", "3/2"}).json();
  CHECK(b["sides_x"] == Json::array({"732^2", "804^2", "342^2"}));
  CHECK(b["sides_y"] == Json::array({"293^2", "513^2", "536^2"}));

  auto c = invoke({"triangles", "--family", "sol2", "--t", "2"});
  CHECK(c.code == 2);
  CHECK(c.err.find("not a triangle") != std::string::npos);
  CHECK(invoke({"triangles", "--family", "sol1", "--t", "0"}).code == 2);
  CHECK(invoke({"triangles", "--family", "et", "--t", "2"}).code == 2);
}

TEST_CASE("verify") {
  auto all = invoke({"verify", "all"});
  CHECK(all.code == 0);
  auto j = all.json();
  CHECK(j["verdict"] == "pass");
  CHECK(j["identities"].size() >= 30);
  CHECK(j["failed"] == 0);
  auto octic = invoke({"verify", "octic"}).json();
  bool has_reduction = false;
  for (const auto& id : octic["identities"]) {
    if (id["identity"] == "six-variable reduction identity") has_reduction = id["pass"].get<bool>();
  }
  CHECK(has_reduction);
  auto heights = invoke({"verify", "heights"}).json();
  std::string names;
  for (const auto& id : heights["identities"]) names += id["identity"].get<std::string>() + ";";
  CHECK(names.find("determinant 4") != std::string::npos);
  CHECK(names.find("unimodular") != std::string::npos);
  CHECK(invoke({"verify", "nothing"}).code == 2);
}

TEST_CASE("curve and regulator") {
  auto c = invoke({"curve", "--family", "et", "--t", "2"}).json();
  CHECK(c["a4"] == "2624072905728");
  CHECK(c["torsion"] == "Z/2Z");
  CHECK(c["points"]["P1"] == Json::array({"123121216", "1366271251712"}));
  CHECK(c["scaling_m"] == "(2)/(t^2)");

  auto r = invoke({"regulator", "--family", "sol1", "--t", "4"});
  CHECK(r.code == 0);
  auto rj = r.json();
  CHECK(std::abs(num(rj["regulator"]["value"]) / 122787391.171313 - 1) < 1e-6);
  CHECK(rj["independent"] == true);

  auto half = invoke({"regulator", "--family", "et", "--t", "2", "--normalization", "halved"}).json();
  auto full = invoke({"regulator", "--family", "et", "--t", "2"}).json();
  CHECK(std::abs(num(half["regulator"]["value"]) * 32 / num(full["regulator"]["value"]) - 1) < 1e-12);
  CHECK(std::abs(num(full["regulator"]["value"]) / 123017.788734562 - 1) < 1e-6);
}

TEST_CASE("generators and gtcheck") {
  auto g = invoke({"generators", "--t", "2"});
  CHECK(g.code == 0);
  auto j = g.json();
  CHECK(j["relation_det"] == "4");
  CHECK(j["relation_unimodular"] == false);
  CHECK((j["starred_det"] == "1" || j["starred_det"] == "-1"));
  CHECK(j["G1_sign"] == "negated");
  CHECK(j["G2_sign"] == "exact");
  for (const auto& r : j["relations"]) CHECK(r["holds"] == true);
  CHECK(std::abs(std::stod(j["regulator_ratio"].get<std::string>()) - 16) < 16e-4);
  CHECK(invoke({"generators", "--t", "3"}).code == 0);

  auto t2 = invoke({"gtcheck", "--t", "2"});
  CHECK(t2.code == 0);
  CHECK(t2.json()["divisors"].size() == 1008);
  auto t0 = invoke({"gtcheck", "--t", "0"});
  CHECK(t0.code == 1);
  auto sq = t0.json()["square_divisors"];
  CHECK(std::find(sq.begin(), sq.end(), Json("(4*t^4 + 12*t^3 + 15*t^2 + 12*t + 4)")) != sq.end());
}

TEST_CASE("scan") {
  auto empty = invoke({"scan", "--grid", ""});
  CHECK(empty.code == 0);
  CHECK(empty.json()["rows"].empty());

  auto a = invoke({"scan", "--grid", "1,2/9,-1/4"}).json()["rows"];
  auto b = invoke({"scan", "--grid", "-1/4,1,2/9", "--jobs", "3"}).json()["rows"];
  CHECK(a[0] == b[1]);
  CHECK(a[1] == b[2]);
  CHECK(a[2] == b[0]);
  CHECK(a[0]["regulator"] == "0.0000000000");
  CHECK(a[0]["independent"] == "false");
  CHECK(a[1]["independent"] == "true");

  auto csv = invoke({"scan", "--grid", "2", "--format", "csv"}).out;
  CHECK(csv.rfind("t,family,A4,valid_triangle,regulator,independent,notes\n", 0) == 0);
  CHECK(csv.find("\n2,et,2624072905728,false,") != std::string::npos);

  CHECK(parse_grid("1/2:3/2:1/2").size() == 3);
  CHECK_THROWS_AS(parse_grid("1:2"), InputError);
  CHECK(high_rank_parameters().size() == 11);
}

TEST_CASE("json round trip is byte-identical") {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"triangles", "--family", "sol2", "--t", "3/2"},
           {"curve", "--family", "sol1", "--t", "4"},
           {"regulator", "--family", "et", "--t", "2"},
           {"gtcheck", "--t", "2"},
           {"verify", "elliptic"}}) {
    auto out = invoke(args).out;
    CHECK(Json::parse(out).dump(2) + "\n" == out);
  }
}

TEST_CASE("exit codes, precision and output options") {
  CHECK(invoke({"curve", "--t", "x/y"}).code == 2);
  CHECK(invoke({"curve", "--t", "1/0"}).code == 2);
  CHECK(invoke({"regulator", "--t", "2", "--precision", "64"}).code == 2);
  CHECK(invoke({"regulator", "--t", "2", "--format", "yaml"}).code == 2);
  CHECK(invoke({"bogus"}).code == 2);
  CHECK(invoke({}).code == 2);

  ::setenv(kPrecisionEnv, "256", 1);
  CHECK(invoke({"curve", "--t", "2"}).json()["precision_bits"] == 256);
  CHECK(invoke({"curve", "--t", "2", "--precision", "160"}).json()["precision_bits"] == 160);
  ::setenv(kPrecisionEnv, "lots", 1);
  CHECK(invoke({"curve", "--t", "2"}).code == 2);
  ::unsetenv(kPrecisionEnv);
  CHECK(invoke({"curve", "--t", "2"}).json()["precision_bits"] == 192);

  const auto path = std::filesystem::temp_directory_path() / "equiareal_cli_test.json";
  auto r = invoke({"triangles", "--family", "sol1", "--t", "4", "--out", path.string()});
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  std::ifstream f(path);
  std::stringstream ss;
  ss << f.rdbuf();
  CHECK(Json::parse(ss.str())["t"] == "4");
  std::filesystem::remove(path);

  auto text = invoke({"triangles", "--family", "sol1", "--t", "4", "--format", "text"}).out;
  CHECK(text.find("sides_x[0]: 63232^2") != std::string::npos);
}
