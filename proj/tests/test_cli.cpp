#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "supmod/cli.hpp"

using namespace supmod;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> csv_values(const std::string& csv) {
  std::vector<std::string> v;
  std::istringstream in(csv);
  std::string line;
  std::getline(in, line);
  while (std::getline(in, line)) v.push_back(line.substr(line.find(',') + 1));
  return v;
}

}  // namespace

TEST_CASE("compute a lambda curve") {
  const auto r = run({"compute", "--space", "l2:2", "--modulus", "lambda-plus", "--grid",
                      "0:1:0.25"});
  REQUIRE(r.code == 0);
  const auto v = csv_values(r.out);
  REQUIRE(v.size() == 5);
  CHECK(std::stod(v[2]) == doctest::Approx(1 - std::sqrt(0.75)).epsilon(1e-6));
  CHECK(r.out.find("0.5,") != std::string::npos);
}

TEST_CASE("compute delta on the square is identically zero") {
  const auto r = run({"compute", "--space", "linf:2", "--modulus", "delta", "--grid", "0:2:0.25"});
  REQUIRE(r.code == 0);
  for (const auto& v : csv_values(r.out)) CHECK(std::stod(v) == 0.0);
}

TEST_CASE("polygon file and linf give the same curve") {
  const std::string poly = std::string("poly2d:@") + SUPMOD_TEST_DATA + "/square.json";
  for (const char* kind : {"delta", "rho", "rho-banas", "lambda-minus", "lambda-plus"}) {
    INFO(kind);
    const auto a = run({"compute", "--space", poly, "--modulus", kind, "--grid", "0:1:0.1"});
    const auto b = run({"compute", "--space", "linf:2", "--modulus", kind, "--grid", "0:1:0.1"});
    REQUIRE(a.code == 0);
    REQUIRE(b.code == 0);
    CHECK(a.out == b.out);
  }
}

TEST_CASE("json and svg formats") {
  const auto j = run({"compute", "--space", "l1:2", "--modulus", "rho", "--grid", "0:1:0.5",
                      "--format", "json"});
  REQUIRE(j.code == 0);
  const auto doc = nlohmann::json::parse(j.out);
  CHECK(doc.at("kind") == "rho");
  CHECK(doc.at("points").size() == 3);
  const auto s = run({"plot", "--space", "l1:2", "--modulus", "rho", "--grid", "0:1:0.5"});
  REQUIRE(s.code == 0);
  CHECK(s.out.find("<polyline") != std::string::npos);
}

TEST_CASE("usage errors exit with 2") {
  CHECK(run({"verify", "--space", "l2:bad"}).code == 2);
  CHECK(run({"compute", "--space", "l2:2", "--modulus", "delta", "--grid", "1:0:0.1"}).code == 2);
  CHECK(run({"compute", "--space", "l2:2", "--modulus", "delta", "--grid", "0:1"}).code == 2);
  CHECK(run({"compute", "--space", "l2:2", "--modulus", "delta", "--grid", "0:1:-1"}).code == 2);
  CHECK(run({"compute", "--space", "l2:2", "--modulus", "gamma", "--grid", "0:1:0.5"}).code == 2);
  CHECK(run({"compute", "--space", "l2:2", "--modulus", "rho", "--grid", "0:2:0.5"}).code == 2);
  CHECK(run({"compute", "--space", "l2:2"}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({}).code == 2);
  CHECK(run({"explore", "--p", "2,x"}).code == 2);
  CHECK(run({"xi", "--space", "l2:2", "--angular-samples", "4"}).code == 2);
  const auto bad = run({"xi", "--space", "cube:3"});
  CHECK(bad.code == 2);
  CHECK(bad.err.find("error:") != std::string::npos);
}

TEST_CASE("help exits with 0") {
  CHECK(run({"--help"}).code == 0);
  CHECK(run({"verify", "--help"}).code == 0);
}

TEST_CASE("xi reports value and witnesses") {
  const auto r = run({"xi", "--space", "linf:2"});
  REQUIRE(r.code == 0);
  const auto doc = nlohmann::json::parse(r.out);
  CHECK(doc.at("value").get<double>() == doctest::Approx(2.0).epsilon(1e-9));
  CHECK(doc.at("witness_x").size() == 2);
}

TEST_CASE("explore rows") {
  const auto r = run({"explore", "--p", "1.5,2,3,4"});
  REQUIRE(r.code == 0);
  const auto doc = nlohmann::json::parse(r.out);
  REQUIRE(doc.at("rows").size() == 4);
  CHECK(std::abs(doc["rows"][1]["gap"].get<double>()) < 1e-6);
  const auto c = run({"explore", "--p", "2", "--format", "csv"});
  REQUIRE(c.code == 0);
  CHECK(c.out.rfind("p,xi,lambda_minus_1,s,upper_bound,gap\n", 0) == 0);
}

TEST_CASE("verify on the Euclidean plane passes") {
  const auto r = run({"verify", "--space", "l2:2", "--grid", "0.1:0.9:0.2", "--cases", "100"});
  CHECK(r.code == 0);
  const auto doc = nlohmann::json::parse(r.out);
  CHECK(doc.at("summary").at("fail") == 0);
  CHECK(doc.at("summary").at("pass").get<int>() > 0);
  const auto d = run({"verify", "--space", "l2:2", "--grid", "0.2:0.6:0.2", "--cases", "0",
                      "--double-resolution"});
  CHECK(d.code == 0);
  CHECK(nlohmann::json::parse(d.out).at("resolution_check").empty());
}

TEST_CASE("output file and repeatability") {
  const auto path = (std::filesystem::temp_directory_path() / "supmod_cli_out.csv").string();
  const std::vector<std::string> args{"compute", "--space", "lp:3:2", "--modulus", "lambda-minus",
                                      "--grid", "0:1:0.2"};
  const auto a = run(args);
  auto with_out = args;
  with_out.insert(with_out.end(), {"--out", path});
  const auto b = run(with_out);
  REQUIRE(b.code == 0);
  CHECK(b.out.empty());
  std::ifstream f(path, std::ios::binary);
  const std::string written((std::istreambuf_iterator<char>(f)), std::istreambuf_iterator<char>());
  CHECK(written == a.out);
  CHECK(run(args).out == a.out);
  std::remove(path.c_str());

  auto unwritable = args;
  unwritable.insert(unwritable.end(), {"--out", "/nonexistent/dir/out.csv"});
  CHECK(run(unwritable).code == 2);
}
