#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "latcut/cli.hpp"

using namespace latcut;

namespace {
struct RunResult {
  int code;
  std::string out, err;
};

RunResult run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = cli::run(std::move(args), out, err);
  return {code, out.str(), err.str()};
}
}  // namespace

TEST_CASE("classify subcommand") {
  auto r = run({"classify", "--triangle", "0/1,0/1 2/1,0/1 0/1,2/1"});
  CHECK(r.code == 0);
  CHECK(r.out == "TriangleType1\n");

  auto s = run({"classify", "--split", "1,1,1"});
  CHECK(s.out == "Split\n");

  auto j = run({"classify", "--triangle", "0/1,0/1 2/1,0/1 0/1,2/1", "--format", "json"});
  CHECK(j.out == "{\"classification\":\"TriangleType1\"}\n");
}

TEST_CASE("strength-type1 subcommand") {
  auto r = run({"strength-type1", "--f", "2/3,2/3"});
  CHECK(r.code == 0);
  CHECK(r.out == "value 1/2 region inner\n");
  auto j = run({"strength-type1", "--f", "1/4,1/4", "--format", "json"});
  CHECK(j.code == 0);
  CHECK(j.out.find("\"value\":\"3/5\"") != std::string::npos);
}

TEST_CASE("cut subcommand emits exact rows") {
  auto r = run({"cut", "--split", "1,0,0", "--f", "2/3,2/3",
                "--rays", "-2/3,-2/3;4/3,-2/3;-2/3,4/3"});
  CHECK(r.code == 0);
  CHECK(r.out == "coeffs: 1/1 4/1 1/1\n");
}

TEST_CASE("bad-example subcommand reports bound and LP value") {
  auto r = run({"bad-example", "--family", "type2", "--m", "10", "--f2", "1/2",
                "--format", "json"});
  CHECK(r.code == 0);
  Json j = Json::parse(r.out);
  CHECK(j["claimed_bound"] == "1/10");
  CHECK(parse_rational(j["lp_value"].get<std::string>()) <= Rational(1, 10));
}

TEST_CASE("facet-check subcommand") {
  auto r = run({"facet-check", "--triangle", "0/1,0/1 2/1,0/1 0/1,2/1", "--f", "2/3,2/3",
                "--rays", "-2/3,-2/3;4/3,-2/3;-2/3,4/3"});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("Facet", 0) == 0);
}

TEST_CASE("level-curves emits csv") {
  auto r = run({"level-curves", "--resolution", "3"});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("f1,f2,value,region\n", 0) == 0);
  CHECK(r.out.find("1/3,1/3,") != std::string::npos);
}

TEST_CASE("quad, type3 and pseudo-split subcommands") {
  auto q = run({"quad-bound", "--t", "2/1", "--f", "1/4,1/4"});
  CHECK(q.code == 0);
  CHECK(q.out.rfind("closed_form 1/2", 0) == 0);

  auto t = run({"type3-bound", "--t1", "1/1", "--t2", "1/2", "--t3", "2/1",
                "--f", "1/3,1/3", "--case", "I"});
  CHECK(t.code == 0);
  CHECK(t.out.find("closed_form 1/2") != std::string::npos);

  auto p = run({"pseudo-split", "--t1", "5/1", "--t2", "0/1", "--t3", "-5/1", "--f2", "1/2"});
  CHECK(p.code == 0);
  CHECK(p.out.rfind("bound 1/10", 0) == 0);
}

TEST_CASE("exit codes distinguish parse and domain errors") {
  auto bad_rational = run({"strength-type1", "--f", "0.5,0.5"});
  CHECK(bad_rational.code == 1);

  auto outside = run({"strength-type1", "--f", "5/1,5/1"});
  CHECK(outside.code == 2);
  CHECK(outside.err.find("FNotInterior") != std::string::npos);

  auto no_body = run({"classify"});
  CHECK(no_body.code == 1);
}

TEST_CASE("byte-identical output across runs") {
  std::vector<std::string> args{"bad-example", "--family", "type3", "--m", "2", "--f2", "2/5",
                                "--format", "json"};
  auto a = run(args);
  auto b = run(args);
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
}

TEST_CASE("config file supplies defaults") {
  std::string path = "latcut_test_config.json";
  {
    std::ofstream cfg(path);
    cfg << R"({"f": "2/3,2/3"})";
  }
  auto r = run({"strength-type1", "--config", path});
  CHECK(r.code == 0);
  CHECK(r.out == "value 1/2 region inner\n");
  // explicit flags win over the config value
  auto s = run({"strength-type1", "--config", path, "--f", "1/4,1/4"});
  CHECK(s.out == "value 3/5 region corner\n");
  std::remove(path.c_str());
}

TEST_CASE("output path and directory override") {
  std::string path = "latcut_test_out.txt";
  auto r = run({"classify", "--split", "1,0,0", "--output", path});
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  std::ifstream in(path);
  std::string line;
  std::getline(in, line);
  CHECK(line == "Split");
  in.close();
  std::remove(path.c_str());
}
