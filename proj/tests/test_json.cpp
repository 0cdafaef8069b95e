#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "latcut/json_io.hpp"
#include "latcut/strength/bounds.hpp"

using namespace latcut;

namespace {
Point2 pt(const Rational& a, const Rational& b) { return {a, b}; }

std::mt19937_64 rng(41);
Rational rnd_rat() {
  int q = std::uniform_int_distribution<int>(1, 12)(rng);
  int p = std::uniform_int_distribution<int>(-30, 30)(rng);
  return Rational(p, q);
}
}  // namespace

TEST_CASE("bodies round-trip bit-exactly through JSON text") {
  std::vector<LatticeFreeBody> bodies;
  bodies.push_back(Split(3, -2, 117));
  bodies.push_back(make_type3_triangle(Rational(3, 2), Rational(2, 5), Rational(5, 2)));
  bodies.push_back(make_parameter_quadrilateral(Rational(7, 3)));
  bodies.push_back(PseudoSplit(pt(Rational(0), Rational(1)), pt(Rational(0), Rational(0)),
                               Ray2{Rational(2), Rational(-5, 3)}));
  for (int i = 0; i < 40; ++i) {
    Rational a = rnd_rat(), b = rnd_rat(), c = rnd_rat(), d = rnd_rat();
    try {
      bodies.push_back(Triangle(pt(a, b), pt(c, d), pt(rnd_rat(), rnd_rat())));
    } catch (const InvalidBody&) {
    }
  }
  for (const auto& body : bodies) {
    std::string text = to_json(body).dump();
    LatticeFreeBody back = body_from_json(Json::parse(text));
    CHECK(body == back);
    CHECK(to_json(back).dump() == text);
  }
}

TEST_CASE("split serialization uses plain integer fields") {
  Json j = to_json(LatticeFreeBody(Split(1, -7, 42)));
  CHECK(j["kind"] == "split");
  CHECK(j["a"] == 1);
  CHECK(j["b"] == -7);
  CHECK(j["c"] == 42);
  // huge coefficients fall back to strings and still round-trip
  BigInt big("123456789012345678901234567890");
  LatticeFreeBody s(Split(big, 1, 0));
  CHECK(body_from_json(to_json(s)) == s);
}

TEST_CASE("rationals serialize as p/q strings") {
  Json j = to_json(LatticeFreeBody(Triangle(pt(Rational(1, 2), Rational(0)),
                                            pt(Rational(2), Rational(0)),
                                            pt(Rational(0), Rational(3)))));
  CHECK(j["vertices"][0][0] == "1/2");
  CHECK(j["vertices"][0][1] == "0/1");
}

TEST_CASE("cut rows, instances and LP data round-trip") {
  Point2 f = pt(Rational(2, 3), Rational(2, 3));
  Triangle t(pt(Rational(0), Rational(0)), pt(Rational(2), Rational(0)),
             pt(Rational(0), Rational(2)));
  Instance inst(f, {t.v[0] - f, t.v[1] - f, t.v[2] - f});
  CutRow row = cut_row(LatticeFreeBody(t), inst);
  CutRow row2 = cut_row_from_json(Json::parse(to_json(row).dump()));
  CHECK(row.coeffs == row2.coeffs);
  CHECK(row.body == row2.body);

  Instance inst2 = instance_from_json(Json::parse(to_json(inst).dump()));
  CHECK(inst.f == inst2.f);
  CHECK(inst.rays == inst2.rays);

  LPProblem p(2, {{Rational(1, 3), Rational(2)}, {Rational(5), Rational(0)}});
  LPProblem p2 = lp_problem_from_json(Json::parse(to_json(p).dump()));
  CHECK(p.rows == p2.rows);
  LPSolution sol = solve_min_sum(p);
  LPSolution sol2 = lp_solution_from_json(Json::parse(to_json(sol).dump()));
  CHECK(sol.value == sol2.value);
  CHECK(sol.point == sol2.point);
  CHECK(sol.dual == sol2.dual);
  CHECK(sol.tight_rows == sol2.tight_rows);
}

TEST_CASE("malformed input is rejected as parse errors") {
  CHECK_THROWS_AS(body_from_json(Json::parse(R"({"kind":"circle"})")), ParseError);
  CHECK_THROWS_AS(body_from_json(Json::parse(R"({"a":1})")), ParseError);
  CHECK_THROWS_AS(rational_from_json(Json::parse("0.25")), ParseError);
  CHECK_THROWS_AS(rational_from_json(Json(std::string("1/"))), ParseError);
  CHECK_THROWS_AS(
      body_from_json(Json::parse(R"({"kind":"triangle","vertices":[["0/1","0/1"]]})")),
      ParseError);
}
