#include <catch2/catch_amalgamated.hpp>

#include "latcut/strength/bounds.hpp"
#include "latcut/strength/epsilon.hpp"
#include "latcut/strength/goemans.hpp"
#include "latcut/strength/pseudo.hpp"
#include "latcut/strength/type1.hpp"

using namespace latcut;

namespace {
Point2 pt(const Rational& a, const Rational& b) { return {a, b}; }
Point2 pt(int a, int b) { return {Rational(a), Rational(b)}; }
}  // namespace

TEST_CASE("type 1 strength closed forms") {
  CHECK(type1_split_strength(pt(Rational(2, 3), Rational(2, 3))).value == Rational(1, 2));
  CHECK(type1_split_strength(pt(Rational(1, 4), Rational(1, 4))).value == Rational(3, 5));
  CHECK(type1_split_strength(pt(Rational(1, 8), Rational(1, 8))).value == Rational(7, 11));
  // on the segment joining (0,1) and (1,0): corner formula, value 1/2
  auto rep = type1_split_strength(pt(Rational(1, 2), Rational(1, 2)));
  CHECK(rep.value == Rational(1, 2));
  CHECK(rep.region_tag == "corner");
  // near a corner of the big triangle the value approaches 2/3
  auto near_corner = type1_split_strength(pt(Rational(1, 1000), Rational(1, 1000)));
  CHECK(near_corner.value < Rational(2, 3));
  CHECK(near_corner.value > Rational(2, 3) - Rational(1, 100));
  CHECK_THROWS_AS(type1_split_strength(pt(2, 2)), FNotInterior);
  // the three corner regions agree by symmetry
  CHECK(type1_split_strength(pt(Rational(3, 2), Rational(1, 4))).value ==
        type1_split_strength(pt(Rational(1, 4), Rational(3, 2))).value);
}

TEST_CASE("dominant split families") {
  CHECK(dominant_splits_type1(pt(Rational(2, 3), Rational(2, 3))).size() == 3);
  auto corner = dominant_splits_type1(pt(Rational(1, 4), Rational(1, 4)));
  REQUIRE(corner.size() == 2);
  CHECK(std::get<Split>(corner[0]) == Split(1, 0, 0));
  CHECK(std::get<Split>(corner[1]) == Split(0, 1, 0));
  // segment point also uses the two corner splits
  CHECK(dominant_splits_type1(pt(Rational(1, 2), Rational(1, 2))).size() == 2);
}

TEST_CASE("level curve grid symmetry and csv shape") {
  auto cells = level_curve_grid(8);
  for (const auto& c : cells) {
    // symmetry about the diagonal
    Point2 mirrored = pt(c.f.x2, c.f.x1);
    bool found = false;
    for (const auto& d : cells)
      if (d.f == mirrored) {
        CHECK(d.value == c.value);
        found = true;
        break;
      }
    CHECK(found);
  }
  std::string csv = level_curve_csv(cells);
  CHECK(csv.rfind("f1,f2,value,region\n", 0) == 0);
  CHECK_THROWS_AS(level_curve_grid(1), ParamOutOfRange);
}

TEST_CASE("goemans alpha") {
  // identical families give alpha = 1
  LPProblem p(2, {{Rational(1), Rational(2)}, {Rational(2), Rational(1)}});
  FacetRow f1{{Rational(1), Rational(2)}, Rational(1)};
  FacetRow f2{{Rational(2), Rational(1)}, Rational(1)};
  auto a = goemans_alpha({f1, f2}, p);
  REQUIRE(a.has_value());
  CHECK(*a == 1);

  // the Type 1 facet against the dominant splits: factor exactly 2
  Point2 f = pt(Rational(2, 3), Rational(2, 3));
  Instance inst = type1_corner_instance(f);
  std::vector<CutRow> rows;
  for (const auto& s : dominant_splits_type1(f)) rows.push_back(cut_row(s, inst));
  FacetRow facet{{Rational(1), Rational(1), Rational(1)}, Rational(1)};
  auto a2 = goemans_alpha({facet}, LPProblem::from_cut_rows(rows));
  REQUIRE(a2.has_value());
  CHECK(*a2 == 2);

  // an infimum of zero makes the ratio infinite
  LPProblem q(2, {{Rational(0), Rational(1)}});
  FacetRow vertical{{Rational(1), Rational(0)}, Rational(1)};
  CHECK(!goemans_alpha({vertical}, q).has_value());

  // zero-rhs rows never contribute
  FacetRow trivial{{Rational(1), Rational(0)}, Rational(0)};
  auto a3 = goemans_alpha({trivial}, q);
  REQUIRE(a3.has_value());
  CHECK(*a3 == 1);
}

TEST_CASE("epsilon construction in the two-ray picture") {
  // split 0 <= x1 <= 1, one ray to the boundary and one recession ray
  Split s(1, 0, 0);
  Point2 f = pt(Rational(1, 2), Rational(1, 2));
  Instance inst(f, {Ray2{Rational(-1, 2), Rational(0)}, Ray2{Rational(0), Rational(1)}});
  std::vector<Rational> s_bar{Rational(3, 4), Rational(2)};  // split lhs = 3/4
  LatticeFreeBody tri = epsilon_triangle_for_split(s, inst, s_bar);
  CHECK(classify(tri) == Classification::TriangleType2);
  CutRow row = cut_row(tri, inst);
  CHECK(row.coeffs[0] >= 1);      // at least the split coefficient
  CHECK(row.coeffs[1] > 0);       // small but positive on the recession ray
  Rational lhs = row.coeffs[0] * s_bar[0] + row.coeffs[1] * s_bar[1];
  CHECK(lhs <= 1 - Rational(1, 8));  // eps = 1/4
  CHECK(lhs < 1);

  // the quadrilateral family works the same way
  LatticeFreeBody quad =
      epsilon_body_for_split(s, inst, s_bar, SplitApproxMode::QuadrilateralFamily);
  CHECK(classify(quad) == Classification::Quadrilateral);
  CutRow qrow = cut_row(quad, inst);
  CHECK(qrow.coeffs[0] * s_bar[0] + qrow.coeffs[1] * s_bar[1] <= 1 - Rational(1, 8));

  // s_bar = 0 violates trivially and still produces a valid triangle
  std::vector<Rational> zero{Rational(0), Rational(0)};
  LatticeFreeBody tri0 = epsilon_triangle_for_split(s, inst, zero);
  CHECK(classify(tri0) == Classification::TriangleType2);

  // a satisfied point is rejected
  std::vector<Rational> sat{Rational(2), Rational(0)};
  CHECK_THROWS_AS(epsilon_triangle_for_split(s, inst, sat), NotViolated);
}

TEST_CASE("quad bound closed form and parameter errors") {
  CHECK(quad_bound_closed_form(Rational(2)) == Rational(1, 2));
  CHECK(quad_bound_closed_form(Rational(3)) == Rational(5, 9));
  CHECK_THROWS_AS(quad_bound_closed_form(Rational(1)), ParamOutOfRange);
  CHECK_THROWS_AS(quad_vs_triangle_bound(Rational(2), pt(Rational(3, 4), Rational(0))),
                  FNotInRegion);
  CHECK(classify(LatticeFreeBody(make_parameter_quadrilateral(Rational(7, 3)))) ==
        Classification::Quadrilateral);
}

TEST_CASE("type 3 coefficient formulas match the gauge computation") {
  Rational t1(3, 2), t2(2, 5), t3(5, 2);
  Triangle t = make_type3_triangle(t1, t2, t3);
  CHECK(classify(LatticeFreeBody(t)) == Classification::TriangleType3);
  Point2 f = pt(Rational(1, 4), Rational(1, 4));
  Instance inst = corner_instance(LatticeFreeBody(t), f);

  // T1 coefficient on the ray toward Line2 ^ Line3
  Triangle tri1(t.v[2], pt(Rational(1), 1 + 1 / t1), pt(Rational(1), -t2));
  CutRow row1 = cut_row(LatticeFreeBody(tri1), inst);
  // vertex order of the Type 3 triangle: Line2^Line3, Line1^Line3, Line1^Line2
  CHECK(row1.coeffs[0] == (t3 / (t3 - t2) - f.x1) / (1 - f.x1));
  CHECK(row1.coeffs[1] == 1);
  CHECK(row1.coeffs[2] == 1);

  // Case II triangle coefficient
  Point2 fii = pt(Rational(-1, 4), Rational(1, 2));
  Instance inst2 = corner_instance(LatticeFreeBody(t), fii);
  Point2 a{-(t1 + 1) / (1 + t1 * t2), t2 * (t1 + 1) / (1 + t1 * t2)};
  Point2 b{1 / (1 - t2), -t2 / (1 - t2)};
  Point2 cc{-1 / (1 + t1), (t1 + 2) / (t1 + 1)};
  CutRow row2 = cut_row(LatticeFreeBody(Triangle(a, b, cc)), inst2);
  CHECK(row2.coeffs[1] ==
        ((2 * t1 * t3 + t3 - t1) / (1 + t1 * t3) - fii.x1 - fii.x2) / (1 - fii.x1 - fii.x2));

  CHECK(type3_bound_closed_form(Rational(2), Type3Case::CaseII) == Rational(3, 5));
  CHECK_THROWS_AS(make_type3_triangle(Rational(1), Rational(2), Rational(2)), ParamOutOfRange);
  CHECK_THROWS_AS(type3_vs_type2_bound(t1, t2, t3, pt(2, 2), Type3Case::CaseI), FNotInRegion);
}

TEST_CASE("ray-condition value errors") {
  Triangle t = make_type3_triangle(Rational(1), Rational(1, 2), Rational(2));
  Point2 f = pt(Rational(1, 3), Rational(1, 3));
  // corner rays only: the ray condition fails
  Instance corners = corner_instance(LatticeFreeBody(t), f);
  CHECK(!ray_condition(LatticeFreeBody(t), corners));
  CHECK_THROWS_AS(ray_condition_type3_value(t, corners), RayConditionFails);
  // wrong body type
  Triangle t1(pt(0, 0), pt(2, 0), pt(0, 2));
  Instance unit(f, {pt(0, 0) - f});
  CHECK_THROWS_AS(ray_condition_type3_value(t1, unit), InvalidBody);
}

TEST_CASE("pseudo-split family construction") {
  Point2 f = pt(Rational(0), Rational(1, 2));
  Instance three(f, {Ray2{Rational(-1), Rational(2)}, Ray2{Rational(1), Rational(0)},
                     Ray2{Rational(-1), Rational(-3)}});
  CHECK(pseudo_split_family(three).size() == 3);
  Instance one(f, {Ray2{Rational(2), Rational(1)}});
  CHECK(pseudo_split_family(one).size() == 1);
  // (1,2) and (2,4) span the same line
  Instance dup(f, {Ray2{Rational(1), Rational(2)}, Ray2{Rational(2), Rational(4)}});
  CHECK(pseudo_split_family(dup).size() == 1);
  Instance vertical(f, {Ray2{Rational(0), Rational(1)}});
  CHECK_THROWS_AS(pseudo_split_family(vertical), VerticalRay);
  Instance off(pt(Rational(1, 2), Rational(1, 2)), {Ray2{Rational(1), Rational(0)}});
  CHECK_THROWS_AS(pseudo_split_family(off), ParamOutOfRange);
}

TEST_CASE("pseudo-split domination rejects non-strict slopes") {
  Point2 f = pt(Rational(0), Rational(1, 2));
  Instance inst(f, {Ray2{Rational(-1), Rational(2)}, Ray2{Rational(1), Rational(1)}});
  auto s_lo = pseudo_split_for_slope(Rational(-2));
  auto s_hi = pseudo_split_for_slope(Rational(1));
  CHECK_THROWS_AS(pseudo_split_domination_lambda(s_lo, s_lo, s_hi, inst), SlopeNotBetween);
}

TEST_CASE("pseudo-split closure bounds") {
  auto rep = pseudo_split_closure_value(Rational(5), Rational(0), Rational(-5), Rational(1),
                                        Rational(1), Rational(1), Rational(1, 2));
  CHECK(rep.value == Rational(1, 10));
  CHECK(rep.lp_value <= rep.value);

  auto rep2 = pseudo_split_closure_value(Rational(3), Rational(1, 2), Rational(-2), Rational(2),
                                         Rational(1), Rational(2), Rational(1, 2));
  CHECK(rep2.value == 1 / (2 * (Rational(3) - Rational(-2))));
  CHECK_THROWS_AS(pseudo_split_closure_value(Rational(1), Rational(2), Rational(-1), Rational(1),
                                             Rational(1), Rational(1), Rational(1, 2)),
                  ParamOutOfRange);
}

TEST_CASE("bad examples carry boundary rays and small bounds") {
  BadExample be = bad_example(BadExampleFamily::Type2, 2, Rational(1, 3));
  CHECK(be.claimed_bound == Rational(1, 2));
  for (const auto& r : be.inst.rays) CHECK(psi(be.body, be.inst.f, r) == 1);
  CHECK_THROWS_AS(bad_example(BadExampleFamily::Type2, 1, Rational(1, 2)), ParamOutOfRange);
  CHECK_THROWS_AS(bad_example(BadExampleFamily::Type2, 3, Rational(2)), ParamOutOfRange);
}

TEST_CASE("factor-two region checks") {
  CHECK(split_factor2_region_check(Rational(-1, 2), pt(Rational(1, 2), Rational(1, 2))) ==
        Rational(1, 2));
  // deeper in the region the split does even better
  Rational v = split_factor2_region_check(Rational(-1, 3), pt(Rational(3, 4), Rational(1, 2)));
  CHECK(v == Rational(3, 4) / (Rational(3, 4) + Rational(1, 3)));
  CHECK(v >= Rational(1, 2));
  // inside the doubled triangle the check refuses
  CHECK_THROWS_AS(split_factor2_region_check(Rational(-1, 2), pt(Rational(1, 4), Rational(1, 2))),
                  FNotInRegion);
  CHECK_THROWS_AS(split_factor2_region_check(Rational(1, 2), pt(Rational(1, 2), Rational(1, 2))),
                  ParamOutOfRange);
}

TEST_CASE("split closure sample at n = 1") {
  Point2 f = pt(Rational(2, 3), Rational(2, 3));
  Instance inst = type1_corner_instance(f);
  std::vector<Split> used;
  auto sol = split_closure_sample(inst, 1, &used);
  CHECK(sol.value == Rational(1, 2));
  CHECK(used.size() <= 8);
  CHECK_THROWS_AS(split_closure_sample(inst, 0), ParamOutOfRange);
}
