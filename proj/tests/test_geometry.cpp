#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "latcut/classify.hpp"
#include "latcut/transform.hpp"

using namespace latcut;

namespace {
Point2 pt(int a, int b) { return {Rational(a), Rational(b)}; }
Point2 pt(const Rational& a, const Rational& b) { return {a, b}; }
}  // namespace

TEST_CASE("rational parsing and formatting") {
  CHECK(parse_rational("2/3") == Rational(2, 3));
  CHECK(parse_rational("-7/21") == Rational(-1, 3));
  CHECK(parse_rational("5") == Rational(5));
  CHECK(format_rational(Rational(-4, 6)) == "-2/3");
  CHECK(format_rational(Rational(3)) == "3/1");
  CHECK_THROWS_AS(parse_rational("0.5"), ParseError);
  CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
  CHECK_THROWS_AS(parse_rational("x"), ParseError);
  CHECK(floor_int(Rational(-7, 2)) == -4);
  CHECK(ceil_int(Rational(-7, 2)) == -3);
  CHECK(floor_int(Rational(6, 3)) == 2);
}

TEST_CASE("line normalization and lattice points on segments") {
  Line2 l = Line2::through(pt(Rational(0), Rational(1, 2)), pt(Rational(1), Rational(1, 2)));
  CHECK(l.a == 0);
  CHECK(l.b == 2);
  CHECK(l.c == 1);  // 2*x2 = 1 after clearing denominators
  auto pts = segment_lattice_points(pt(0, 0), pt(4, 2), true);
  REQUIRE(pts.size() == 3);
  CHECK(pts[0] == pt(0, 0));
  CHECK(pts[1] == pt(2, 1));
  CHECK(pts[2] == pt(4, 2));
  CHECK(segment_lattice_points(pt(0, 0), pt(4, 2), false).size() == 1);
  CHECK(segment_lattice_points(pt(Rational(1, 2), Rational(0)), pt(Rational(3, 2), Rational(0)),
                               false) == std::vector<Point2>{pt(1, 0)});
  CHECK(segment_lattice_points(pt(Rational(1, 4), Rational(0)), pt(Rational(1, 2), Rational(0)),
                               false).empty());
}

TEST_CASE("lattice point enumeration matches the worked examples") {
  Triangle t(pt(0, 0), pt(2, 0), pt(0, 2));
  CHECK(lattice_points_in(LatticeFreeBody(t), false).empty());
  auto closed = lattice_points_in(LatticeFreeBody(t), true);
  std::vector<Point2> want{pt(0, 0), pt(0, 1), pt(0, 2), pt(1, 0), pt(1, 1), pt(2, 0)};
  CHECK(closed == want);
  CHECK_THROWS_AS(Triangle(pt(1, 1), pt(1, 1), pt(1, 1)), InvalidBody);
  CHECK_THROWS_AS(lattice_points_in(LatticeFreeBody(Split(1, 0, 0)), true), UnboundedEnumeration);
  auto strip = lattice_points_in(LatticeFreeBody(Split(1, 0, 0)), true, Box{-2, 2, 0, 1});
  CHECK(strip.size() == 4);  // (0,0),(0,1),(1,0),(1,1)
}

TEST_CASE("classification of the reference bodies") {
  CHECK(classify(LatticeFreeBody(Triangle(pt(0, 0), pt(2, 0), pt(0, 2)))) ==
        Classification::TriangleType1);
  CHECK(classify(LatticeFreeBody(Triangle(pt(0, 0), pt(1, 0), pt(0, 1)))) ==
        Classification::NotMaximal);
  CHECK(classify(LatticeFreeBody(Triangle(pt(0, 0), pt(3, 0), pt(0, 3)))) ==
        Classification::NotLatticeFree);
  CHECK(classify(LatticeFreeBody(Split(2, 3, 7))) == Classification::Split);
  CHECK_THROWS_AS(Split(2, 4, 0), InvalidBody);

  // Unit square: lattice-free but every lattice point is a vertex.
  Quadrilateral sq(pt(0, 0), pt(1, 0), pt(1, 1), pt(0, 1));
  CHECK(classify(LatticeFreeBody(sq)) == Classification::NotMaximal);

  // A pseudo-split has no classification.
  PseudoSplit ps(pt(0, 1), pt(0, 0), Ray2{Rational(1), Rational(2)});
  CHECK_THROWS_AS(classify(LatticeFreeBody(ps)), InvalidBody);
}

TEST_CASE("pseudo-split validation") {
  CHECK_THROWS_AS(PseudoSplit(pt(0, 0), pt(0, 0), Ray2{Rational(1), Rational(0)}), InvalidBody);
  // direction parallel to the anchor segment collapses the two lines
  CHECK_THROWS_AS(PseudoSplit(pt(0, 0), pt(0, 1), Ray2{Rational(0), Rational(3)}), InvalidBody);
  CHECK_THROWS_AS(PseudoSplit(pt(0, 0), pt(0, 1), Ray2{Rational(0), Rational(0)}),
                  ParamOutOfRange);
}

TEST_CASE("unimodular maps act on bodies") {
  Unimodular id;
  Triangle t1(pt(0, 0), pt(2, 0), pt(0, 2));
  CHECK(id.apply(t1) == t1);
  CHECK_THROWS_AS(Unimodular(2, 0, 0, 1), NotUnimodular);

  Unimodular swap_axes(0, 1, 1, 0);
  Triangle swapped = swap_axes.apply(t1);
  CHECK(classify(LatticeFreeBody(swapped)) == Classification::TriangleType1);

  // Shear [[1,1],[0,1]] turns 0 <= x1 <= 1 into 0 <= x1 - x2 <= 1.
  Unimodular shear(1, 1, 0, 1);
  Split img = shear.apply(Split(1, 0, 0));
  CHECK(img.a == 1);
  CHECK(img.b == -1);
  CHECK(img.c == 0);
}

TEST_CASE("classification is invariant under random unimodular maps") {
  std::mt19937_64 rng(7);
  auto rnd = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
  std::vector<LatticeFreeBody> bodies = {
      LatticeFreeBody(Triangle(pt(0, 0), pt(2, 0), pt(0, 2))),
      LatticeFreeBody(Triangle(pt(0, 0), pt(1, 0), pt(0, 1))),
      LatticeFreeBody(Triangle(pt(0, 0), pt(3, 0), pt(0, 3))),
      LatticeFreeBody(Quadrilateral(pt(0, 0), pt(1, 0), pt(1, 1), pt(0, 1))),
      LatticeFreeBody(Split(1, 2, -1)),
  };
  // Type 2 and Type 3 representatives
  bodies.push_back(LatticeFreeBody(Triangle(pt(Rational(-1), Rational(5, 2)),
                                            pt(Rational(-1), Rational(1, 2)),
                                            pt(Rational(1), Rational(-1, 2)))));
  for (int trial = 0; trial < 40; ++trial) {
    // random unimodular via a few shears and swaps
    Unimodular u;
    for (int s = 0; s < 4; ++s) {
      int k = rnd(-3, 3);
      Unimodular step = rnd(0, 1) ? Unimodular(1, k, 0, 1) : Unimodular(1, 0, k, 1);
      if (rnd(0, 4) == 0) step = Unimodular(0, 1, 1, 0);
      u = compose(step, u);
    }
    u.t1 = rnd(-5, 5);
    u.t2 = rnd(-5, 5);
    for (const auto& b : bodies) CHECK(classify(u(b)) == classify(b));
  }
}
