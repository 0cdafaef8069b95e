#pragma once

#include <vector>

#include "latcut/facets.hpp"
#include "latcut/strength/report.hpp"
#include "latcut/transform.hpp"

namespace latcut {

/// Type 3 triangle in lattice coordinates, edges supported by
///   -x1/t1 + x2 = 1   (0 < t1),
///   t2 x1  + x2 = 0   (0 < t2 < 1),
///   x1 + x2/t3  = 1   (1 < t3).
/// Its three boundary lattice points are (0,0), (1,0), (0,1).
inline Triangle make_type3_triangle(const Rational& t1, const Rational& t2, const Rational& t3) {
  if (!(t1 > 0)) throw ParamOutOfRange("t1 must be positive");
  if (!(t2 > 0 && t2 < 1)) throw ParamOutOfRange("t2 must be in (0,1)");
  if (!(t3 > 1)) throw ParamOutOfRange("t3 must exceed 1");
  Point2 c1{t3 / (t3 - t2), -t2 * t3 / (t3 - t2)};
  Point2 c2{t1 * (t3 - 1) / (1 + t1 * t3), t3 * (t1 + 1) / (1 + t1 * t3)};
  Point2 c3{-t1 / (1 + t1 * t2), t1 * t2 / (1 + t1 * t2)};
  return Triangle(c1, c2, c3);
}

/// Corner-ray instance for a bounded body.
inline Instance corner_instance(const LatticeFreeBody& body, const Point2& f) {
  std::vector<Ray2> rays;
  for (const auto& v : vertices(body)) rays.push_back(v - f);
  return Instance(f, std::move(rays));
}

/// (t^2 - 2t + 2) / t^2, the relaxed two-triangle optimum; minimal value 1/2
/// at t = 2.
inline Rational quad_bound_closed_form(const Rational& t) {
  if (!(t > 1)) throw ParamOutOfRange("edge parameter t must exceed 1");
  return (t * t - 2 * t + 2) / (t * t);
}

/// Canonical maximal lattice-free quadrilateral with boundary lattice points
/// (0,0), (1,0), (1,1), (0,1); the edge through (1,1) is
/// x1/t + ((t-1)/t) x2 = 1 and the other edges are its images under the
/// quarter-turn symmetries about (1/2, 1/2).
inline Quadrilateral make_parameter_quadrilateral(const Rational& t) {
  if (!(t > 1)) throw ParamOutOfRange("edge parameter t must exceed 1");
  Rational u = t - 1, d = 1 + u * u;
  Point2 v1{u * u / d, -u / d};           // edge(0,0) ^ edge(1,0)
  Point2 v2{(t + u * u) / d, u * u / d};  // edge(1,1) ^ edge(1,0)
  Point2 v3{1 / d, 1 + u / d};            // edge(1,1) ^ edge(0,1)
  Point2 v4{-u / d, 1 / d};               // edge(0,0) ^ edge(0,1)
  return Quadrilateral(v1, v2, v3, v4);
}

/// Strength of the parameter quadrilateral's facet against the two Type 2
/// triangles obtained by cutting it with x1 = 1 and x2 = 1. The LP value is
/// bounded below by the closed form for every admissible (t, f).
inline StrengthReport quad_vs_triangle_bound(const Rational& t, const Point2& f) {
  if (!(f.x1 <= Rational(1, 2) && f.x2 <= Rational(1, 2)))
    throw FNotInRegion("f must satisfy f1 <= 1/2 and f2 <= 1/2");
  Quadrilateral q = make_parameter_quadrilateral(t);
  if (!contains(LatticeFreeBody(q), f, /*strictly=*/true))
    throw FNotInRegion("f must be interior to the quadrilateral");
  Rational u = t - 1;
  // T1: corner v4, edges through (0,0) and (0,1), closed by x1 = 1.
  Triangle tri1(q.v[3], Point2{Rational(1), -1 / u}, Point2{Rational(1), t});
  // T2: corner v1, edges through (0,0) and (1,0), closed by x2 = 1.
  Triangle tri2(q.v[0], Point2{-u, Rational(1)}, Point2{t / u, Rational(1)});

  Instance inst = corner_instance(LatticeFreeBody(q), f);
  LPProblem lp = LPProblem::from_cut_rows(
      {cut_row(LatticeFreeBody(tri1), inst), cut_row(LatticeFreeBody(tri2), inst)});
  LPSolution sol = solve_min_sum(lp);
  Rational closed = quad_bound_closed_form(t);
  if (sol.value < closed) throw InternalError("two-triangle LP fell below its relaxation");
  return {closed, sol.value, "quad-vs-triangles", std::move(sol)};
}

enum class Type3Case { CaseI, CaseII };

/// (t3^2 - 2 t3 + 2) / t3^2 for case I; (2 t3^2 - 4 t3 + 3)/(2 t3^2 - 2 t3 + 1)
/// for case II.
inline Rational type3_bound_closed_form(const Rational& t3, Type3Case c) {
  if (!(t3 > 1)) throw ParamOutOfRange("t3 must exceed 1");
  if (c == Type3Case::CaseI) return (t3 * t3 - 2 * t3 + 2) / (t3 * t3);
  return (2 * t3 * t3 - 4 * t3 + 3) / (2 * t3 * t3 - 2 * t3 + 1);
}

/// Strength of a Type 3 facet against two Type 2 triangles, for the two
/// admissible positions of f. The LP dominates the closed form, which in turn
/// never falls below 1/2.
inline StrengthReport type3_vs_type2_bound(const Rational& t1, const Rational& t2,
                                           const Rational& t3, const Point2& f, Type3Case c) {
  Triangle t = make_type3_triangle(t1, t2, t3);
  if (!contains(LatticeFreeBody(t), f, /*strictly=*/true))
    throw FNotInRegion("f must be interior to the Type 3 triangle");
  if (c == Type3Case::CaseI) {
    if (!(f.x1 <= Rational(1, 2) && f.x2 <= Rational(1, 2)))
      throw FNotInRegion("case I needs f1 <= 1/2 and f2 <= 1/2");
  } else {
    if (!(f.x1 <= 0 && f.x1 + f.x2 <= Rational(1, 2)))
      throw FNotInRegion("case II needs f1 <= 0 and f1 + f2 <= 1/2");
  }

  // T1: edges on Line 1 and Line 2, closed by x1 = 1.
  Triangle tri1(t.v[2], Point2{Rational(1), 1 + 1 / t1}, Point2{Rational(1), -t2});
  Triangle tri2 = [&] {
    if (c == Type3Case::CaseI)
      // edges on Line 2 and Line 3, closed by x2 = 1
      return Triangle(t.v[0], Point2{-1 / t2, Rational(1)}, Point2{(t3 - 1) / t3, Rational(1)});
    // edges on Line 2, the parallel of Line 1 through (-1,1), and x1 + x2 = 1
    Point2 a{-(t1 + 1) / (1 + t1 * t2), t2 * (t1 + 1) / (1 + t1 * t2)};
    Point2 b{1 / (1 - t2), -t2 / (1 - t2)};
    Point2 cc{-1 / (1 + t1), (t1 + 2) / (t1 + 1)};
    return Triangle(a, b, cc);
  }();

  Instance inst = corner_instance(LatticeFreeBody(t), f);
  LPProblem lp = LPProblem::from_cut_rows(
      {cut_row(LatticeFreeBody(tri1), inst), cut_row(LatticeFreeBody(tri2), inst)});
  LPSolution sol = solve_min_sum(lp);
  Rational closed = type3_bound_closed_form(t3, c);
  if (sol.value < closed) throw InternalError("two-triangle LP fell below its relaxation");
  return {closed, sol.value, c == Type3Case::CaseI ? "case-i" : "case-ii", std::move(sol)};
}

/// Exact ternary search for the minimum of a strictly unimodal rational
/// function over [lo, hi]; interval shrinks to below `width`.
template <typename F>
inline std::pair<Rational, Rational> minimize_unimodal(F&& g, Rational lo, Rational hi,
                                                       const Rational& width) {
  while (hi - lo > width) {
    Rational m1 = lo + (hi - lo) / 3;
    Rational m2 = hi - (hi - lo) / 3;
    if (g(m1) <= g(m2)) hi = m2;
    else lo = m1;
  }
  Rational mid = (lo + hi) / 2;
  return {mid, g(mid)};
}

namespace detail {

/// Lattice symmetry cycling (0,0) -> (1,0) -> (0,1) -> (0,0).
inline Unimodular unit_points_rotation() { return Unimodular(-1, -1, 1, 0, 1, 0); }

/// Maximal lattice-free quadrilateral through (0,0), (1,0), (0,1) and one
/// further lattice point, containing f in its interior. f must be interior to
/// some Type 3 triangle with those boundary points.
inline Quadrilateral quad_through_unit_points(const Point2& f) {
  if (is_lattice_point(f)) throw FNotInterior("f must be fractional");
  const Rational zero(0), one(1);
  if (f.x2 < zero || f.x1 < zero) {
    // Rotate the flap below/left onto the f1 + f2 > 1 flap and recurse.
    Unimodular rot = unit_points_rotation();
    int times = f.x2 < zero ? 1 : 2;
    Unimodular map = times == 1 ? rot : compose(rot, rot);
    Quadrilateral q = map.inverse().apply(quad_through_unit_points(map(f)));
    return q;
  }
  if (f.x1 + f.x2 <= one) {
    // Central region: square rotated an eighth turn around (1/2, 1/2).
    return Quadrilateral(Point2{Rational(1, 2), Rational(-1, 2)},
                         Point2{Rational(3, 2), Rational(1, 2)},
                         Point2{Rational(1, 2), Rational(3, 2)},
                         Point2{Rational(-1, 2), Rational(1, 2)});
  }
  // Flap beyond the segment (1,0)-(0,1): fourth lattice point (1,1). Slopes
  // keep each lattice point in the relative interior of its own edge.
  Rational m1(-1, 2);                                            // edge through (0,0)
  Rational m2(1, 2);                                             // edge through (1,0)
  Rational m3 = std::max(Rational(1), (f.x2 - 1) / f.x1 + 1);    // edge through (0,1)
  Rational eta = f.x2 > 1 ? std::min(Rational(1), (1 - f.x1) / (2 * (f.x2 - 1))) : Rational(1);

  auto meet = [](const Point2& p, const Rational& sp, const Point2& q, const Rational& sq) {
    Rational x1 = (q.x2 - p.x2 + sp * p.x1 - sq * q.x1) / (sp - sq);
    return Point2{x1, p.x2 + sp * (x1 - p.x1)};
  };
  Point2 p00{zero, zero}, p10{one, zero}, p01{zero, one};
  Point2 bottom = meet(p00, m1, p10, m2);
  // Edge through (1,1): x1 + eta x2 = 1 + eta, i.e. slope -1/eta.
  Point2 p11{one, one};
  Rational m4 = -1 / eta;
  Point2 right = meet(p10, m2, p11, m4);
  Point2 top = meet(p11, m4, p01, m3);
  Point2 left = meet(p01, m3, p00, m1);
  return Quadrilateral(bottom, right, top, left);
}

}  // namespace detail

/// For a Type 3 facet whose ray condition holds, the quadrilateral-closure LP
/// has value exactly 1: all boundary points are lattice points, and a maximal
/// lattice-free quadrilateral through them yields the all-ones row while a
/// unit vector pointing at any of them is feasible for the closure.
inline Rational ray_condition_type3_value(const Triangle& body, const Instance& inst) {
  LatticeFreeBody b(body);
  if (classify(b) != Classification::TriangleType3)
    throw InvalidBody("body must be a Type 3 triangle");
  if (!ray_condition(b, inst)) throw RayConditionFails("the ray condition does not hold");

  ScaledInstance scaled = scale_rays_to_boundary(inst, b);
  std::vector<Point2> hits;
  for (size_t j = 0; j < scaled.instance.k(); ++j) {
    if (!scaled.factors[j]) throw InternalError("bounded body produced a recession ray");
    Point2 p = scaled.instance.f + scaled.instance.rays[j];
    if (!is_lattice_point(p))
      throw InternalError("ray condition held but a boundary point is fractional");
    hits.push_back(p);
  }

  // Normalize the triangle's three boundary lattice points to the unit ones.
  std::vector<Point2> ys;
  for (const auto& e : edges(body)) {
    auto pts = segment_lattice_points(e.from, e.to, /*closed=*/false);
    if (pts.size() != 1) throw InternalError("Type 3 triangle without unit boundary pattern");
    ys.push_back(pts[0]);
  }
  BigInt b11 = numerator(ys[1].x1 - ys[0].x1), b21 = numerator(ys[1].x2 - ys[0].x2);
  BigInt b12 = numerator(ys[2].x1 - ys[0].x1), b22 = numerator(ys[2].x2 - ys[0].x2);
  BigInt det = b11 * b22 - b12 * b21;
  if (det != 1 && det != -1)
    throw InvalidBody("boundary lattice points do not span the lattice");
  Unimodular basis(b11, b12, b21, b22, numerator(ys[0].x1), numerator(ys[0].x2));
  Unimodular to_unit = basis.inverse();  // ys -> (0,0), (1,0), (0,1)

  Quadrilateral q_unit = detail::quad_through_unit_points(to_unit(inst.f));
  LatticeFreeBody quad = basis.apply(q_unit);
  if (classify(quad) != Classification::Quadrilateral)
    throw InternalError("constructed quadrilateral is not maximal lattice-free");

  CutRow row = cut_row(quad, scaled.instance);
  for (const auto& c : row.coeffs)
    if (c != 1) throw InternalError("boundary point left the quadrilateral boundary");
  LPSolution sol = solve_min_sum(LPProblem::from_cut_rows({row}));
  if (sol.value != 1) throw InternalError("quadrilateral-closure LP value is not 1");
  return sol.value;
}

}  // namespace latcut
