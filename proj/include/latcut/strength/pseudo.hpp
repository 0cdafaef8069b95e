#pragma once

#include <algorithm>
#include <vector>

#include "latcut/classify.hpp"
#include "latcut/strength/report.hpp"

namespace latcut {

/// Slope of the line spanned by the ray; rays parallel to the x2-axis have no
/// pseudo-split direction.
inline Rational ray_line_slope(const Ray2& r) {
  require_nonzero(r);
  if (r.d1 == 0) throw VerticalRay("ray has zero first component");
  return r.d2 / r.d1;
}

/// Pseudo-split anchored at y1 = (0,1), y2 = (0,0) with the given direction
/// slope.
inline PseudoSplit pseudo_split_for_slope(const Rational& slope) {
  return PseudoSplit(Point2{Rational(0), Rational(1)}, Point2{Rational(0), Rational(0)},
                     Ray2{Rational(1), slope});
}

inline Rational pseudo_split_slope(const PseudoSplit& s) {
  if (s.direction.d1 == 0) throw VerticalRay("vertical pseudo-split direction");
  return s.direction.d2 / s.direction.d1;
}

inline void require_segment_f(const Point2& f) {
  if (!(f.x1 == 0 && f.x2 > 0 && f.x2 < 1))
    throw ParamOutOfRange("f must be (0, f2) with 0 < f2 < 1");
}

/// One pseudo-split per distinct ray direction, in first-occurrence order.
inline std::vector<PseudoSplit> pseudo_split_family(const Instance& inst) {
  require_segment_f(inst.f);
  std::vector<Rational> slopes;
  std::vector<PseudoSplit> family;
  for (const auto& r : inst.rays) {
    Rational s = ray_line_slope(r);
    if (std::find(slopes.begin(), slopes.end(), s) != slopes.end()) continue;
    slopes.push_back(s);
    family.push_back(pseudo_split_for_slope(s));
  }
  return family;
}

/// The unique lambda in (0,1) with
///   psi_{S'} = lambda psi_{S_i} + (1-lambda) psi_{S_next}
/// on every ray simultaneously. Exists whenever S_i and S_next are
/// slope-adjacent within the instance's direction family; the identity is
/// verified exactly ray by ray.
inline Rational pseudo_split_domination_lambda(const PseudoSplit& s_prime, const PseudoSplit& s_i,
                                               const PseudoSplit& s_next, const Instance& inst) {
  require_segment_f(inst.f);
  Rational sp = pseudo_split_slope(s_prime);
  Rational si = pseudo_split_slope(s_i);
  Rational sn = pseudo_split_slope(s_next);
  bool between = (si < sp && sp < sn) || (sn < sp && sp < si);
  if (!between)
    throw SlopeNotBetween("S' slope must lie strictly between the neighbouring slopes");
  Rational lambda = (sp - sn) / (si - sn);
  for (const auto& r : inst.rays) {
    Rational lhs = psi(LatticeFreeBody(s_prime), inst.f, r);
    Rational rhs = lambda * psi(LatticeFreeBody(s_i), inst.f, r) +
                   (1 - lambda) * psi(LatticeFreeBody(s_next), inst.f, r);
    if (lhs != rhs)
      throw SlopeNotBetween("neighbours are not slope-adjacent for this instance");
  }
  return lambda;
}

/// Closed-form upper bound on the pseudo-split closure LP: the two-support
/// point on the extreme-slope rays is tight for every pseudo-split row.
struct PseudoClosureBound {
  Rational bound;
  std::vector<Rational> feasible_point;
};

inline PseudoClosureBound pseudo_closure_upper_bound(const Instance& inst) {
  require_segment_f(inst.f);
  size_t lo = 0, hi = 0;
  std::vector<Rational> slopes;
  slopes.reserve(inst.k());
  for (const auto& r : inst.rays) slopes.push_back(ray_line_slope(r));
  for (size_t j = 1; j < inst.k(); ++j) {
    if (slopes[j] < slopes[lo]) lo = j;
    if (slopes[j] > slopes[hi]) hi = j;
  }
  Rational spread = slopes[hi] - slopes[lo];
  if (spread == 0) throw ParamOutOfRange("rays span no slope interval");
  Rational f2 = inst.f.x2;
  auto weight = [&](size_t j, bool is_min_slope) {
    bool points_left = inst.rays[j].d1 < 0;
    // Extreme rays pierce the near boundary line: the steep-down-left /
    // up-left ray exits through the line holding y1 = (0,1).
    bool upper = is_min_slope ? points_left : !points_left;
    return upper ? 1 - f2 : f2;
  };
  std::vector<Rational> point(inst.k(), Rational(0));
  Rational mu_lo = abs(inst.rays[lo].d1), mu_hi = abs(inst.rays[hi].d1);
  point[lo] = weight(lo, true) / (mu_lo * spread);
  point[hi] = weight(hi, false) / (mu_hi * spread);
  return {point[lo] + point[hi], std::move(point)};
}

/// Exact pseudo-split closure LP for the three-ray family
/// r1 = mu1(-1, t1), r2 = mu2(1, t2), r3 = mu3(-1, t3), f = (0, f2),
/// together with the closed-form bound (1/(t1-t3)) ((1-f2)/mu1 + f2/mu3).
inline StrengthReport pseudo_split_closure_value(const Rational& t1, const Rational& t2,
                                                 const Rational& t3, const Rational& mu1,
                                                 const Rational& mu2, const Rational& mu3,
                                                 const Rational& f2) {
  if (!(mu1 > 0 && mu2 > 0 && mu3 > 0)) throw ParamOutOfRange("scaling factors must be positive");
  if (!(f2 > 0 && f2 < 1)) throw ParamOutOfRange("f2 must be in (0,1)");
  if (!(-t1 < t2 && t2 < -t3)) throw ParamOutOfRange("rays must satisfy -t1 < t2 < -t3");
  Point2 f{Rational(0), f2};
  Instance inst(f, {Ray2{-mu1, mu1 * t1}, Ray2{mu2, mu2 * t2}, Ray2{-mu3, mu3 * t3}});
  std::vector<CutRow> rows;
  for (const auto& s : pseudo_split_family(inst)) rows.push_back(cut_row(LatticeFreeBody(s), inst));
  LPSolution sol = solve_min_sum(LPProblem::from_cut_rows(rows));

  Rational bound = ((1 - f2) / mu1 + f2 / mu3) / (t1 - t3);
  PseudoClosureBound generic = pseudo_closure_upper_bound(inst);
  if (generic.bound != bound) throw InternalError("generic bound disagrees with closed form");
  if (sol.value > bound) throw InternalError("LP exceeded its feasible-point bound");
  return {bound, sol.value, "pseudo-split-closure", std::move(sol)};
}

enum class BadExampleFamily { Type2, Type3, Quadrilateral };

inline const char* to_string(BadExampleFamily f) {
  switch (f) {
    case BadExampleFamily::Type2: return "Type2";
    case BadExampleFamily::Type3: return "Type3";
    case BadExampleFamily::Quadrilateral: return "Quadrilateral";
  }
  return "?";
}

/// A facet instance whose split closure is provably weak: the rays end on the
/// body's boundary, so the facet is sum(s) >= 1, while the pseudo-split
/// closure LP value is at most claimed_bound <= 1/M.
struct BadExample {
  LatticeFreeBody body;
  Instance inst;
  Rational claimed_bound;
  BadExampleFamily family_tag;
};

namespace detail {

/// Type 2 triangle with vertical edge on x1 = -1 holding `points` lattice
/// points in its interior; the slanted edges pass through (0,1) and (0,0).
/// Corners: (-1, points + 1/2), (-1, 1/2), apex (1/(points-1), -1/(2(points-1))).
inline Triangle bad_example_triangle(int points) {
  Rational top(2 * points + 1, 2), bottom(1, 2);
  Rational apex_x(1, points - 1), apex_y(-1, 2 * (points - 1));
  return Triangle(Point2{Rational(-1), top}, Point2{Rational(-1), bottom},
                  Point2{apex_x, apex_y});
}

inline Instance rays_to_vertices(const LatticeFreeBody& body, const Point2& f) {
  std::vector<Ray2> rays;
  for (const auto& v : vertices(body)) rays.push_back(v - f);
  return Instance(f, std::move(rays));
}

}  // namespace detail

/// Bad example families: the Type 2 triangle achieves pseudo-split bound
/// exactly 1/M; the Type 3 and quadrilateral variants tilt or break the
/// vertical edge (built from M+1 interior points so the perturbed bound still
/// clears 1/M).
inline BadExample bad_example(BadExampleFamily family, int m, const Rational& f2) {
  if (m < 2) throw ParamOutOfRange("M must be at least 2");
  if (!(f2 > 0 && f2 < 1)) throw ParamOutOfRange("f2 must be in (0,1)");
  Point2 f{Rational(0), f2};
  Rational one_over_m(1, m);

  auto finish = [&](LatticeFreeBody body) {
    std::vector<Ray2> rays;
    for (const auto& v : vertices(body)) rays.push_back(v - f);
    Instance inst(f, std::move(rays));
    for (const auto& r : inst.rays)
      if (psi(body, f, r) != 1) throw InternalError("bad-example ray does not end on the boundary");
    Rational bound = pseudo_closure_upper_bound(inst).bound;
    if (bound > one_over_m) throw InternalError("bad-example bound exceeds 1/M");
    return BadExample{std::move(body), std::move(inst), bound, family};
  };

  if (family == BadExampleFamily::Type2) {
    Triangle t = detail::bad_example_triangle(m);
    LatticeFreeBody body(t);
    if (classify(body) != Classification::TriangleType2)
      throw InternalError("bad-example base triangle is not Type 2");
    return finish(body);
  }

  // Both variants start from the M+1 point triangle. Escalate the tilt until
  // the perturbed bound clears 1/M (a fixed moderate slope already does).
  int base = m + 1;
  Rational upper_slope = Rational(1, 2) - base;  // slanted edge through (0,1)
  for (Rational sigma(4 * base); ; sigma *= 2) {
    if (sigma > Rational(1 << 20)) throw InternalError("tilt escalation failed");
    if (family == BadExampleFamily::Type3) {
      // Tilt the vertical edge about (-1, 1); above the pivot it leans right.
      // Tilted line: x2 = 1 + sigma (x1 + 1).
      Rational cx = -sigma / (sigma + base - Rational(1, 2));
      Point2 c_top{cx, 1 + upper_slope * cx};
      Rational bx = -(1 + sigma) / (Rational(1, 2) + sigma);
      Point2 c_bottom{bx, -bx / 2};
      Rational apex_x(1, base - 1), apex_y(-1, 2 * (base - 1));
      LatticeFreeBody body(Triangle(c_top, c_bottom, Point2{apex_x, apex_y}));
      if (classify(body) != Classification::TriangleType3) continue;
      Rational bound = pseudo_closure_upper_bound(detail::rays_to_vertices(body, f)).bound;
      if (bound > one_over_m) continue;
      return finish(body);
    }
    // Quadrilateral: keep the segment of the vertical edge through (-1, 1)
    // and tilt the rest about the break point (-1, 3/2).
    Rational tx = -(sigma + Rational(1, 2)) / (sigma + base - Rational(1, 2));
    Point2 c_top{tx, 1 + upper_slope * tx};
    Point2 break_pt{Rational(-1), Rational(3, 2)};
    Point2 c_bottom{Rational(-1), Rational(1, 2)};
    Rational apex_x(1, base - 1), apex_y(-1, 2 * (base - 1));
    LatticeFreeBody body(Quadrilateral(c_top, break_pt, c_bottom, Point2{apex_x, apex_y}));
    if (!is_lattice_free(body)) continue;
    Rational bound = pseudo_closure_upper_bound(detail::rays_to_vertices(body, f)).bound;
    if (bound > one_over_m) continue;
    return finish(body);
  }
}

/// Strength of the single vertical split against the mirrored bad-example
/// triangle with apex (u, 1/2), u < 0: for f interior to the triangle on the
/// far side of the doubled triangle (f1 >= -u) the LP value is f1/(f1-u),
/// never below 1/2.
inline Rational split_factor2_region_check(const Rational& u, const Point2& f) {
  if (!(u < 0)) throw ParamOutOfRange("apex coordinate u must be negative");
  Point2 apex{u, Rational(1, 2)};
  // Slanted edges through (0,0) and (0,1); vertical edge on x1 = 1.
  Rational lower_at_1 = Rational(1, 2) / u;        // slope of apex-(0,0) edge times 1
  Rational upper_at_1 = 1 - Rational(1, 2) / u;    // line through apex and (0,1) at x1 = 1
  Triangle t(apex, Point2{Rational(1), lower_at_1}, Point2{Rational(1), upper_at_1});
  LatticeFreeBody body(t);
  if (!contains(body, f, /*strictly=*/true))
    throw FNotInRegion("f must be interior to the Type 2 triangle");
  if (f.x1 < -u) throw FNotInRegion("f lies inside the doubled triangle");

  Instance inst = detail::rays_to_vertices(body, f);
  LatticeFreeBody split(Split(1, 0, 0));
  LPSolution sol = solve_min_sum(LPProblem::from_cut_rows({cut_row(split, inst)}));
  Rational value = f.x1 / (f.x1 - u);
  if (sol.value != value) throw InternalError("split LP disagrees with f1/(f1-u)");
  if (value < Rational(1, 2)) throw InternalError("factor-2 region value fell below 1/2");
  return value;
}

/// Brute-force oracle over all splits c <= a x1 + b x2 <= c+1 with
/// |a|, |b| <= n containing f in the interior. Monotone nonincreasing in n;
/// equals the exact Type 1 strength already at n = 1.
inline LPSolution split_closure_sample(const Instance& inst, int n,
                                       std::vector<Split>* used = nullptr) {
  if (n < 1) throw ParamOutOfRange("coefficient bound must be at least 1");
  std::vector<CutRow> rows;
  for (int a = 0; a <= n; ++a)
    for (int b = (a == 0 ? 1 : -n); b <= n; ++b) {
      if (a == 0 && b != 1) continue;
      if (gcd(BigInt(a), BigInt(b < 0 ? -b : b)) != 1) continue;
      Rational v = Rational(a) * inst.f.x1 + Rational(b) * inst.f.x2;
      if (is_integral(v)) continue;  // f would sit on the boundary
      Split s(a, b, floor_int(v));
      if (used) used->push_back(s);
      rows.push_back(cut_row(LatticeFreeBody(s), inst));
    }
  return solve_min_sum(LPProblem::from_cut_rows(rows));
}

}  // namespace latcut
