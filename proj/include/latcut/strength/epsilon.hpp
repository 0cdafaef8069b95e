#pragma once

#include <vector>

#include "latcut/classify.hpp"
#include "latcut/strength/report.hpp"
#include "latcut/transform.hpp"

namespace latcut {

enum class SplitApproxMode { TriangleFamily, QuadrilateralFamily };

namespace detail {

struct TangentSlopes {
  Rational left;   // slope of the line through the left anchor
  Rational right;  // slope of the line through the right anchor
};

/// Tangent-style slopes keeping every p strictly below the two lines through
/// (anchor_x, 1) and (anchor_x + 1, 1). Capping at 1 keeps the apex below
/// height 2, which keeps the triangle lattice-free.
inline TangentSlopes upper_slopes(const std::vector<Point2>& pts, const BigInt& anchor_x) {
  Rational s_left(1), s_right(1);
  for (const auto& p : pts) {
    Rational y(anchor_x);
    if (p.x1 < y) {
      Rational bound = (1 - p.x2) / (y - p.x1) / 2;
      if (bound < s_left) s_left = bound;
    }
    if (p.x1 > y + 1) {
      Rational bound = (1 - p.x2) / (p.x1 - (y + 1)) / 2;
      if (bound < s_right) s_right = bound;
    }
  }
  return {s_left, -s_right};
}

/// Mirror image for the lines through (anchor_x, 0) and (anchor_x + 1, 0).
inline TangentSlopes lower_slopes(const std::vector<Point2>& pts, const BigInt& anchor_x) {
  Rational s_left(1), s_right(1);
  for (const auto& p : pts) {
    Rational y(anchor_x);
    if (p.x1 < y) {
      Rational bound = p.x2 / (y - p.x1) / 2;
      if (bound < s_left) s_left = bound;
    }
    if (p.x1 > y + 1) {
      Rational bound = p.x2 / (p.x1 - (y + 1)) / 2;
      if (bound < s_right) s_right = bound;
    }
  }
  return {-s_left, s_right};
}

inline Point2 line_intersection(const Point2& p, const Rational& slope_p, const Point2& q,
                                const Rational& slope_q) {
  // x2 = p2 + sp (x1 - p1) meets x2 = q2 + sq (x1 - q1)
  Rational x1 = (q.x2 - p.x2 + slope_p * p.x1 - slope_q * q.x1) / (slope_p - slope_q);
  return {x1, p.x2 + slope_p * (x1 - p.x1)};
}

}  // namespace detail

/// Builds a lattice-free body whose inequality cuts off the same point that a
/// violated split inequality cuts off, with slack at least epsilon/2. The
/// triangle family leans on the split's far boundary line and two lines
/// through consecutive lattice points on the near line; the quadrilateral
/// family closes both sides.
inline LatticeFreeBody epsilon_body_for_split(const Split& split, const Instance& inst,
                                              const std::vector<Rational>& s_bar,
                                              SplitApproxMode mode) {
  if (s_bar.size() != inst.k()) throw ParamOutOfRange("violating point length mismatch");
  for (const auto& s : s_bar)
    if (s < 0) throw ParamOutOfRange("violating point must be nonnegative");

  LatticeFreeBody body(split);
  Rational lhs(0), s_max(0);
  std::vector<Rational> coeff;
  coeff.reserve(inst.k());
  for (size_t i = 0; i < inst.k(); ++i) {
    coeff.push_back(psi(body, inst.f, inst.rays[i]));
    lhs += coeff.back() * s_bar[i];
    if (s_bar[i] > s_max) s_max = s_bar[i];
  }
  Rational eps = 1 - lhs;
  if (eps <= 0) throw NotViolated("point satisfies the split inequality");

  Rational delta = s_max > 0 ? eps / (Rational(2 * inst.k()) * s_max) : Rational(1);

  // Work in coordinates where the split is 0 <= x2 <= 1.
  Unimodular to_strip = normalize_split_to_horizontal(split);
  Point2 f = to_strip(inst.f);
  std::vector<Point2> pts;
  pts.reserve(inst.k());
  for (size_t i = 0; i < inst.k(); ++i) {
    Ray2 r = to_strip(inst.rays[i]);
    pts.push_back(f + (1 / (coeff[i] + delta)) * r);
  }

  BigInt anchor = floor_int(f.x1);
  auto up = detail::upper_slopes(pts, anchor);
  Point2 y1{Rational(anchor), Rational(1)}, y2{Rational(anchor + 1), Rational(1)};
  Point2 apex_top = detail::line_intersection(y1, up.left, y2, up.right);

  Unimodular back = to_strip.inverse();
  if (mode == SplitApproxMode::TriangleFamily) {
    // Base corners on the far line x2 = 0.
    Point2 c1{y1.x1 - 1 / up.left, Rational(0)};
    Point2 c2{y2.x1 - 1 / up.right, Rational(0)};
    return back.apply(Triangle(c1, c2, apex_top));
  }
  auto low = detail::lower_slopes(pts, anchor);
  Point2 y3{Rational(anchor), Rational(0)}, y4{Rational(anchor + 1), Rational(0)};
  Point2 apex_bottom = detail::line_intersection(y3, low.left, y4, low.right);
  Point2 left = detail::line_intersection(y1, up.left, y3, low.left);
  Point2 right = detail::line_intersection(y2, up.right, y4, low.right);
  return back.apply(Quadrilateral(left, apex_bottom, right, apex_top));
}

/// Theorem-level entry point: a Type 2 triangle dominating the split cut at
/// the violated point.
inline LatticeFreeBody epsilon_triangle_for_split(const Split& split, const Instance& inst,
                                                  const std::vector<Rational>& s_bar) {
  return epsilon_body_for_split(split, inst, s_bar, SplitApproxMode::TriangleFamily);
}

}  // namespace latcut
