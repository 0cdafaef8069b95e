#pragma once

#include <optional>
#include <vector>

#include "latcut/body.hpp"

namespace latcut {

/// Integer bounding box for lattice enumeration.
struct Box {
  BigInt x1_lo, x1_hi, x2_lo, x2_hi;
};

inline Box bounding_box(const LatticeFreeBody& body) {
  auto vs = vertices(body);
  Rational x1_lo = vs[0].x1, x1_hi = vs[0].x1, x2_lo = vs[0].x2, x2_hi = vs[0].x2;
  for (const auto& p : vs) {
    x1_lo = std::min(x1_lo, p.x1);
    x1_hi = std::max(x1_hi, p.x1);
    x2_lo = std::min(x2_lo, p.x2);
    x2_hi = std::max(x2_hi, p.x2);
  }
  return {floor_int(x1_lo), ceil_int(x1_hi), floor_int(x2_lo), ceil_int(x2_hi)};
}

namespace detail {

/// Rational x2-interval of the region within one integer column, intersected
/// constraint by constraint. Empty when infeasible.
struct ColumnInterval {
  std::optional<Rational> lo, hi;  // absent = unbounded on that side
  bool empty = false;

  // coeff * x2 {<=,<} bound
  void add(const Rational& coeff, const Rational& bound, bool strict_region) {
    if (empty) return;
    if (coeff == 0) {
      if (strict_region ? !(bound > 0) : !(bound >= 0)) empty = true;
      return;
    }
    Rational limit = bound / coeff;
    if (coeff > 0) {
      if (!hi || limit < *hi) hi = limit;
    } else {
      if (!lo || limit > *lo) lo = limit;
    }
  }

  /// Integer points of the interval; strictness rounds endpoints inward.
  template <typename Emit>
  void each_integer(bool strict_region, Emit&& emit) const {
    if (empty || !lo || !hi) throw UnboundedEnumeration("column interval unbounded");
    BigInt a = ceil_int(*lo), b = floor_int(*hi);
    if (strict_region) {
      if (Rational(a) == *lo) ++a;
      if (Rational(b) == *hi) --b;
    }
    for (BigInt j = a; j <= b; ++j) emit(j);
  }
};

inline ColumnInterval column_interval(const LatticeFreeBody& body, const BigInt& col,
                                      bool strict) {
  ColumnInterval iv;
  Rational x1(col);
  std::visit(
      [&](const auto& b) {
        using T = std::decay_t<decltype(b)>;
        if constexpr (std::is_same_v<T, Split>) {
          // c <= a x1 + b x2 <= c+1
          iv.add(Rational(b.b), Rational(b.c + 1) - Rational(b.a) * x1, strict);
          iv.add(Rational(-b.b), Rational(b.a) * x1 - Rational(b.c), strict);
        } else if constexpr (std::is_same_v<T, PseudoSplit>) {
          // cross(x - p1, d) strictly between 0 and cross(p2 - p1, d)
          Rational span = cross(b.p2 - b.p1, b.direction);
          Rational c0 = (x1 - b.p1.x1) * b.direction.d2 + b.p1.x2 * b.direction.d1;
          // v1(x2) = c0 - d1 x2; constraints: v1 between 0 and span
          if (span > 0) {
            iv.add(b.direction.d1, c0, strict);            // v1 >= 0
            iv.add(-b.direction.d1, span - c0, strict);    // v1 <= span
          } else {
            iv.add(-b.direction.d1, -c0, strict);          // v1 <= 0
            iv.add(b.direction.d1, c0 - span, strict);     // v1 >= span
          }
        } else {
          for (const auto& e : edges(b))
            iv.add(e.normal.d2, e.rhs - e.normal.d1 * x1, strict);
        }
      },
      body);
  return iv;
}

}  // namespace detail

/// Integral points of the (closed or open) region, sorted lexicographically.
/// Unbounded bodies need an explicit box; bounded bodies sweep one integer
/// column at a time, so long slivers stay cheap.
inline std::vector<Point2> lattice_points_in(const LatticeFreeBody& body, bool include_boundary,
                                             std::optional<Box> box = std::nullopt) {
  if (!box) {
    if (!is_bounded(body))
      throw UnboundedEnumeration("split/pseudo-split enumeration needs a bounding box");
    box = bounding_box(body);
  }
  bool strict = !include_boundary;
  std::vector<Point2> out;
  for (BigInt i = box->x1_lo; i <= box->x1_hi; ++i) {
    auto iv = detail::column_interval(body, i, strict);
    if (iv.empty) continue;
    // Clamp with the box limits (only binding for unbounded bodies).
    if (!iv.lo || Rational(box->x2_lo) > *iv.lo) iv.lo = Rational(box->x2_lo);
    if (!iv.hi || Rational(box->x2_hi) < *iv.hi) iv.hi = Rational(box->x2_hi);
    iv.each_integer(strict, [&](const BigInt& j) {
      out.emplace_back(Rational(i), Rational(j));
    });
  }
  return out;
}

inline std::vector<Point2> interior_lattice_points(const LatticeFreeBody& body,
                                                   std::optional<Box> box = std::nullopt) {
  return lattice_points_in(body, /*include_boundary=*/false, box);
}

inline bool is_lattice_free(const LatticeFreeBody& body, std::optional<Box> box = std::nullopt) {
  if (std::holds_alternative<Split>(body)) return true;  // a*z integral for z integral
  return interior_lattice_points(body, box).empty();
}

}  // namespace latcut
