#pragma once

#include <array>
#include <variant>
#include <vector>

#include "latcut/geometry.hpp"

namespace latcut {

/// Split region c <= a*x1 + b*x2 <= c+1 with a, b coprime integers.
struct Split {
  BigInt a, b, c;

  Split(BigInt a_, BigInt b_, BigInt c_) : a(std::move(a_)), b(std::move(b_)), c(std::move(c_)) {
    if (a == 0 && b == 0) throw InvalidBody("split requires (a,b) != 0");
    if (gcd(abs(a), abs(b)) != 1) throw InvalidBody("split normal must be coprime");
  }

  Rational value_at(const Point2& p) const { return Rational(a) * p.x1 + Rational(b) * p.x2; }
  /// Direction of the split (its recession line).
  Ray2 direction() const { return Ray2(Rational(-b), Rational(a)); }

  friend bool operator==(const Split&, const Split&) = default;
};

namespace detail {
inline Rational twice_signed_area(const Point2& a, const Point2& b, const Point2& c) {
  return (b.x1 - a.x1) * (c.x2 - a.x2) - (b.x2 - a.x2) * (c.x1 - a.x1);
}
}  // namespace detail

struct Triangle {
  std::array<Point2, 3> v;  // counterclockwise

  explicit Triangle(std::array<Point2, 3> vv) : v(std::move(vv)) {
    Rational area2 = detail::twice_signed_area(v[0], v[1], v[2]);
    if (area2 == 0) throw InvalidBody("degenerate triangle");
    if (area2 < 0) std::swap(v[1], v[2]);
  }
  Triangle(Point2 a, Point2 b, Point2 c) : Triangle(std::array<Point2, 3>{a, b, c}) {}

  friend bool operator==(const Triangle&, const Triangle&) = default;
};

struct Quadrilateral {
  std::array<Point2, 4> v;  // convex, counterclockwise cyclic order

  explicit Quadrilateral(std::array<Point2, 4> vv) : v(std::move(vv)) {
    Rational turn = detail::twice_signed_area(v[0], v[1], v[2]);
    if (turn < 0) std::reverse(v.begin(), v.end());
    for (int i = 0; i < 4; ++i) {
      Rational t = detail::twice_signed_area(v[i], v[(i + 1) % 4], v[(i + 2) % 4]);
      if (t <= 0) throw InvalidBody("quadrilateral must be strictly convex in cyclic order");
    }
  }
  Quadrilateral(Point2 a, Point2 b, Point2 c, Point2 d)
      : Quadrilateral(std::array<Point2, 4>{a, b, c, d}) {}

  friend bool operator==(const Quadrilateral&, const Quadrilateral&) = default;
};

/// Region between two distinct parallel lines through p1 and p2. Not required
/// to be lattice-free; used as a dominating surrogate for genuine splits.
struct PseudoSplit {
  Point2 p1, p2;
  Ray2 direction;

  PseudoSplit(Point2 a, Point2 b, Ray2 d)
      : p1(std::move(a)), p2(std::move(b)), direction(std::move(d)) {
    require_nonzero(direction, "pseudo-split direction");
    if (p1 == p2) throw InvalidBody("pseudo-split anchors must differ");
    if (cross(p2 - p1, direction) == 0)
      throw InvalidBody("pseudo-split boundary lines must be distinct");
  }

  friend bool operator==(const PseudoSplit&, const PseudoSplit&) = default;
};

using LatticeFreeBody = std::variant<Split, Triangle, Quadrilateral, PseudoSplit>;

/// Inward edge constraint n.x <= rhs for bounded bodies; interior is strict.
struct EdgeConstraint {
  Ray2 normal;
  Rational rhs;
  Point2 from, to;  // edge segment endpoints (ccw)

  Rational slack(const Point2& p) const { return rhs - dot(normal, p - Point2{0, 0}); }
};

namespace detail {
template <size_t N>
inline std::vector<EdgeConstraint> polygon_edges(const std::array<Point2, N>& v) {
  std::vector<EdgeConstraint> out;
  for (size_t i = 0; i < N; ++i) {
    const Point2& p = v[i];
    const Point2& q = v[(i + 1) % N];
    Ray2 e = q - p;
    Ray2 n(e.d2, -e.d1);  // outward for ccw polygons
    out.push_back({n, dot(n, p - Point2{0, 0}), p, q});
  }
  return out;
}
}  // namespace detail

inline std::vector<EdgeConstraint> edges(const Triangle& t) { return detail::polygon_edges(t.v); }
inline std::vector<EdgeConstraint> edges(const Quadrilateral& q) { return detail::polygon_edges(q.v); }

inline bool is_bounded(const LatticeFreeBody& body) {
  return std::holds_alternative<Triangle>(body) || std::holds_alternative<Quadrilateral>(body);
}

inline std::vector<Point2> vertices(const LatticeFreeBody& body) {
  if (auto* t = std::get_if<Triangle>(&body)) return {t->v.begin(), t->v.end()};
  if (auto* q = std::get_if<Quadrilateral>(&body)) return {q->v.begin(), q->v.end()};
  throw InvalidBody("unbounded body has no vertex list");
}

namespace detail {
/// Signed positions of p between the two pseudo-split boundary lines.
inline std::pair<Rational, Rational> pseudo_split_sides(const PseudoSplit& s, const Point2& p) {
  return {cross(p - s.p1, s.direction), cross(p - s.p2, s.direction)};
}
}  // namespace detail

inline bool contains(const LatticeFreeBody& body, const Point2& p, bool strictly) {
  return std::visit(
      [&](const auto& b) -> bool {
        using T = std::decay_t<decltype(b)>;
        if constexpr (std::is_same_v<T, Split>) {
          Rational v = b.value_at(p);
          return strictly ? (Rational(b.c) < v && v < Rational(b.c + 1))
                          : (Rational(b.c) <= v && v <= Rational(b.c + 1));
        } else if constexpr (std::is_same_v<T, PseudoSplit>) {
          auto [s1, s2] = detail::pseudo_split_sides(b, p);
          if (strictly) return (s1 < 0 && s2 > 0) || (s1 > 0 && s2 < 0);
          return (s1 <= 0 && s2 >= 0) || (s1 >= 0 && s2 <= 0);
        } else {
          for (const auto& e : edges(b)) {
            Rational s = e.slack(p);
            if (strictly ? s <= 0 : s < 0) return false;
          }
          return true;
        }
      },
      body);
}

inline bool on_boundary(const LatticeFreeBody& body, const Point2& p) {
  return contains(body, p, false) && !contains(body, p, true);
}

}  // namespace latcut
