#pragma once

#include <algorithm>
#include <optional>
#include <tuple>
#include <vector>

#include "latcut/rational.hpp"

namespace latcut {

struct Point2 {
  Rational x1, x2;

  Point2() = default;
  Point2(Rational a, Rational b) : x1(std::move(a)), x2(std::move(b)) {}

  friend bool operator==(const Point2&, const Point2&) = default;
  /// Lexicographic order, used for deterministic enumeration output.
  friend bool operator<(const Point2& a, const Point2& b) {
    return a.x1 != b.x1 ? a.x1 < b.x1 : a.x2 < b.x2;
  }
};

/// Direction vector. Where the contract requires a nonzero ray (instances,
/// gauge evaluation, pseudo-split directions) the consuming API validates.
struct Ray2 {
  Rational d1, d2;

  Ray2() : d1(0), d2(0) {}
  Ray2(Rational a, Rational b) : d1(std::move(a)), d2(std::move(b)) {}

  bool is_zero() const { return d1 == 0 && d2 == 0; }

  friend bool operator==(const Ray2&, const Ray2&) = default;
};

inline void require_nonzero(const Ray2& r, const char* what = "ray") {
  if (r.is_zero()) throw ParamOutOfRange(std::string(what) + " must be nonzero");
}

inline Point2 operator+(const Point2& p, const Ray2& r) { return {p.x1 + r.d1, p.x2 + r.d2}; }
inline Ray2 operator-(const Point2& p, const Point2& q) { return Ray2(p.x1 - q.x1, p.x2 - q.x2); }
inline Ray2 operator*(const Rational& k, const Ray2& r) { return Ray2(k * r.d1, k * r.d2); }

inline Rational cross(const Ray2& a, const Ray2& b) { return a.d1 * b.d2 - a.d2 * b.d1; }
inline Rational dot(const Ray2& a, const Ray2& b) { return a.d1 * b.d1 + a.d2 * b.d2; }

inline bool is_lattice_point(const Point2& p) { return is_integral(p.x1) && is_integral(p.x2); }

/// True iff a and b point the same way (b = k*a for some k > 0).
inline bool positively_parallel(const Ray2& a, const Ray2& b) {
  return cross(a, b) == 0 && dot(a, b) > 0;
}

/// Line a*x1 + b*x2 = c with integer coefficients, gcd(a,b,c) = 1 and the
/// first nonzero of (a,b) positive.
struct Line2 {
  BigInt a, b, c;

  Line2(const Rational& ra, const Rational& rb, const Rational& rc) {
    if (ra == 0 && rb == 0) throw InvalidBody("line requires (a,b) != 0");
    BigInt l = denominator(ra);
    l = l / gcd(l, denominator(rb)) * denominator(rb);
    l = l / gcd(l, denominator(rc)) * denominator(rc);
    a = numerator(ra * l);
    b = numerator(rb * l);
    c = numerator(rc * l);
    BigInt g = gcd(gcd(abs(a), abs(b)), abs(c));
    if (g > 1) { a /= g; b /= g; c /= g; }
    if (a < 0 || (a == 0 && b < 0)) { a = -a; b = -b; c = -c; }
  }

  static Line2 through(const Point2& p, const Point2& q) {
    if (p == q) throw InvalidBody("line through two equal points");
    // normal = rot90(q - p)
    return Line2(p.x2 - q.x2, q.x1 - p.x1, p.x2 * q.x1 - p.x1 * q.x2);
  }

  static Line2 through_dir(const Point2& p, const Ray2& d) {
    return Line2(-d.d2, d.d1, -d.d2 * p.x1 + d.d1 * p.x2);
  }

  Rational eval(const Point2& p) const {
    return Rational(a) * p.x1 + Rational(b) * p.x2 - Rational(c);
  }
  bool contains(const Point2& p) const { return eval(p) == 0; }

  friend bool operator==(const Line2&, const Line2&) = default;
};

/// Primitive integer vector positively parallel to r.
inline std::pair<BigInt, BigInt> primitive_direction(const Ray2& r) {
  require_nonzero(r);
  BigInt l = denominator(r.d1) / gcd(denominator(r.d1), denominator(r.d2)) * denominator(r.d2);
  BigInt u = numerator(r.d1 * l), v = numerator(r.d2 * l);
  BigInt g = gcd(abs(u), abs(v));
  return {u / g, v / g};
}

/// Whether the full line {p + t*d : t in R} passes through any lattice point.
/// With d primitive this reduces to d1*p2 - d2*p1 being an integer.
inline bool line_contains_lattice_point(const Point2& p, const Ray2& d) {
  auto [u, v] = primitive_direction(d);
  return is_integral(Rational(u) * p.x2 - Rational(v) * p.x1);
}

inline bool collinear(const Point2& p, const Point2& q, const Point2& r) {
  return (q.x1 - p.x1) * (r.x2 - p.x2) == (q.x2 - p.x2) * (r.x1 - p.x1);
}

/// p strictly inside the segment (q, r); q != r required.
inline bool in_open_segment(const Point2& p, const Point2& q, const Point2& r) {
  if (!collinear(p, q, r)) return false;
  if (q.x1 != r.x1) return (p.x1 > q.x1) != (p.x1 > r.x1) && p.x1 != q.x1 && p.x1 != r.x1;
  return (p.x2 > q.x2) != (p.x2 > r.x2) && p.x2 != q.x2 && p.x2 != r.x2;
}

inline bool in_closed_segment(const Point2& p, const Point2& q, const Point2& r) {
  return p == q || p == r || in_open_segment(p, q, r);
}

namespace detail {
/// Extended gcd: returns (g, x, y) with a*x + b*y = g.
inline std::tuple<BigInt, BigInt, BigInt> ext_gcd(BigInt a, BigInt b) {
  BigInt x0 = 1, y0 = 0, x1 = 0, y1 = 1;
  while (b != 0) {
    BigInt q = a / b;
    std::tie(a, b) = std::make_tuple(b, a - q * b);
    std::tie(x0, x1) = std::make_tuple(x1, x0 - q * x1);
    std::tie(y0, y1) = std::make_tuple(y1, y0 - q * y1);
  }
  if (a < 0) { a = -a; x0 = -x0; y0 = -y0; }
  return {a, x0, y0};
}
}  // namespace detail

/// Lattice points on segment pq. `closed` includes the endpoints.
inline std::vector<Point2> segment_lattice_points(const Point2& p, const Point2& q, bool closed) {
  std::vector<Point2> out;
  if (p == q) {
    if (closed && is_lattice_point(p)) out.push_back(p);
    return out;
  }
  Line2 line = Line2::through(p, q);
  // a*x + b*y = c has integer solutions iff gcd(a,b) | c.
  auto [g, x0, y0] = detail::ext_gcd(line.a, line.b);
  if (line.c % g != 0) return out;
  BigInt scale = line.c / g;
  Rational bx = Rational(x0 * scale), by = Rational(y0 * scale);
  // Step direction along the line.
  BigInt sx = -line.b / g, sy = line.a / g;
  // Clamp the parameter k so that (bx + k*sx, by + k*sy) stays in the segment.
  Rational lo, hi;
  if (sx != 0) {
    Rational k1 = (p.x1 - bx) / sx, k2 = (q.x1 - bx) / sx;
    lo = k1 < k2 ? k1 : k2;
    hi = k1 < k2 ? k2 : k1;
  } else {
    Rational k1 = (p.x2 - by) / sy, k2 = (q.x2 - by) / sy;
    lo = k1 < k2 ? k1 : k2;
    hi = k1 < k2 ? k2 : k1;
  }
  for (BigInt k = ceil_int(lo); k <= floor_int(hi); ++k) {
    Point2 z{bx + Rational(k * sx), by + Rational(k * sy)};
    if (closed ? in_closed_segment(z, p, q) : in_open_segment(z, p, q)) out.push_back(z);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace latcut
