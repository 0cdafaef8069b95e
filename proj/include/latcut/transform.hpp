#pragma once

#include "latcut/body.hpp"

namespace latcut {

/// Affine lattice isomorphism x -> M x + t with integer M, |det M| = 1,
/// integer translation t. Rays transform without the translation.
struct Unimodular {
  BigInt m11{1}, m12{0}, m21{0}, m22{1};
  BigInt t1{0}, t2{0};

  Unimodular() = default;
  Unimodular(BigInt a, BigInt b, BigInt c, BigInt d, BigInt u = 0, BigInt v = 0)
      : m11(std::move(a)), m12(std::move(b)), m21(std::move(c)), m22(std::move(d)),
        t1(std::move(u)), t2(std::move(v)) {
    BigInt det = m11 * m22 - m12 * m21;
    if (det != 1 && det != -1) throw NotUnimodular("matrix determinant must be +-1");
  }

  BigInt det() const { return m11 * m22 - m12 * m21; }

  Unimodular inverse() const {
    BigInt d = det();  // +-1, so the adjugate over det stays integral
    Unimodular inv(m22 * d, -m12 * d, -m21 * d, m11 * d);
    inv.t1 = -(inv.m11 * t1 + inv.m12 * t2);
    inv.t2 = -(inv.m21 * t1 + inv.m22 * t2);
    return inv;
  }

  Point2 operator()(const Point2& p) const {
    return {Rational(m11) * p.x1 + Rational(m12) * p.x2 + Rational(t1),
            Rational(m21) * p.x1 + Rational(m22) * p.x2 + Rational(t2)};
  }

  Ray2 operator()(const Ray2& r) const {
    return {Rational(m11) * r.d1 + Rational(m12) * r.d2,
            Rational(m21) * r.d1 + Rational(m22) * r.d2};
  }

  LatticeFreeBody operator()(const LatticeFreeBody& body) const {
    return std::visit([&](const auto& b) -> LatticeFreeBody { return apply(b); }, body);
  }

  Split apply(const Split& s) const {
    // Normals transform by the inverse: a' = a M^{-1}, c' = c + a'. t.
    Unimodular inv = inverse();
    BigInt a2 = s.a * inv.m11 + s.b * inv.m21;
    BigInt b2 = s.a * inv.m12 + s.b * inv.m22;
    BigInt c2 = s.c + a2 * t1 + b2 * t2;
    return Split(a2, b2, c2);
  }

  Triangle apply(const Triangle& tr) const {
    return Triangle((*this)(tr.v[0]), (*this)(tr.v[1]), (*this)(tr.v[2]));
  }

  Quadrilateral apply(const Quadrilateral& q) const {
    return Quadrilateral((*this)(q.v[0]), (*this)(q.v[1]), (*this)(q.v[2]), (*this)(q.v[3]));
  }

  PseudoSplit apply(const PseudoSplit& s) const {
    return PseudoSplit((*this)(s.p1), (*this)(s.p2), (*this)(s.direction));
  }
};

/// Composition: (a. b)(x) = a(b(x)).
inline Unimodular compose(const Unimodular& a, const Unimodular& b) {
  Unimodular c(a.m11 * b.m11 + a.m12 * b.m21, a.m11 * b.m12 + a.m12 * b.m22,
               a.m21 * b.m11 + a.m22 * b.m21, a.m21 * b.m12 + a.m22 * b.m22);
  c.t1 = a.m11 * b.t1 + a.m12 * b.t2 + a.t1;
  c.t2 = a.m21 * b.t1 + a.m22 * b.t2 + a.t2;
  return c;
}

/// Unimodular map sending the split's normal form to 0 <= x2 <= 1, built by
/// completing (a, b) to a basis with the extended gcd.
inline Unimodular normalize_split_to_horizontal(const Split& s) {
  auto [g, x, y] = detail::ext_gcd(s.b, -s.a);
  // row1 = (x, y) with x*b - y*a = 1, row2 = (a, b): det = +1
  Unimodular map(x, y, s.a, s.b);
  map.t2 = -s.c;
  return map;
}

}  // namespace latcut
