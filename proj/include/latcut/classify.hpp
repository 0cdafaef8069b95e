#pragma once

#include <string>

#include "latcut/lattice.hpp"

namespace latcut {

enum class Classification {
  Split,
  TriangleType1,
  TriangleType2,
  TriangleType3,
  Quadrilateral,
  NotLatticeFree,
  NotMaximal,
};

inline const char* to_string(Classification c) {
  switch (c) {
    case Classification::Split: return "Split";
    case Classification::TriangleType1: return "TriangleType1";
    case Classification::TriangleType2: return "TriangleType2";
    case Classification::TriangleType3: return "TriangleType3";
    case Classification::Quadrilateral: return "Quadrilateral";
    case Classification::NotLatticeFree: return "NotLatticeFree";
    case Classification::NotMaximal: return "NotMaximal";
  }
  return "?";
}

namespace detail {

inline Classification classify_triangle(const Triangle& t) {
  if (!interior_lattice_points(t).empty()) return Classification::NotLatticeFree;

  auto es = edges(t);
  std::vector<std::vector<Point2>> rel_int(3);
  for (int i = 0; i < 3; ++i) {
    rel_int[i] = segment_lattice_points(es[i].from, es[i].to, /*closed=*/false);
    if (rel_int[i].empty()) return Classification::NotMaximal;
  }

  bool all_vertices_integral =
      is_lattice_point(t.v[0]) && is_lattice_point(t.v[1]) && is_lattice_point(t.v[2]);
  if (all_vertices_integral) return Classification::TriangleType1;

  size_t boundary_count = rel_int[0].size() + rel_int[1].size() + rel_int[2].size();
  for (const auto& p : t.v)
    if (is_lattice_point(p)) ++boundary_count;
  if (boundary_count == 3) return Classification::TriangleType3;

  // Type 2: a fractional vertex whose incident edges carry exactly one
  // integral point each while the opposite edge carries at least two.
  for (int i = 0; i < 3; ++i) {
    if (is_lattice_point(t.v[i])) continue;
    // edges incident to vertex i are (i-1, i) and (i, i+1); opposite is (i+1, i+2)
    int incident_a = (i + 2) % 3, incident_b = i, opposite = (i + 1) % 3;
    if (rel_int[incident_a].size() == 1 && rel_int[incident_b].size() == 1 &&
        rel_int[opposite].size() >= 2)
      return Classification::TriangleType2;
  }
  throw InternalError("maximal lattice-free triangle escaped the type taxonomy");
}

inline Classification classify_quadrilateral(const Quadrilateral& q) {
  if (!interior_lattice_points(q).empty()) return Classification::NotLatticeFree;

  std::vector<Point2> boundary;
  auto es = edges(q);
  for (int i = 0; i < 4; ++i) {
    auto pts = segment_lattice_points(es[i].from, es[i].to, /*closed=*/false);
    if (pts.size() != 1) return Classification::NotMaximal;
    boundary.push_back(pts[0]);
  }
  for (const auto& v : q.v)
    if (is_lattice_point(v)) return Classification::NotMaximal;

  // The four points must be the vertices of a parallelogram of area 1. In
  // cyclic edge order opposite points pair up, so midpoints of the diagonals
  // coincide exactly when boundary[0]+boundary[2] == boundary[1]+boundary[3].
  if (boundary[0].x1 + boundary[2].x1 != boundary[1].x1 + boundary[3].x1 ||
      boundary[0].x2 + boundary[2].x2 != boundary[1].x2 + boundary[3].x2)
    return Classification::NotMaximal;
  Rational area = cross(boundary[1] - boundary[0], boundary[3] - boundary[0]);
  if (area != 1 && area != -1) return Classification::NotMaximal;
  return Classification::Quadrilateral;
}

}  // namespace detail

/// Lovasz / Dey-Wolsey classification of a candidate maximal lattice-free
/// body. Splits with coprime normals are always lattice-free and are treated
/// as maximal. Pseudo-splits are not classifiable here.
inline Classification classify(const LatticeFreeBody& body) {
  return std::visit(
      [](const auto& b) -> Classification {
        using T = std::decay_t<decltype(b)>;
        if constexpr (std::is_same_v<T, Split>) return Classification::Split;
        else if constexpr (std::is_same_v<T, Triangle>) return detail::classify_triangle(b);
        else if constexpr (std::is_same_v<T, Quadrilateral>) return detail::classify_quadrilateral(b);
        else throw InvalidBody("pseudo-splits have no maximality classification");
      },
      body);
}

}  // namespace latcut
