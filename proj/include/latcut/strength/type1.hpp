#pragma once

#include <vector>

#include "latcut/strength/report.hpp"
#include "latcut/transform.hpp"

namespace latcut {

/// The reference Type 1 triangle with corners (0,0), (2,0), (0,2).
inline Triangle type1_reference_triangle() {
  return Triangle(Point2{Rational(0), Rational(0)}, Point2{Rational(2), Rational(0)},
                  Point2{Rational(0), Rational(2)});
}

enum class Type1Region { Inner, Corner };

/// f mapped into the inner triangle or the corner triangle at the origin by
/// one of the six lattice symmetries of the reference triangle.
struct Type1Canonical {
  Unimodular map;        // canonical = map(f)
  Point2 f_canonical;
  Type1Region region;
};

namespace detail {
/// Rotation of the reference triangle: (0,0) -> (2,0) -> (0,2) -> (0,0).
inline Unimodular type1_rotation() { return Unimodular(-1, -1, 1, 0, 2, 0); }
}  // namespace detail

inline Type1Canonical canonicalize_type1(const Point2& f) {
  const Rational one(1), two(2);
  if (!(f.x1 > 0 && f.x2 > 0 && f.x1 + f.x2 < two))
    throw FNotInterior("f must be strictly inside the reference Type 1 triangle");
  if (f.x1 + f.x2 > one && f.x1 < one && f.x2 < one)
    return {Unimodular(), f, Type1Region::Inner};
  if (f.x1 + f.x2 <= one) return {Unimodular(), f, Type1Region::Corner};
  Unimodular rot = detail::type1_rotation();
  if (f.x1 >= one) {
    Unimodular inv = rot.inverse();  // corner (2,0) -> origin corner
    return {inv, inv(f), Type1Region::Corner};
  }
  return {rot, rot(f), Type1Region::Corner};  // corner (0,2) -> origin corner
}

/// The splits that define the whole split closure for this f: three in the
/// inner triangle, two in the corner region (in original coordinates).
inline std::vector<LatticeFreeBody> dominant_splits_type1(const Point2& f) {
  Type1Canonical canon = canonicalize_type1(f);
  std::vector<Split> canonical;
  if (canon.region == Type1Region::Inner)
    canonical = {Split(1, 1, 1), Split(1, 0, 0), Split(0, 1, 0)};
  else
    canonical = {Split(1, 0, 0), Split(0, 1, 0)};
  Unimodular back = canon.map.inverse();
  std::vector<LatticeFreeBody> out;
  out.reserve(canonical.size());
  for (const auto& s : canonical) out.push_back(back.apply(s));
  return out;
}

/// Instance with the three corner rays of the reference triangle.
inline Instance type1_corner_instance(const Point2& f) {
  Triangle t = type1_reference_triangle();
  return Instance(f, {t.v[0] - f, t.v[1] - f, t.v[2] - f});
}

/// Strength of the Type 1 triangle facet against the split closure:
/// 1/2 in the inner triangle, 1 - 1/(3 - f1 - f2) in the corner triangle
/// (after symmetry mapping). The closed form is cross-checked against the
/// exact LP over the dominant splits.
inline StrengthReport type1_split_strength(const Point2& f) {
  Type1Canonical canon = canonicalize_type1(f);
  Rational closed_form;
  if (canon.region == Type1Region::Inner) {
    closed_form = Rational(1, 2);
  } else {
    Rational d = Rational(3) - canon.f_canonical.x1 - canon.f_canonical.x2;
    closed_form = 1 - 1 / d;
  }

  Instance inst = type1_corner_instance(f);
  std::vector<CutRow> rows;
  for (const auto& split : dominant_splits_type1(f)) rows.push_back(cut_row(split, inst));
  LPSolution sol = solve_min_sum(LPProblem::from_cut_rows(rows));
  if (sol.value != closed_form)
    throw InternalError("closed form disagrees with the dominant-split LP");
  return {closed_form, sol.value, canon.region == Type1Region::Inner ? "inner" : "corner",
          std::move(sol)};
}

/// One cell of the strength level-curve grid.
struct GridCell {
  Point2 f;
  Rational value;
  std::string region;
};

/// Rational grid over the interior of the reference triangle: f = (i/r, j/r)
/// for i, j >= 1 and i + j <= 2r - 1.
inline std::vector<GridCell> level_curve_grid(int resolution) {
  if (resolution < 2) throw ParamOutOfRange("grid resolution must be at least 2");
  std::vector<GridCell> cells;
  for (int i = 1; i <= 2 * resolution - 2; ++i)
    for (int j = 1; i + j <= 2 * resolution - 1; ++j) {
      Point2 f{Rational(i, resolution), Rational(j, resolution)};
      StrengthReport rep = type1_split_strength(f);
      cells.push_back({f, rep.value, rep.region_tag});
    }
  return cells;
}

inline std::string level_curve_csv(const std::vector<GridCell>& cells) {
  std::string out = "f1,f2,value,region\n";
  for (const auto& c : cells) {
    out += format_rational(c.f.x1) + ',' + format_rational(c.f.x2) + ',' +
           format_rational(c.value) + ',' + c.region + '\n';
  }
  return out;
}

}  // namespace latcut
