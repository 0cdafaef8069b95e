#pragma once

#include <string>
#include <vector>

#include "latcut/classify.hpp"
#include "latcut/gauge.hpp"

namespace latcut {

struct BoundaryPoint {
  Point2 p;
  size_t ray_index;
};

/// Boundary points p_j = f + lambda_j r_j for the rays with psi > 0.
struct BoundaryPointSet {
  std::vector<BoundaryPoint> points;
  LatticeFreeBody body;
};

inline BoundaryPointSet boundary_points(const LatticeFreeBody& body, const Instance& inst) {
  BoundaryPointSet set{{}, body};
  for (size_t j = 0; j < inst.k(); ++j) {
    auto lam = boundary_lambda(body, inst.f, inst.rays[j]);
    if (lam) set.points.push_back({inst.f + *lam * inst.rays[j], j});
  }
  return set;
}

/// A point is active iff it is integral or some segment to another point of
/// the set contains an integral point in its interior.
inline bool is_active(const Point2& p, const BoundaryPointSet& set) {
  if (is_lattice_point(p)) return true;
  for (const auto& q : set.points) {
    if (q.p == p) continue;
    if (!segment_lattice_points(p, q.p, /*closed=*/false).empty()) return true;
  }
  return false;
}

namespace detail {

/// Number of distinct integral-generating convex combinations giving p a
/// positive weight. Combinations reduce to the singleton {p} (p integral) and
/// pairs {p, q} whose open segment holds an integral point; combinations with
/// three or more essential points would put an integral point in the interior
/// of a lattice-free body, so pairs suffice. Each (integral point, partner)
/// counts once.
inline size_t generating_event_count(const Point2& p, const BoundaryPointSet& set) {
  size_t events = is_lattice_point(p) ? 1 : 0;
  std::vector<Point2> seen_partners;
  for (const auto& q : set.points) {
    if (q.p == p) continue;
    if (std::find(seen_partners.begin(), seen_partners.end(), q.p) != seen_partners.end())
      continue;
    seen_partners.push_back(q.p);
    events += segment_lattice_points(p, q.p, /*closed=*/false).size();
  }
  return events;
}

inline bool in_convex_hull_of_others(const Point2& p, const BoundaryPointSet& set,
                                     size_t self_index) {
  // Boundary points of a convex body: p lies in the hull of the rest exactly
  // when some segment between two others covers it.
  for (size_t a = 0; a < set.points.size(); ++a) {
    if (a == self_index) continue;
    if (set.points[a].p == p) return true;  // duplicate point
    for (size_t b = a + 1; b < set.points.size(); ++b) {
      if (b == self_index) continue;
      if (in_closed_segment(p, set.points[a].p, set.points[b].p)) return true;
    }
  }
  return false;
}

}  // namespace detail

struct ReductionStep {
  int step;  // 1, 2 or 3
  Point2 removed;
  size_t ray_index;
  std::string reason;
};

struct RayConditionReport {
  BoundaryPointSet final_set;
  std::vector<ReductionStep> steps;
  bool holds = false;
};

/// Steps 1-3 of the reduction. Removal order is deterministic: the candidate
/// with the lowest ray index goes first.
inline RayConditionReport reduction_algorithm(const BoundaryPointSet& input) {
  RayConditionReport report{input, {}, false};
  auto& pts = report.final_set.points;

  // Step 1: duplicates first, then active points that are convex
  // combinations of the others. Afterwards at most two active points remain
  // on each edge and all points are distinct.
  for (;;) {
    size_t victim = pts.size();
    std::string reason;
    for (size_t i = 0; i < pts.size() && victim == pts.size(); ++i)
      for (size_t j = 0; j < i; ++j)
        if (pts[i].p == pts[j].p) {
          victim = i;
          reason = "duplicate point";
          break;
        }
    if (victim == pts.size()) {
      for (size_t i = 0; i < pts.size(); ++i) {
        if (!is_active(pts[i].p, report.final_set)) continue;
        if (detail::in_convex_hull_of_others(pts[i].p, report.final_set, i)) {
          victim = i;
          reason = "active convex combination of other points";
          break;
        }
      }
    }
    if (victim == pts.size()) break;
    report.steps.push_back({1, pts[victim].p, pts[victim].ray_index, reason});
    pts.erase(pts.begin() + victim);
  }

  // Step 2: uniquely active points.
  for (;;) {
    size_t victim = pts.size();
    for (size_t i = 0; i < pts.size(); ++i) {
      if (detail::generating_event_count(pts[i].p, report.final_set) == 1) {
        victim = i;
        break;
      }
    }
    if (victim == pts.size()) break;
    report.steps.push_back({2, pts[victim].p, pts[victim].ray_index, "uniquely active"});
    pts.erase(pts.begin() + victim);
  }

  // Step 3: exactly two active points remaining.
  std::vector<size_t> active;
  for (size_t i = 0; i < pts.size(); ++i)
    if (is_active(pts[i].p, report.final_set)) active.push_back(i);
  if (active.size() == 2) {
    report.steps.push_back(
        {3, pts[active[0]].p, pts[active[0]].ray_index, "one of exactly two active points"});
    report.steps.push_back(
        {3, pts[active[1]].p, pts[active[1]].ray_index, "one of exactly two active points"});
    pts.erase(pts.begin() + active[1]);
    pts.erase(pts.begin() + active[0]);
  }

  return report;
}

namespace detail {
/// Split ray condition on the terminal set: empty, or two points on each
/// boundary line whose segments both carry at least two integral points.
inline bool split_terminal_condition(const Split& s, const std::vector<BoundaryPoint>& pts) {
  if (pts.empty()) return true;
  if (pts.size() != 4) return false;
  std::vector<Point2> low, high;
  for (const auto& bp : pts) {
    Rational v = s.value_at(bp.p);
    if (v == Rational(s.c)) low.push_back(bp.p);
    else if (v == Rational(s.c + 1)) high.push_back(bp.p);
    else return false;
  }
  if (low.size() != 2 || high.size() != 2) return false;
  return segment_lattice_points(low[0], low[1], /*closed=*/true).size() >= 2 &&
         segment_lattice_points(high[0], high[1], /*closed=*/true).size() >= 2;
}
}  // namespace detail

inline RayConditionReport ray_condition_report(const LatticeFreeBody& body, const Instance& inst) {
  RayConditionReport report = reduction_algorithm(boundary_points(body, inst));
  if (auto* s = std::get_if<Split>(&body))
    report.holds = detail::split_terminal_condition(*s, report.final_set.points);
  else
    report.holds = report.final_set.points.empty();
  return report;
}

inline bool ray_condition(const LatticeFreeBody& body, const Instance& inst) {
  return ray_condition_report(body, inst).holds;
}

enum class FacetStatus { Facet, NotFacet, UnknownRatioCondition };

inline const char* to_string(FacetStatus s) {
  switch (s) {
    case FacetStatus::Facet: return "Facet";
    case FacetStatus::NotFacet: return "NotFacet";
    case FacetStatus::UnknownRatioCondition: return "UnknownRatioCondition";
  }
  return "?";
}

namespace detail {
inline bool all_corner_rays_present(const LatticeFreeBody& body, const Instance& inst) {
  for (const auto& v : vertices(body)) {
    Ray2 to_corner = v - inst.f;
    bool found = false;
    for (const auto& r : inst.rays)
      if (positively_parallel(r, to_corner)) { found = true; break; }
    if (!found) return false;
  }
  return true;
}
}  // namespace detail

/// Facet test for the corner relaxation. Quadrilaterals with all four corner
/// rays hit the ratio condition, which is deliberately left undecided.
inline FacetStatus is_facet(const LatticeFreeBody& body, const Instance& inst) {
  Classification cls = classify(body);
  if (cls == Classification::NotLatticeFree || cls == Classification::NotMaximal)
    throw InvalidBody("facet test needs a maximal lattice-free body");

  if (auto* s = std::get_if<Split>(&body)) {
    for (const auto& r : inst.rays) {
      bool recession = Rational(s->a) * r.d1 + Rational(s->b) * r.d2 == 0;
      if (recession && !line_contains_lattice_point(inst.f, r)) return FacetStatus::Facet;
    }
    return ray_condition(body, inst) ? FacetStatus::Facet : FacetStatus::NotFacet;
  }
  if (std::holds_alternative<Triangle>(body)) {
    if (detail::all_corner_rays_present(body, inst)) return FacetStatus::Facet;
    return ray_condition(body, inst) ? FacetStatus::Facet : FacetStatus::NotFacet;
  }
  if (detail::all_corner_rays_present(body, inst)) return FacetStatus::UnknownRatioCondition;
  return ray_condition(body, inst) ? FacetStatus::Facet : FacetStatus::NotFacet;
}

}  // namespace latcut
