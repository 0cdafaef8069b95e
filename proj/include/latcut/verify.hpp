#pragma once

#include <chrono>
#include <cmath>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "latcut/strength/bounds.hpp"
#include "latcut/strength/epsilon.hpp"
#include "latcut/strength/goemans.hpp"
#include "latcut/strength/pseudo.hpp"
#include "latcut/strength/type1.hpp"

namespace latcut {

struct CheckResult {
  std::string name;
  bool pass;
  std::string detail;
  double seconds;
};

namespace verify_detail {

using Rng = std::mt19937_64;

inline int rand_int(Rng& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

/// Random p/q with p in [lo*den, hi*den] and 1 <= q <= den.
inline Rational rand_rational(Rng& rng, int lo, int hi, int den) {
  int q = rand_int(rng, 1, den);
  int p = rand_int(rng, lo * q, hi * q);
  return Rational(p, q);
}

/// Random interior point of a triangle via integer barycentric weights.
inline Point2 rand_in_triangle(Rng& rng, const Point2& a, const Point2& b, const Point2& c) {
  int wa = rand_int(rng, 1, 400), wb = rand_int(rng, 1, 400), wc = rand_int(rng, 1, 400);
  Rational w(wa + wb + wc);
  return {(wa * a.x1 + wb * b.x1 + wc * c.x1) / w, (wa * a.x2 + wb * b.x2 + wc * c.x2) / w};
}

struct Failure {
  std::string message;
};

inline void expect(bool ok, const std::string& message) {
  if (!ok) throw Failure{message};
}

}  // namespace verify_detail

namespace verify_suite {

using verify_detail::expect;
using verify_detail::rand_in_triangle;
using verify_detail::rand_int;
using verify_detail::rand_rational;
using verify_detail::Rng;

/// Strength 1/2 on the inner triangle, matching the three-split LP exactly.
inline std::string check_type1_inner(Rng& rng) {
  Point2 y1{Rational(1), Rational(1)}, y2{Rational(0), Rational(1)}, y3{Rational(1), Rational(0)};
  for (int trial = 0; trial < 200; ++trial) {
    Point2 f = rand_in_triangle(rng, y1, y2, y3);
    StrengthReport rep = type1_split_strength(f);
    expect(rep.region_tag == "inner", "point landed outside the inner region");
    expect(rep.value == Rational(1, 2), "inner strength differs from 1/2");
    Instance inst = type1_corner_instance(f);
    std::vector<CutRow> rows;
    for (const auto& s : dominant_splits_type1(f)) rows.push_back(cut_row(s, inst));
    expect(rows.size() == 3, "inner region must use three dominant splits");
    LPSolution sol = solve_min_sum(LPProblem::from_cut_rows(rows));
    expect(sol.value == Rational(1, 2), "three-split LP differs from 1/2");
    // The textbook optimal point is feasible with the same objective value.
    std::vector<Rational> stated{(f.x1 + f.x2 - 1) / 2, (1 - f.x1) / 2, (1 - f.x2) / 2};
    Rational total(0);
    for (size_t i = 0; i < rows.size(); ++i) {
      Rational lhs(0);
      for (size_t j = 0; j < 3; ++j) lhs += rows[i].coeffs[j] * stated[j];
      expect(lhs >= 1, "stated optimum infeasible");
    }
    for (const auto& s : stated) total += s;
    expect(total == sol.value, "stated optimum not optimal");
  }
  return "200 random inner points, exact value 1/2 with LP agreement";
}

/// Strength 1 - 1/(3-f1-f2) on the corner triangle with the stated optimum.
inline std::string check_type1_corner(Rng& rng) {
  Point2 o{Rational(0), Rational(0)}, e1{Rational(1), Rational(0)}, e2{Rational(0), Rational(1)};
  for (int trial = 0; trial < 200; ++trial) {
    Point2 f = rand_in_triangle(rng, o, e1, e2);
    Rational d = Rational(3) - f.x1 - f.x2;
    Rational expected = 1 - 1 / d;
    StrengthReport rep = type1_split_strength(f);
    expect(rep.value == expected, "corner strength formula mismatch");
    Instance inst = type1_corner_instance(f);
    auto splits = dominant_splits_type1(f);
    expect(splits.size() == 2, "corner region must use two dominant splits");
    std::vector<CutRow> rows;
    for (const auto& s : splits) rows.push_back(cut_row(s, inst));
    LPSolution sol = solve_min_sum(LPProblem::from_cut_rows(rows));
    expect(sol.value == expected, "two-split LP mismatch");
    std::vector<Rational> stated{Rational(0), (1 - f.x1) / d, (1 - f.x2) / d};
    Rational total(0);
    for (size_t i = 0; i < rows.size(); ++i) {
      Rational lhs(0);
      for (size_t j = 0; j < 3; ++j) lhs += rows[i].coeffs[j] * stated[j];
      expect(lhs >= 1, "stated corner optimum infeasible");
    }
    for (const auto& s : stated) total += s;
    expect(total == sol.value, "stated corner optimum not optimal");
  }
  return "200 random corner points, formula and stated optimum confirmed";
}

/// Level curves: constant 1/2 inside, approaching 2/3 toward the corners.
inline std::string check_level_curves(Rng&) {
  const int resolution = 50;
  auto cells = level_curve_grid(resolution);
  Rational min_v = cells[0].value, max_v = cells[0].value;
  for (const auto& c : cells) {
    if (c.region == "inner") expect(c.value == Rational(1, 2), "inner cell differs from 1/2");
    min_v = std::min(min_v, c.value);
    max_v = std::max(max_v, c.value);
  }
  expect(min_v == Rational(1, 2), "grid minimum differs from 1/2");
  expect(max_v < Rational(2, 3), "grid maximum reached 2/3");
  expect(max_v > Rational(2, 3) - Rational(3, resolution), "grid maximum too far from 2/3");
  std::ostringstream os;
  os << cells.size() << " cells, min 1/2, max " << max_v;
  return os.str();
}

/// Every violated split cut is dominated by a Type 2 triangle cut with slack
/// at least eps/2 at the violating point.
inline std::string check_epsilon_triangle(Rng& rng) {
  int built = 0;
  for (int trial = 0; trial < 100; ++trial) {
    int a = 0, b = 0;
    do {
      a = rand_int(rng, -3, 3);
      b = rand_int(rng, -3, 3);
    } while ((a == 0 && b == 0) || gcd(BigInt(a), BigInt(b < 0 ? -b : b)) != 1);
    Split split(a, b, 0);
    Point2 f;
    Rational v;
    do {
      f = Point2{rand_rational(rng, -3, 3, 12), rand_rational(rng, -3, 3, 12)};
      v = split.value_at(f);
    } while (is_integral(v) || is_lattice_point(f));
    split = Split(a, b, floor_int(v));
    LatticeFreeBody body(split);

    int k = rand_int(rng, 1, 4);
    std::vector<Ray2> rays;
    for (int i = 0; i < k; ++i) {
      if (rand_int(rng, 0, 3) == 0) {
        Rational scale = rand_rational(rng, 1, 3, 3);
        Ray2 dir = split.direction();
        rays.push_back(rand_int(rng, 0, 1) ? scale * dir : Rational(-1) * scale * dir);
      } else {
        Ray2 r;
        do {
          r = Ray2{rand_rational(rng, -4, 4, 4), rand_rational(rng, -4, 4, 4)};
        } while (r.is_zero());
        rays.push_back(r);
      }
    }
    Instance inst(f, rays);

    std::vector<Rational> s_bar(inst.k(), Rational(0));
    Rational lhs(0);
    bool zero_point = trial == 0;
    for (size_t i = 0; i < inst.k() && !zero_point; ++i) {
      Rational p = psi(body, f, inst.rays[i]);
      if (p > 0) {
        s_bar[i] = rand_rational(rng, 0, 3, 7) / (Rational(4 * static_cast<int>(inst.k())) * p);
        lhs += p * s_bar[i];
      } else {
        s_bar[i] = rand_rational(rng, 0, 2, 5);
      }
    }
    Rational eps = 1 - lhs;
    expect(eps > 0, "generated point fails to violate the split cut");

    LatticeFreeBody tri = epsilon_triangle_for_split(split, inst, s_bar);
    expect(classify(tri) == Classification::TriangleType2,
           "construction did not produce a Type 2 triangle");
    CutRow row = cut_row(tri, inst);
    Rational tri_lhs(0);
    for (size_t i = 0; i < inst.k(); ++i) tri_lhs += row.coeffs[i] * s_bar[i];
    expect(tri_lhs <= 1 - eps / 2, "triangle cut slack below eps/2");
    ++built;
  }
  return "100 violated split cuts dominated, slack >= eps/2 each";
}

/// Quadrilateral facet vs the two cutting triangles: closed form hits 1/2
/// exactly at t = 2 and lower-bounds the exact LP everywhere.
inline std::string check_quad_bound(Rng& rng) {
  expect(quad_bound_closed_form(Rational(2)) == Rational(1, 2), "closed form at t=2 is not 1/2");
  for (int i = 1; i <= 400; ++i) {
    Rational t = 1 + Rational(i, 100);
    Rational v = quad_bound_closed_form(t);
    if (i == 100) expect(v == Rational(1, 2), "grid value at t=2 is not 1/2");
    else expect(v > Rational(1, 2), "grid value at t != 2 not above 1/2");
  }
  for (int trial = 0; trial < 100; ++trial) {
    Rational t = 1 + rand_rational(rng, 1, 3, 20);
    Quadrilateral q = make_parameter_quadrilateral(t);
    Point2 f;
    do {
      f = Point2{rand_rational(rng, -1, 2, 16) / 4, rand_rational(rng, -1, 2, 16) / 4};
    } while (!(f.x1 <= Rational(1, 2) && f.x2 <= Rational(1, 2)) ||
             !contains(LatticeFreeBody(q), f, true) || is_lattice_point(f));
    StrengthReport rep = quad_vs_triangle_bound(t, f);
    expect(rep.lp_value >= rep.value, "LP fell below the closed form");
    expect(rep.lp_value >= Rational(1, 2), "LP fell below 1/2");
  }
  return "grid minimum 1/2 at t=2; 100 random (t,f) with LP >= closed form";
}

/// Type 3 facet vs two Type 2 triangles for both positions of f; case II
/// closed-form minimum matches 1/(1+sqrt(1/2)) numerically.
inline std::string check_type3_bound(Rng& rng) {
  expect(type3_bound_closed_form(Rational(2), Type3Case::CaseI) == Rational(1, 2),
         "case I closed form at t3=2 is not 1/2");
  for (int i = 0; i < 50; ++i) {
    Rational t3 = 1 + rand_rational(rng, 1, 4, 25);
    expect(type3_bound_closed_form(t3, Type3Case::CaseI) >= Rational(1, 2),
           "case I closed form below 1/2");
  }
  auto [arg, val] = minimize_unimodal(
      [](const Rational& t) { return type3_bound_closed_form(t, Type3Case::CaseII); },
      Rational(11, 10), Rational(3), Rational(1, 50'000'000));
  double target = 1.0 / (1.0 + std::sqrt(0.5));
  expect(std::abs(to_double(val) - target) <= 1e-9, "case II minimum value off by > 1e-9");
  expect(std::abs(to_double(arg) - (1.0 + std::sqrt(0.5))) <= 1e-6,
         "case II minimizer off by > 1e-6");

  int done_i = 0, done_ii = 0;
  while (done_i + done_ii < 100) {
    Rational t1 = rand_rational(rng, 1, 4, 7) / rand_int(rng, 1, 3);
    Rational t2 = Rational(rand_int(rng, 1, 9), 10);
    Rational t3 = 1 + rand_rational(rng, 1, 3, 9);
    Triangle t = make_type3_triangle(t1, t2, t3);
    Point2 centroid{(t.v[0].x1 + t.v[1].x1 + t.v[2].x1) / 3,
                    (t.v[0].x2 + t.v[1].x2 + t.v[2].x2) / 3};
    bool want_case_ii = done_ii < 50;
    Point2 f;
    bool found = false;
    for (int tries = 0; tries < 60 && !found; ++tries) {
      f = rand_in_triangle(rng, t.v[0], t.v[1], t.v[2]);
      if (want_case_ii) {
        // pull toward the left corner, which has negative first coordinate
        Point2 left = t.v[0].x1 < t.v[1].x1 ? (t.v[0].x1 < t.v[2].x1 ? t.v[0] : t.v[2])
                                            : (t.v[1].x1 < t.v[2].x1 ? t.v[1] : t.v[2]);
        Rational w = Rational(rand_int(rng, 7, 9), 10);
        f = Point2{w * left.x1 + (1 - w) * f.x1, w * left.x2 + (1 - w) * f.x2};
        found = f.x1 <= 0 && f.x1 + f.x2 <= Rational(1, 2) &&
                contains(LatticeFreeBody(t), f, true) && !is_lattice_point(f);
      } else {
        Rational w = Rational(rand_int(rng, 1, 6), 10);
        f = Point2{w * f.x1, w * f.x2};
        found = f.x1 <= Rational(1, 2) && f.x2 <= Rational(1, 2) &&
                contains(LatticeFreeBody(t), f, true) && !is_lattice_point(f);
      }
    }
    if (!found) continue;
    Type3Case c = want_case_ii ? Type3Case::CaseII : Type3Case::CaseI;
    StrengthReport rep = type3_vs_type2_bound(t1, t2, t3, f, c);
    expect(rep.lp_value >= rep.value, "type 3 LP fell below the closed form");
    expect(rep.lp_value >= Rational(1, 2), "type 3 LP fell below 1/2");
    (want_case_ii ? done_ii : done_i)++;
  }
  return "case I min 1/2 at t3=2; case II min 0.585786... within 1e-9; 100 LPs >= 1/2";
}

/// Ray condition on Type 3 triangles with rays at the lattice boundary
/// points forces quadrilateral-closure value exactly 1.
inline std::string check_type3_ray_condition(Rng&) {
  std::vector<std::array<Rational, 3>> params = {
      {Rational(1), Rational(1, 2), Rational(2)},
      {Rational(2), Rational(1, 3), Rational(3)},
      {Rational(3, 2), Rational(3, 4), Rational(5, 2)},
      {Rational(1, 3), Rational(2, 3), Rational(7, 2)},
  };
  std::vector<Point2> units = {Point2{Rational(0), Rational(0)}, Point2{Rational(1), Rational(0)},
                               Point2{Rational(0), Rational(1)}};
  std::vector<Unimodular> maps = {Unimodular(), Unimodular(1, 1, 0, 1, 0, 0),
                                  Unimodular(2, 1, 1, 1, -3, 5)};
  int cases = 0;
  for (const auto& [t1, t2, t3] : params) {
    Triangle base = make_type3_triangle(t1, t2, t3);
    Point2 f0{Rational(1, 3), Rational(1, 3)};
    for (const auto& map : maps) {
      Triangle body = map.apply(base);
      Point2 f = map(f0);
      std::vector<Ray2> rays;
      for (const auto& u : units) rays.push_back(map(u) - f);
      rays.push_back(map(units[0]) - f);  // duplicated ray
      Instance inst(f, rays);
      expect(ray_condition(LatticeFreeBody(body), inst), "ray condition failed");
      expect(ray_condition_type3_value(body, inst) == 1, "closure value differs from 1");
      ++cases;
    }
  }
  std::ostringstream os;
  os << cases << " configurations (with duplicates and lattice images), value 1";
  return os.str();
}

/// Dropping redundant non-corner rays preserves the LP optimum exactly.
inline std::string check_corner_reduction(Rng& rng) {
  Triangle tri = type1_reference_triangle();
  for (int trial = 0; trial < 100; ++trial) {
    Point2 f = rand_in_triangle(rng, tri.v[0], tri.v[1], tri.v[2]);
    if (is_lattice_point(f)) continue;
    std::vector<Ray2> rays;
    for (const auto& v : tri.v) rays.push_back(v - f);
    std::vector<size_t> corners{0, 1, 2};
    int extras = rand_int(rng, 1, 3);
    for (int e = 0; e < extras; ++e) {
      if (rand_int(rng, 0, 3) == 0) {
        rays.push_back(rays[rand_int(rng, 0, 2)]);
      } else {
        size_t u = rand_int(rng, 0, 2), v = (u + rand_int(rng, 1, 2)) % 3;
        Rational lam(rand_int(rng, 1, 8), 9);
        rays.push_back(
            Ray2{lam * rays[u].d1 + (1 - lam) * rays[v].d1, lam * rays[u].d2 + (1 - lam) * rays[v].d2});
      }
    }
    Instance inst(f, rays);
    std::vector<CutRow> rows;
    for (const auto& s : dominant_splits_type1(f)) rows.push_back(cut_row(s, inst));
    rows.push_back(cut_row(LatticeFreeBody(tri), inst));
    LPProblem full = LPProblem::from_cut_rows(rows);
    LPProblem reduced = corner_ray_reduce(full, inst.rays, corners);
    expect(solve_min_sum(full).value == solve_min_sum(reduced).value,
           "corner reduction changed the optimum");
  }
  return "100 instances with redundant rays, optimum preserved exactly";
}

/// Pseudo-split domination identity and the closed-form closure bound.
inline std::string check_pseudo_splits(Rng& rng) {
  for (int trial = 0; trial < 100; ++trial) {
    Point2 f{Rational(0), Rational(rand_int(rng, 1, 9), 10)};
    int k = rand_int(rng, 3, 6);
    std::vector<Ray2> rays;
    while (static_cast<int>(rays.size()) < k) {
      Rational d1 = rand_rational(rng, -3, 3, 4);
      if (d1 == 0) continue;
      rays.push_back(Ray2{d1, rand_rational(rng, -3, 3, 4)});
    }
    Instance inst(f, rays);
    auto family = pseudo_split_family(inst);
    if (family.size() < 2) { --trial; continue; }
    std::vector<Rational> slopes;
    for (const auto& s : family) slopes.push_back(pseudo_split_slope(s));
    std::sort(slopes.begin(), slopes.end());
    size_t pick = rand_int(rng, 0, static_cast<int>(slopes.size()) - 2);
    Rational s_lo = slopes[pick], s_hi = slopes[pick + 1];
    int w = rand_int(rng, 1, 7);
    Rational s_mid = s_lo + Rational(w, 8) * (s_hi - s_lo);
    Rational lam = pseudo_split_domination_lambda(pseudo_split_for_slope(s_mid),
                                                  pseudo_split_for_slope(s_lo),
                                                  pseudo_split_for_slope(s_hi), inst);
    expect(lam > 0 && lam < 1, "lambda outside (0,1)");
    expect(lam == (s_mid - s_hi) / (s_lo - s_hi), "lambda differs from slope interpolation");
  }
  for (int trial = 0; trial < 40; ++trial) {
    Rational t2 = rand_rational(rng, -2, 2, 5);
    Rational t1 = -t2 + rand_rational(rng, 1, 5, 4);
    Rational t3 = -t2 - rand_rational(rng, 1, 5, 4);
    bool unit = trial % 2 == 0;
    Rational mu1 = unit ? Rational(1) : rand_rational(rng, 1, 3, 3);
    Rational mu2 = rand_rational(rng, 1, 3, 3);
    Rational mu3 = unit ? Rational(1) : rand_rational(rng, 1, 3, 3);
    Rational f2(rand_int(rng, 1, 9), 10);
    StrengthReport rep = pseudo_split_closure_value(t1, t2, t3, mu1, mu2, mu3, f2);
    expect(rep.lp_value <= rep.value, "pseudo LP exceeded the closed-form bound");
    if (unit) expect(rep.value == 1 / (t1 - t3), "unit-mu bound differs from 1/(t1-t3)");
  }
  return "100 domination identities and 40 closure bounds verified exactly";
}

/// Bad examples: the split closure is at most 1/M against a facet that
/// evaluates to 1 on its own rays, so the approximation ratio is at least M.
inline std::string check_bad_examples(Rng&) {
  auto lp_value = [](const BadExample& be) {
    std::vector<CutRow> rows;
    for (const auto& s : pseudo_split_family(be.inst))
      rows.push_back(cut_row(LatticeFreeBody(s), be.inst));
    return solve_min_sum(LPProblem::from_cut_rows(rows));
  };
  for (int m : {2, 5, 10, 50}) {
    BadExample be = bad_example(BadExampleFamily::Type2, m, Rational(2, 5));
    expect(classify(be.body) == Classification::TriangleType2, "family tag mismatch");
    for (const auto& r : be.inst.rays)
      expect(psi(be.body, be.inst.f, r) == 1, "facet row is not all ones");
    LPSolution sol = lp_value(be);
    expect(sol.value <= Rational(1, m), "pseudo-split LP above 1/M");
    expect(be.claimed_bound <= Rational(1, m), "claimed bound above 1/M");
    expect(sol.value <= be.claimed_bound, "LP above claimed bound");
    std::vector<CutRow> rows;
    for (const auto& s : pseudo_split_family(be.inst))
      rows.push_back(cut_row(LatticeFreeBody(s), be.inst));
    FacetRow facet{std::vector<Rational>(be.inst.k(), Rational(1)), Rational(1)};
    auto alpha = goemans_alpha({facet}, LPProblem::from_cut_rows(rows));
    expect(alpha.has_value() && *alpha >= m, "approximation factor below M");
  }
  for (int m : {2, 10}) {
    BadExample t3 = bad_example(BadExampleFamily::Type3, m, Rational(2, 5));
    expect(classify(t3.body) == Classification::TriangleType3, "variant is not Type 3");
    expect(lp_value(t3).value <= Rational(1, m), "Type 3 variant above 1/M");
    BadExample q = bad_example(BadExampleFamily::Quadrilateral, m, Rational(2, 5));
    expect(std::holds_alternative<Quadrilateral>(q.body), "variant is not a quadrilateral");
    expect(is_lattice_free(q.body), "quadrilateral variant not lattice-free");
    expect(lp_value(q).value <= Rational(1, m), "quadrilateral variant above 1/M");
  }
  return "Type2 M in {2,5,10,50} and Type3/Quad M in {2,10}: closure <= 1/M, ratio >= M";
}

/// Outside the doubled triangle the single split already achieves factor 2.
inline std::string check_factor_two_region(Rng& rng) {
  for (int trial = 0; trial < 100; ++trial) {
    Rational u = -Rational(rand_int(rng, 1, 9), rand_int(rng, 10, 14));
    Rational f1 = -u + rand_rational(rng, 0, 1, 9) * (1 + u) * Rational(9, 10);
    Rational f2(rand_int(rng, 1, 19), 20);
    Rational value = split_factor2_region_check(u, Point2{f1, f2});
    expect(value == f1 / (f1 - u), "value differs from f1/(f1-u)");
    expect(value >= Rational(1, 2), "factor-2 region value below 1/2");
  }
  return "100 random points outside the doubled triangle, value >= 1/2";
}

/// Finite split enumeration: equals the exact strength on Type 1 instances
/// already at n = 1 and grows monotonically with the coefficient bound.
inline std::string check_closure_sample(Rng& rng) {
  Triangle tri = type1_reference_triangle();
  for (int trial = 0; trial < 20; ++trial) {
    Point2 f = rand_in_triangle(rng, tri.v[0], tri.v[1], tri.v[2]);
    if (is_lattice_point(f)) continue;
    Instance inst = type1_corner_instance(f);
    Rational exact = type1_split_strength(f).value;
    expect(split_closure_sample(inst, 4).value == exact, "sample at n=4 differs from exact");
    expect(split_closure_sample(inst, 1).value == exact, "sample at n=1 differs from exact");
  }
  for (int trial = 0; trial < 50; ++trial) {
    Point2 f{rand_rational(rng, -2, 2, 12), rand_rational(rng, -2, 2, 12)};
    if (is_lattice_point(f)) { --trial; continue; }
    int k = rand_int(rng, 2, 4);
    std::vector<Ray2> rays;
    rays.push_back(Ray2{Rational(1), Rational(0)});
    rays.push_back(Ray2{Rational(0), Rational(1)});
    while (static_cast<int>(rays.size()) < k) {
      Ray2 r{rand_rational(rng, -3, 3, 5), rand_rational(rng, -3, 3, 5)};
      if (!r.is_zero()) rays.push_back(r);
    }
    Instance inst(f, rays);
    Rational prev(-1);
    for (int n = 1; n <= 4; ++n) {
      Rational v = split_closure_sample(inst, n).value;
      expect(v >= prev, "sample value decreased as the split family grew");
      prev = v;
    }
  }
  return "20 Type 1 sandwiches exact; 50 instances monotone across n=1..4";
}

}  // namespace verify_suite

/// Runs the full theorem-reproduction suite with a fixed seed; every check is
/// deterministic. Budgets are part of the pass criteria.
inline std::vector<CheckResult> run_verification_suite() {
  struct Entry {
    const char* name;
    double budget_seconds;
    std::function<std::string(verify_detail::Rng&)> fn;
  };
  using namespace verify_suite;
  std::vector<Entry> entries = {
      {"type1-inner-strength-half", 5, check_type1_inner},
      {"type1-corner-strength-formula", 5, check_type1_corner},
      {"type1-level-curves", 10, check_level_curves},
      {"split-cut-dominated-by-triangle", 10, check_epsilon_triangle},
      {"quad-facet-vs-triangle-closure", 10, check_quad_bound},
      {"type3-facet-vs-type2-closure", 15, check_type3_bound},
      {"type3-ray-condition-value-one", 2, check_type3_ray_condition},
      {"corner-ray-reduction-preserves-value", 5, check_corner_reduction},
      {"pseudo-split-domination-and-bound", 10, check_pseudo_splits},
      {"split-closure-bad-examples", 15, check_bad_examples},
      {"split-vs-triangle-factor-two-region", 2, check_factor_two_region},
      {"split-closure-sample-sandwich", 30, check_closure_sample},
  };
  std::vector<CheckResult> results;
  for (const auto& e : entries) {
    verify_detail::Rng rng(0x1a7c05);
    auto start = std::chrono::steady_clock::now();
    CheckResult r{e.name, false, "", 0};
    try {
      r.detail = e.fn(rng);
      r.pass = true;
    } catch (const verify_detail::Failure& f) {
      r.detail = f.message;
    } catch (const std::exception& ex) {
      r.detail = std::string("exception: ") + ex.what();
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (r.pass && r.seconds > e.budget_seconds) {
      r.pass = false;
      r.detail += " (exceeded time budget)";
    }
    results.push_back(std::move(r));
  }
  return results;
}

inline bool all_passed(const std::vector<CheckResult>& results) {
  for (const auto& r : results)
    if (!r.pass) return false;
  return true;
}

}  // namespace latcut
