#pragma once

#include <optional>
#include <vector>

#include "latcut/body.hpp"

namespace latcut {

/// One corner-relaxation instance: fractional point f and the ray list.
struct Instance {
  Point2 f;
  std::vector<Ray2> rays;

  Instance(Point2 f_, std::vector<Ray2> rays_) : f(std::move(f_)), rays(std::move(rays_)) {
    if (is_lattice_point(f)) throw ParamOutOfRange("f must be fractional");
    if (rays.empty()) throw ParamOutOfRange("instance needs at least one ray");
    for (const auto& r : rays) require_nonzero(r);
  }

  size_t k() const { return rays.size(); }
};

/// The unique lambda > 0 with f + lambda*r on the boundary of the body, or
/// nullopt when r is a recession direction. f must be strictly interior.
inline std::optional<Rational> boundary_lambda(const LatticeFreeBody& body, const Point2& f,
                                               const Ray2& r) {
  require_nonzero(r);
  if (!contains(body, f, /*strictly=*/true))
    throw FNotInterior("f must be strictly interior to the body");
  return std::visit(
      [&](const auto& b) -> std::optional<Rational> {
        using T = std::decay_t<decltype(b)>;
        if constexpr (std::is_same_v<T, Split>) {
          Rational d = Rational(b.a) * r.d1 + Rational(b.b) * r.d2;
          if (d == 0) return std::nullopt;
          Rational v = b.value_at(f);
          return d > 0 ? (Rational(b.c + 1) - v) / d : (Rational(b.c) - v) / d;
        } else if constexpr (std::is_same_v<T, PseudoSplit>) {
          Rational d = cross(r, b.direction);
          if (d == 0) return std::nullopt;
          Rational l1 = cross(b.p1 - f, b.direction) / d;
          Rational l2 = cross(b.p2 - f, b.direction) / d;
          return l1 > 0 ? l1 : l2;
        } else {
          std::optional<Rational> best;
          for (const auto& e : edges(b)) {
            Rational d = dot(e.normal, r);
            if (d <= 0) continue;
            Rational lam = e.slack(f) / d;
            if (!best || lam < *best) best = lam;
          }
          if (!best) throw InternalError("bounded body without exit edge");
          return best;
        }
      },
      body);
}

/// Gauge of the body at f: psi(r) = 1/lambda, 0 on recession directions.
inline Rational psi(const LatticeFreeBody& body, const Point2& f, const Ray2& r) {
  auto lam = boundary_lambda(body, f, r);
  return lam ? Rational(1) / *lam : Rational(0);
}

/// Intersection-cut row sum_j coeffs[j] * s_j >= 1 with provenance.
struct CutRow {
  std::vector<Rational> coeffs;
  LatticeFreeBody body;
};

inline CutRow cut_row(const LatticeFreeBody& body, const Instance& inst) {
  CutRow row{{}, body};
  row.coeffs.reserve(inst.k());
  for (const auto& r : inst.rays) row.coeffs.push_back(psi(body, inst.f, r));
  return row;
}

/// Instance with rays rescaled so f + r_j touches the boundary; recession
/// directions are flagged (factor absent) and kept unchanged.
struct ScaledInstance {
  Instance instance;
  std::vector<std::optional<Rational>> factors;
};

inline ScaledInstance scale_rays_to_boundary(const Instance& inst, const LatticeFreeBody& body) {
  std::vector<Ray2> scaled;
  std::vector<std::optional<Rational>> factors;
  scaled.reserve(inst.k());
  for (const auto& r : inst.rays) {
    auto lam = boundary_lambda(body, inst.f, r);
    if (!lam) {
      scaled.push_back(r);
      factors.push_back(std::nullopt);
    } else {
      scaled.push_back(*lam * r);
      factors.push_back(*lam);
    }
  }
  return {Instance(inst.f, std::move(scaled)), std::move(factors)};
}

}  // namespace latcut
