#pragma once

#include <json.hpp>

#include "latcut/facets.hpp"
#include "latcut/strength/pseudo.hpp"
#include "latcut/strength/report.hpp"

namespace latcut {

using Json = nlohmann::json;

inline Json to_json(const Rational& r) { return format_rational(r); }

inline Rational rational_from_json(const Json& j) {
  if (j.is_number_integer()) return Rational(BigInt(j.get<long long>()));
  if (!j.is_string()) throw ParseError("expected rational as 'p/q' string");
  return parse_rational(j.get<std::string>());
}

inline Json to_json(const BigInt& v) {
  // Integers that survive a double round-trip stay numeric; the rest are
  // strings so the form is bit-exact either way.
  if (v >= std::numeric_limits<long long>::min() && v <= std::numeric_limits<long long>::max())
    return v.convert_to<long long>();
  return v.str();
}

inline BigInt bigint_from_json(const Json& j) {
  if (j.is_number_integer()) return BigInt(j.get<long long>());
  if (!j.is_string()) throw ParseError("expected integer or integer string");
  return BigInt(j.get<std::string>());
}

inline Json to_json(const Point2& p) { return Json::array({to_json(p.x1), to_json(p.x2)}); }
inline Json to_json(const Ray2& r) { return Json::array({to_json(r.d1), to_json(r.d2)}); }

inline Point2 point_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 2) throw ParseError("expected [x1, x2]");
  return {rational_from_json(j[0]), rational_from_json(j[1])};
}

inline Ray2 ray_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 2) throw ParseError("expected [d1, d2]");
  return {rational_from_json(j[0]), rational_from_json(j[1])};
}

inline Json to_json(const LatticeFreeBody& body) {
  return std::visit(
      [](const auto& b) -> Json {
        using T = std::decay_t<decltype(b)>;
        if constexpr (std::is_same_v<T, Split>) {
          return Json{{"kind", "split"}, {"a", to_json(b.a)}, {"b", to_json(b.b)},
                      {"c", to_json(b.c)}};
        } else if constexpr (std::is_same_v<T, Triangle>) {
          return Json{{"kind", "triangle"},
                      {"vertices", Json::array({to_json(b.v[0]), to_json(b.v[1]), to_json(b.v[2])})}};
        } else if constexpr (std::is_same_v<T, Quadrilateral>) {
          return Json{{"kind", "quadrilateral"},
                      {"vertices", Json::array({to_json(b.v[0]), to_json(b.v[1]), to_json(b.v[2]),
                                                to_json(b.v[3])})}};
        } else {
          return Json{{"kind", "pseudo_split"},
                      {"p1", to_json(b.p1)},
                      {"p2", to_json(b.p2)},
                      {"direction", to_json(b.direction)}};
        }
      },
      body);
}

inline LatticeFreeBody body_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("kind")) throw ParseError("body needs a 'kind' field");
  std::string kind = j.at("kind").get<std::string>();
  if (kind == "split")
    return Split(bigint_from_json(j.at("a")), bigint_from_json(j.at("b")),
                 bigint_from_json(j.at("c")));
  if (kind == "triangle") {
    const auto& v = j.at("vertices");
    if (!v.is_array() || v.size() != 3) throw ParseError("triangle needs 3 vertices");
    return Triangle(point_from_json(v[0]), point_from_json(v[1]), point_from_json(v[2]));
  }
  if (kind == "quadrilateral") {
    const auto& v = j.at("vertices");
    if (!v.is_array() || v.size() != 4) throw ParseError("quadrilateral needs 4 vertices");
    return Quadrilateral(point_from_json(v[0]), point_from_json(v[1]), point_from_json(v[2]),
                         point_from_json(v[3]));
  }
  if (kind == "pseudo_split")
    return PseudoSplit(point_from_json(j.at("p1")), point_from_json(j.at("p2")),
                       ray_from_json(j.at("direction")));
  throw ParseError("unknown body kind '" + kind + "'");
}

inline Json to_json(const CutRow& row) {
  Json coeffs = Json::array();
  for (const auto& c : row.coeffs) coeffs.push_back(to_json(c));
  return Json{{"coeffs", std::move(coeffs)}, {"body", to_json(row.body)}};
}

inline CutRow cut_row_from_json(const Json& j) {
  CutRow row{{}, body_from_json(j.at("body"))};
  for (const auto& c : j.at("coeffs")) row.coeffs.push_back(rational_from_json(c));
  return row;
}

inline Json to_json(const Instance& inst) {
  Json rays = Json::array();
  for (const auto& r : inst.rays) rays.push_back(to_json(r));
  return Json{{"f", to_json(inst.f)}, {"rays", std::move(rays)}};
}

inline Instance instance_from_json(const Json& j) {
  std::vector<Ray2> rays;
  for (const auto& r : j.at("rays")) rays.push_back(ray_from_json(r));
  return Instance(point_from_json(j.at("f")), std::move(rays));
}

inline Json to_json(const LPProblem& p) {
  Json rows = Json::array();
  for (const auto& row : p.rows) {
    Json r = Json::array();
    for (const auto& c : row) r.push_back(to_json(c));
    rows.push_back(std::move(r));
  }
  return Json{{"num_vars", p.num_vars}, {"rows", std::move(rows)}};
}

inline LPProblem lp_problem_from_json(const Json& j) {
  std::vector<std::vector<Rational>> rows;
  for (const auto& row : j.at("rows")) {
    std::vector<Rational> r;
    for (const auto& c : row) r.push_back(rational_from_json(c));
    rows.push_back(std::move(r));
  }
  return LPProblem(j.at("num_vars").get<size_t>(), std::move(rows));
}

inline Json to_json(const LPSolution& s) {
  Json point = Json::array(), dual = Json::array(), tight = Json::array();
  for (const auto& x : s.point) point.push_back(to_json(x));
  for (const auto& y : s.dual) dual.push_back(to_json(y));
  for (auto i : s.tight_rows) tight.push_back(i);
  return Json{{"value", to_json(s.value)},
              {"point", std::move(point)},
              {"tight_rows", std::move(tight)},
              {"dual", std::move(dual)}};
}

inline LPSolution lp_solution_from_json(const Json& j) {
  LPSolution s;
  s.value = rational_from_json(j.at("value"));
  for (const auto& x : j.at("point")) s.point.push_back(rational_from_json(x));
  for (const auto& y : j.at("dual")) s.dual.push_back(rational_from_json(y));
  for (const auto& i : j.at("tight_rows")) s.tight_rows.push_back(i.get<size_t>());
  return s;
}

inline Json to_json(const RayConditionReport& r) {
  Json pts = Json::array(), steps = Json::array();
  for (const auto& bp : r.final_set.points)
    pts.push_back(Json{{"point", to_json(bp.p)}, {"ray_index", bp.ray_index}});
  for (const auto& st : r.steps)
    steps.push_back(Json{{"step", st.step},
                         {"point", to_json(st.removed)},
                         {"ray_index", st.ray_index},
                         {"reason", st.reason}});
  return Json{{"holds", r.holds},
              {"body", to_json(r.final_set.body)},
              {"final_set", std::move(pts)},
              {"steps", std::move(steps)}};
}

inline Json to_json(const StrengthReport& r) {
  return Json{{"value", to_json(r.value)},
              {"lp_value", to_json(r.lp_value)},
              {"region", r.region_tag},
              {"witness", to_json(r.witness)}};
}

inline Json to_json(const BadExample& b) {
  return Json{{"family", to_string(b.family_tag)},
              {"body", to_json(b.body)},
              {"instance", to_json(b.inst)},
              {"claimed_bound", to_json(b.claimed_bound)}};
}

}  // namespace latcut
