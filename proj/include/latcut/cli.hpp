#pragma once

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "latcut/json_io.hpp"
#include "latcut/verify.hpp"

namespace latcut::cli {

inline Rational opt_rational(const std::string& s) { return parse_rational(s); }

inline Point2 parse_point(const std::string& s) {
  auto comma = s.find(',');
  if (comma == std::string::npos) throw ParseError("expected 'p/q,p/q' point: " + s);
  return {parse_rational(s.substr(0, comma)), parse_rational(s.substr(comma + 1))};
}

inline std::vector<Point2> parse_points(const std::string& s) {
  std::vector<Point2> pts;
  std::istringstream is(s);
  std::string tok;
  while (is >> tok) pts.push_back(parse_point(tok));
  return pts;
}

inline std::vector<Ray2> parse_rays(const std::string& s) {
  std::vector<Ray2> rays;
  std::string tok;
  std::istringstream is(s);
  while (std::getline(is, tok, ';')) {
    if (tok.empty()) continue;
    Point2 p = parse_point(tok);
    rays.push_back(Ray2{p.x1, p.x2});
  }
  return rays;
}

struct BodyFlags {
  std::string file, split, triangle, quad;

  void attach(CLI::App* cmd) {
    cmd->add_option("--body", file, "body as JSON file path ('-' for stdin)");
    cmd->add_option("--split", split, "split as 'a,b,c'");
    cmd->add_option("--triangle", triangle, "triangle as 'x,y x,y x,y'");
    cmd->add_option("--quad", quad, "quadrilateral as 'x,y x,y x,y x,y'");
  }

  LatticeFreeBody resolve() const {
    int given = !file.empty() + !split.empty() + !triangle.empty() + !quad.empty();
    if (given != 1) throw ParseError("give exactly one of --body/--split/--triangle/--quad");
    if (!split.empty()) {
      std::istringstream is(split);
      std::string a, b, c;
      if (!std::getline(is, a, ',') || !std::getline(is, b, ',') || !std::getline(is, c, ','))
        throw ParseError("expected --split 'a,b,c'");
      return Split(BigInt(a), BigInt(b), BigInt(c));
    }
    if (!triangle.empty()) {
      auto pts = parse_points(triangle);
      if (pts.size() != 3) throw ParseError("triangle needs three points");
      return Triangle(pts[0], pts[1], pts[2]);
    }
    if (!quad.empty()) {
      auto pts = parse_points(quad);
      if (pts.size() != 4) throw ParseError("quadrilateral needs four points");
      return Quadrilateral(pts[0], pts[1], pts[2], pts[3]);
    }
    Json j;
    if (file == "-") {
      std::cin >> j;
    } else {
      std::ifstream in(file);
      if (!in) throw ParseError("cannot open body file " + file);
      in >> j;
    }
    return body_from_json(j);
  }
};

struct OutputFlags {
  std::string format = "human";
  std::string path;

  void attach(CLI::App* cmd, bool csv = false) {
    cmd->add_option("--format", format,
                    csv ? "output format: csv|json" : "output format: human|json")
        ->default_val(csv ? "csv" : "human");
    cmd->add_option("--output", path, "write to this path instead of stdout");
  }

  void emit(const std::string& text, std::ostream& fallback) const {
    if (path.empty()) {
      fallback << text;
      return;
    }
    std::string full = path;
    const char* dir = std::getenv("LATCUT_OUTPUT_DIR");
    if (dir && *dir && path.find('/') != 0) full = std::string(dir) + "/" + path;
    std::ofstream out(full);
    if (!out) throw ParseError("cannot open output path " + full);
    out << text;
  }
};

/// Applies --config FILE defaults: any option of the active subcommand that
/// was not given on the command line picks up the config value.
inline std::vector<std::string> apply_config(std::vector<std::string> args) {
  std::string config_path;
  for (size_t i = 0; i + 1 < args.size(); ++i)
    if (args[i] == "--config") config_path = args[i + 1];
  if (config_path.empty()) return args;
  std::ifstream in(config_path);
  if (!in) throw ParseError("cannot open config file " + config_path);
  Json j;
  in >> j;
  if (!j.is_object()) throw ParseError("config file must hold a JSON object");
  for (const auto& [key, value] : j.items()) {
    std::string flag = "--" + key;
    bool already = false;
    for (const auto& a : args)
      if (a == flag) already = true;
    if (already) continue;
    args.push_back(flag);
    args.push_back(value.is_string() ? value.get<std::string>() : value.dump());
  }
  return args;
}

inline int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"exact two-row intersection-cut geometry and closure-strength LPs"};
  app.require_subcommand(1);
  std::string config_dummy;
  app.add_option("--config", config_dummy, "JSON file with default option values");

  // classify
  auto* classify_cmd = app.add_subcommand("classify", "classify a lattice-free body");
  BodyFlags classify_body;
  classify_body.attach(classify_cmd);
  OutputFlags classify_out;
  classify_out.attach(classify_cmd);

  // cut
  auto* cut_cmd = app.add_subcommand("cut", "intersection-cut row for an instance");
  BodyFlags cut_body;
  cut_body.attach(cut_cmd);
  std::string cut_f, cut_rays;
  cut_cmd->add_option("--f", cut_f, "fractional point 'p/q,p/q'")->required();
  cut_cmd->add_option("--rays", cut_rays, "rays 'd1,d2;d1,d2;...'")->required();
  OutputFlags cut_out;
  cut_out.attach(cut_cmd);

  // facet-check
  auto* facet_cmd = app.add_subcommand("facet-check", "facet test with reduction trace");
  BodyFlags facet_body;
  facet_body.attach(facet_cmd);
  std::string facet_f, facet_rays;
  facet_cmd->add_option("--f", facet_f, "fractional point")->required();
  facet_cmd->add_option("--rays", facet_rays, "rays 'd1,d2;...'")->required();
  OutputFlags facet_out;
  facet_out.attach(facet_cmd);

  // strength-type1
  auto* t1_cmd = app.add_subcommand("strength-type1", "Type 1 facet strength vs split closure");
  std::string t1_f;
  t1_cmd->add_option("--f", t1_f, "fractional point inside the reference triangle")->required();
  OutputFlags t1_out;
  t1_out.attach(t1_cmd);

  // level-curves
  auto* lc_cmd = app.add_subcommand("level-curves", "strength grid over the reference triangle");
  int lc_res = 0;
  lc_cmd->add_option("--resolution", lc_res, "grid resolution (>= 2)")->required();
  OutputFlags lc_out;
  lc_out.attach(lc_cmd, /*csv=*/true);

  // quad-bound
  auto* qb_cmd = app.add_subcommand("quad-bound", "quadrilateral facet vs triangle closure");
  std::string qb_t, qb_f;
  qb_cmd->add_option("--t", qb_t, "edge parameter t > 1")->required();
  qb_cmd->add_option("--f", qb_f, "fractional point with f1,f2 <= 1/2")->required();
  OutputFlags qb_out;
  qb_out.attach(qb_cmd);

  // type3-bound
  auto* t3_cmd = app.add_subcommand("type3-bound", "Type 3 facet vs Type 2 triangles");
  std::string t3_t1, t3_t2, t3_t3, t3_f, t3_case = "I";
  t3_cmd->add_option("--t1", t3_t1)->required();
  t3_cmd->add_option("--t2", t3_t2)->required();
  t3_cmd->add_option("--t3", t3_t3)->required();
  t3_cmd->add_option("--f", t3_f)->required();
  t3_cmd->add_option("--case", t3_case, "position case: I or II");
  OutputFlags t3_out;
  t3_out.attach(t3_cmd);

  // pseudo-split
  auto* ps_cmd = app.add_subcommand("pseudo-split", "pseudo-split closure value and bound");
  std::string ps_t1, ps_t2, ps_t3, ps_f2, ps_m1 = "1/1", ps_m2 = "1/1", ps_m3 = "1/1";
  ps_cmd->add_option("--t1", ps_t1)->required();
  ps_cmd->add_option("--t2", ps_t2)->required();
  ps_cmd->add_option("--t3", ps_t3)->required();
  ps_cmd->add_option("--f2", ps_f2)->required();
  ps_cmd->add_option("--mu1", ps_m1);
  ps_cmd->add_option("--mu2", ps_m2);
  ps_cmd->add_option("--mu3", ps_m3);
  OutputFlags ps_out;
  ps_out.attach(ps_cmd);

  // bad-example
  auto* be_cmd = app.add_subcommand("bad-example", "family beating the split closure");
  std::string be_family, be_f2;
  int be_m = 0;
  be_cmd->add_option("--family", be_family, "type2|type3|quadrilateral")->required();
  be_cmd->add_option("--m", be_m, "lattice points on the long edge (>= 2)")->required();
  be_cmd->add_option("--f2", be_f2, "fractional height in (0,1)")->required();
  OutputFlags be_out;
  be_out.attach(be_cmd);

  // verify-all
  auto* va_cmd = app.add_subcommand("verify-all", "run every theorem suite");
  OutputFlags va_out;
  va_out.attach(va_cmd);

  try {
    args = apply_config(std::move(args));
    std::vector<const char*> argv;
    argv.push_back("latcut");
    for (const auto& a : args) argv.push_back(a.c_str());
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {  // --help
      out << app.help();
      return 0;
    }
    err << "parse error: " << e.what() << "\n";
    return 1;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return 1;
  }

  try {
    if (*classify_cmd) {
      Classification c = classify(classify_body.resolve());
      if (classify_out.format == "json")
        classify_out.emit(Json{{"classification", to_string(c)}}.dump() + "\n", out);
      else
        classify_out.emit(std::string(to_string(c)) + "\n", out);
      return 0;
    }
    if (*cut_cmd) {
      Instance inst(parse_point(cut_f), parse_rays(cut_rays));
      CutRow row = cut_row(cut_body.resolve(), inst);
      if (cut_out.format == "json") {
        cut_out.emit(to_json(row).dump() + "\n", out);
      } else {
        std::string line = "coeffs:";
        for (const auto& c : row.coeffs) line += " " + format_rational(c);
        cut_out.emit(line + "\n", out);
      }
      return 0;
    }
    if (*facet_cmd) {
      LatticeFreeBody body = facet_body.resolve();
      Instance inst(parse_point(facet_f), parse_rays(facet_rays));
      FacetStatus status = is_facet(body, inst);
      RayConditionReport report = ray_condition_report(body, inst);
      if (facet_out.format == "json") {
        Json j{{"status", to_string(status)}, {"ray_condition", to_json(report)}};
        facet_out.emit(j.dump() + "\n", out);
      } else {
        std::ostringstream os;
        os << to_string(status) << " (ray condition: " << (report.holds ? "holds" : "fails")
           << ", " << report.steps.size() << " reduction steps)\n";
        facet_out.emit(os.str(), out);
      }
      return 0;
    }
    if (*t1_cmd) {
      StrengthReport rep = type1_split_strength(parse_point(t1_f));
      if (t1_out.format == "json") {
        t1_out.emit(to_json(rep).dump() + "\n", out);
      } else {
        t1_out.emit("value " + format_rational(rep.value) + " region " + rep.region_tag + "\n",
                    out);
      }
      return 0;
    }
    if (*lc_cmd) {
      auto cells = level_curve_grid(lc_res);
      if (lc_out.format == "json") {
        Json arr = Json::array();
        for (const auto& c : cells)
          arr.push_back(Json{{"f", to_json(c.f)}, {"value", to_json(c.value)}, {"region", c.region}});
        lc_out.emit(arr.dump() + "\n", out);
      } else {
        lc_out.emit(level_curve_csv(cells), out);
      }
      return 0;
    }
    if (*qb_cmd) {
      StrengthReport rep = quad_vs_triangle_bound(opt_rational(qb_t), parse_point(qb_f));
      if (qb_out.format == "json")
        qb_out.emit(to_json(rep).dump() + "\n", out);
      else
        qb_out.emit("closed_form " + format_rational(rep.value) + " lp " +
                        format_rational(rep.lp_value) + "\n",
                    out);
      return 0;
    }
    if (*t3_cmd) {
      Type3Case c;
      if (t3_case == "I") c = Type3Case::CaseI;
      else if (t3_case == "II") c = Type3Case::CaseII;
      else throw ParseError("--case must be I or II");
      StrengthReport rep = type3_vs_type2_bound(opt_rational(t3_t1), opt_rational(t3_t2),
                                                opt_rational(t3_t3), parse_point(t3_f), c);
      if (t3_out.format == "json")
        t3_out.emit(to_json(rep).dump() + "\n", out);
      else
        t3_out.emit("closed_form " + format_rational(rep.value) + " lp " +
                        format_rational(rep.lp_value) + " (" + rep.region_tag + ")\n",
                    out);
      return 0;
    }
    if (*ps_cmd) {
      StrengthReport rep =
          pseudo_split_closure_value(opt_rational(ps_t1), opt_rational(ps_t2), opt_rational(ps_t3),
                                     opt_rational(ps_m1), opt_rational(ps_m2), opt_rational(ps_m3),
                                     opt_rational(ps_f2));
      if (ps_out.format == "json")
        ps_out.emit(to_json(rep).dump() + "\n", out);
      else
        ps_out.emit("bound " + format_rational(rep.value) + " lp " +
                        format_rational(rep.lp_value) + "\n",
                    out);
      return 0;
    }
    if (*be_cmd) {
      BadExampleFamily family;
      if (be_family == "type2") family = BadExampleFamily::Type2;
      else if (be_family == "type3") family = BadExampleFamily::Type3;
      else if (be_family == "quadrilateral") family = BadExampleFamily::Quadrilateral;
      else throw ParseError("--family must be type2, type3 or quadrilateral");
      BadExample be = bad_example(family, be_m, opt_rational(be_f2));
      std::vector<CutRow> rows;
      for (const auto& s : pseudo_split_family(be.inst))
        rows.push_back(cut_row(LatticeFreeBody(s), be.inst));
      LPSolution sol = solve_min_sum(LPProblem::from_cut_rows(rows));
      Json j = to_json(be);
      j["lp_value"] = to_json(sol.value);
      if (be_out.format == "json")
        be_out.emit(j.dump() + "\n", out);
      else
        be_out.emit("claimed_bound " + format_rational(be.claimed_bound) + " lp_value " +
                        format_rational(sol.value) + "\n",
                    out);
      return 0;
    }
    if (*va_cmd) {
      auto results = run_verification_suite();
      if (va_out.format == "json") {
        Json arr = Json::array();
        for (const auto& r : results)
          arr.push_back(Json{{"suite", r.name}, {"pass", r.pass}, {"detail", r.detail}});
        va_out.emit(arr.dump() + "\n", out);
      } else {
        std::ostringstream os;
        for (const auto& r : results)
          os << (r.pass ? "[PASS] " : "[FAIL] ") << r.name << ": " << r.detail << "\n";
        va_out.emit(os.str(), out);
      }
      return all_passed(results) ? 0 : 1;
    }
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return 1;
  } catch (const Error& e) {
    err << e.what() << "\n";
    return 2;
  }
  err << "no subcommand given\n";
  return 1;
}

}  // namespace latcut::cli
