// planelab: verify/search pipelines for six classical plane-geometry
// problems. JSON in, JSON out; SVG is presentation only.
//
// Exit codes: 0 success/verified, 1 verification negative, 2 usage or IO
// error, 3 internal numerical failure.

#include "planelab/arrangement.hpp"
#include "planelab/cages.hpp"
#include "planelab/fixtures.hpp"
#include "planelab/forest.hpp"
#include "planelab/inscribed.hpp"
#include "planelab/json_io.hpp"
#include "planelab/packing.hpp"
#include "planelab/parallel.hpp"
#include "planelab/sofa.hpp"
#include "planelab/svg.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <iostream>

using namespace planelab;

namespace {

struct Common {
  std::uint64_t seed = 0;
  double tol = 1e-9;
  long budget = 100000;
  std::string out;
  std::string svg;
  unsigned precision_bits = 128;
};

void add_common(CLI::App* cmd, Common& c) {
  cmd->add_option("--seed", c.seed, "RNG seed");
  cmd->add_option("--tol", c.tol, "tolerance");
  cmd->add_option("--budget", c.budget, "iteration budget");
  cmd->add_option("--out", c.out, "write the JSON report here instead of stdout");
  cmd->add_option("--svg", c.svg, "write an SVG rendering");
  cmd->add_option("--precision-bits", c.precision_bits, "adaptive precision (>= 64)")
      ->check(CLI::Range(64u, 4096u));
}

void emit(const Common& c, const Json& report) {
  if (!c.out.empty())
    write_json_file(c.out, report);
  else
    std::cout << report.dump(2) << "\n";
}

std::vector<geom::Line2<Rational>> lines_from_file(const std::string& path) {
  Json j = load_json_file(path);
  std::vector<geom::Line2<Rational>> lines;
  for (const auto& lj : j.at("lines")) lines.push_back(json_to_line_exact(lj));
  return lines;
}

Json bounds_json(const kobon::KobonBounds& b) {
  Json j{{"n", b.n}, {"lower", b.lower}, {"upper", b.upper}};
  if (b.known) j["known"] = *b.known;
  return j;
}

template <class S>
void arrangement_svg(const std::string& path, const kobon::Arrangement<S>& arr) {
  SvgCanvas svg;
  double r = 1.0;
  for (const auto& v : arr.vertices)
    r = std::max({r, std::abs(ScalarOps<S>::to_double(v.pos.x)),
                  std::abs(ScalarOps<S>::to_double(v.pos.y))});
  r *= 1.3;
  // Shade triangular faces, then draw lines and vertices.
  for (const auto& f : arr.faces) {
    if (!f.bounded || f.sides != 3) continue;
    (void)f;
  }
  for (const auto& v : arr.vertices)
    svg.circle({ScalarOps<S>::to_double(v.pos.x), ScalarOps<S>::to_double(v.pos.y)}, 0.012 * r,
               "#aa3333", "none", 0);
  for (const auto& l : arr.lines)
    svg.line(ScalarOps<S>::to_double(l.a), ScalarOps<S>::to_double(l.b),
             ScalarOps<S>::to_double(l.c));
  svg.save(path);
}

Json fit_report(const cages::FitResult& fit, const cages::Cage& cage) {
  Json j{{"cage", cage.name()},
         {"found", fit.found},
         {"margin", fit.margin}};
  if (fit.found) j["motion"] = motion_to_json(fit.motion);
  return j;
}

cages::Cage cage_from_flags(const std::string& kind, double diameter, double d1, double d2,
                            double angle_deg, double radius, const std::string& cage_file) {
  if (kind == "disk") return cages::Cage::disk(diameter);
  if (kind == "rhombus") return cages::Cage::rhombus(d1, d2);
  if (kind == "sector") return cages::Cage::sector(angle_deg * M_PI / 180.0, radius);
  if (kind == "polygon") {
    if (cage_file.empty())
      throw std::invalid_argument("polygon cage needs --cage-file with {\"vertices\": ...}");
    return cages::Cage::polygon(json_to_vertices(load_json_file(cage_file)));
  }
  throw std::invalid_argument("unknown cage kind: " + kind);
}

forest::Forest forest_from_json(const Json& j) {
  if (j.contains("strip")) return forest::Forest::strip(json_to_double(j["strip"].at("width")));
  if (j.contains("polygon")) return forest::Forest::polygon(json_to_vertices(j["polygon"]));
  if (j.contains("vertices")) return forest::Forest::polygon(json_to_vertices(j));
  throw std::invalid_argument("forest JSON needs \"strip\" or \"polygon\"");
}

sofa::MotionPlan plan_from_json(const Json& j) {
  sofa::MotionPlan plan;
  for (const auto& s : j.at("samples"))
    plan.samples.push_back({json_to_double(s.at("t")), json_to_motion(s)});
  if (j.contains("delta_step")) {
    plan.delta_step = json_to_double(j["delta_step"]);
  } else {
    plan.delta_step = 0;  // filled by caller against the shape
  }
  return plan;
}

void fill_delta_step(const sofa::SofaShape& shape, sofa::MotionPlan& plan) {
  if (plan.delta_step > 0) return;
  double worst = 0;
  for (size_t i = 0; i + 1 < plan.samples.size(); ++i)
    for (const auto& v : shape.boundary)
      worst = std::max(worst,
                       geom::dist(plan.samples[i].motion(v), plan.samples[i + 1].motion(v)));
  plan.delta_step = std::max(worst * 1.05, 1e-12);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"planelab: six open plane-geometry problems as verify/search pipelines"};
  app.require_subcommand(1);
  int exit_code = 0;

  try {
    // ---- kobon ----
    auto* kob = app.add_subcommand("kobon", "line arrangements and Kobon triangles");
    kob->require_subcommand(1);

    Common kc_count;
    std::string kob_in;
    auto* kcount = kob->add_subcommand("count", "count triangles of a line configuration");
    kcount->add_option("--in", kob_in, "lines JSON file")->required();
    add_common(kcount, kc_count);
    kcount->callback([&] {
      auto lines = lines_from_file(kob_in);
      auto arr = kobon::build_arrangement(lines);
      auto rep = kobon::verify_configuration(lines);
      Json j{{"n", rep.n},
             {"triangle_count", rep.triangle_count},
             {"bounds", bounds_json(rep.bounds)},
             {"is_record", rep.is_record},
             {"euler", {{"v", rep.euler_v}, {"e", rep.euler_e}, {"f", rep.euler_f}}},
             {"concurrences", rep.concurrences},
             {"merged_clusters", rep.merged_clusters}};
      if (!kc_count.svg.empty()) arrangement_svg(kc_count.svg, arr);
      emit(kc_count, j);
    });

    Common kc_fp;
    int fp_n = 8;
    auto* kfp = kob->add_subcommand("fp", "Furedi-Palasti construction");
    kfp->add_option("--n", fp_n, "number of lines")->required()->check(CLI::Range(3, 64));
    add_common(kfp, kc_fp);
    kfp->callback([&] {
      AdaptivePrecision prec(kc_fp.precision_bits);
      auto lines = kobon::furedi_palasti(fp_n);
      auto arr = kobon::build_arrangement(lines);
      auto bounds = kobon::kobon_bounds(fp_n);
      Json j{{"n", fp_n},
             {"triangle_count", arr.triangles},
             {"fp_lower_bound", std::max(0LL, static_cast<long long>(fp_n) * (fp_n - 3) / 3)},
             {"bounds", bounds_json(bounds)},
             {"concurrences", arr.concurrences},
             {"merged_clusters", arr.merged_clusters}};
      if (!kc_fp.svg.empty()) arrangement_svg(kc_fp.svg, arr);
      emit(kc_fp, j);
    });

    Common kc_bounds;
    int bounds_n = 10;
    bool cb_corr = false;
    auto* kbounds = kob->add_subcommand("bounds", "Kobon sequence bounds");
    kbounds->add_option("--n", bounds_n)->required()->check(CLI::Range(1, 1000000));
    kbounds->add_flag("--cb-correction", cb_corr,
                      "apply the sharper n = 0,2 (mod 6) branch of the upper bound");
    add_common(kbounds, kc_bounds);
    kbounds->callback([&] {
      auto b = kobon::kobon_bounds(bounds_n, cb_corr);
      emit(kc_bounds, bounds_json(b));
    });

    // ---- pack ----
    auto* pack = app.add_subcommand("pack", "unit circles in an equilateral triangle");
    pack->require_subcommand(1);

    Common pc_verify;
    std::string pack_in;
    auto* pverify = pack->add_subcommand("verify", "verify a packing instance");
    pverify->add_option("--in", pack_in)->required();
    add_common(pverify, pc_verify);
    pc_verify.tol = 1e-7;
    pverify->callback([&] {
      Json j = load_json_file(pack_in);
      packing::PackingInstance inst;
      inst.side = json_to_double(j.at("side"));
      for (const auto& cj : j.at("centers")) inst.centers.push_back(json_to_point(cj));
      auto res = packing::verify_packing(inst, pc_verify.tol);
      emit(pc_verify, Json{{"n", inst.centers.size()},
                           {"side", inst.side},
                           {"valid", res.valid},
                           {"worst_margin", res.worst_margin}});
      if (!res.valid) exit_code = 1;
    });

    Common pc_opt;
    int opt_n = 3;
    auto* popt = pack->add_subcommand("optimize", "search the smallest feasible side");
    popt->add_option("--n", opt_n)->required()->check(CLI::Range(1, 100));
    add_common(popt, pc_opt);
    popt->callback([&] {
      auto inst = packing::optimize_packing(opt_n, pc_opt.seed, pc_opt.budget);
      auto chk = packing::verify_packing(inst, 1e-7);
      Json centers = Json::array();
      for (const auto& c : inst.centers) centers.push_back(point_to_json(c));
      Json j{{"n", opt_n},
             {"side", inst.side},
             {"centers", centers},
             {"valid", chk.valid},
             {"worst_margin", chk.worst_margin}};
      if (!pc_opt.svg.empty()) {
        SvgCanvas svg;
        double s = inst.side;
        svg.polygon({{0, 0}, {s, 0}, {s / 2, s * std::sqrt(3.0) / 2}}, "none", "#222222",
                    0.01 * s);
        for (const auto& c : inst.centers) svg.circle(c, 1.0, "#9ec9e8", "#1f4e8c", 0.01);
        svg.save(pc_opt.svg);
      }
      emit(pc_opt, j);
      if (!chk.valid) exit_code = 3;
    });

    Common pc_eo;
    int eo_k = 2;
    auto* peo = pack->add_subcommand("erdos-oler", "compare triangular-number packings");
    peo->add_option("--k", eo_k)->required()->check(CLI::Range(2, 8));
    add_common(peo, pc_eo);
    peo->callback([&] {
      auto rep = packing::erdos_oler_check(eo_k, pc_eo.seed, pc_eo.budget);
      emit(pc_eo, Json{{"k", rep.k},
                       {"n", rep.n},
                       {"side_n", rep.side_n},
                       {"side_n_minus_1", rep.side_n_minus_1},
                       {"gap", rep.gap}});
    });

    // ---- worm ----
    auto* worm = app.add_subcommand("worm", "Moser worm cages");
    worm->require_subcommand(1);
    std::string cage_kind = "rhombus", cage_file;
    double cg_diameter = 1.0, cg_d1 = 1.0, cg_d2 = 1.0 / std::sqrt(3.0);
    double cg_angle_deg = 30.0, cg_radius = 1.0;
    auto add_cage_flags = [&](CLI::App* cmd) {
      cmd->add_option("--cage", cage_kind, "disk|rhombus|sector|polygon");
      cmd->add_option("--diameter", cg_diameter, "disk diameter");
      cmd->add_option("--d1", cg_d1, "rhombus long diagonal");
      cmd->add_option("--d2", cg_d2, "rhombus short diagonal");
      cmd->add_option("--angle-deg", cg_angle_deg, "sector angle in degrees");
      cmd->add_option("--radius", cg_radius, "sector radius");
      cmd->add_option("--cage-file", cage_file, "polygon cage JSON");
    };

    Common wc_fit;
    std::string worm_in;
    auto* wfit = worm->add_subcommand("fit", "accommodate one worm");
    wfit->add_option("--in", worm_in, "worm polyline JSON")->required();
    add_cage_flags(wfit);
    add_common(wfit, wc_fit);
    wfit->callback([&] {
      auto cage = cage_from_flags(cage_kind, cg_diameter, cg_d1, cg_d2, cg_angle_deg, cg_radius,
                                  cage_file);
      auto w = cages::make_worm(json_to_vertices(load_json_file(worm_in)));
      auto fit = cages::accommodate(w, cage, wc_fit.budget);
      if (!wc_fit.svg.empty()) {
        SvgCanvas svg;
        if (cage.kind() == cages::Cage::Kind::Disk)
          svg.circle({0, 0}, cg_diameter / 2);
        else if (cage.kind() == cages::Cage::Kind::Polygon)
          svg.polygon(cage.polygon_vertices());
        else if (cage.kind() == cages::Cage::Kind::Rhombus)
          svg.polygon({{cg_d1 / 2, 0}, {0, cg_d2 / 2}, {-cg_d1 / 2, 0}, {0, -cg_d2 / 2}});
        if (fit.found) svg.polyline(geom::apply_motion(fit.motion, w.path), "#aa3333");
        svg.save(wc_fit.svg);
      }
      emit(wc_fit, fit_report(fit, cage));
      if (!fit.found) exit_code = 1;
    });

    Common wc_sweep;
    std::string family_kind = "three-seg";
    int sweep_grid = 10, family_count = 100, family_segments = 20;
    auto* wsweep = worm->add_subcommand("sweep", "accommodate a worm family");
    wsweep->add_option("--family", family_kind, "three-seg|random");
    wsweep->add_option("--grid", sweep_grid, "three-seg grid steps");
    wsweep->add_option("--count", family_count, "random family size");
    wsweep->add_option("--segments", family_segments, "random worm segments");
    add_cage_flags(wsweep);
    add_common(wsweep, wc_sweep);
    wsweep->callback([&] {
      auto cage = cage_from_flags(cage_kind, cg_diameter, cg_d1, cg_d2, cg_angle_deg, cg_radius,
                                  cage_file);
      std::vector<cages::Worm> family;
      if (family_kind == "three-seg") {
        family = cages::three_segment_worms(sweep_grid);
      } else if (family_kind == "random") {
        for (int i = 0; i < family_count; ++i)
          family.push_back(cages::random_worm(wc_sweep.seed + i, family_segments));
      } else {
        throw std::invalid_argument("unknown family: " + family_kind);
      }
      auto res = cages::cage_falsify(cage, family, wc_sweep.budget);
      Json j{{"cage", cage.name()},
             {"family", family_kind},
             {"worms", family.size()},
             {"falsified", res.falsified}};
      if (res.falsified) {
        j["worm_index"] = res.worm_index;
        j["margin"] = res.margin;
      }
      emit(wc_sweep, j);
      if (res.falsified) exit_code = 1;
    });

    Common wc_area;
    auto* warea = worm->add_subcommand("area", "cage area");
    add_cage_flags(warea);
    add_common(warea, wc_area);
    warea->callback([&] {
      auto cage = cage_from_flags(cage_kind, cg_diameter, cg_d1, cg_d2, cg_angle_deg, cg_radius,
                                  cage_file);
      emit(wc_area, Json{{"cage", cage.name()}, {"area", cages::cage_area(cage)}});
    });

    // ---- sofa ----
    auto* sof = app.add_subcommand("sofa", "moving sofa verification");
    sof->require_subcommand(1);

    Common sc_verify;
    std::string shape_in, plan_in;
    auto* sverify = sof->add_subcommand("verify", "verify a motion plan");
    sverify->add_option("--shape", shape_in)->required();
    sverify->add_option("--plan", plan_in)->required();
    add_common(sverify, sc_verify);
    sverify->callback([&] {
      auto shape = sofa::make_shape(json_to_vertices(load_json_file(shape_in)));
      auto plan = plan_from_json(load_json_file(plan_in));
      fill_delta_step(shape, plan);
      auto rep = sofa::sofa_report(shape, plan);
      emit(sc_verify, Json{{"area", rep.area},
                           {"valid", rep.valid},
                           {"traversal", rep.traversal},
                           {"min_margin", rep.min_margin},
                           {"bracket_position", rep.bracket_position},
                           {"numerical_error", rep.numerical_error}});
      if (!rep.valid || !rep.traversal) exit_code = 1;
    });

    Common sc_ham;
    double ham_tess = 1e-4;
    int ham_frames = 0, ham_samples = 1000;
    auto* sham = sof->add_subcommand("hammersley", "Hammersley sofa and corner sweep");
    sham->add_option("--tess", ham_tess, "tessellation chordal tolerance");
    sham->add_option("--frames", ham_frames, "emit this many SVG frames under --svg dir");
    sham->add_option("--samples", ham_samples, "plan samples");
    add_common(sham, sc_ham);
    sham->callback([&] {
      auto [shape, plan] = sofa::hammersley_sofa(ham_tess, ham_samples);
      auto rep = sofa::sofa_report(shape, plan);
      Json j{{"area", rep.area},
             {"nominal_area", *shape.nominal_area},
             {"valid", rep.valid},
             {"traversal", rep.traversal},
             {"min_margin", rep.min_margin},
             {"bracket_position", rep.bracket_position},
             {"samples", static_cast<int>(plan.samples.size())}};
      if (!sc_ham.svg.empty() && ham_frames > 0) {
        std::filesystem::create_directories(sc_ham.svg);
        for (int f = 0; f < ham_frames; ++f) {
          size_t idx = static_cast<size_t>(std::llround(
              double(f) / std::max(1, ham_frames - 1) * (plan.samples.size() - 1)));
          SvgCanvas svg;
          svg.polyline({{1, -4}, {1, 1}, {-4, 1}}, "#222222", 0.02);
          svg.polyline({{0, -4}, {0, 0}, {-4, 0}}, "#222222", 0.02);
          svg.polygon(geom::apply_motion(plan.samples[idx].motion, shape.boundary), "#9ec9e8",
                      "#1f4e8c", 0.01);
          char name[64];
          std::snprintf(name, sizeof name, "/frame_%03d.svg", f);
          svg.save(sc_ham.svg + name);
        }
      } else if (!sc_ham.svg.empty()) {
        SvgCanvas svg;
        svg.polygon(shape.boundary, "#9ec9e8", "#1f4e8c", 0.01);
        svg.save(sc_ham.svg);
      }
      emit(sc_ham, j);
      if (!rep.valid || !rep.traversal) exit_code = 3;
    });

    // ---- forest ----
    auto* fore = app.add_subcommand("forest", "Bellman lost-in-forest checks");
    fore->require_subcommand(1);

    Common fc_strip;
    std::string path_in;
    double strip_width = 1.0;
    auto* fstrip = fore->add_subcommand("certify-strip", "strip escape certification");
    fstrip->add_option("--path", path_in)->required();
    fstrip->add_option("--width", strip_width);
    add_common(fstrip, fc_strip);
    fstrip->callback([&] {
      forest::EscapePath p{json_to_vertices(load_json_file(path_in))};
      bool ok = forest::strip_escape_certifies(p, strip_width);
      emit(fc_strip, Json{{"width", strip_width},
                          {"certified", ok},
                          {"path_length", geom::polyline_length(p.path)}});
      if (!ok) exit_code = 1;
    });

    Common fc_fat;
    std::string forest_in;
    auto* ffat = fore->add_subcommand("fat", "fat forest detection");
    ffat->add_option("--in", forest_in)->required();
    add_common(ffat, fc_fat);
    ffat->callback([&] {
      auto f = forest_from_json(load_json_file(forest_in));
      auto L = forest::is_fat_forest(f, fc_fat.tol);
      Json j{{"fat", L.has_value()}};
      if (L) {
        j["L"] = *L;
        j["best_path_length"] = *L;
      }
      emit(fc_fat, j);
      if (!L) exit_code = 1;
    });

    Common fc_fal;
    std::string fal_forest, fal_path;
    int fal_orient = 360, fal_grid = 24;
    auto* ffal = fore->add_subcommand("falsify", "search for a trapping placement");
    ffal->add_option("--forest", fal_forest)->required();
    ffal->add_option("--path", fal_path)->required();
    ffal->add_option("--orientations", fal_orient);
    ffal->add_option("--grid", fal_grid);
    add_common(ffal, fc_fal);
    ffal->callback([&] {
      auto f = forest_from_json(load_json_file(fal_forest));
      forest::EscapePath p{json_to_vertices(load_json_file(fal_path))};
      auto res = forest::escape_falsify(f, p, fal_orient, fal_grid);
      Json j{{"trapped", res.found}, {"margin", res.margin}};
      if (res.found) j["placement"] = motion_to_json(res.motion);
      if (!fc_fal.svg.empty() && !f.is_strip()) {
        SvgCanvas svg;
        svg.polygon(f.poly().vertices(), "#e8f0d8", "#3a5a1a", 0.01);
        if (res.found) svg.polyline(geom::apply_motion(res.motion, p.path), "#aa3333", 0.015);
        svg.save(fc_fal.svg);
      }
      emit(fc_fal, j);
      if (res.found) exit_code = 1;  // the path does not guarantee escape
    });

    // ---- square ----
    auto* squ = app.add_subcommand("square", "inscribed squares in Jordan curves");
    squ->require_subcommand(1);

    Common qc_find;
    std::string curve_in;
    int sq_grid = 64;
    auto* qfind = squ->add_subcommand("find", "find inscribed squares");
    qfind->add_option("--in", curve_in)->required();
    qfind->add_option("--grid", sq_grid)->check(CLI::Range(8, 1024));
    add_common(qfind, qc_find);
    qc_find.tol = 1e-6;
    qfind->callback([&] {
      insq::ClosedCurve curve(json_to_vertices(load_json_file(curve_in)));
      auto res = insq::find_inscribed_squares(curve, sq_grid, qc_find.tol, qc_find.budget);
      Json cands = Json::array();
      int verified = 0;
      for (const auto& cand : res.candidates) {
        bool ok = insq::verify_candidate(curve, cand, qc_find.tol);
        verified += ok;
        Json cj{{"params", cand.params},
                {"side", cand.side},
                {"residual", cand.residual},
                {"verified", ok}};
        Json vs = Json::array();
        for (const auto& v : cand.vertices) vs.push_back(point_to_json(v));
        cj["vertices"] = vs;
        cands.push_back(cj);
      }
      Json j{{"candidates", cands},
             {"count", res.candidates.size()},
             {"verified", verified},
             {"family_detected", res.family_detected}};
      if (!qc_find.svg.empty()) {
        SvgCanvas svg;
        svg.polygon(curve.vertices(), "none", "#1f4e8c", 0.01);
        for (const auto& cand : res.candidates) {
          std::vector<geom::Vec2> sq(cand.vertices.begin(), cand.vertices.end());
          svg.polygon(sq, "none", "#aa3333", 0.008);
        }
        svg.save(qc_find.svg);
      }
      emit(qc_find, j);
      if (res.candidates.empty()) exit_code = 1;
    });

    // ---- fixtures ----
    auto* fix = app.add_subcommand("fixtures", "bundled data files");
    auto* fpath = fix->add_subcommand("path", "print the fixtures directory");
    fpath->callback([&] { std::cout << fixtures_dir() << "\n"; });

    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::runtime_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  return exit_code;
}
