// Acceptance suite: one pass/fail line per criterion, at the stated
// tolerances and runtime limits. Every criterion is executed twice, with the
// worker pool capped at 1 and at 8 threads; the JSON reports must be
// byte-identical (criterion 10).

#include "planelab/arrangement.hpp"
#include "planelab/cages.hpp"
#include "planelab/fixtures.hpp"
#include "planelab/forest.hpp"
#include "planelab/inscribed.hpp"
#include "planelab/json_io.hpp"
#include "planelab/packing.hpp"
#include "planelab/parallel.hpp"
#include "planelab/rng.hpp"
#include "planelab/sofa.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <vector>

using namespace planelab;
using geom::Vec2;

namespace {

constexpr double kSqrt3 = 1.7320508075688772;

struct Outcome {
  bool pass = true;
  Json report = Json::object();
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail += (detail.empty() ? "" : "; ") + what;
    }
  }
};

std::vector<geom::Line2<Rational>> fixture_lines(int n) {
  Json j = load_json_file(fixture_path("kobon/kobon_n" + std::to_string(n) + ".json"));
  std::vector<geom::Line2<Rational>> lines;
  for (const auto& lj : j.at("lines")) lines.push_back(json_to_line_exact(lj));
  return lines;
}

std::vector<Vec2> regular_ngon(int n, double r) {
  std::vector<Vec2> v;
  for (int k = 0; k < n; ++k)
    v.push_back({r * std::cos(2 * M_PI * k / n), r * std::sin(2 * M_PI * k / n)});
  return v;
}

// --- criterion 1: Kobon known values n = 3..7 -------------------------------
Outcome criterion1() {
  Outcome out;
  const std::pair<int, int> expect[] = {{3, 1}, {4, 2}, {5, 5}, {6, 7}, {7, 11}};
  for (auto [n, want] : expect) {
    auto arr = kobon::build_arrangement(fixture_lines(n));
    out.report["n" + std::to_string(n)] = arr.triangles;
    out.require(arr.triangles == want, "n=" + std::to_string(n) + " counted " +
                                           std::to_string(arr.triangles) + " != " +
                                           std::to_string(want));
  }
  return out;
}

// --- criterion 2: the n = 10 anchor -----------------------------------------
Outcome criterion2() {
  Outcome out;
  auto arr = kobon::build_arrangement(fixture_lines(10));
  auto bounds = kobon::kobon_bounds(10);
  out.report["triangles"] = arr.triangles;
  out.report["upper"] = bounds.upper;
  out.require(arr.triangles == 25, "n=10 counted " + std::to_string(arr.triangles) + " != 25");
  out.require(bounds.upper == 26, "upper bound != 26");
  return out;
}

// --- criterion 3: Furedi-Palasti for n = 3..16 ------------------------------
Outcome criterion3() {
  Outcome out;
  AdaptivePrecision prec(128);
  for (int n = 3; n <= 16; ++n) {
    long long want = std::max(0LL, static_cast<long long>(n) * (n - 3) / 3);
    auto arr = kobon::build_arrangement(kobon::furedi_palasti(n));
    out.report["n" + std::to_string(n)] = arr.triangles;
    out.require(arr.triangles >= want,
                "FP n=" + std::to_string(n) + ": " + std::to_string(arr.triangles) + " < " +
                    std::to_string(want));
  }
  return out;
}

// --- criterion 4: Euler + affine invariance over 200 rational arrangements --
Outcome criterion4() {
  Outcome out;
  Rng rng(424242);
  int euler_ok = 0, affine_ok = 0;
  for (int t = 0; t < 200; ++t) {
    int n = 3 + static_cast<int>(rng.below(8));  // n <= 10
    std::vector<geom::Line2<Rational>> lines;
    while (static_cast<int>(lines.size()) < n) {
      long a = static_cast<long>(rng.below(41)) - 20;
      long b = static_cast<long>(rng.below(41)) - 20;
      long c = static_cast<long>(rng.below(41)) - 20;
      if (a == 0 && b == 0) continue;
      geom::Line2<Rational> l;
      l.a = Rational(a);
      l.b = Rational(b);
      l.c = Rational(c);
      l.normalize();
      bool dup = false;
      for (const auto& o : lines) dup |= (o.a == l.a && o.b == l.b && o.c == l.c);
      if (!dup) lines.push_back(l);
    }
    auto arr = kobon::build_arrangement(lines);
    bool euler = arr.euler_v - arr.euler_e + arr.euler_f == 2;
    euler_ok += euler;

    Rational m00, m01, m10, m11, tx, ty, det;
    do {
      auto rnd = [&] {
        return Rational(static_cast<long>(rng.below(9)) - 4,
                        1 + static_cast<long>(rng.below(3)));
      };
      m00 = rnd();
      m01 = rnd();
      m10 = rnd();
      m11 = rnd();
      tx = rnd();
      ty = rnd();
      det = m00 * m11 - m01 * m10;
    } while (det == 0);
    std::vector<geom::Line2<Rational>> mapped;
    for (const auto& l : lines) {
      Rational a2 = (l.a * m11 - l.b * m10) / det;
      Rational b2 = (l.b * m00 - l.a * m01) / det;
      Rational c2 = l.c - (a2 * tx + b2 * ty);
      geom::Line2<Rational> lm;
      lm.a = a2;
      lm.b = b2;
      lm.c = c2;
      lm.normalize();
      mapped.push_back(lm);
    }
    bool affine = kobon::build_arrangement(mapped).triangles == arr.triangles;
    affine_ok += affine;
    if (!euler || !affine) out.require(false, "arrangement " + std::to_string(t) + " failed");
  }
  out.report["euler_ok"] = euler_ok;
  out.report["affine_ok"] = affine_ok;
  return out;
}

// --- criterion 5: packing optima and Erdos-Oler gaps -------------------------
Outcome criterion5() {
  Outcome out;
  auto r1 = packing::optimize_packing(1, 0, 100000);
  out.report["side1"] = r1.side;
  out.require(std::abs(r1.side - 2 * kSqrt3) <= 1e-4,
              "n=1 side " + std::to_string(r1.side) + " off 2sqrt3 by > 1e-4");

  auto r3 = packing::optimize_packing(3, 0, 100000);
  out.report["side3"] = r3.side;
  out.require(std::abs(r3.side - (2 + 2 * kSqrt3)) <= 1e-3,
              "n=3 side " + std::to_string(r3.side) + " off 2+2sqrt3 by > 1e-3");

  auto k2 = packing::erdos_oler_check(2, 0, 100000);
  out.report["gap_k2"] = k2.gap;
  out.require(k2.gap <= 1e-3, "k=2 gap " + std::to_string(k2.gap) + " > 1e-3");

  auto k3 = packing::erdos_oler_check(3, 0, 100000);
  out.report["gap_k3"] = k3.gap;
  out.require(k3.gap <= 5e-3, "k=3 gap " + std::to_string(k3.gap) + " > 5e-3");
  return out;
}

// --- criterion 6: worm cages -------------------------------------------------
Outcome criterion6() {
  Outcome out;
  auto disk = cages::Cage::disk(1.0);
  auto flags = parallel_map<char>(1000, [&](size_t s) {
    auto fit = cages::accommodate(cages::random_worm(s, 20), disk, 0);
    return static_cast<char>(fit.found ? 1 : 0);
  });
  int disk_ok = 0;
  for (char f : flags) disk_ok += f;
  out.report["disk_ok"] = disk_ok;
  out.require(disk_ok == 1000, "disk constructive accommodation failed for " +
                                   std::to_string(1000 - disk_ok) + " worms");

  auto rhom = cages::Cage::rhombus(1.0, 1.0 / kSqrt3);
  auto rflags = parallel_map<char>(200, [&](size_t s) {
    auto fit = cages::accommodate(cages::random_worm(s, 20), rhom, 300000);
    return static_cast<char>(fit.found ? 1 : 0);
  });
  int rhom_ok = 0;
  for (char f : rflags) rhom_ok += f;
  out.report["rhombus_random_ok"] = rhom_ok;
  out.require(rhom_ok == 200, "rhombus failed for " + std::to_string(200 - rhom_ok) +
                                  " random worms");

  auto family = cages::three_segment_worms(10);
  out.report["three_seg_family"] = family.size();
  auto sweep = cages::cage_falsify(rhom, family, 100000);
  out.report["three_seg_falsified"] = sweep.falsified;
  out.require(!sweep.falsified,
              "three-segment sweep falsified worm " + std::to_string(sweep.worm_index));

  double a_rhom = cages::cage_area(rhom);
  double a_sect = cages::cage_area(cages::Cage::sector(M_PI / 6, 1.0));
  out.report["area_rhombus"] = a_rhom;
  out.report["area_sector"] = a_sect;
  out.require(a_rhom - a_sect > 1e-6, "area ordering rhombus > sector violated");
  out.require(a_sect - 0.2604 > 1e-6, "area ordering sector > 0.2604 violated");
  return out;
}

// --- criterion 7: sofa -------------------------------------------------------
Outcome criterion7() {
  Outcome out;
  auto [shape, plan] = sofa::hammersley_sofa(1e-4, 1000);
  double area = geom::polygon_area(shape.boundary);
  const double nominal = M_PI / 2 + 2.0 / M_PI;
  out.report["area"] = area;
  out.require(std::abs(area - nominal) <= 1e-3, "Hammersley area off by > 1e-3");

  auto rep = sofa::verify_motion(shape, plan);
  out.report["valid"] = rep.valid;
  out.report["traversal"] = rep.traversal;
  out.report["samples"] = rep.samples;
  out.require(rep.valid && rep.traversal, "Hammersley sweep not valid+traversing");
  out.require(rep.samples == 1000, "plan sample count != 1000");

  out.require(nominal > 2.2074 - 1e-4 && nominal < 2.2195 && 2.2195 <= 2.37,
              "paper bracket 2.2074 < 2.2195 <= 2.37 violated");

  sofa::SofaShape sq = sofa::make_shape({{0, 0}, {1, 0}, {1, 1}, {0, 1}});
  auto sq_rep = sofa::verify_motion(sq, sofa::l_slide_plan(sq, 400));
  out.report["unit_square_valid"] = sq_rep.valid && sq_rep.traversal;
  out.require(sq_rep.valid && sq_rep.traversal, "unit square plan failed");

  sofa::SofaShape rect = sofa::make_shape({{0, 0}, {1, 0}, {1, 2}, {0, 2}});
  int battery_failures = 0;
  {
    auto r1 = sofa::verify_motion(rect, sofa::l_slide_plan(rect, 300));
    battery_failures += !r1.valid;
    auto r2 = sofa::verify_motion(rect, sofa::corner_pivot_plan(rect, 300));
    battery_failures += !r2.valid;
    auto ham = sofa::hammersley_sofa(1e-3, 300).second;
    double worst = 0;
    for (size_t i = 0; i + 1 < ham.samples.size(); ++i)
      for (const auto& v : rect.boundary)
        worst = std::max(worst,
                         geom::dist(ham.samples[i].motion(v), ham.samples[i + 1].motion(v)));
    ham.delta_step = worst * 1.05;
    auto r3 = sofa::verify_motion(rect, ham);
    battery_failures += !r3.valid;
  }
  out.report["rect_battery_failures"] = battery_failures;
  out.require(battery_failures == 3, "1x2 rectangle battery: some plan verified");
  return out;
}

// --- criterion 8: forest -----------------------------------------------------
Outcome criterion8() {
  Outcome out;
  bool seg_cert = forest::strip_escape_certifies(forest::segment_path(1.0), 1.0);
  out.report["segment_certifies"] = seg_cert;
  out.require(!seg_cert, "segment wrongly certifies strip escape");

  forest::EscapePath square_loop{{{0, 0}, {1, 0}, {1, 1}, {0, 1}, {0, 0}}};
  bool sq_cert = forest::strip_escape_certifies(square_loop, 1.0);
  out.report["square_certifies"] = sq_cert;
  out.require(sq_cert, "square boundary path fails to certify width 1");

  auto disk = forest::Forest::polygon(regular_ngon(4096, 1.0));
  auto L = forest::is_fat_forest(disk, 1e-9);
  out.report["fat"] = L.has_value();
  if (L) out.report["L"] = *L;
  out.require(L.has_value() && std::abs(*L - 2.0) <= 1e-4, "disk not detected fat with L=2");

  auto nearly = forest::escape_falsify(disk, forest::segment_path(2.0 - 1e-6), 360, 24);
  out.report["nearly_trapped"] = nearly.found;
  out.require(nearly.found, "segment of length 2-1e-6 not trapped");

  auto exact = forest::escape_falsify(disk, forest::segment_path(2.0), 360, 24);
  out.report["exact_trapped"] = exact.found;
  out.require(!exact.found, "length-2 segment wrongly trapped");
  return out;
}

// --- criterion 9: inscribed squares ------------------------------------------
Outcome criterion9() {
  Outcome out;
  insq::ClosedCurve circ(regular_ngon(4096, 1.0));
  auto cres = insq::find_inscribed_squares(circ, 64, 1e-6, 2000000);
  out.report["circle_candidates"] = cres.candidates.size();
  out.report["family"] = cres.family_detected;
  out.require(!cres.candidates.empty(), "no squares found on the circle");
  out.require(cres.family_detected, "rotational family not detected");
  for (const auto& cand : cres.candidates)
    if (std::abs(cand.side - std::sqrt(2.0)) > 1e-3) {
      out.require(false, "circle square side off sqrt(2) by > 1e-3");
      break;
    }

  std::vector<Vec2> ell;
  for (int k = 0; k < 4096; ++k)
    ell.push_back({2 * std::cos(2 * M_PI * k / 4096), std::sin(2 * M_PI * k / 4096)});
  insq::ClosedCurve ellipse(ell);
  auto eres = insq::find_inscribed_squares(ellipse, 48, 1e-6, 2000000);
  out.report["ellipse_candidates"] = eres.candidates.size();
  bool ell_ok = !eres.candidates.empty() && eres.candidates.front().residual <= 1e-6 &&
                insq::verify_candidate(ellipse, eres.candidates.front(), 1e-6);
  out.require(ell_ok, "ellipse candidate missing or unverified");

  insq::ClosedCurve blob(json_to_vertices(load_json_file(fixture_path("curves/nonconvex.json"))));
  auto bres = insq::find_inscribed_squares(blob, 48, 1e-6, 2000000);
  out.report["nonconvex_candidates"] = bres.candidates.size();
  bool blob_ok = !bres.candidates.empty() && bres.candidates.front().residual <= 1e-6 &&
                 insq::verify_candidate(blob, bres.candidates.front(), 1e-6);
  out.require(blob_ok, "non-convex candidate missing or unverified");
  return out;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    double limit_s;
    std::function<Outcome()> fn;
  };
  const std::vector<Criterion> criteria{
      {1, "Kobon known values n=3..7", 1.0, criterion1},
      {2, "Kobon n=10 anchor (25 triangles, upper 26)", 1.0, criterion2},
      {3, "Furedi-Palasti bound n=3..16", 10.0, criterion3},
      {4, "Euler + affine invariance, 200 exact arrangements", 10.0, criterion4},
      {5, "packing optima and Erdos-Oler gaps", 60.0, criterion5},
      {6, "worm cages: disk, rhombus, 3-segment sweep, areas", 120.0, criterion6},
      {7, "sofa: Hammersley sweep, square, 1x2 battery", 30.0, criterion7},
      {8, "forest: certifier, fat disk, trapped segments", 60.0, criterion8},
      {9, "inscribed squares: circle family, ellipse, non-convex", 60.0, criterion9},
  };

  int failures = 0;
  bool determinism_ok = true;
  std::string determinism_detail;

  for (const auto& c : criteria) {
    set_thread_override(1);
    Outcome single = c.fn();
    set_thread_override(8);
    auto start = std::chrono::steady_clock::now();
    Outcome threaded = c.fn();
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    set_thread_override(0);

    bool time_ok = secs < c.limit_s;
    bool pass = threaded.pass && time_ok;
    if (single.report.dump() != threaded.report.dump()) {
      determinism_ok = false;
      determinism_detail += std::string(determinism_detail.empty() ? "" : "; ") + "criterion " +
                            std::to_string(c.id);
    }
    std::printf("%s criterion %d: %s (%.2fs, limit %.0fs)%s%s\n", pass ? "PASS" : "FAIL", c.id,
                c.name, secs, c.limit_s, threaded.detail.empty() ? "" : " :: ",
                threaded.detail.c_str());
    if (!time_ok) std::printf("     time limit exceeded\n");
    failures += !pass;
  }

  std::printf("%s criterion 10: determinism across PLANELAB_THREADS in {1, 8}%s%s\n",
              determinism_ok ? "PASS" : "FAIL", determinism_detail.empty() ? "" : " :: ",
              determinism_detail.c_str());
  failures += !determinism_ok;

  if (failures) std::printf("ACCEPTANCE: %d criterion(s) failed\n", failures);
  else std::printf("ACCEPTANCE: all criteria passed\n");
  return failures == 0 ? 0 : 1;
}
