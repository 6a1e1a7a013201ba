#include "planelab/sofa.hpp"

#include <doctest.h>

#include <cmath>

using namespace planelab;
using namespace planelab::sofa;
using geom::Vec2;

TEST_CASE("hallway membership") {
  CHECK(hallway_contains({0.5, -3}));   // vertical leg
  CHECK(hallway_contains({-3, 0.5}));   // horizontal leg
  CHECK(!hallway_contains({-0.5, -0.5}));
  CHECK(hallway_contains({1, 1}));
  CHECK(!hallway_contains({1.1, 0.5}));
  // Margin is the Euclidean clearance.
  CHECK(hallway_margin({0.5, -3}) == doctest::Approx(0.5));
  CHECK(hallway_margin({-0.25, -0.75}) == doctest::Approx(-0.25));
  CHECK(hallway_margin({0.9, 0.2}) == doctest::Approx(0.1));
}

TEST_CASE("unit square slides through the corner") {
  SofaShape sq = make_shape({{0, 0}, {1, 0}, {1, 1}, {0, 1}});
  MotionPlan plan = l_slide_plan(sq, 400);
  auto rep = verify_motion(sq, plan);
  CHECK(rep.valid);
  CHECK(rep.traversal);
  CHECK(rep.min_margin >= -1e-9);
  auto sr = sofa_report(sq, plan);
  CHECK(sr.area == doctest::Approx(1.0));
  CHECK(sr.bracket_position == "below Gerver");
}

TEST_CASE("1x2 rectangle fails every plan in the battery") {
  SofaShape rect = make_shape({{0, 0}, {1, 0}, {1, 2}, {0, 2}});
  std::vector<MotionPlan> battery{l_slide_plan(rect, 300), corner_pivot_plan(rect, 300)};
  {
    // Hammersley-style sweep scaled onto the rectangle.
    auto [shape, plan] = hammersley_sofa(1e-3, 300);
    (void)shape;
    battery.push_back(plan);
    battery.back().delta_step = 0;  // recomputed below
    double worst = 0;
    for (size_t i = 0; i + 1 < battery.back().samples.size(); ++i)
      for (const auto& v : rect.boundary)
        worst = std::max(worst, geom::dist(battery.back().samples[i].motion(v),
                                           battery.back().samples[i + 1].motion(v)));
    battery.back().delta_step = worst * 1.05;
  }
  for (auto& plan : battery) {
    auto rep = verify_motion(rect, plan);
    CHECK(!rep.valid);
  }
}

TEST_CASE("hammersley sofa: area and corner sweep") {
  auto [shape, plan] = hammersley_sofa(1e-4, 1000);
  const double nominal = M_PI / 2 + 2.0 / M_PI;
  REQUIRE(shape.nominal_area.has_value());
  CHECK(*shape.nominal_area == doctest::Approx(nominal).epsilon(1e-12));
  double area = geom::polygon_area(shape.boundary);
  CHECK(std::abs(area - nominal) < 1e-3);

  auto rep = verify_motion(shape, plan);
  CHECK(rep.valid);
  CHECK(rep.traversal);
  CHECK(rep.samples == 1000);

  // Paper bracket: Hammersley < Gerver <= Kallus-Romik bound.
  CHECK(nominal < kGerverArea);
  CHECK(kGerverArea <= kUpperBound);
  auto sr = sofa_report(shape, plan);
  CHECK(sr.bracket_position == "below Gerver");
  CHECK(!sr.numerical_error);
}

TEST_CASE("hammersley margins are continuous along the plan") {
  auto [shape, plan] = hammersley_sofa(1e-3, 400);
  auto rep = verify_motion(shape, plan);
  REQUIRE(rep.valid);
  double max_jump = 0;
  for (size_t i = 0; i + 1 < rep.per_sample_margin.size(); ++i)
    max_jump = std::max(max_jump,
                        std::abs(rep.per_sample_margin[i + 1] - rep.per_sample_margin[i]));
  CHECK(max_jump <= 4.0 * plan.delta_step);
}

TEST_CASE("half-disk sofa pivots about the corner") {
  std::vector<Vec2> hd;
  hd.push_back({-1, 0});
  hd.push_back({1, 0});
  for (int k = 1; k < 256; ++k) {
    double a = M_PI * k / 256;
    hd.push_back({std::cos(a), std::sin(a)});  // CCW: flat side then the arc
  }
  SofaShape shape = make_shape(hd, M_PI / 2, 1e-4);
  MotionPlan plan = corner_pivot_plan(shape, 800);
  auto rep = verify_motion(shape, plan);
  CHECK(rep.valid);
  CHECK(rep.traversal);
  CHECK(geom::polygon_area(shape.boundary) == doctest::Approx(M_PI / 2).epsilon(1e-3));
}

TEST_CASE("verification is stable under plan resampling") {
  // Doubling the sampling of the same motion never flips a valid plan.
  auto [shape, plan] = hammersley_sofa(1e-3, 300);
  auto rep1 = verify_motion(shape, plan);
  auto [shape2, dense] = hammersley_sofa(1e-3, 599);
  auto rep2 = verify_motion(shape2, dense);
  REQUIRE(rep1.valid);
  CHECK(rep2.valid);
  CHECK(rep2.min_margin >= -1e-9);
}

TEST_CASE("malformed plans are rejected") {
  SofaShape sq = make_shape({{0, 0}, {1, 0}, {1, 1}, {0, 1}});
  MotionPlan plan = l_slide_plan(sq, 100);
  MotionPlan bad = plan;
  bad.samples[3].t = bad.samples[2].t;  // non-monotone
  CHECK_THROWS_AS(verify_motion(sq, bad), std::invalid_argument);
  MotionPlan jump = plan;
  jump.delta_step = 1e-6;  // continuity bound violated
  CHECK_THROWS_AS(verify_motion(sq, jump), std::invalid_argument);
}
