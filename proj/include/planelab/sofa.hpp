// The moving-sofa hallway, motion-plan verification, and the Hammersley
// sofa with its corner sweep.
//
// The hallway is H = { (x,y) : x <= 1, y <= 1, x >= 0 or y >= 0 }: two
// unit-width legs meeting at a right angle, walls x=1 and y=1 outside, the
// inner corner at the origin. Verification is sampled in t with boundary
// densification; reports carry the sampling so claims are reproducible.

#pragma once

#include "planelab/geom.hpp"

#include <optional>
#include <string>
#include <vector>

namespace planelab::sofa {

bool hallway_contains(const geom::Vec2& p);
// Signed clearance: min(1-x, 1-y, max(x, y)); equals the Euclidean distance
// to the hallway boundary (negative outside).
double hallway_margin(const geom::Vec2& p);

struct SofaShape {
  std::vector<geom::Vec2> boundary;  // simple polygon
  std::optional<double> nominal_area;
  double tess_tol = 0;  // chordal error bound of the tessellation (0 = exact)
};

SofaShape make_shape(std::vector<geom::Vec2> boundary, std::optional<double> nominal = {},
                     double tess_tol = 0);

struct MotionPlan {
  struct Sample {
    double t;
    geom::RigidMotion motion;
  };
  std::vector<Sample> samples;  // t strictly increasing, t0 = 0, t_last = 1
  double delta_step = 0;        // continuity bound on vertex displacement
};

// Validates the plan invariants; throws on malformed plans.
void check_plan(const SofaShape& s, const MotionPlan& plan);

struct MotionReport {
  bool valid = false;
  bool traversal = false;
  double min_margin = 0;
  int samples = 0;
  double densify_step = 0;
  std::vector<double> per_sample_margin;
};

// valid: every boundary vertex of Phi_t(S), with edges densified below
// delta_step, stays inside the hallway with margin >= -tol. traversal:
// starts with all y <= -1 (deep vertical leg) and ends with all x <= -1
// (deep horizontal leg). Default tolerance adds the shape's tessellation
// slack to the geometric epsilon.
MotionReport verify_motion(const SofaShape& s, const MotionPlan& plan, double tol = -1);

// The classical shape: two unit quarter-disk ends flanking a 1 x (4/pi)
// rectangle with a semicircular notch of radius 2/pi. Returns the shape
// tessellated at tess_tol and the standard corner sweep sampled to satisfy
// the continuity bound.
std::pair<SofaShape, MotionPlan> hammersley_sofa(double tess_tol, int samples = 1000);

// L-slide plan (no rotation): deep vertical leg, corner square, deep
// horizontal leg. Valid for shapes that fit a unit square.
MotionPlan l_slide_plan(const SofaShape& s, int samples = 400);

// Rotation-about-the-corner plan used by the half-disk sofa.
MotionPlan corner_pivot_plan(const SofaShape& s, int samples = 600);

struct SofaReport {
  double area = 0;
  bool valid = false;
  bool traversal = false;
  double min_margin = 0;
  std::string bracket_position;  // vs Gerver 2.2195 and the 2.37 bound
  bool numerical_error = false;  // valid traversing shape above 2.37
};

SofaReport sofa_report(const SofaShape& s, const MotionPlan& plan);

// Paper constants the reports compare against.
inline constexpr double kGerverArea = 2.2195;
inline constexpr double kUpperBound = 2.37;

}  // namespace planelab::sofa
