// Packings of unit circles in an equilateral triangle (base on the x-axis,
// left vertex at the origin, apex up). The verifier is the module's
// contract; the optimizer is a deliberately simple multi-start penalty
// descent with bisection shrink of the side.

#pragma once

#include "planelab/geom.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace planelab::packing {

struct PackingInstance {
  double side = 0;
  std::vector<geom::Vec2> centers;
};

struct VerifyResult {
  bool valid = false;
  double worst_margin = 0;  // min slack over all constraints; negative = violation
};

// Containment margin of one center against the three sides (distance to the
// side minus the unit radius is folded in by the caller).
double triangle_margin(double side, const geom::Vec2& c);

VerifyResult verify_packing(const PackingInstance& inst, double tol = 1e-7);

struct TriangularNumber {
  int k = 0;
  long long value = 0;
};

std::optional<TriangularNumber> triangular_index(long long n);

// Hexagonal grid of k rows (k(k+1)/2 circles), side 2(k-1) + 2*sqrt(3).
PackingInstance optimal_triangular_packing(int k);

// Deterministic multi-start search; throws std::runtime_error if the budget
// is exhausted before any feasible instance exists (cannot happen for n
// reachable by a grid subset, which seeds the search).
PackingInstance optimize_packing(int n, std::uint64_t seed, long budget = 100000);

struct ErdosOlerReport {
  int k = 0;
  long long n = 0;
  double side_n = 0;          // exact grid side for the triangular number
  double side_n_minus_1 = 0;  // numerical upper estimate
  double gap = 0;             // side_n - side_n_minus_1
};

ErdosOlerReport erdos_oler_check(int k, std::uint64_t seed = 0, long budget = 100000);

}  // namespace planelab::packing
