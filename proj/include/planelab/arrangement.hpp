// Line arrangements and the Kobon triangle machinery.
//
// An arrangement is built with a bounding-box closure: every line is clipped
// to a box that strictly contains all pairwise intersections, the box
// boundary joins the graph, and faces are traced on the resulting half-edge
// structure. Bounded faces of the line arrangement are exactly the traced
// faces that touch no box edge; a triangle is a bounded face whose boundary
// cycle has three edges (no line can split an edge of a face without
// entering it, so cycle length equals side count).

#pragma once

#include "planelab/geom.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace planelab::kobon {

using geom::Line2;
using geom::Point2;

template <class S>
struct Arrangement {
  struct Vertex {
    Point2<S> pos;
    std::vector<int> lines;  // incident input lines (>= 2), sorted
    bool on_box = false;
  };
  struct Edge {
    int u, v;       // node indices; nodes < interior_vertices are vertices
    int line = -1;  // supporting input line, -1 for the closure box
  };
  struct Face {
    std::vector<int> cycle;  // half-edge ids: 2e = u->v of edge e, 2e+1 = v->u
    bool bounded = false;    // bounded face of the *line* arrangement
    int sides = 0;
  };

  std::vector<Line2<S>> lines;
  std::vector<Vertex> vertices;  // interior arrangement vertices
  std::vector<Edge> edges;       // line segments/rays (box-clipped) + box edges
  std::vector<Face> faces;       // all traced faces incl. outer

  // Tail node of a half-edge.
  int he_tail(int h) const { return h % 2 == 0 ? edges[h / 2].u : edges[h / 2].v; }

  // Vertex positions of a bounded face (bounded faces touch no box node).
  std::vector<Point2<S>> face_points(const Face& f) const {
    std::vector<Point2<S>> pts;
    for (int h : f.cycle) pts.push_back(vertices[he_tail(h)].pos);
    return pts;
  }

  int interior_vertices = 0;  // arrangement vertices proper
  int euler_v = 0, euler_e = 0, euler_f = 0;  // closed-graph counts
  int bounded_faces = 0;
  int triangles = 0;
  // Snapping audit (adaptive mode): clusters that merged nearby
  // intersections, and concurrences of >= 3 lines.
  int merged_clusters = 0;
  int concurrences = 0;
};

// Builds the full incidence structure. Throws std::invalid_argument naming
// the offending pair when two input lines coincide.
template <class S>
Arrangement<S> build_arrangement(const std::vector<Line2<S>>& lines);

template <class S>
int count_triangles(const Arrangement<S>& arr) {
  return arr.triangles;
}

struct KobonBounds {
  int n = 0;
  long long lower = 0;
  long long upper = 0;
  std::optional<int> known;
};

// lower = max(0, floor(n(n-3)/3)); upper = floor(n(n-2)/3). When
// cb_correction is set, the n = 0,2 (mod 6) branch subtracts one, following
// the sharper statement of the Clement-Bader bound.
KobonBounds kobon_bounds(int n, bool cb_correction = false);

// Best bundled triangle counts (known-optimal for n <= 9, best known for
// n = 10). Empty for other n.
std::optional<int> best_known_triangles(int n);

// Lines spanned by diagonals of the regular 2n-gon, one fixed index rule.
// Validated at construction: the arrangement must reach floor(n(n-3)/3)
// triangles, else a std::runtime_error names n.
std::vector<Line2<AdaptiveReal>> furedi_palasti(int n);

struct VerifyReport {
  int n = 0;
  int triangle_count = 0;
  KobonBounds bounds;
  bool is_record = false;
  int euler_v = 0, euler_e = 0, euler_f = 0;
  int merged_clusters = 0;
  int concurrences = 0;
};

template <class S>
VerifyReport verify_configuration(const std::vector<Line2<S>>& lines);

}  // namespace planelab::kobon
