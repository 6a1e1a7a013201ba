#include "planelab/arrangement.hpp"

#include <numeric>
#include <set>
#include <stdexcept>

namespace planelab::kobon {

namespace {

template <class S>
bool same_line(const Line2<S>& l1, const Line2<S>& l2) {
  if constexpr (ScalarOps<S>::exact) {
    return l1.a == l2.a && l1.b == l2.b && l1.c == l2.c;
  } else {
    S e = ScalarOps<S>::snap_eps();
    return ScalarOps<S>::abs_val(l1.a - l2.a) < e && ScalarOps<S>::abs_val(l1.b - l2.b) < e &&
           ScalarOps<S>::abs_val(l1.c - l2.c) < e;
  }
}

struct DSU {
  std::vector<int> parent;
  explicit DSU(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

// CCW angular order of direction vectors, starting just above (1,0).
template <class S>
bool dir_less(const Point2<S>& u, const Point2<S>& v) {
  auto half = [](const Point2<S>& d) {
    int sy = ScalarOps<S>::sign(d.y);
    if (sy != 0) return sy > 0 ? 0 : 1;
    return ScalarOps<S>::sign(d.x) > 0 ? 0 : 1;
  };
  int hu = half(u), hv = half(v);
  if (hu != hv) return hu < hv;
  return ScalarOps<S>::sign(cross(u, v)) > 0;
}

template <class S>
std::vector<std::pair<Point2<S>, int>> clip_to_box(const Line2<S>& l, const S& x0, const S& x1,
                                                   const S& y0, const S& y1) {
  // side: 0 bottom, 1 right, 2 top, 3 left
  std::vector<std::pair<Point2<S>, int>> hits;
  auto in_range = [](const S& v, const S& lo, const S& hi) { return v >= lo && v <= hi; };
  if (ScalarOps<S>::sign(l.b) != 0) {
    S yb = (S(0) - l.c - l.a * x0) / l.b;  // left
    if (in_range(yb, y0, y1)) hits.push_back({{x0, yb}, 3});
    S yr = (S(0) - l.c - l.a * x1) / l.b;  // right
    if (in_range(yr, y0, y1)) hits.push_back({{x1, yr}, 1});
  }
  if (ScalarOps<S>::sign(l.a) != 0) {
    S xb = (S(0) - l.c - l.b * y0) / l.a;  // bottom
    if (in_range(xb, x0, x1)) hits.push_back({{xb, y0}, 0});
    S xt = (S(0) - l.c - l.b * y1) / l.a;  // top
    if (in_range(xt, x0, x1)) hits.push_back({{xt, y1}, 2});
  }
  // Corner passes are excluded by the box-adjustment loop, so distinct sides
  // give distinct points; drop duplicates from shared floating values anyway.
  std::vector<std::pair<Point2<S>, int>> out;
  for (auto& h : hits) {
    bool dup = false;
    for (auto& o : out)
      if (o.first == h.first) dup = true;
    if (!dup) out.push_back(h);
  }
  return out;
}

}  // namespace

template <class S>
Arrangement<S> build_arrangement(const std::vector<Line2<S>>& lines) {
  if (lines.empty()) throw std::invalid_argument("build_arrangement: need at least one line");
  const int n = static_cast<int>(lines.size());
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (same_line(lines[i], lines[j]))
        throw std::invalid_argument("duplicate lines: indices " + std::to_string(i) + " and " +
                                    std::to_string(j));

  Arrangement<S> arr;
  arr.lines = lines;

  // Pairwise intersections.
  struct RawHit {
    Point2<S> p;
    int i, j;
  };
  std::vector<RawHit> raw;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (auto p = geom::intersect(lines[i], lines[j])) raw.push_back({*p, i, j});

  // Cluster coincident (exact) or nearby (snapped) intersections.
  const int m = static_cast<int>(raw.size());
  DSU dsu(std::max(m, 1));
  if constexpr (ScalarOps<S>::exact) {
    std::map<std::pair<Rational, Rational>, int> seen;
    for (int k = 0; k < m; ++k) {
      auto key = std::make_pair(raw[k].p.x, raw[k].p.y);
      auto [it, fresh] = seen.emplace(key, k);
      if (!fresh) dsu.unite(it->second, k);
    }
  } else {
    S eps = ScalarOps<S>::snap_eps();
    S eps2 = eps * eps;
    for (int k = 0; k < m; ++k)
      for (int l = k + 1; l < m; ++l)
        if (sq_dist(raw[k].p, raw[l].p) < eps2) dsu.unite(k, l);
  }

  std::vector<int> cluster_of(m, -1);
  std::vector<int> roots;
  for (int k = 0; k < m; ++k) {
    int r = dsu.find(k);
    if (r == k) {
      cluster_of[k] = static_cast<int>(roots.size());
      roots.push_back(k);
    }
  }
  for (int k = 0; k < m; ++k) cluster_of[k] = cluster_of[dsu.find(k)];

  const int n_clusters = static_cast<int>(roots.size());
  arr.vertices.resize(n_clusters);
  std::vector<std::set<int>> vlines(n_clusters);
  std::vector<int> cluster_size(n_clusters, 0);
  for (int k = 0; k < m; ++k) {
    int c = cluster_of[k];
    vlines[c].insert(raw[k].i);
    vlines[c].insert(raw[k].j);
    ++cluster_size[c];
  }
  for (int c = 0; c < n_clusters; ++c) {
    arr.vertices[c].pos = raw[roots[c]].p;  // first raw hit is the representative
    arr.vertices[c].lines.assign(vlines[c].begin(), vlines[c].end());
    if (arr.vertices[c].lines.size() >= 3) ++arr.concurrences;
    if (cluster_size[c] > 1 && !ScalarOps<S>::exact) ++arr.merged_clusters;
  }
  arr.interior_vertices = n_clusters;

  // Bounding box: all vertices plus one anchor point per line, padded; grow
  // the pad until no line passes through (or, in snapped modes, near) a
  // corner.
  std::vector<Point2<S>> anchors;
  for (const auto& v : arr.vertices) anchors.push_back(v.pos);
  for (const auto& l : lines) {
    S d = l.a * l.a + l.b * l.b;
    anchors.push_back({(S(0) - l.a * l.c) / d, (S(0) - l.b * l.c) / d});
  }
  S minx = anchors[0].x, maxx = anchors[0].x, miny = anchors[0].y, maxy = anchors[0].y;
  for (const auto& p : anchors) {
    minx = std::min(minx, p.x);
    maxx = std::max(maxx, p.x);
    miny = std::min(miny, p.y);
    maxy = std::max(maxy, p.y);
  }
  S sx = maxx - minx;
  S sy = maxy - miny;
  S span = std::max(sx, sy);
  // Asymmetric pads grown at different rates: every corner constraint is
  // affine in (px, py), so a straight growth path crosses each at most once.
  S px = span / S(2) + S(1);
  S py = span / S(2) + S(2);
  S x0, x1, y0, y1;
  for (int attempt = 0;; ++attempt) {
    if (attempt > 4 * n + 16)
      throw std::runtime_error("build_arrangement: box corner avoidance failed");
    x0 = minx - px;
    x1 = maxx + px;
    y0 = miny - py;
    y1 = maxy + py;
    bool corner_hit = false;
    for (const auto& l : lines) {
      for (const auto& cp : {Point2<S>{x0, y0}, Point2<S>{x1, y0}, Point2<S>{x1, y1},
                             Point2<S>{x0, y1}}) {
        if (ScalarOps<S>::geom_sign(l.a * cp.x + l.b * cp.y + l.c) == 0) corner_hit = true;
      }
    }
    if (!corner_hit) break;
    px = px + span / S(7) + S(1);
    py = py + span / S(5) + S(2);
  }

  // Graph nodes: clusters, then per-line clip points, then 4 corners.
  struct Node {
    Point2<S> pos;
    int box_side = -1;  // >= 0 when on the box boundary
  };
  std::vector<Node> nodes;
  nodes.reserve(n_clusters + 2 * n + 4);
  for (const auto& v : arr.vertices) nodes.push_back({v.pos, -1});

  std::vector<std::array<int, 2>> line_ends(n);
  for (int i = 0; i < n; ++i) {
    auto hits = clip_to_box(lines[i], x0, x1, y0, y1);
    if (hits.size() != 2)
      throw std::runtime_error("build_arrangement: line " + std::to_string(i) +
                               " does not cross the closure box twice");
    for (int e = 0; e < 2; ++e) {
      line_ends[i][e] = static_cast<int>(nodes.size());
      nodes.push_back({hits[e].first, hits[e].second});
    }
  }
  int corner0 = static_cast<int>(nodes.size());
  nodes.push_back({{x0, y0}, 0});
  nodes.push_back({{x1, y0}, 1});
  nodes.push_back({{x1, y1}, 2});
  nodes.push_back({{x0, y1}, 3});

  // Edges.
  struct EdgeRec {
    int u, v;
    int line = -1;  // -1 = box boundary
  };
  std::vector<EdgeRec> edges;

  // On-line edges: sort that line's vertices (clusters containing it plus the
  // two clip nodes) along the direction (b, -a).
  std::vector<std::vector<int>> line_clusters(n);
  for (int c = 0; c < n_clusters; ++c)
    for (int li : arr.vertices[c].lines) line_clusters[li].push_back(c);
  for (int i = 0; i < n; ++i) {
    Point2<S> dir{lines[i].b, S(0) - lines[i].a};
    std::vector<int> chain = line_clusters[i];
    chain.push_back(line_ends[i][0]);
    chain.push_back(line_ends[i][1]);
    std::sort(chain.begin(), chain.end(), [&](int a, int b) {
      return dot(nodes[a].pos, dir) < dot(nodes[b].pos, dir);
    });
    for (size_t k = 0; k + 1 < chain.size(); ++k) edges.push_back({chain[k], chain[k + 1], i});
  }

  // Box perimeter edges, CCW from corner (x0, y0).
  {
    std::vector<int> ring;
    for (int side = 0; side < 4; ++side) {
      ring.push_back(corner0 + side);
      std::vector<int> on_side;
      for (int i = 0; i < n; ++i)
        for (int e = 0; e < 2; ++e)
          if (nodes[line_ends[i][e]].box_side == side) on_side.push_back(line_ends[i][e]);
      std::sort(on_side.begin(), on_side.end(), [&](int a, int b) {
        const auto &pa = nodes[a].pos, &pb = nodes[b].pos;
        switch (side) {
          case 0: return pa.x < pb.x;
          case 1: return pa.y < pb.y;
          case 2: return pa.x > pb.x;
          default: return pa.y > pb.y;
        }
      });
      for (int v : on_side) ring.push_back(v);
    }
    for (size_t k = 0; k < ring.size(); ++k)
      edges.push_back({ring[k], ring[(k + 1) % ring.size()], -1});
  }

  // Half-edge structure: half-edge 2e is u->v, 2e+1 is v->u.
  const int ne = static_cast<int>(edges.size());
  const int nv = static_cast<int>(nodes.size());
  auto he_tail = [&](int h) { return h % 2 == 0 ? edges[h / 2].u : edges[h / 2].v; };
  auto he_head = [&](int h) { return h % 2 == 0 ? edges[h / 2].v : edges[h / 2].u; };

  std::vector<std::vector<int>> out(nv);
  for (int h = 0; h < 2 * ne; ++h) out[he_tail(h)].push_back(h);
  for (int v = 0; v < nv; ++v) {
    std::sort(out[v].begin(), out[v].end(), [&](int h1, int h2) {
      Point2<S> d1 = nodes[he_head(h1)].pos - nodes[v].pos;
      Point2<S> d2 = nodes[he_head(h2)].pos - nodes[v].pos;
      return dir_less(d1, d2);
    });
  }
  std::vector<int> pos_in_out(2 * ne);
  for (int v = 0; v < nv; ++v)
    for (size_t k = 0; k < out[v].size(); ++k) pos_in_out[out[v][k]] = static_cast<int>(k);

  auto next_he = [&](int h) {
    int twin = h ^ 1;
    int v = he_head(h);
    const auto& lst = out[v];
    int k = pos_in_out[twin];
    return lst[(k + lst.size() - 1) % lst.size()];
  };

  // Trace faces (interior on the left).
  std::vector<char> visited(2 * ne, 0);
  for (int h0 = 0; h0 < 2 * ne; ++h0) {
    if (visited[h0]) continue;
    typename Arrangement<S>::Face face;
    bool touches_box = false;
    int h = h0;
    do {
      visited[h] = 1;
      face.cycle.push_back(h);
      if (edges[h / 2].line < 0) touches_box = true;
      h = next_he(h);
    } while (h != h0);
    face.sides = static_cast<int>(face.cycle.size());
    face.bounded = !touches_box;
    if (face.bounded) {
      ++arr.bounded_faces;
      if (face.sides == 3) ++arr.triangles;
    }
    arr.faces.push_back(std::move(face));
  }

  arr.euler_v = nv;
  arr.euler_e = ne;
  arr.euler_f = static_cast<int>(arr.faces.size());
  arr.edges.reserve(ne);
  for (const auto& e : edges) arr.edges.push_back({e.u, e.v, e.line});
  return arr;
}

template Arrangement<double> build_arrangement(const std::vector<Line2<double>>&);
template Arrangement<Rational> build_arrangement(const std::vector<Line2<Rational>>&);
template Arrangement<AdaptiveReal> build_arrangement(const std::vector<Line2<AdaptiveReal>>&);

namespace {
long long floor_div(long long a, long long b) {
  long long q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}
}  // namespace

KobonBounds kobon_bounds(int n, bool cb_correction) {
  if (n < 1) throw std::invalid_argument("kobon_bounds: n must be >= 1");
  KobonBounds kb;
  kb.n = n;
  kb.lower = std::max(0LL, floor_div(1LL * n * (n - 3), 3));
  kb.upper = floor_div(1LL * n * (n - 2), 3);
  if (cb_correction && (n % 6 == 0 || n % 6 == 2)) kb.upper -= 1;
  kb.upper = std::max(kb.upper, 0LL);
  kb.known = best_known_triangles(n <= 9 ? n : -1);
  return kb;
}

std::optional<int> best_known_triangles(int n) {
  static const int table[] = {0, 0, 0, 1, 2, 5, 7, 11, 15, 21};  // K(1)..K(9)
  if (n >= 1 && n <= 9) return table[n];
  if (n == 10) return 25;  // best known, optimality open
  return std::nullopt;
}

std::vector<Line2<AdaptiveReal>> furedi_palasti(int n) {
  if (n < 3) throw std::invalid_argument("furedi_palasti: n must be >= 3");
  // Diagonals of the regular 2n-gon: line i joins vertex 2i to vertex
  // 3 - 4i (mod 2n). The chords envelope a deltoid, which packs the
  // concurrences that make the triangle count reach the bound; endpoints
  // have opposite parity, so the n lines are automatically distinct.
  MpFloat pi = 4 * atan(MpFloat(1));
  auto vertex = [&](long k) {
    k = ((k % (2 * n)) + 2 * n) % (2 * n);
    MpFloat ang = pi * k / n;
    return Point2<AdaptiveReal>{AdaptiveReal(MpFloat(cos(ang))), AdaptiveReal(MpFloat(sin(ang)))};
  };
  std::vector<Line2<AdaptiveReal>> lines;
  lines.reserve(n);
  for (long i = 0; i < n; ++i)
    lines.push_back(Line2<AdaptiveReal>::through(vertex(2 * i), vertex(3 - 4 * i)));
  long long want = std::max(0LL, floor_div(1LL * n * (n - 3), 3));
  auto arr = build_arrangement(lines);
  if (arr.triangles < want)
    throw std::runtime_error("furedi_palasti: construction for n = " + std::to_string(n) +
                             " produced " + std::to_string(arr.triangles) + " triangles, below " +
                             std::to_string(want));
  return lines;
}

template <class S>
VerifyReport verify_configuration(const std::vector<Line2<S>>& lines) {
  auto arr = build_arrangement(lines);
  VerifyReport r;
  r.n = static_cast<int>(lines.size());
  r.triangle_count = arr.triangles;
  r.bounds = kobon_bounds(r.n);
  auto bk = best_known_triangles(r.n);
  r.is_record = bk.has_value() && arr.triangles > *bk;
  r.euler_v = arr.euler_v;
  r.euler_e = arr.euler_e;
  r.euler_f = arr.euler_f;
  r.merged_clusters = arr.merged_clusters;
  r.concurrences = arr.concurrences;
  return r;
}

template VerifyReport verify_configuration(const std::vector<Line2<double>>&);
template VerifyReport verify_configuration(const std::vector<Line2<Rational>>&);
template VerifyReport verify_configuration(const std::vector<Line2<AdaptiveReal>>&);

}  // namespace planelab::kobon
