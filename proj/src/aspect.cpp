#include "visguard/aspect.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>
#include <vector>

namespace visguard {

double long_width(const Polygon& poly) {
  const Polygon hull = convex_hull(poly);
  const auto& v = hull.vertices();
  double best = 0.0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    for (std::size_t j = i + 1; j < v.size(); ++j) {
      best = std::max(best, distance_sq(v[i], v[j]));
    }
  }
  return std::sqrt(best);
}

namespace {

// Both edges incident to the vertex must point into the closed half-plane
// with the given sign relative to the strip normal.
bool wedge_admits(const Polygon& poly, std::size_t vi, Point normal,
                  double sign) {
  const std::size_t n = poly.size();
  const Point v = poly.vertex(vi);
  const Point d1 = poly.vertex((vi + 1) % n) - v;
  const Point d2 = poly.vertex((vi + n - 1) % n) - v;
  const double tol = kEps;
  return sign * dot(d1, normal) <= tol * norm(d1) &&
         sign * dot(d2, normal) <= tol * norm(d2);
}

bool segment_meets_interior(const Polygon& poly, Point a, Point b) {
  for (int k = 1; k <= 8; ++k) {
    const Point p = a + (b - a) * (static_cast<double>(k) / 9.0);
    if (locate(poly, p) == PointLocation::Interior) return true;
  }
  return false;
}

}  // namespace

ShortWidthResult short_width(const Polygon& poly) {
  const double lw = long_width(poly);
  ShortWidthResult result{lw, std::nullopt};

  const auto& reflex = poly.reflex_indices();
  const std::size_t n = poly.size();
  for (std::size_t a = 0; a < reflex.size(); ++a) {
    for (std::size_t b = a + 1; b < reflex.size(); ++b) {
      const std::size_t ia = reflex[a];
      const std::size_t ib = reflex[b];
      const Point va = poly.vertex(ia);
      const Point vb = poly.vertex(ib);
      const Point w = vb - va;
      const double wlen = norm(w);
      if (wlen <= kEps) continue;

      // Candidate strip normals: the admissibility cone is bounded by the
      // four incident edge directions, so the per-pair minimum sits on an
      // edge normal.
      std::vector<Point> candidates;
      for (const std::size_t vi : {ia, ib}) {
        for (const std::size_t ni : {(vi + 1) % n, (vi + n - 1) % n}) {
          const Point d = poly.vertex(ni) - poly.vertex(vi);
          const double len = norm(d);
          if (len <= kEps) continue;
          candidates.push_back({-d.y / len, d.x / len});
          candidates.push_back({d.y / len, -d.x / len});
        }
      }

      bool interior_checked = false;
      bool interior_ok = false;
      for (const Point nh : candidates) {
        const double sep = dot(w, nh);
        if (sep <= kEps * wlen) continue;              // lines must separate
        if (!wedge_admits(poly, ia, nh, +1.0)) continue;  // edges away at va
        if (!wedge_admits(poly, ib, nh, -1.0)) continue;  // edges away at vb
        if (!interior_checked) {
          interior_checked = true;
          interior_ok = segment_meets_interior(poly, va, vb);
        }
        if (!interior_ok) continue;
        if (sep < result.sw - 1e-15) {
          result.sw = sep;
          result.witness = ShortWidthWitness{va, vb, nh};
        }
      }
    }
  }
  return result;
}

LineAspect line_aspect_ratio(const Polygon& poly) {
  LineAspect la;
  la.lw = long_width(poly);
  const ShortWidthResult sw = short_width(poly);
  la.sw = sw.sw;
  la.sw_witness = sw.witness;
  la.ar = la.lw / la.sw;
  return la;
}

// ---------------------------------------------------------------------------
// Disk aspect ratio.
// ---------------------------------------------------------------------------

namespace {

struct Circle {
  Point center{};
  double radius = 0.0;
};

bool circle_contains_all(const Circle& c, const std::vector<Point>& pts) {
  const double r = c.radius * (1.0 + 1e-12) + 1e-12;
  for (const Point& p : pts) {
    if (distance(p, c.center) > r) return false;
  }
  return true;
}

Circle circumcircle(Point a, Point b, Point c) {
  const double d = 2.0 * (a.x * (b.y - c.y) + b.x * (c.y - a.y) +
                          c.x * (a.y - b.y));
  if (std::abs(d) < 1e-30) return {a, std::numeric_limits<double>::infinity()};
  const double asq = norm_sq(a), bsq = norm_sq(b), csq = norm_sq(c);
  Point u;
  u.x = (asq * (b.y - c.y) + bsq * (c.y - a.y) + csq * (a.y - b.y)) / d;
  u.y = (asq * (c.x - b.x) + bsq * (a.x - c.x) + csq * (b.x - a.x)) / d;
  return {u, distance(u, a)};
}

// Exhaustive minimum enclosing circle over the vertex set: every minimal
// circle is determined by two or three points.  Deterministic and plenty
// fast at desk scale.
Circle min_enclosing_circle(const std::vector<Point>& pts) {
  Circle best{pts.front(), 0.0};
  if (pts.size() == 1) return best;

  best.radius = std::numeric_limits<double>::infinity();
  const std::size_t n = pts.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const Circle c{{0.5 * (pts[i].x + pts[j].x), 0.5 * (pts[i].y + pts[j].y)},
                     0.5 * distance(pts[i], pts[j])};
      if (c.radius < best.radius && circle_contains_all(c, pts)) best = c;
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      for (std::size_t k = j + 1; k < n; ++k) {
        const Circle c = circumcircle(pts[i], pts[j], pts[k]);
        if (c.radius < best.radius && circle_contains_all(c, pts)) best = c;
      }
    }
  }
  return best;
}

double boundary_distance(const Polygon& poly, Point p) {
  double d = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < poly.size(); ++i) {
    d = std::min(d, point_segment_distance(p, poly.edge(i)));
  }
  return locate(poly, p) == PointLocation::Exterior ? -d : d;
}

struct Cell {
  Point center{};
  double half = 0.0;
  double dist = 0.0;
  double potential = 0.0;

  Cell(const Polygon& poly, Point c, double h)
      : center(c), half(h), dist(boundary_distance(poly, c)),
        potential(dist + h * std::sqrt(2.0)) {}
};

// Pole-of-inaccessibility grid refinement (quadtree branch and bound on the
// clearance function).
Circle largest_inscribed_circle(const Polygon& poly, double tol) {
  const Point lo = poly.bbox_min();
  const Point hi = poly.bbox_max();
  const double w = hi.x - lo.x;
  const double h = hi.y - lo.y;
  const double cell0 = std::min(w, h) / 2.0;

  const auto cmp = [](const Cell& a, const Cell& b) {
    return a.potential < b.potential;
  };
  std::priority_queue<Cell, std::vector<Cell>, decltype(cmp)> queue(cmp);

  for (double x = lo.x + cell0; x < hi.x + cell0; x += 2.0 * cell0) {
    for (double y = lo.y + cell0; y < hi.y + cell0; y += 2.0 * cell0) {
      queue.emplace(poly, Point{x, y}, cell0);
    }
  }

  Cell best(poly, Point{lo.x + w / 2.0, lo.y + h / 2.0}, 0.0);
  while (!queue.empty()) {
    const Cell cell = queue.top();
    queue.pop();
    if (cell.dist > best.dist) best = cell;
    if (cell.potential - best.dist <= tol) continue;
    const double q = cell.half / 2.0;
    queue.emplace(poly, Point{cell.center.x - q, cell.center.y - q}, q);
    queue.emplace(poly, Point{cell.center.x + q, cell.center.y - q}, q);
    queue.emplace(poly, Point{cell.center.x - q, cell.center.y + q}, q);
    queue.emplace(poly, Point{cell.center.x + q, cell.center.y + q}, q);
  }
  return {best.center, best.dist};
}

}  // namespace

DiskAspect disk_aspect_ratio(const Polygon& poly) {
  DiskAspect da;
  const Circle enclosing = min_enclosing_circle(poly.vertices());
  const Circle inscribed = largest_inscribed_circle(poly, 1e-6);
  da.ld = 2.0 * enclosing.radius;
  da.sd = 2.0 * inscribed.radius;
  da.ar = da.ld / da.sd;
  da.enclosing_center = enclosing.center;
  da.inscribed_center = inscribed.center;
  return da;
}

}  // namespace visguard
