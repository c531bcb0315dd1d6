#include "visguard/polygon.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace visguard {

double signed_area(const std::vector<Point>& ring) {
  double twice = 0.0;
  const std::size_t n = ring.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Point& a = ring[i];
    const Point& b = ring[(i + 1) % n];
    twice += a.x * b.y - b.x * a.y;
  }
  return 0.5 * twice;
}

void Polygon::finalize() {
  const std::size_t n = verts_.size();
  reflex_.assign(n, false);
  reflex_idx_.clear();
  bmin_ = bmax_ = verts_[0];
  for (const Point& p : verts_) {
    bmin_.x = std::min(bmin_.x, p.x);
    bmin_.y = std::min(bmin_.y, p.y);
    bmax_.x = std::max(bmax_.x, p.x);
    bmax_.y = std::max(bmax_.y, p.y);
  }
  for (std::size_t i = 0; i < n; ++i) {
    const Point& prev = verts_[(i + n - 1) % n];
    const Point& next = verts_[(i + 1) % n];
    // CCW ring: a right turn means the interior angle exceeds pi.
    if (orient(prev, verts_[i], next) == Orientation::Clockwise) {
      reflex_[i] = true;
      reflex_idx_.push_back(i);
    }
  }
}

Polygon Polygon::unchecked(std::vector<Point> vertices) {
  Polygon poly;
  poly.verts_ = std::move(vertices);
  poly.finalize();
  return poly;
}

Polygon Polygon::validate(std::vector<Point> vertices, ValidationReport* report) {
  const std::size_t n = vertices.size();
  if (n < 3) {
    throw Error(ErrorCode::TooFewVertices,
                "polygon needs at least 3 vertices, got " + std::to_string(n));
  }
  for (const Point& p : vertices) {
    if (!finite(p)) {
      throw Error(ErrorCode::InvalidInput, "polygon: non-finite vertex");
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    const Point& a = vertices[i];
    const Point& b = vertices[(i + 1) % n];
    if (approx_equal(a, b)) {
      throw Error(ErrorCode::DuplicateVertex,
                  "consecutive duplicate vertex at index " + std::to_string(i));
    }
  }

  // Simplicity: non-adjacent edges must not meet at all; adjacent edges may
  // share only their common endpoint (a collinear fold-back is a spike).
  for (std::size_t i = 0; i < n; ++i) {
    const Segment ei{vertices[i], vertices[(i + 1) % n]};
    for (std::size_t j = i + 1; j < n; ++j) {
      const bool adjacent = (j == i + 1) || (i == 0 && j == n - 1);
      const Segment ej{vertices[j], vertices[(j + 1) % n]};
      if (adjacent) {
        const Point da = ei.b - ei.a;
        const Point db = ej.b - ej.a;
        if (orient(ei.a, ei.b, j == i + 1 ? ej.b : ej.a) ==
                Orientation::Collinear &&
            dot(da, db) < 0.0) {
          throw Error(ErrorCode::SelfIntersecting,
                      "spike at shared vertex of edges " + std::to_string(i) +
                          " and " + std::to_string(j));
        }
        continue;
      }
      if (segment_intersection(ei, ej).kind !=
          SegmentIntersection::Kind::None) {
        throw Error(ErrorCode::SelfIntersecting,
                    "edges " + std::to_string(i) + " and " + std::to_string(j) +
                        " intersect");
      }
    }
  }

  const double area2 = signed_area(vertices);
  if (std::abs(area2) <= kEps) {
    throw Error(ErrorCode::SelfIntersecting, "polygon has zero area");
  }
  bool reversed = false;
  if (area2 < 0.0) {
    std::reverse(vertices.begin(), vertices.end());
    reversed = true;
  }

  Polygon poly;
  poly.verts_ = std::move(vertices);
  poly.finalize();

  if (report) {
    report->reversed = reversed;
    report->collinear_vertices.clear();
    const std::size_t m = poly.verts_.size();
    for (std::size_t i = 0; i < m; ++i) {
      const Point& prev = poly.verts_[(i + m - 1) % m];
      const Point& next = poly.verts_[(i + 1) % m];
      if (orient(prev, poly.verts_[i], next) == Orientation::Collinear) {
        report->collinear_vertices.push_back(i);
      }
    }
  }
  return poly;
}

double Polygon::area() const { return std::abs(signed_area(verts_)); }

PointLocation locate(const Polygon& poly, Point p) {
  if (!finite(p)) {
    throw Error(ErrorCode::InvalidInput, "locate: non-finite point");
  }
  const std::size_t n = poly.size();
  if (p.x < poly.bbox_min().x - kEps || p.x > poly.bbox_max().x + kEps ||
      p.y < poly.bbox_min().y - kEps || p.y > poly.bbox_max().y + kEps) {
    return PointLocation::Exterior;
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (point_segment_distance(p, poly.edge(i)) <= kEps) {
      return PointLocation::Boundary;
    }
  }
  // Even-odd ray cast toward +x with a half-open vertex rule.
  bool inside = false;
  for (std::size_t i = 0; i < n; ++i) {
    const Point& a = poly.vertex(i);
    const Point& b = poly.vertex((i + 1) % n);
    if ((a.y > p.y) != (b.y > p.y)) {
      const double x_cross = a.x + (p.y - a.y) / (b.y - a.y) * (b.x - a.x);
      if (p.x < x_cross) inside = !inside;
    }
  }
  return inside ? PointLocation::Interior : PointLocation::Exterior;
}

Polygon convex_hull(const Polygon& poly) {
  std::vector<Point> pts = poly.vertices();
  std::sort(pts.begin(), pts.end(), [](Point a, Point b) {
    return a.x < b.x || (a.x == b.x && a.y < b.y);
  });
  pts.erase(std::unique(pts.begin(), pts.end(),
                        [](Point a, Point b) { return a.x == b.x && a.y == b.y; }),
            pts.end());

  const std::size_t n = pts.size();
  std::vector<Point> hull(2 * n);
  std::size_t k = 0;
  for (std::size_t i = 0; i < n; ++i) {  // lower chain
    while (k >= 2 &&
           orient(hull[k - 2], hull[k - 1], pts[i]) != Orientation::CounterClockwise) {
      --k;
    }
    hull[k++] = pts[i];
  }
  for (std::size_t i = n - 1, lower = k + 1; i-- > 0;) {  // upper chain
    while (k >= lower &&
           orient(hull[k - 2], hull[k - 1], pts[i]) != Orientation::CounterClockwise) {
      --k;
    }
    hull[k++] = pts[i];
  }
  hull.resize(k - 1);
  return Polygon::unchecked(std::move(hull));
}

}  // namespace visguard
