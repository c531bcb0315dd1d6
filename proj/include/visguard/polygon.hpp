#pragma once

#include <cstddef>
#include <vector>

#include "visguard/geometry.hpp"

namespace visguard {

enum class PointLocation { Interior, Boundary, Exterior };

struct ValidationReport {
  std::vector<std::size_t> collinear_vertices;  // straight (pi-angle) vertices
  bool reversed = false;                        // input was CW and got flipped
};

/// Validated simple polygon.  Vertices are stored CCW; every vertex carries a
/// reflex flag (interior angle > pi).  Straight vertices count as convex.
class Polygon {
public:
  Polygon() = default;  // empty placeholder; fill via validate or unchecked

  /// Validates and normalizes a vertex ring.  Throws Error with code
  /// TooFewVertices, DuplicateVertex, or SelfIntersecting.
  static Polygon validate(std::vector<Point> vertices,
                          ValidationReport* report = nullptr);

  /// Wraps a ring the caller guarantees to be simple and CCW (hull results,
  /// visibility regions).  Only reflex flags and the bounding box are built.
  static Polygon unchecked(std::vector<Point> vertices);

  std::size_t size() const { return verts_.size(); }
  const std::vector<Point>& vertices() const { return verts_; }
  const Point& vertex(std::size_t i) const { return verts_[i]; }
  Segment edge(std::size_t i) const {
    return {verts_[i], verts_[(i + 1) % verts_.size()]};
  }

  bool reflex(std::size_t i) const { return reflex_[i]; }
  const std::vector<std::size_t>& reflex_indices() const { return reflex_idx_; }

  double area() const;

  Point bbox_min() const { return bmin_; }
  Point bbox_max() const { return bmax_; }

private:
  void finalize();

  std::vector<Point> verts_;
  std::vector<bool> reflex_;
  std::vector<std::size_t> reflex_idx_;
  Point bmin_{}, bmax_{};
};

double signed_area(const std::vector<Point>& ring);

/// Interior / boundary / exterior classification.  Points within kEps of an
/// edge report Boundary.
PointLocation locate(const Polygon& poly, Point p);

/// Convex hull of the vertex set, CCW, collinear hull points dropped.
Polygon convex_hull(const Polygon& poly);

}  // namespace visguard
