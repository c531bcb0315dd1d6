#pragma once

#include <cmath>
#include <optional>

#include "visguard/errors.hpp"

namespace visguard {

/// Absolute comparison tolerance for constructed coordinates, in scene units.
/// Predicates (orient, side-of-line) are exact and do not use it.
inline constexpr double kEps = 1e-9;

struct Point {
  double x = 0.0;
  double y = 0.0;
};

inline Point operator+(Point a, Point b) { return {a.x + b.x, a.y + b.y}; }
inline Point operator-(Point a, Point b) { return {a.x - b.x, a.y - b.y}; }
inline Point operator*(Point a, double s) { return {a.x * s, a.y * s}; }
inline Point operator*(double s, Point a) { return a * s; }

inline double dot(Point a, Point b) { return a.x * b.x + a.y * b.y; }
inline double cross(Point a, Point b) { return a.x * b.y - a.y * b.x; }
inline double norm_sq(Point a) { return dot(a, a); }
inline double norm(Point a) { return std::sqrt(norm_sq(a)); }
inline double distance(Point a, Point b) { return norm(b - a); }
inline double distance_sq(Point a, Point b) { return norm_sq(b - a); }

inline bool finite(Point p) { return std::isfinite(p.x) && std::isfinite(p.y); }

inline bool approx_equal(Point a, Point b, double tol = kEps) {
  return std::abs(a.x - b.x) <= tol && std::abs(a.y - b.y) <= tol;
}

/// Directed segment from a to b.  Most operations require positive length;
/// degenerate segments are rejected at the API boundaries that care.
struct Segment {
  Point a;
  Point b;

  double length() const { return distance(a, b); }

  Point at(double t) const { return {a.x + (b.x - a.x) * t, a.y + (b.y - a.y) * t}; }

  /// Parameter of p along a->b assuming p lies (near) the supporting line.
  double param_of(Point p) const {
    const Point d = b - a;
    if (std::abs(d.x) >= std::abs(d.y)) {
      return d.x != 0.0 ? (p.x - a.x) / d.x : 0.0;
    }
    return d.y != 0.0 ? (p.y - a.y) / d.y : 0.0;
  }

  Segment reversed() const { return {b, a}; }
};

enum class Orientation { CounterClockwise, Clockwise, Collinear };

/// Sign of twice the signed area of triangle pqr.  Adaptively exact: a
/// floating-point filter falls back to exact expansion arithmetic, so the
/// result is correct for all representable inputs.
Orientation orient(Point p, Point q, Point r);

/// Same predicate as a value: positive CCW, negative CW, zero collinear.
/// The magnitude is the filtered double estimate; only the sign is exact.
double orient_value(Point p, Point q, Point r);

struct SegmentIntersection {
  enum class Kind { None, At, Overlap };
  Kind kind = Kind::None;
  Point point{};      // valid when kind == At
  Point overlap_a{};  // valid when kind == Overlap
  Point overlap_b{};
};

/// Intersection of two closed segments: a single point (proper crossing or
/// endpoint touch), a collinear overlap, or nothing.  Symmetric in arguments.
SegmentIntersection segment_intersection(const Segment& s1, const Segment& s2);

/// Intersection of the infinite line through p,q with closed segment s.
/// Throws Error(CollinearOverlap) when the line contains s.
std::optional<Point> line_cross_segment(Point p, Point q, const Segment& s);

double point_segment_distance(Point p, const Segment& s);

}  // namespace visguard
