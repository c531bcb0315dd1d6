#include "visguard/geometry.hpp"

#include <algorithm>
#include <cmath>

namespace visguard {

namespace detail {
double orient2d(double ax, double ay, double bx, double by, double cx,
                double cy);
}  // namespace detail

double orient_value(Point p, Point q, Point r) {
  if (!finite(p) || !finite(q) || !finite(r)) {
    throw Error(ErrorCode::InvalidInput, "orient: non-finite coordinate");
  }
  return detail::orient2d(p.x, p.y, q.x, q.y, r.x, r.y);
}

Orientation orient(Point p, Point q, Point r) {
  const double v = orient_value(p, q, r);
  if (v > 0.0) return Orientation::CounterClockwise;
  if (v < 0.0) return Orientation::Clockwise;
  return Orientation::Collinear;
}

double point_segment_distance(Point p, const Segment& s) {
  const Point d = s.b - s.a;
  const double len_sq = norm_sq(d);
  if (len_sq == 0.0) return distance(p, s.a);
  double t = dot(p - s.a, d) / len_sq;
  t = std::clamp(t, 0.0, 1.0);
  return distance(p, s.at(t));
}

namespace {

// Parameter of the crossing point of two straddling segments along s1,
// computed from the signed areas of s1's endpoints against s2's line.
double crossing_param(const Segment& s1, const Segment& s2) {
  const double oa = orient_value(s2.a, s2.b, s1.a);
  const double ob = orient_value(s2.a, s2.b, s1.b);
  return oa / (oa - ob);
}

}  // namespace

SegmentIntersection segment_intersection(const Segment& s1, const Segment& s2) {
  SegmentIntersection result;

  const Orientation o1 = orient(s1.a, s1.b, s2.a);
  const Orientation o2 = orient(s1.a, s1.b, s2.b);
  const Orientation o3 = orient(s2.a, s2.b, s1.a);
  const Orientation o4 = orient(s2.a, s2.b, s1.b);

  if (o1 == Orientation::Collinear && o2 == Orientation::Collinear) {
    // Collinear supporting lines: overlap interval in s1's parameter space.
    double ta = s1.param_of(s2.a);
    double tb = s1.param_of(s2.b);
    if (ta > tb) std::swap(ta, tb);
    const double lo = std::max(0.0, ta);
    const double hi = std::min(1.0, tb);
    if (lo > hi) return result;
    if (hi - lo <= kEps / std::max(s1.length(), 1.0)) {
      result.kind = SegmentIntersection::Kind::At;
      result.point = s1.at(lo);
      return result;
    }
    result.kind = SegmentIntersection::Kind::Overlap;
    result.overlap_a = s1.at(lo);
    result.overlap_b = s1.at(hi);
    return result;
  }

  const auto straddles = [](Orientation a, Orientation b) {
    return (a == Orientation::Collinear || b == Orientation::Collinear) ||
           (a != b);
  };
  if (!straddles(o1, o2) || !straddles(o3, o4)) return result;

  // Endpoint touches: exact when an endpoint sits on the other segment.
  const auto on_segment = [](Point p, const Segment& s, Orientation o) {
    if (o != Orientation::Collinear) return false;
    const double t = s.param_of(p);
    return t >= 0.0 && t <= 1.0;
  };
  if (on_segment(s2.a, s1, o1)) {
    result.kind = SegmentIntersection::Kind::At;
    result.point = s2.a;
    return result;
  }
  if (on_segment(s2.b, s1, o2)) {
    result.kind = SegmentIntersection::Kind::At;
    result.point = s2.b;
    return result;
  }
  if (on_segment(s1.a, s2, o3)) {
    result.kind = SegmentIntersection::Kind::At;
    result.point = s1.a;
    return result;
  }
  if (on_segment(s1.b, s2, o4)) {
    result.kind = SegmentIntersection::Kind::At;
    result.point = s1.b;
    return result;
  }
  if (o1 == Orientation::Collinear || o2 == Orientation::Collinear ||
      o3 == Orientation::Collinear || o4 == Orientation::Collinear) {
    // A collinear endpoint outside the other segment: no crossing.
    return result;
  }

  result.kind = SegmentIntersection::Kind::At;
  result.point = s1.at(crossing_param(s1, s2));
  return result;
}

std::optional<Point> line_cross_segment(Point p, Point q, const Segment& s) {
  if (!finite(p) || !finite(q)) {
    throw Error(ErrorCode::InvalidInput, "line_cross_segment: non-finite input");
  }
  if (approx_equal(p, q, 0.0)) {
    throw Error(ErrorCode::InvalidInput, "line_cross_segment: p == q");
  }

  const Orientation oa = orient(p, q, s.a);
  const Orientation ob = orient(p, q, s.b);

  if (oa == Orientation::Collinear && ob == Orientation::Collinear) {
    throw Error(ErrorCode::CollinearOverlap,
                "line_cross_segment: line contains the segment");
  }
  if (oa == Orientation::Collinear) return s.a;
  if (ob == Orientation::Collinear) return s.b;
  if (oa == ob) return std::nullopt;

  const double va = orient_value(p, q, s.a);
  const double vb = orient_value(p, q, s.b);
  const double t = va / (va - vb);
  return s.at(t);
}

}  // namespace visguard
