#pragma once

#include <vector>

#include "visguard/polygon.hpp"

namespace visguard {

/// Star-shaped region of the polygon visible from the apex point.
struct VisibilityPolygon {
  Polygon region;
  Point apex{};

  double area() const { return region.area(); }
};

/// Maximal visible sub-interval of a host segment, in [0,1] parameters.
struct IntervalOnSegment {
  Segment host;
  double lo = 0.0;
  double hi = 0.0;

  double length() const { return (hi - lo) * host.length(); }
};

enum class PairClass { CompletelyVisible, PartiallyInvisible, WeaklyVisible };

/// True iff the open segment ab lies in the polygon interior, except that
/// grazing contact at isolated reflex vertices is permitted (contact is
/// detected with the global kEps tolerance so constructed sight lines that
/// pass through a reflex vertex keep their visibility).
bool sees(const Polygon& poly, Point a, Point b);

/// Angular-sweep visibility polygon.  Throws Error(QueryOutsidePolygon).
VisibilityPolygon visibility_polygon(const Polygon& poly, Point q);

/// Maximal visible sub-intervals of t from q, sorted by parameter, computed
/// by clipping t against visibility_polygon(poly, q).
std::vector<IntervalOnSegment> visible_intervals(const Polygon& poly, Point q,
                                                 const Segment& t);

/// Three-way classification of a segment pair via critical-event
/// decomposition.  Throws Error(SegmentOutsidePolygon).
PairClass classify_pair(const Polygon& poly, const Segment& s,
                        const Segment& t);

/// One maximal visible stretch of a segment as seen from a query point,
/// with the reflex vertex generating each bound (-1 at segment ends).
/// This is the window-decomposition kernel behind classify_pair and the
/// slicing iteration; visible_intervals must agree with it.
struct VisibleSpan {
  double lo = 0.0;
  double hi = 0.0;
  int lo_vertex = -1;
  int hi_vertex = -1;
};

std::vector<VisibleSpan> visible_spans(const Polygon& poly, Point q,
                                       const Segment& t);

/// Validates that a segment lies in closure(poly) with its interior in the
/// open interior.  Throws Error(SegmentOutsidePolygon).
void require_segment_inside(const Polygon& poly, const Segment& s,
                            const char* label);

}  // namespace visguard
