#pragma once

#include <optional>
#include <vector>

#include "visguard/aspect.hpp"
#include "visguard/visibility.hpp"

namespace visguard {

/// Outcome of a blocking-vertex query: the reflex vertex, the sight line
/// from the anchor through it, and where that line meets the opposite
/// segment.  All fields absent when the view is unobstructed on that side.
struct BlockerResult {
  std::optional<Point> vertex;
  std::optional<Segment> sight_line;  // anchor -> vertex
  std::optional<Point> t_point;

  bool present() const { return vertex.has_value(); }
};

/// Left blocking vertex of q looking at the target: the reflex vertex whose
/// sight line from q reaches the target inside the polygon, carries the
/// polygon wedge (exterior pocket) on its left, and is extremal in the sense
/// that every other such candidate lies left of the line.  Collinear ties go
/// to the vertex closest to q.  Throws Error(NoTargetView) when q sees no
/// point of the target at all.
BlockerResult compute_lbv(const Polygon& poly, Point q, const Segment& target);

/// Mirror image: exterior pocket on the right, other candidates right.
BlockerResult compute_rbv(const Polygon& poly, Point q, const Segment& target);

struct IterationRecord {
  int index = 0;
  Point x_point{};
  Point y_point{};
  BlockerResult lbv_x;
  BlockerResult rbv_y;
  std::optional<Point> t_x;
  std::optional<Point> t_y;
  std::optional<Point> next_x;
  std::optional<Point> next_y;
  // Reflex vertices steering the back-projections; each must reappear as the
  // opposite-side blocker of the next guard.
  std::optional<Point> back_vertex_x;
  std::optional<Point> back_vertex_y;
};

enum class TerminationReason { CrossOver, SideExhausted, CompletelyVisible };

const char* to_string(TerminationReason reason);

struct GuardSet {
  std::vector<Point> guards;  // deduplicated, ordered from the x end to y end
  std::vector<IterationRecord> trace;
  int termination_iteration = 0;
  TerminationReason reason = TerminationReason::CompletelyVisible;
  double aspect_ratio = 1.0;
  int guard_bound = 0;        // 2 * (ceil(AR) + 1)
  Segment oriented_source{};  // x -> y as resolved by the algorithm
  Segment oriented_target{};  // u -> v
};

/// The slicing iteration: covers the target with guards on the source.
/// Throws Error with code NotWeaklyVisible, IterationCapExceeded, or
/// StalledWithoutProgress.
GuardSet slice(const Polygon& poly, const Segment& source,
               const Segment& target);

}  // namespace visguard
