#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "visguard/visibility.hpp"

namespace visguard {

struct CoverageReport {
  int samples = 0;  // number of evaluated target points (n + 1)
  std::vector<std::pair<double, Point>> uncovered;  // (parameter, point)
  double covered_fraction = 0.0;
};

struct Scene {
  Polygon polygon;
  Segment source{};
  Segment target{};
  std::uint64_t seed = 0;
};

/// Evaluates n + 1 evenly spaced target points (endpoints included); a point
/// counts as covered when some guard sees it.  Requires n >= 2.
CoverageReport coverage_report(const Polygon& poly,
                               const std::vector<Point>& guards,
                               const Segment& target, int n);

/// Exhaustive per-side blocking-vertex check straight from the definition:
/// a reflex vertex survives when its sight line from q reaches the target
/// inside the polygon, the wedge sits on the prescribed side, and every
/// other candidate lies on that side of the line.  Survivor counts are
/// reported so uniqueness can be asserted.
struct BruteBlockers {
  std::optional<Point> left;
  std::optional<Point> right;
  int left_survivors = 0;
  int right_survivors = 0;
};
BruteBlockers brute_blockers(const Polygon& poly, Point q,
                             const Segment& target);

/// Star-shaped area sampled by casting evenly spaced rays from q to the
/// boundary, independent of the visibility-polygon sweep.  Requires
/// rays >= 360.
double vp_oracle(const Polygon& poly, Point q, int rays);

/// Deterministic random scene: a random simple polygon (random points plus
/// 2-opt untangling) and an interior segment pair rejection-sampled until
/// classify_pair reports WeaklyVisible.  Throws
/// Error(GenerationBudgetExceeded) when the attempt budget runs out.
Scene random_scene(std::uint64_t seed, int n_vertices);

/// Standalone random simple polygon with the same machinery (retries until
/// a valid polygon emerges).
Polygon random_simple_polygon(std::uint64_t seed, int n_vertices);

/// Deterministic interior point of a polygon with a little boundary
/// clearance; used to probe visibility queries.
Point sample_interior_point(const Polygon& poly, std::uint64_t seed);

}  // namespace visguard
