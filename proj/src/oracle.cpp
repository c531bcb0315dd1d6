#include "visguard/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <string>

namespace visguard {

CoverageReport coverage_report(const Polygon& poly,
                               const std::vector<Point>& guards,
                               const Segment& target, int n) {
  if (n < 2) {
    throw Error(ErrorCode::InvalidInput, "coverage_report: n must be >= 2");
  }
  CoverageReport report;
  report.samples = n + 1;
  for (int i = 0; i <= n; ++i) {
    const double tau = static_cast<double>(i) / n;
    const Point p = target.at(tau);
    bool covered = false;
    for (const Point& g : guards) {
      if (sees(poly, g, p)) {
        covered = true;
        break;
      }
    }
    if (!covered) report.uncovered.emplace_back(tau, p);
  }
  report.covered_fraction =
      1.0 - static_cast<double>(report.uncovered.size()) / report.samples;
  return report;
}

// ---------------------------------------------------------------------------
// Brute-force blocking vertices.
// ---------------------------------------------------------------------------

namespace {

struct BruteCandidate {
  Point vertex;
  double dist;
};

std::vector<BruteCandidate> brute_candidates(const Polygon& poly, Point q,
                                             const Segment& target,
                                             bool left_side) {
  const Orientation wedge =
      left_side ? Orientation::CounterClockwise : Orientation::Clockwise;
  std::vector<BruteCandidate> out;
  const std::size_t n = poly.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (!poly.reflex(i)) continue;
    const Point r = poly.vertex(i);
    if (approx_equal(r, q)) continue;

    // Line through q and r meets the target, beyond r.
    std::optional<Point> z;
    try {
      z = line_cross_segment(q, r, target);
    } catch (const Error&) {
      continue;
    }
    if (!z) continue;
    if (dot(*z - q, r - q) <= 0.0) continue;
    if (distance(q, r) > distance(q, *z) + kEps) continue;

    // Containment under grazing closure.
    if (!sees(poly, q, *z)) continue;

    // Exterior-side condition: both incident edges on the prescribed side.
    const Point prev = poly.vertex((i + n - 1) % n);
    const Point next = poly.vertex((i + 1) % n);
    const Orientation op = orient(q, r, prev);
    const Orientation on = orient(q, r, next);
    if ((op != wedge && op != Orientation::Collinear) ||
        (on != wedge && on != Orientation::Collinear)) {
      continue;
    }
    out.push_back({r, distance(q, r)});
  }
  return out;
}

std::pair<std::optional<Point>, int> brute_survivor(
    Point q, const std::vector<BruteCandidate>& candidates, bool left_side) {
  const Orientation side =
      left_side ? Orientation::CounterClockwise : Orientation::Clockwise;
  std::optional<Point> survivor;
  int count = 0;
  for (const BruteCandidate& c : candidates) {
    bool ok = true;
    for (const BruteCandidate& o : candidates) {
      if (&o == &c) continue;
      const Orientation rel = orient(q, c.vertex, o.vertex);
      if (rel == side) continue;
      if (rel == Orientation::Collinear && o.dist > c.dist) continue;
      ok = false;
      break;
    }
    if (ok) {
      ++count;
      if (!survivor) survivor = c.vertex;
    }
  }
  return {survivor, count};
}

}  // namespace

BruteBlockers brute_blockers(const Polygon& poly, Point q,
                             const Segment& target) {
  BruteBlockers result;
  const auto left = brute_candidates(poly, q, target, true);
  const auto right = brute_candidates(poly, q, target, false);
  std::tie(result.left, result.left_survivors) = brute_survivor(q, left, true);
  std::tie(result.right, result.right_survivors) =
      brute_survivor(q, right, false);
  return result;
}

// ---------------------------------------------------------------------------
// Ray-cast visibility area oracle.
// ---------------------------------------------------------------------------

double vp_oracle(const Polygon& poly, Point q, int rays) {
  if (rays < 360) {
    throw Error(ErrorCode::InvalidInput, "vp_oracle: rays must be >= 360");
  }
  const double dtheta = 2.0 * M_PI / rays;
  std::vector<double> dist(rays, 0.0);
  for (int k = 0; k < rays; ++k) {
    const double theta = k * dtheta;
    const Point d{std::cos(theta), std::sin(theta)};
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < poly.size(); ++i) {
      const Segment e = poly.edge(i);
      const Point ev = e.b - e.a;
      const double denom = cross(d, ev);
      if (std::abs(denom) < 1e-15) continue;
      const double t = cross(e.a - q, ev) / denom;
      const double s = cross(e.a - q, d) / denom;
      if (s >= 0.0 && s <= 1.0 && t > 1e-12 && t < best) best = t;
    }
    dist[k] = std::isfinite(best) ? best : 0.0;
  }
  double area = 0.0;
  for (int k = 0; k < rays; ++k) {
    area += 0.5 * dist[k] * dist[(k + 1) % rays] * std::sin(dtheta);
  }
  return area;
}

// ---------------------------------------------------------------------------
// Random scenes.
// ---------------------------------------------------------------------------

namespace {

double uniform01(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

double uniform(std::mt19937_64& rng, double lo, double hi) {
  return lo + uniform01(rng) * (hi - lo);
}

double boundary_clearance(const Polygon& poly, Point p) {
  double d = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < poly.size(); ++i) {
    d = std::min(d, point_segment_distance(p, poly.edge(i)));
  }
  return d;
}

std::optional<Polygon> try_random_polygon(std::mt19937_64& rng, int n) {
  std::vector<Point> pts;
  pts.reserve(n);
  int tries = 0;
  while (static_cast<int>(pts.size()) < n && tries++ < 40 * n) {
    const Point p{uniform(rng, 0.0, 10.0), uniform(rng, 0.0, 10.0)};
    bool ok = true;
    for (const Point& other : pts) {
      if (distance(p, other) < 0.15) {
        ok = false;
        break;
      }
    }
    if (ok) pts.push_back(p);
  }
  if (static_cast<int>(pts.size()) < n) return std::nullopt;

  // 2-opt untangling: reverse a sub-chain whenever two edges meet.
  const auto edges_meet = [&](std::size_t i, std::size_t j) {
    const std::size_t m = pts.size();
    const Segment a{pts[i], pts[(i + 1) % m]};
    const Segment b{pts[j], pts[(j + 1) % m]};
    return segment_intersection(a, b).kind != SegmentIntersection::Kind::None;
  };
  const std::size_t m = pts.size();
  bool tangled = true;
  for (int pass = 0; pass < 40 * n && tangled; ++pass) {
    tangled = false;
    for (std::size_t i = 0; i + 1 < m && !tangled; ++i) {
      for (std::size_t j = i + 2; j < m && !tangled; ++j) {
        if (i == 0 && j == m - 1) continue;  // adjacent around the wrap
        if (edges_meet(i, j)) {
          std::reverse(pts.begin() + i + 1, pts.begin() + j + 1);
          tangled = true;
        }
      }
    }
  }
  if (tangled) return std::nullopt;

  try {
    return Polygon::validate(pts);
  } catch (const Error&) {
    return std::nullopt;
  }
}

std::optional<Point> sample_clear_point(std::mt19937_64& rng,
                                        const Polygon& poly, double clearance,
                                        int tries) {
  const Point lo = poly.bbox_min();
  const Point hi = poly.bbox_max();
  for (int k = 0; k < tries; ++k) {
    const Point p{uniform(rng, lo.x, hi.x), uniform(rng, lo.y, hi.y)};
    if (locate(poly, p) != PointLocation::Interior) continue;
    if (boundary_clearance(poly, p) < clearance) continue;
    return p;
  }
  return std::nullopt;
}

std::optional<Segment> sample_inner_segment(std::mt19937_64& rng,
                                            const Polygon& poly) {
  for (int k = 0; k < 64; ++k) {
    const auto a = sample_clear_point(rng, poly, 0.08, 32);
    if (!a) return std::nullopt;
    const auto b = sample_clear_point(rng, poly, 0.08, 32);
    if (!b) return std::nullopt;
    if (distance(*a, *b) < 0.8) continue;
    if (!sees(poly, *a, *b)) continue;  // keep the open segment interior
    return Segment{*a, *b};
  }
  return std::nullopt;
}

// Cheap necessary condition for weak visibility before the exact classifier
// runs: every coarse sample of each segment must see some sample of the
// other.
bool weakly_visible_prefilter(const Polygon& poly, const Segment& s,
                              const Segment& t) {
  constexpr int kProbe = 8, kLook = 16;
  const auto direction_ok = [&](const Segment& from, const Segment& to) {
    for (int i = 0; i <= kProbe; ++i) {
      const Point p = from.at(static_cast<double>(i) / kProbe);
      bool seen = false;
      for (int j = 0; j <= kLook && !seen; ++j) {
        seen = sees(poly, p, to.at(static_cast<double>(j) / kLook));
      }
      if (!seen) return false;
    }
    return true;
  };
  return direction_ok(s, t) && direction_ok(t, s);
}

// The slicing algorithm anchors its x chain at the target end visible from
// the left source endpoint; admit only scenes satisfying that precondition.
bool slice_anchor_ok(const Polygon& poly, const Segment& s, const Segment& t) {
  const Point mid_s = s.at(0.5);
  Point facing = t.at(0.5) - mid_s;
  if (norm(facing) <= kEps) facing = t.a - mid_s;
  const Point x = cross(facing, s.a - mid_s) >= 0.0 ? s.a : s.b;
  return sees(poly, x, t.a) || sees(poly, x, t.b);
}

}  // namespace

Polygon random_simple_polygon(std::uint64_t seed, int n_vertices) {
  if (n_vertices < 3) {
    throw Error(ErrorCode::InvalidInput,
                "random_simple_polygon: need at least 3 vertices");
  }
  std::mt19937_64 rng(seed ^ 0x7f4a7c15ULL);
  for (int attempt = 0; attempt < 256; ++attempt) {
    if (auto poly = try_random_polygon(rng, n_vertices)) return *poly;
  }
  throw Error(ErrorCode::GenerationBudgetExceeded,
              "random_simple_polygon: untangling budget exhausted");
}

Point sample_interior_point(const Polygon& poly, std::uint64_t seed) {
  std::mt19937_64 rng(seed ^ 0x2545f491ULL);
  for (double clearance : {0.05, 0.01, 0.001}) {
    if (auto p = sample_clear_point(rng, poly, clearance, 256)) return *p;
  }
  throw Error(ErrorCode::GenerationBudgetExceeded,
              "sample_interior_point: no interior point found");
}

Scene random_scene(std::uint64_t seed, int n_vertices) {
  if (n_vertices < 4) {
    throw Error(ErrorCode::InvalidInput,
                "random_scene: need at least 4 vertices");
  }
  std::mt19937_64 rng(seed);
  for (int poly_attempt = 0; poly_attempt < 64; ++poly_attempt) {
    const auto poly = try_random_polygon(rng, n_vertices);
    if (!poly) continue;
    for (int pair_attempt = 0; pair_attempt < 256; ++pair_attempt) {
      const auto s = sample_inner_segment(rng, *poly);
      const auto t = sample_inner_segment(rng, *poly);
      if (!s || !t) break;
      if (segment_intersection(*s, *t).kind !=
          SegmentIntersection::Kind::None) {
        continue;
      }
      if (!weakly_visible_prefilter(*poly, *s, *t)) continue;
      if (!slice_anchor_ok(*poly, *s, *t)) continue;
      try {
        if (classify_pair(*poly, *s, *t) != PairClass::WeaklyVisible) continue;
      } catch (const Error&) {
        continue;
      }
      return Scene{*poly, *s, *t, seed};
    }
  }
  throw Error(ErrorCode::GenerationBudgetExceeded,
              "random_scene: attempt budget exhausted for seed " +
                  std::to_string(seed));
}

}  // namespace visguard
