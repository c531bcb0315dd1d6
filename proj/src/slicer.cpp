#include "visguard/slicer.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace visguard {

const char* to_string(TerminationReason reason) {
  switch (reason) {
    case TerminationReason::CrossOver: return "cross-over";
    case TerminationReason::SideExhausted: return "side-exhausted";
    case TerminationReason::CompletelyVisible: return "completely-visible";
  }
  return "unknown";
}

namespace {

struct Candidate {
  Point vertex;
  Point t_point;
  double dist;  // |vertex - q|
};

// Definition-2 candidates for one side.  wedge_side is the orientation both
// incident edges of the reflex vertex must have relative to the directed
// sight line q -> vertex (CCW for the left blocker, CW for the right).
std::vector<Candidate> blocker_candidates(const Polygon& poly, Point q,
                                          const Segment& target,
                                          Orientation wedge_side) {
  std::vector<Candidate> out;
  const std::size_t n = poly.size();
  for (std::size_t rv : poly.reflex_indices()) {
    const Point v = poly.vertex(rv);
    if (approx_equal(v, q)) continue;

    const Point prev = poly.vertex((rv + n - 1) % n);
    const Point next = poly.vertex((rv + 1) % n);
    const Orientation op = orient(q, v, prev);
    const Orientation on = orient(q, v, next);
    if (op != wedge_side && op != Orientation::Collinear) continue;
    if (on != wedge_side && on != Orientation::Collinear) continue;

    std::optional<Point> z;
    try {
      z = line_cross_segment(q, v, target);
    } catch (const Error&) {
      continue;  // sight line contains the target
    }
    if (!z) continue;
    if (dot(*z - q, v - q) <= 0.0) continue;          // crossing behind q
    if (distance(q, v) > distance(q, *z) + kEps) continue;  // vertex past the target
    if (!sees(poly, q, *z)) continue;

    out.push_back({v, *z, distance(q, v)});
  }
  return out;
}

BlockerResult pick_extremal(Point q, const std::vector<Candidate>& candidates,
                            Orientation others_side) {
  BlockerResult result;
  if (candidates.empty()) return result;

  const Candidate* best = &candidates.front();
  for (const Candidate& c : candidates) {
    const Orientation o = orient(q, best->vertex, c.vertex);
    if (o == Orientation::Collinear) {
      if (c.dist < best->dist) best = &c;
    } else if (o != others_side) {
      best = &c;  // c's line is more extremal than best's
    }
  }
  result.vertex = best->vertex;
  result.sight_line = Segment{q, best->vertex};
  result.t_point = best->t_point;
  return result;
}

void require_target_view(const Polygon& poly, Point q, const Segment& target) {
  if (visible_spans(poly, q, target).empty()) {
    throw Error(ErrorCode::NoTargetView,
                "query point sees no point of the target segment");
  }
}

}  // namespace

BlockerResult compute_lbv(const Polygon& poly, Point q, const Segment& target) {
  require_target_view(poly, q, target);
  const auto candidates =
      blocker_candidates(poly, q, target, Orientation::CounterClockwise);
  return pick_extremal(q, candidates, Orientation::CounterClockwise);
}

BlockerResult compute_rbv(const Polygon& poly, Point q, const Segment& target) {
  require_target_view(poly, q, target);
  const auto candidates =
      blocker_candidates(poly, q, target, Orientation::Clockwise);
  return pick_extremal(q, candidates, Orientation::Clockwise);
}

// ---------------------------------------------------------------------------
// Slicing iteration.
// ---------------------------------------------------------------------------

namespace {

const VisibleSpan* find_span(const std::vector<VisibleSpan>& spans, double c,
                             double tol) {
  for (const VisibleSpan& sp : spans) {
    if (c >= sp.lo && c <= sp.hi) return &sp;
  }
  const VisibleSpan* best = nullptr;
  double best_d = tol;
  for (const VisibleSpan& sp : spans) {
    const double d = c < sp.lo ? sp.lo - c : c - sp.hi;
    if (d < best_d) {
      best_d = d;
      best = &sp;
    }
  }
  return best;
}

struct Chain {
  Point guard{};
  double guard_param = 0.0;
  double cov = 0.0;  // coverage boundary parameter on the target
  bool done = false;
};

}  // namespace

GuardSet slice(const Polygon& poly, const Segment& source,
               const Segment& target_in) {
  const PairClass cls = classify_pair(poly, source, target_in);
  if (cls == PairClass::PartiallyInvisible) {
    throw Error(ErrorCode::NotWeaklyVisible,
                "segments are not weakly visible: some point of one segment "
                "sees no point of the other");
  }

  // Orientation convention: standing on the source looking at the target,
  // x is the left end of the source and y the right.
  const Point mid_s = source.at(0.5);
  const Point mid_t = target_in.at(0.5);
  Point facing = mid_t - mid_s;
  if (norm(facing) <= kEps) facing = target_in.a - mid_s;

  Point x = source.a, y = source.b;
  if (cross(facing, x - mid_s) < 0.0) std::swap(x, y);

  // The v end of the target is the one x sees (the geometric right end is
  // preferred when x sees both).
  Point end_a = target_in.a, end_b = target_in.b;
  if (cross(facing, end_a - mid_t) > 0.0) std::swap(end_a, end_b);
  Point u, v;
  if (sees(poly, x, end_a)) {
    v = end_a;
    u = end_b;
  } else if (sees(poly, x, end_b)) {
    v = end_b;
    u = end_a;
  } else {
    throw Error(ErrorCode::NotWeaklyVisible,
                "left source endpoint sees neither end of the target");
  }

  const Segment s{x, y};  // param 0 at x, 1 at y
  const Segment t{u, v};  // param 0 at u, 1 at v

  const LineAspect la = line_aspect_ratio(poly);
  const int ar_ceil = static_cast<int>(std::ceil(la.ar - 1e-12));
  const int cap = 4 * ar_ceil + 16;

  const double gtol_t = 1e-7 / std::max(t.length(), 1e-12);
  const double gtol_s = 1e-7 / std::max(s.length(), 1e-12);

  Chain cx{x, 0.0, 1.0, false};  // covers [cov, 1] of t, marching toward u
  Chain cy{y, 1.0, 0.0, false};  // covers [0, cov] of t, marching toward v

  GuardSet gs;
  gs.aspect_ratio = la.ar;
  gs.guard_bound = 2 * (ar_ceil + 1);
  gs.oriented_source = s;
  gs.oriented_target = t;

  std::vector<Point> guards{x, y};

  // The y chain anchors at u.  When y itself cannot see u, hand the chain to
  // the source point seeing u that lies furthest toward y.
  {
    const auto y_spans = visible_spans(poly, cy.guard, t);
    if (!find_span(y_spans, 0.0, gtol_t)) {
      const auto u_spans = visible_spans(poly, u, s);
      if (u_spans.empty()) {
        throw Error(ErrorCode::NotWeaklyVisible,
                    "target endpoint u sees no point of the source");
      }
      cy.guard_param = u_spans.back().hi;
      cy.guard = s.at(cy.guard_param);
      guards.push_back(cy.guard);
    }
  }

  std::optional<TerminationReason> reason;
  double prev_cx_cov = 2.0, prev_cx_guard = -1.0;
  double prev_cy_cov = -1.0, prev_cy_guard = 2.0;

  for (int i = 0; i <= cap && !reason; ++i) {
    IterationRecord rec;
    rec.index = i;
    rec.x_point = cx.guard;
    rec.y_point = cy.guard;

    bool x_unblocked = false, y_unblocked = false;

    if (!cx.done) {
      const auto spans = visible_spans(poly, cx.guard, t);
      const VisibleSpan* span = find_span(spans, cx.cov, gtol_t);
      if (!span) {
        throw Error(ErrorCode::StalledWithoutProgress,
                    "x-side guard lost contact with its coverage boundary");
      }
      if (span->lo_vertex < 0 || span->lo <= gtol_t) {
        cx.cov = 0.0;
        cx.done = true;
        x_unblocked = true;
      } else {
        const Point vtx = poly.vertex(span->lo_vertex);
        const Point z = t.at(span->lo);
        rec.lbv_x = BlockerResult{vtx, Segment{cx.guard, vtx}, z};
        rec.t_x = z;
        cx.cov = span->lo;
      }
    }
    if (!cy.done) {
      const auto spans = visible_spans(poly, cy.guard, t);
      const VisibleSpan* span = find_span(spans, cy.cov, gtol_t);
      if (!span) {
        throw Error(ErrorCode::StalledWithoutProgress,
                    "y-side guard lost contact with its coverage boundary");
      }
      if (span->hi_vertex < 0 || span->hi >= 1.0 - gtol_t) {
        cy.cov = 1.0;
        cy.done = true;
        y_unblocked = true;
      } else {
        const Point vtx = poly.vertex(span->hi_vertex);
        const Point z = t.at(span->hi);
        rec.rbv_y = BlockerResult{vtx, Segment{cy.guard, vtx}, z};
        rec.t_y = z;
        cy.cov = span->hi;
      }
    }

    if (i == 0 && x_unblocked && y_unblocked) {
      reason = TerminationReason::CompletelyVisible;
      gs.termination_iteration = 0;
      gs.trace.push_back(rec);
      break;
    }
    if (cx.done || cy.done) {
      // An exhausted chain has covered through to its far end on its own.
      reason = TerminationReason::SideExhausted;
      gs.termination_iteration = i;
      gs.trace.push_back(rec);
      break;
    }
    if (cx.cov <= cy.cov + gtol_t) {
      reason = TerminationReason::CrossOver;  // coverage fronts met
      gs.termination_iteration = i;
      gs.trace.push_back(rec);
      break;
    }

    if (cx.cov == prev_cx_cov && cx.guard_param == prev_cx_guard &&
        cy.cov == prev_cy_cov && cy.guard_param == prev_cy_guard) {
      throw Error(ErrorCode::StalledWithoutProgress,
                  "coverage boundary failed to advance");
    }
    prev_cx_cov = cx.cov;
    prev_cx_guard = cx.guard_param;
    prev_cy_cov = cy.cov;
    prev_cy_guard = cy.guard_param;

    // Back-projection: next x guard is the source point, furthest toward y,
    // that still sees the new x-side boundary point (mirror for the y side).
    {
      const Point z = t.at(cx.cov);
      const auto z_spans = visible_spans(poly, z, s);
      const VisibleSpan* span = find_span(z_spans, cx.guard_param, gtol_s);
      if (!span) {
        throw Error(ErrorCode::StalledWithoutProgress,
                    "x-side back-projection lost its guard");
      }
      if (span->hi_vertex >= 0) {
        rec.back_vertex_x = poly.vertex(span->hi_vertex);
      }
      if (span->hi <= cx.guard_param + gtol_s) {
        throw Error(ErrorCode::StalledWithoutProgress,
                    "x-side back-projection made no progress");
      }
      cx.guard_param = span->hi;
      cx.guard = s.at(span->hi);
      rec.next_x = cx.guard;
    }
    {
      const Point z = t.at(cy.cov);
      const auto z_spans = visible_spans(poly, z, s);
      const VisibleSpan* span = find_span(z_spans, cy.guard_param, gtol_s);
      if (!span) {
        throw Error(ErrorCode::StalledWithoutProgress,
                    "y-side back-projection lost its guard");
      }
      if (span->lo_vertex >= 0) {
        rec.back_vertex_y = poly.vertex(span->lo_vertex);
      }
      if (span->lo >= cy.guard_param - gtol_s) {
        throw Error(ErrorCode::StalledWithoutProgress,
                    "y-side back-projection made no progress");
      }
      cy.guard_param = span->lo;
      cy.guard = s.at(span->lo);
      rec.next_y = cy.guard;
    }

    guards.push_back(cx.guard);
    guards.push_back(cy.guard);

    if (cx.guard_param >= cy.guard_param - gtol_s) {
      // x_{i+1} reached or passed y_{i+1}: the covered prefix and suffix
      // meet on the target.
      reason = TerminationReason::CrossOver;
      gs.termination_iteration = i + 1;
      gs.trace.push_back(rec);
      break;
    }
    gs.trace.push_back(rec);
    gs.termination_iteration = i + 1;
  }

  if (!reason) {
    throw Error(ErrorCode::IterationCapExceeded,
                "slicing exceeded the iteration cap of " + std::to_string(cap));
  }
  gs.reason = *reason;

  std::sort(guards.begin(), guards.end(), [&](Point a, Point b) {
    return s.param_of(a) < s.param_of(b);
  });
  for (const Point& g : guards) {
    if (gs.guards.empty() || !approx_equal(gs.guards.back(), g)) {
      gs.guards.push_back(g);
    }
  }
  return gs;
}

}  // namespace visguard
