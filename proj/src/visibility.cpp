#include "visguard/visibility.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <optional>
#include <string>
#include <vector>

namespace visguard {

namespace {

// Suppression radius for contact artifacts around a grazed vertex: a sight
// line constructed through a reflex vertex lands within ~kEps of it, so edge
// crossings that close to a tolerated contact are part of the graze.
constexpr double kGrazeRadius = 3.0 * kEps;

struct VertexContact {
  std::size_t index;
  double t;  // parameter along the query segment
};

// Walks segment ab against the polygon boundary.  Returns false as soon as a
// genuine blocking contact is found; otherwise fills `contacts` with the
// parameters of tolerated contacts (grazes and endpoint touches).
bool walk_segment(const Polygon& poly, Point a, Point b,
                  std::vector<double>* contacts) {
  const std::size_t n = poly.size();
  const Segment ab{a, b};
  const double len = ab.length();
  if (len <= kEps) return locate(poly, a) != PointLocation::Exterior;
  const double t_eps = kEps / len;

  std::vector<VertexContact> vcontacts;
  std::vector<bool> is_contact(n, false);
  for (std::size_t i = 0; i < n; ++i) {
    const Point v = poly.vertex(i);
    if (point_segment_distance(v, ab) <= kEps) {
      const double t = std::clamp(dot(v - a, b - a) / (len * len), 0.0, 1.0);
      vcontacts.push_back({i, t});
      is_contact[i] = true;
    }
  }

  for (const VertexContact& vc : vcontacts) {
    if (vc.t <= t_eps || vc.t >= 1.0 - t_eps) continue;  // endpoint touch
    const Point prev = poly.vertex((vc.index + n - 1) % n);
    const Point next = poly.vertex((vc.index + 1) % n);
    const Orientation op = orient(a, b, prev);
    const Orientation on = orient(a, b, next);
    if (op != Orientation::Collinear && on != Orientation::Collinear) {
      if (op != on) return false;            // boundary crosses the segment
      if (!poly.reflex(vc.index)) return false;  // convex graze blocks
    } else {
      // An incident edge runs along the sight line; positive-length overlap
      // is caught below, a fold at a convex corner blocks outright.
      if (!poly.reflex(vc.index)) return false;
    }
  }

  for (std::size_t i = 0; i < n; ++i) {
    const Point p = poly.vertex(i);
    const Point q = poly.vertex((i + 1) % n);
    const Orientation o1 = orient(a, b, p);
    const Orientation o2 = orient(a, b, q);

    if (o1 == Orientation::Collinear && o2 == Orientation::Collinear) {
      double lo = ab.param_of(p);
      double hi = ab.param_of(q);
      if (lo > hi) std::swap(lo, hi);
      if (std::min(hi, 1.0 - t_eps) - std::max(lo, t_eps) > 2.0 * t_eps) {
        return false;  // runs along the boundary for a positive stretch
      }
      continue;
    }
    if (o1 == o2) continue;
    if (o1 == Orientation::Collinear || o2 == Orientation::Collinear) {
      continue;  // touch at a vertex, classified above
    }

    const Orientation o3 = orient(p, q, a);
    const Orientation o4 = orient(p, q, b);
    if (o3 == o4) continue;
    if (o3 == Orientation::Collinear || o4 == Orientation::Collinear) {
      continue;  // an endpoint of ab rests on the edge line; no open crossing
    }

    // Strict straddle on both sides: a genuine line crossing.
    const double va = orient_value(p, q, a);
    const double vb = orient_value(p, q, b);
    const double t = va / (va - vb);
    const Point x = ab.at(t);
    bool graze_artifact = false;
    for (const VertexContact& vc : vcontacts) {
      if (distance(x, poly.vertex(vc.index)) <= kGrazeRadius) {
        graze_artifact = true;
        break;
      }
    }
    if (graze_artifact) continue;
    if (t > t_eps && t < 1.0 - t_eps) return false;
  }

  std::vector<double> ts{0.0, 1.0};
  for (const VertexContact& vc : vcontacts) ts.push_back(vc.t);
  std::sort(ts.begin(), ts.end());
  for (std::size_t i = 0; i + 1 < ts.size(); ++i) {
    if (ts[i + 1] - ts[i] <= 4.0 * t_eps) continue;
    const Point mid = ab.at(0.5 * (ts[i] + ts[i + 1]));
    if (locate(poly, mid) == PointLocation::Exterior) return false;
  }
  if (contacts) *contacts = std::move(ts);
  return true;
}

}  // namespace

bool sees(const Polygon& poly, Point a, Point b) {
  if (!finite(a) || !finite(b)) {
    throw Error(ErrorCode::InvalidInput, "sees: non-finite point");
  }
  return walk_segment(poly, a, b, nullptr);
}

void require_segment_inside(const Polygon& poly, const Segment& s,
                            const char* label) {
  if (!finite(s.a) || !finite(s.b) || s.length() <= kEps) {
    throw Error(ErrorCode::InvalidInput,
                std::string(label) + " segment is degenerate or non-finite");
  }
  if (locate(poly, s.a) == PointLocation::Exterior ||
      locate(poly, s.b) == PointLocation::Exterior) {
    throw Error(ErrorCode::SegmentOutsidePolygon,
                std::string(label) + " segment endpoint outside the polygon");
  }
  if (!walk_segment(poly, s.a, s.b, nullptr)) {
    throw Error(ErrorCode::SegmentOutsidePolygon,
                std::string(label) + " segment interior leaves the polygon");
  }
}

// ---------------------------------------------------------------------------
// Visibility polygon: angular sweep over vertex directions.
// ---------------------------------------------------------------------------

namespace {

struct RayPass {
  double t;  // distance from q, in scene units
  std::size_t vertex;
  bool left;  // polygon wedge on the left (CCW) side of the ray
};

struct RayResult {
  bool valid = false;
  Point stop{};
  std::vector<RayPass> passes;
};

// Walks the ray from q through the anchor vertex.  The anchor is an original
// polygon vertex, so all side-of-ray tests stay exact; only constructed stop
// points are inexact.
RayResult ray_walk(const Polygon& poly, Point q, Point anchor) {
  RayResult res;
  const std::size_t n = poly.size();
  const Point dir = anchor - q;
  const double dir_len = norm(dir);

  double stop_t = std::numeric_limits<double>::infinity();
  std::vector<RayPass> passes;

  const auto along = [&](Point p) { return dot(p - q, dir) / dir_len; };

  for (std::size_t i = 0; i < n; ++i) {
    const Point v = poly.vertex(i);
    if (orient(q, anchor, v) != Orientation::Collinear) continue;
    if (dot(v - q, dir) <= 0.0) continue;
    const double t_v = along(v);
    if (t_v <= kEps) continue;
    const Point prev = poly.vertex((i + n - 1) % n);
    const Point next = poly.vertex((i + 1) % n);
    const Orientation op = orient(q, anchor, prev);
    const Orientation on = orient(q, anchor, next);
    if (op == Orientation::Collinear || on == Orientation::Collinear) {
      continue;  // collinear incident edge: the overlap branch blocks
    }
    if (op != on) {
      stop_t = std::min(stop_t, t_v);  // boundary crosses the ray here
    } else if (poly.reflex(i)) {
      passes.push_back({t_v, i, op == Orientation::CounterClockwise});
    } else {
      stop_t = std::min(stop_t, t_v);  // convex corner stops the ray
    }
  }

  for (std::size_t i = 0; i < n; ++i) {
    const Point p = poly.vertex(i);
    const Point r = poly.vertex((i + 1) % n);
    const Orientation o1 = orient(q, anchor, p);
    const Orientation o2 = orient(q, anchor, r);
    if (o1 == Orientation::Collinear && o2 == Orientation::Collinear) {
      double lo = along(p);
      double hi = along(r);
      if (lo > hi) std::swap(lo, hi);
      if (hi <= kEps) continue;
      stop_t = std::min(stop_t, lo <= kEps ? hi : lo);
      continue;
    }
    if (o1 == o2) continue;
    if (o1 == Orientation::Collinear || o2 == Orientation::Collinear) {
      continue;  // endpoint touch, classified in the vertex loop
    }
    // The edge straddles the ray line; find the crossing distance.
    const Point ev = r - p;
    const double denom = cross(dir, ev);
    if (denom == 0.0) continue;
    const double t = cross(p - q, ev) / denom * dir_len;
    const double s = cross(p - q, dir) / denom;
    if (s < 0.0 || s > 1.0) continue;  // crossing beyond the edge (vertex touch)
    if (t > kEps) stop_t = std::min(stop_t, t);
  }

  if (!std::isfinite(stop_t)) return res;  // degenerate; skip this ray

  const Point unit{dir.x / dir_len, dir.y / dir_len};
  const Point mid = q + unit * (0.5 * stop_t);
  if (locate(poly, mid) == PointLocation::Exterior) {
    res.valid = true;
    res.stop = q;
    return res;  // ray leaves the polygon right at q
  }

  res.valid = true;
  res.stop = q + unit * stop_t;
  for (const RayPass& pass : passes) {
    if (pass.t < stop_t - kEps) res.passes.push_back(pass);
  }
  std::sort(res.passes.begin(), res.passes.end(),
            [](const RayPass& a, const RayPass& b) { return a.t < b.t; });
  return res;
}

}  // namespace

VisibilityPolygon visibility_polygon(const Polygon& poly, Point q) {
  if (!finite(q)) {
    throw Error(ErrorCode::InvalidInput, "visibility_polygon: non-finite query");
  }
  if (locate(poly, q) == PointLocation::Exterior) {
    throw Error(ErrorCode::QueryOutsidePolygon,
                "visibility_polygon: query point outside the polygon");
  }

  struct Dir {
    double angle;
    Point anchor;
  };
  std::vector<Dir> dirs;
  dirs.reserve(poly.size());
  for (const Point& v : poly.vertices()) {
    const Point d = v - q;
    if (norm(d) <= kEps) continue;
    dirs.push_back({std::atan2(d.y, d.x), v});
  }
  std::sort(dirs.begin(), dirs.end(),
            [](const Dir& a, const Dir& b) { return a.angle < b.angle; });

  std::vector<Point> chain;
  const Dir* prev = nullptr;
  for (const Dir& d : dirs) {
    if (prev && orient(q, prev->anchor, d.anchor) == Orientation::Collinear &&
        dot(prev->anchor - q, d.anchor - q) > 0.0) {
      continue;  // same ray as the previous anchor
    }
    prev = &d;
    const RayResult r = ray_walk(poly, q, d.anchor);
    if (!r.valid) continue;
    // Wedge on the right: the near chain precedes the window in CCW order.
    for (const RayPass& p : r.passes) {
      if (!p.left) chain.push_back(poly.vertex(p.vertex));
    }
    chain.push_back(r.stop);
    for (auto it = r.passes.rbegin(); it != r.passes.rend(); ++it) {
      if (it->left) chain.push_back(poly.vertex(it->vertex));
    }
  }

  std::vector<Point> region;
  for (const Point& p : chain) {
    if (region.empty() || !approx_equal(region.back(), p)) region.push_back(p);
  }
  while (region.size() > 1 && approx_equal(region.front(), region.back())) {
    region.pop_back();
  }
  if (region.size() < 3) {
    throw Error(ErrorCode::InvalidInput,
                "visibility_polygon: degenerate visibility region");
  }

  VisibilityPolygon vp;
  vp.region = Polygon::unchecked(std::move(region));
  vp.apex = q;
  return vp;
}

// ---------------------------------------------------------------------------
// Intervals on a segment.
// ---------------------------------------------------------------------------

std::vector<IntervalOnSegment> visible_intervals(const Polygon& poly, Point q,
                                                 const Segment& t) {
  const VisibilityPolygon vp = visibility_polygon(poly, q);
  const Polygon& region = vp.region;
  const double t_eps = kEps / std::max(t.length(), kEps);

  std::vector<double> params{0.0, 1.0};
  for (std::size_t i = 0; i < region.size(); ++i) {
    const SegmentIntersection si = segment_intersection(t, region.edge(i));
    switch (si.kind) {
      case SegmentIntersection::Kind::At:
        params.push_back(std::clamp(t.param_of(si.point), 0.0, 1.0));
        break;
      case SegmentIntersection::Kind::Overlap:
        params.push_back(std::clamp(t.param_of(si.overlap_a), 0.0, 1.0));
        params.push_back(std::clamp(t.param_of(si.overlap_b), 0.0, 1.0));
        break;
      case SegmentIntersection::Kind::None:
        break;
    }
  }
  std::sort(params.begin(), params.end());
  params.erase(std::unique(params.begin(), params.end(),
                           [](double a, double b) { return b - a < 1e-12; }),
               params.end());

  std::vector<IntervalOnSegment> out;
  for (std::size_t i = 0; i + 1 < params.size(); ++i) {
    const Point mid = t.at(0.5 * (params[i] + params[i + 1]));
    if (locate(region, mid) == PointLocation::Exterior) continue;
    if (!out.empty() && out.back().hi >= params[i] - t_eps) {
      out.back().hi = params[i + 1];
    } else {
      out.push_back({t, params[i], params[i + 1]});
    }
  }
  out.erase(std::remove_if(out.begin(), out.end(),
                           [&](const IntervalOnSegment& iv) {
                             return iv.hi - iv.lo <= t_eps;
                           }),
            out.end());
  return out;
}

std::vector<VisibleSpan> visible_spans(const Polygon& poly, Point q,
                                       const Segment& t) {
  const double t_eps = kEps / std::max(t.length(), kEps);

  struct Break {
    double param;
    int vertex;
    double dist;  // distance from q to the generating vertex
  };
  std::vector<Break> breaks{{0.0, -1, 0.0}, {1.0, -1, 0.0}};
  for (std::size_t rv : poly.reflex_indices()) {
    const Point v = poly.vertex(rv);
    if (approx_equal(v, q)) continue;
    std::optional<Point> z;
    try {
      z = line_cross_segment(q, v, t);
    } catch (const Error&) {
      continue;  // sight line contains the target: no usable breakpoint
    }
    if (!z) continue;
    const double tau = t.param_of(*z);
    if (tau <= t_eps || tau >= 1.0 - t_eps) continue;
    breaks.push_back({tau, static_cast<int>(rv), distance(q, v)});
  }
  std::sort(breaks.begin(), breaks.end(),
            [](const Break& a, const Break& b) { return a.param < b.param; });
  // Collapse coincident breakpoints, keeping the vertex closest to q
  // ("closest reflex vertex along that line" tie rule).
  std::vector<Break> uniq;
  for (const Break& b : breaks) {
    if (!uniq.empty() && b.param - uniq.back().param < 1e-12) {
      if (uniq.back().vertex == -1) continue;
      if (b.vertex != -1 && b.dist < uniq.back().dist) uniq.back() = b;
      continue;
    }
    uniq.push_back(b);
  }

  std::vector<VisibleSpan> spans;
  for (std::size_t i = 0; i + 1 < uniq.size(); ++i) {
    const double lo = uniq[i].param;
    const double hi = uniq[i + 1].param;
    const Point mid = t.at(0.5 * (lo + hi));
    if (!sees(poly, q, mid)) continue;
    if (!spans.empty() && spans.back().hi >= lo - t_eps) {
      spans.back().hi = hi;
      spans.back().hi_vertex = uniq[i + 1].vertex;
    } else {
      spans.push_back({lo, hi, uniq[i].vertex, uniq[i + 1].vertex});
    }
  }
  spans.erase(std::remove_if(spans.begin(), spans.end(),
                             [&](const VisibleSpan& sp) {
                               return sp.hi - sp.lo <= t_eps;
                             }),
              spans.end());
  return spans;
}

// ---------------------------------------------------------------------------
// Pair classification via critical-event decomposition.
// ---------------------------------------------------------------------------

namespace {

std::vector<double> cell_breakpoints(const Polygon& poly, const Segment& seg,
                                     const Segment& other) {
  std::vector<double> params{0.0, 1.0};
  const auto push_line = [&](Point p, Point q) {
    if (approx_equal(p, q)) return;
    std::optional<Point> z;
    try {
      z = line_cross_segment(p, q, seg);
    } catch (const Error&) {
      return;
    }
    if (!z) return;
    const double tau = seg.param_of(*z);
    if (tau > 0.0 && tau < 1.0) params.push_back(tau);
  };

  const auto& reflex = poly.reflex_indices();
  for (std::size_t i = 0; i < reflex.size(); ++i) {
    const Point vi = poly.vertex(reflex[i]);
    for (std::size_t j = i + 1; j < reflex.size(); ++j) {
      push_line(vi, poly.vertex(reflex[j]));
    }
    push_line(vi, seg.a);
    push_line(vi, seg.b);
    push_line(vi, other.a);
    push_line(vi, other.b);
  }
  std::sort(params.begin(), params.end());
  params.erase(std::unique(params.begin(), params.end(),
                           [](double a, double b) { return b - a < 1e-12; }),
               params.end());
  return params;
}

// Every cell midpoint of `seg` must see at least one point of `other`.
bool each_cell_sees_other(const Polygon& poly, const Segment& seg,
                          const Segment& other,
                          const std::vector<double>& cells) {
  std::optional<Point> witness;
  for (std::size_t i = 0; i + 1 < cells.size(); ++i) {
    const Point m = seg.at(0.5 * (cells[i] + cells[i + 1]));
    if (witness && sees(poly, m, *witness)) continue;
    const auto spans = visible_spans(poly, m, other);
    if (spans.empty()) return false;
    witness = other.at(0.5 * (spans.front().lo + spans.front().hi));
  }
  return true;
}

}  // namespace

PairClass classify_pair(const Polygon& poly, const Segment& s,
                        const Segment& t) {
  require_segment_inside(poly, s, "source");
  require_segment_inside(poly, t, "target");

  if (poly.reflex_indices().empty()) return PairClass::CompletelyVisible;

  const std::vector<double> s_cells = cell_breakpoints(poly, s, t);
  const std::vector<double> t_cells = cell_breakpoints(poly, t, s);

  if (!each_cell_sees_other(poly, s, t, s_cells) ||
      !each_cell_sees_other(poly, t, s, t_cells)) {
    return PairClass::PartiallyInvisible;
  }

  if (sees(poly, s.a, t.a) && sees(poly, s.a, t.b) && sees(poly, s.b, t.a) &&
      sees(poly, s.b, t.b)) {
    const double t_eps = kEps / std::max(t.length(), kEps);
    bool full = true;
    for (std::size_t i = 0; full && i + 1 < s_cells.size(); ++i) {
      const Point m = s.at(0.5 * (s_cells[i] + s_cells[i + 1]));
      const auto spans = visible_spans(poly, m, t);
      full = spans.size() == 1 && spans.front().lo <= t_eps &&
             spans.front().hi >= 1.0 - t_eps;
    }
    if (full) return PairClass::CompletelyVisible;
  }
  return PairClass::WeaklyVisible;
}

}  // namespace visguard
