#pragma once

#include <optional>

#include "visguard/polygon.hpp"

namespace visguard {

/// Witness for the short width: the reflex pair and the unit normal of the
/// two parallel interior-tangent lines through them.
struct ShortWidthWitness {
  Point vertex_a{};
  Point vertex_b{};
  Point strip_normal{};  // unit vector perpendicular to the strip lines
};

struct LineAspect {
  double lw = 0.0;
  double sw = 0.0;
  double ar = 1.0;
  std::optional<ShortWidthWitness> sw_witness;
};

struct DiskAspect {
  double ld = 0.0;
  double sd = 0.0;
  double ar = 1.0;
  Point enclosing_center{};
  Point inscribed_center{};
};

/// Maximum distance between parallel supporting lines of the convex hull,
/// i.e. the hull diameter.
double long_width(const Polygon& poly);

/// Minimum admissible reflex-pair strip distance; falls back to long_width
/// (absent witness) when no admissible pair exists.
struct ShortWidthResult {
  double sw = 0.0;
  std::optional<ShortWidthWitness> witness;
};
ShortWidthResult short_width(const Polygon& poly);

LineAspect line_aspect_ratio(const Polygon& poly);

/// LD = diameter of the smallest circle enclosing the vertex set,
/// SD = diameter of the largest inscribed circle (grid refinement to 1e-6
/// absolute radius tolerance).
DiskAspect disk_aspect_ratio(const Polygon& poly);

}  // namespace visguard
