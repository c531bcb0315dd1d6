#pragma once

#include <string>

#include "visguard/oracle.hpp"
#include "visguard/slicer.hpp"

namespace visguard {

/// Deterministic SVG rendering of a scene: polygon outline with reflex
/// vertices marked, source and target segments, and (optionally) the guard
/// set with its sight-line trace.
std::string render_svg(const Scene& scene, const GuardSet* guards);

}  // namespace visguard
