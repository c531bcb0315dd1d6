#pragma once

#include <vector>

#include "visguard/oracle.hpp"
#include "visguard/slicer.hpp"

namespace fixtures {

using namespace visguard;

// Unit square.
inline Polygon sq() {
  return Polygon::validate({{0, 0}, {1, 0}, {1, 1}, {0, 1}});
}

// L-shaped room: an 8x3 slab with a 3-wide column on the right, one reflex
// vertex at (5,3).
inline Polygon l8() {
  return Polygon::validate({{0, 0}, {8, 0}, {8, 8}, {5, 8}, {5, 3}, {0, 3}});
}

// 10x10 square with a bottom notch x in (3,5), y in (0,4) and a top notch
// x in (6,8), y in (6,10); reflex vertices (3,4), (5,4), (6,6), (8,6).
inline Polygon z10() {
  return Polygon::validate({{0, 0},
                            {3, 0},
                            {3, 4},
                            {5, 4},
                            {5, 0},
                            {10, 0},
                            {10, 10},
                            {8, 10},
                            {8, 6},
                            {6, 6},
                            {6, 10},
                            {0, 10}});
}

inline Segment l8_source() { return {{0.5, 1.0}, {7.5, 1.0}}; }
inline Segment l8_target() { return {{7.9, 2.5}, {7.9, 7.9}}; }

inline Segment sq_source() { return {{0.2, 0.1}, {0.8, 0.1}}; }
inline Segment sq_target() { return {{0.2, 0.9}, {0.8, 0.9}}; }

// The z10 corridor scene: the source runs along the bottom-right stretch,
// the target along the top-left one, so sight lines thread both notches.
inline Segment z10_source() { return {{5.5, 0.5}, {9.5, 0.5}}; }
inline Segment z10_target() { return {{0.5, 9.5}, {5.5, 9.5}}; }

// y-coordinate where the sight line from (0.5,1) through the reflex vertex
// (5,3) meets the target line x = 7.9.
inline double l8_window_y() { return 38.6 / 9.0; }

}  // namespace fixtures
