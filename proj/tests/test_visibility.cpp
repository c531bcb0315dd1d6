#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <random>

#include "doctest.h"
#include "fixtures.hpp"
#include "visguard/oracle.hpp"
#include "visguard/visibility.hpp"

using namespace visguard;

namespace {

double sampled_visible_length(const Polygon& poly, Point q, const Segment& t,
                              int samples) {
  int visible = 0;
  for (int i = 0; i <= samples; ++i) {
    if (sees(poly, q, t.at(static_cast<double>(i) / samples))) ++visible;
  }
  return t.length() * visible / (samples + 1);
}

double total_length(const std::vector<IntervalOnSegment>& ivals) {
  double len = 0.0;
  for (const auto& iv : ivals) len += iv.length();
  return len;
}

}  // namespace

TEST_CASE("sees inside a convex room") {
  const Polygon sq = fixtures::sq();
  CHECK(sees(sq, {0.2, 0.2}, {0.8, 0.8}));
  CHECK(sees(sq, {0.0, 0.0}, {1.0, 1.0}));  // corner to corner, diagonal
}

TEST_CASE("sees around the L corner") {
  const Polygon l8 = fixtures::l8();
  CHECK_FALSE(sees(l8, {0.5, 1}, {7.9, 7.9}));
  // Grazing the reflex vertex (5,3) is allowed.
  CHECK(sees(l8, {0.5, 1}, {7.9, fixtures::l8_window_y()}));
  // Running along a boundary edge is not.
  CHECK_FALSE(sees(l8, {0, 0}, {8, 0}));
  // Cutting across the notch is not.
  CHECK_FALSE(sees(l8, {0, 3}, {5, 8}));
}

TEST_CASE("sees is symmetric") {
  const Polygon z10 = fixtures::z10();
  std::mt19937_64 rng(3);
  int checked = 0;
  for (int k = 0; k < 400; ++k) {
    const Point a = sample_interior_point(z10, rng());
    const Point b = sample_interior_point(z10, rng());
    CHECK(sees(z10, a, b) == sees(z10, b, a));
    ++checked;
  }
  CHECK(checked == 400);
}

TEST_CASE("visibility polygon of a convex room is the room") {
  const Polygon sq = fixtures::sq();
  const VisibilityPolygon vp = visibility_polygon(sq, {0.5, 0.5});
  CHECK(vp.area() == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(approx_equal(vp.apex, {0.5, 0.5}));
}

TEST_CASE("visibility polygon in the L room") {
  const Polygon l8 = fixtures::l8();
  SUBCASE("a point in the column sees everything") {
    CHECK(visibility_polygon(l8, {7, 2}).area() ==
          doctest::Approx(39.0).epsilon(1e-9));
  }
  SUBCASE("a point in the slab loses the region above the window") {
    // Window ray from (1,1) through (5,3) exits at (8,4.5); the visible
    // region is the slab plus the column part below that line.
    CHECK(visibility_polygon(l8, {1, 1}).area() ==
          doctest::Approx(26.25).epsilon(1e-9));
  }
  SUBCASE("region vertices are themselves visible from the apex") {
    const VisibilityPolygon vp = visibility_polygon(l8, {1, 1});
    for (const Point& w : vp.region.vertices()) {
      CHECK(sees(l8, {1, 1}, w));
    }
  }
}

TEST_CASE("visibility polygon rejects outside queries") {
  CHECK_THROWS_AS(visibility_polygon(fixtures::l8(), {4, 5}), Error);
}

TEST_CASE("visibility polygon area matches the ray-cast oracle") {
  const Polygon l8 = fixtures::l8();
  for (const Point q : {Point{1, 1}, Point{7, 2}, Point{6, 1.5}, Point{7.5, 7}}) {
    const double swept = visibility_polygon(l8, q).area();
    const double cast = vp_oracle(l8, q, 4096);
    CHECK(std::abs(swept - cast) <= 1e-2 * swept);
  }
}

TEST_CASE("visible_intervals canonical cases") {
  const Polygon l8 = fixtures::l8();
  const Segment t = fixtures::l8_target();
  SUBCASE("single interval up to the window") {
    const auto ivals = visible_intervals(l8, {0.5, 1}, t);
    REQUIRE(ivals.size() == 1);
    CHECK(approx_equal(t.at(ivals[0].lo), {7.9, 2.5}, 1e-6));
    CHECK(approx_equal(t.at(ivals[0].hi), {7.9, fixtures::l8_window_y()}, 1e-6));
  }
  SUBCASE("whole segment in a convex room") {
    const Polygon sq = fixtures::sq();
    const auto ivals = visible_intervals(sq, {0.3, 0.4}, fixtures::sq_target());
    REQUIRE(ivals.size() == 1);
    CHECK(ivals[0].lo == doctest::Approx(0.0).epsilon(1e-9));
    CHECK(ivals[0].hi == doctest::Approx(1.0).epsilon(1e-9));
  }
  SUBCASE("empty when the window passes below the sub-target") {
    const auto ivals =
        visible_intervals(l8, {0.5, 1}, Segment{{7.9, 6}, {7.9, 7.9}});
    CHECK(ivals.empty());
  }
}

TEST_CASE("visible_intervals agrees with the span kernel and dense sampling") {
  const Polygon z10 = fixtures::z10();
  const Segment t = fixtures::z10_target();
  std::mt19937_64 rng(17);
  for (int k = 0; k < 25; ++k) {
    const Point q = sample_interior_point(z10, rng());
    const auto ivals = visible_intervals(z10, q, t);
    const auto spans = visible_spans(z10, q, t);
    REQUIRE(ivals.size() == spans.size());
    for (std::size_t i = 0; i < ivals.size(); ++i) {
      CHECK(ivals[i].lo == doctest::Approx(spans[i].lo).epsilon(1e-6));
      CHECK(ivals[i].hi == doctest::Approx(spans[i].hi).epsilon(1e-6));
    }
    const double sampled = sampled_visible_length(z10, q, t, 10000);
    CHECK(std::abs(total_length(ivals) - sampled) <= 1e-3 * t.length());
  }
}

TEST_CASE("classify_pair canonical cases") {
  SUBCASE("convex room pairs are completely visible") {
    CHECK(classify_pair(fixtures::sq(), fixtures::sq_source(),
                        fixtures::sq_target()) == PairClass::CompletelyVisible);
  }
  SUBCASE("the L scene is weakly visible") {
    CHECK(classify_pair(fixtures::l8(), fixtures::l8_source(),
                        fixtures::l8_target()) == PairClass::WeaklyVisible);
  }
  SUBCASE("a short source below the notch is partially invisible") {
    CHECK(classify_pair(fixtures::l8(), Segment{{0.5, 1}, {2, 1}},
                        Segment{{7.9, 6}, {7.9, 7.9}}) ==
          PairClass::PartiallyInvisible);
  }
  SUBCASE("segments outside the polygon are rejected") {
    CHECK_THROWS_AS(classify_pair(fixtures::l8(), Segment{{3, 4}, {4, 6}},
                                  fixtures::l8_target()),
                    Error);
  }
}

TEST_CASE("complete visibility survives shrinking the segments") {
  // Sub-segments of a completely visible pair stay completely visible.
  const Polygon l8 = fixtures::l8();
  const Segment s{{5.5, 1}, {7.5, 1}};
  const Segment t{{5.5, 7.5}, {7.5, 7.5}};
  REQUIRE(classify_pair(l8, s, t) == PairClass::CompletelyVisible);
  for (const auto& [lo, hi] : {std::pair{0.1, 0.7}, {0.4, 1.0}, {0.25, 0.5}}) {
    const Segment s2{s.at(lo), s.at(hi)};
    const Segment t2{t.at(lo), t.at(hi)};
    CHECK(classify_pair(l8, s2, t2) == PairClass::CompletelyVisible);
    CHECK(classify_pair(l8, s2, t) == PairClass::CompletelyVisible);
  }
}
