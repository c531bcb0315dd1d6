#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>

#include "doctest.h"
#include "fixtures.hpp"
#include "visguard/oracle.hpp"

using namespace visguard;

TEST_CASE("coverage_report on the L fixture guards") {
  const Polygon l8 = fixtures::l8();
  const Segment t = fixtures::l8_target();
  SUBCASE("both guards cover everything") {
    const CoverageReport r =
        coverage_report(l8, {{0.5, 1}, {7.5, 1}}, t, 10000);
    CHECK(r.samples == 10001);
    CHECK(r.covered_fraction == 1.0);
    CHECK(r.uncovered.empty());
  }
  SUBCASE("the left guard alone misses everything above the window") {
    const CoverageReport r = coverage_report(l8, {{0.5, 1}}, t, 10000);
    CHECK_FALSE(r.uncovered.empty());
    const double window_tau = t.param_of({7.9, fixtures::l8_window_y()});
    for (const auto& [tau, p] : r.uncovered) {
      CHECK(tau > window_tau - 1e-9);
    }
  }
  SUBCASE("no guards, nothing covered") {
    const CoverageReport r = coverage_report(l8, {}, t, 100);
    CHECK(r.covered_fraction == 0.0);
  }
  SUBCASE("sample count precondition") {
    CHECK_THROWS_AS(coverage_report(l8, {{0.5, 1}}, t, 1), Error);
  }
}

TEST_CASE("brute_blockers on canonical fixtures") {
  const Polygon l8 = fixtures::l8();
  const Segment t = fixtures::l8_target();
  SUBCASE("left blocker only") {
    const BruteBlockers b = brute_blockers(l8, {0.5, 1}, t);
    REQUIRE(b.left.has_value());
    CHECK(approx_equal(*b.left, {5, 3}));
    CHECK(b.left_survivors == 1);
    CHECK_FALSE(b.right.has_value());
    CHECK(b.right_survivors == 0);
  }
  SUBCASE("no reflex vertices, no blockers") {
    const BruteBlockers b =
        brute_blockers(fixtures::sq(), {0.5, 0.1}, fixtures::sq_target());
    CHECK_FALSE(b.left.has_value());
    CHECK_FALSE(b.right.has_value());
  }
  SUBCASE("z10 corridor start matches the sweep-side values") {
    const BruteBlockers b = brute_blockers(fixtures::z10(), {5.5, 0.5},
                                           fixtures::z10_target());
    REQUIRE(b.left.has_value());
    CHECK(approx_equal(*b.left, {5, 4}));
  }
}

TEST_CASE("vp_oracle samples star-shaped areas") {
  SUBCASE("unit square from its center") {
    CHECK(std::abs(vp_oracle(fixtures::sq(), {0.5, 0.5}, 4096) - 1.0) <= 1e-3);
  }
  SUBCASE("the column point sees all of the L room") {
    CHECK(std::abs(vp_oracle(fixtures::l8(), {7, 2}, 4096) - 39.0) <=
          1e-2 * 39.0);
  }
  SUBCASE("ray count precondition") {
    CHECK_THROWS_AS(vp_oracle(fixtures::sq(), {0.5, 0.5}, 100), Error);
  }
}

TEST_CASE("random_scene is deterministic and weakly visible") {
  const Scene a = random_scene(1, 12);
  const Scene b = random_scene(1, 12);
  REQUIRE(a.polygon.size() == b.polygon.size());
  for (std::size_t i = 0; i < a.polygon.size(); ++i) {
    CHECK(a.polygon.vertex(i).x == b.polygon.vertex(i).x);
    CHECK(a.polygon.vertex(i).y == b.polygon.vertex(i).y);
  }
  CHECK(a.source.a.x == b.source.a.x);
  CHECK(a.target.b.y == b.target.b.y);
  CHECK(classify_pair(a.polygon, a.source, a.target) ==
        PairClass::WeaklyVisible);
}

TEST_CASE("random_scene rejects tiny vertex counts") {
  CHECK_THROWS_AS(random_scene(2, 3), Error);
}

TEST_CASE("random polygons are simple and desk-sized") {
  for (std::uint64_t seed = 50; seed < 60; ++seed) {
    const Polygon poly = random_simple_polygon(seed, 14);
    CHECK(poly.size() == 14);
    CHECK(poly.area() > 0.0);
    const Point q = sample_interior_point(poly, seed);
    CHECK(locate(poly, q) == PointLocation::Interior);
  }
}
