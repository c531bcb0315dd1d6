#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <random>

#include "doctest.h"
#include "fixtures.hpp"
#include "visguard/aspect.hpp"
#include "visguard/oracle.hpp"

using namespace visguard;

namespace {

Polygon transformed(const Polygon& poly, double scale, double angle,
                    Point shift) {
  const double c = std::cos(angle), s = std::sin(angle);
  std::vector<Point> pts;
  for (const Point& p : poly.vertices()) {
    pts.push_back({scale * (c * p.x - s * p.y) + shift.x,
                   scale * (s * p.x + c * p.y) + shift.y});
  }
  return Polygon::validate(pts);
}

double brute_hull_diameter(const Polygon& poly) {
  const auto& v = convex_hull(poly).vertices();
  double best = 0.0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    for (std::size_t j = 0; j < v.size(); ++j) {
      best = std::max(best, distance(v[i], v[j]));
    }
  }
  return best;
}

}  // namespace

TEST_CASE("long width equals the hull diameter") {
  CHECK(long_width(fixtures::sq()) == doctest::Approx(std::sqrt(2.0)));
  CHECK(long_width(fixtures::z10()) ==
        doctest::Approx(10.0 * std::sqrt(2.0)).epsilon(1e-12));
  CHECK(long_width(fixtures::l8()) ==
        doctest::Approx(std::sqrt(128.0)).epsilon(1e-12));
  for (std::uint64_t seed : {11u, 12u, 13u}) {
    const Polygon poly = random_simple_polygon(seed, 20);
    CHECK(long_width(poly) == doctest::Approx(brute_hull_diameter(poly)));
  }
}

TEST_CASE("short width falls back to the long width without a reflex pair") {
  SUBCASE("square: no reflex vertices") {
    const auto sw = short_width(fixtures::sq());
    CHECK(sw.sw == doctest::Approx(std::sqrt(2.0)));
    CHECK_FALSE(sw.witness.has_value());
  }
  SUBCASE("L room: a single reflex vertex cannot form a pair") {
    const auto sw = short_width(fixtures::l8());
    CHECK(sw.sw == doctest::Approx(std::sqrt(128.0)));
    CHECK_FALSE(sw.witness.has_value());
  }
}

TEST_CASE("short width of the z10 corridor") {
  const auto sw = short_width(fixtures::z10());
  CHECK(sw.sw == doctest::Approx(1.0).epsilon(1e-12));
  REQUIRE(sw.witness.has_value());
  // Vertical strip lines x = 5 and x = 6 through the two inner teeth.
  const bool pair_ok =
      (approx_equal(sw.witness->vertex_a, {5, 4}) &&
       approx_equal(sw.witness->vertex_b, {6, 6})) ||
      (approx_equal(sw.witness->vertex_a, {6, 6}) &&
       approx_equal(sw.witness->vertex_b, {5, 4}));
  CHECK(pair_ok);
  CHECK(std::abs(sw.witness->strip_normal.y) == doctest::Approx(0.0));
  CHECK(std::abs(sw.witness->strip_normal.x) == doctest::Approx(1.0));
}

TEST_CASE("line aspect ratio composition") {
  CHECK(line_aspect_ratio(fixtures::sq()).ar == doctest::Approx(1.0));
  CHECK(line_aspect_ratio(fixtures::l8()).ar == doctest::Approx(1.0));
  CHECK(line_aspect_ratio(fixtures::z10()).ar ==
        doctest::Approx(10.0 * std::sqrt(2.0)).epsilon(1e-9));
}

TEST_CASE("sw witness lines are interior-tangent and the pair spans interior") {
  for (std::uint64_t seed = 1; seed <= 12; ++seed) {
    const Polygon poly = random_simple_polygon(seed, 24);
    const auto sw = short_width(poly);
    if (!sw.witness) continue;
    const Point n = sw.witness->strip_normal;
    const Point a = sw.witness->vertex_a;
    const Point b = sw.witness->vertex_b;
    auto index_of = [&](Point p) {
      for (std::size_t i = 0; i < poly.size(); ++i) {
        if (approx_equal(poly.vertex(i), p)) return i;
      }
      REQUIRE(false);
      return std::size_t{0};
    };
    const std::size_t ia = index_of(a), ib = index_of(b);
    CHECK(poly.reflex(ia));
    CHECK(poly.reflex(ib));
    const std::size_t np = poly.size();
    for (const std::size_t vi : {ia, ib}) {
      const double sign = vi == ia ? 1.0 : -1.0;
      for (const std::size_t ni : {(vi + 1) % np, (vi + np - 1) % np}) {
        const Point d = poly.vertex(ni) - poly.vertex(vi);
        CHECK(sign * dot(d, n) <= kEps * norm(d) + 1e-12);
      }
    }
    // The witness pair must be connected through the interior.
    bool meets_interior = false;
    for (int k = 1; k < 10 && !meets_interior; ++k) {
      meets_interior =
          locate(poly, a + (b - a) * (k / 10.0)) == PointLocation::Interior;
    }
    CHECK(meets_interior);
  }
}

TEST_CASE("disk aspect ratio of the fixtures") {
  SUBCASE("unit square") {
    const DiskAspect da = disk_aspect_ratio(fixtures::sq());
    CHECK(da.ld == doctest::Approx(std::sqrt(2.0)).epsilon(1e-9));
    CHECK(da.sd == doctest::Approx(1.0).epsilon(1e-5));
    CHECK(da.ar == doctest::Approx(std::sqrt(2.0)).epsilon(1e-4));
  }
  SUBCASE("z10") {
    const DiskAspect da = disk_aspect_ratio(fixtures::z10());
    CHECK(da.ld == doctest::Approx(10.0 * std::sqrt(2.0)).epsilon(1e-9));
    CHECK(da.sd == doctest::Approx(6.0).epsilon(1e-4));
    CHECK(approx_equal(da.inscribed_center, {3, 7}, 1e-3));
    CHECK(da.ar == doctest::Approx(10.0 * std::sqrt(2.0) / 6.0).epsilon(1e-4));
  }
  SUBCASE("L room") {
    const DiskAspect da = disk_aspect_ratio(fixtures::l8());
    // Enclosing circle spans (0,0)-(8,8); the slab admits a radius-1.5 disk.
    CHECK(da.ld == doctest::Approx(std::sqrt(128.0)).epsilon(1e-9));
    CHECK(da.sd == doctest::Approx(3.0).epsilon(1e-4));
  }
}

TEST_CASE("aspect ratios are at least one on random polygons") {
  for (std::uint64_t seed = 20; seed < 40; ++seed) {
    const Polygon poly = random_simple_polygon(seed, 16);
    const LineAspect la = line_aspect_ratio(poly);
    const DiskAspect da = disk_aspect_ratio(poly);
    CHECK(la.ar >= 1.0 - 1e-9);
    CHECK(la.sw <= la.lw + 1e-9);
    CHECK(la.sw > 0.0);
    CHECK(da.ar >= 1.0 - 1e-9);
    CHECK(da.sd <= da.ld + 1e-6);
  }
}

TEST_CASE("scale equivariance and rotation invariance") {
  std::mt19937_64 rng(99);
  const auto uniform = [&](double lo, double hi) {
    return lo + (static_cast<double>(rng() >> 11) * 0x1.0p-53) * (hi - lo);
  };
  for (const Polygon& poly : {fixtures::z10(), fixtures::l8()}) {
    const LineAspect base_l = line_aspect_ratio(poly);
    const DiskAspect base_d = disk_aspect_ratio(poly);
    for (int k = 0; k < 20; ++k) {
      const double scale = uniform(0.3, 4.0);
      const Polygon scaled = transformed(poly, scale, 0.0, {uniform(-5, 5), 0});
      const LineAspect la = line_aspect_ratio(scaled);
      const DiskAspect da = disk_aspect_ratio(scaled);
      CHECK(la.lw == doctest::Approx(scale * base_l.lw).epsilon(1e-9));
      CHECK(la.sw == doctest::Approx(scale * base_l.sw).epsilon(1e-9));
      CHECK(la.ar == doctest::Approx(base_l.ar).epsilon(1e-9));
      CHECK(da.ld == doctest::Approx(scale * base_d.ld).epsilon(1e-9));
      CHECK(da.sd == doctest::Approx(scale * base_d.sd).epsilon(1e-4));

      const double angle = uniform(0.0, 2.0 * M_PI);
      const Polygon rotated = transformed(poly, 1.0, angle, {0, 0});
      const LineAspect lr = line_aspect_ratio(rotated);
      const DiskAspect dr = disk_aspect_ratio(rotated);
      CHECK(lr.lw == doctest::Approx(base_l.lw).epsilon(1e-6));
      CHECK(lr.sw == doctest::Approx(base_l.sw).epsilon(1e-6));
      CHECK(dr.ld == doctest::Approx(base_d.ld).epsilon(1e-6));
      CHECK(dr.sd == doctest::Approx(base_d.sd).epsilon(1e-4));
    }
  }
}
