#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "amapf/geometry.hpp"
#include "test_support.hpp"

using namespace amapf;
using amapf::testing::TestRng;

TEST_CASE("dist_point_segment") {
  CHECK(dist_point_segment({0, 1}, {-1, 0}, {1, 0}) == doctest::Approx(1.0));
  CHECK(dist_point_segment({3, 0}, {-1, 0}, {1, 0}) == doctest::Approx(2.0));
  CHECK(dist_point_segment({5, 1}, {0, 0}, {10, 0}) == doctest::Approx(1.0));
  // degenerate segment
  CHECK(dist_point_segment({3, 4}, {0, 0}, {0, 0}) == doctest::Approx(5.0));
}

TEST_CASE("segment_circle_crossings") {
  auto u = segment_circle_crossings({0, 0}, {4, 0}, {4, 0}, 2.0);
  REQUIRE(u.size() == 1);
  CHECK(u[0] == doctest::Approx(0.5));

  CHECK(segment_circle_crossings({0, 0}, {1, 0}, {10, 10}, 2.0).empty());

  auto tangent = segment_circle_crossings({0, 2}, {4, 2}, {2, 0}, 2.0);
  REQUIRE(tangent.size() == 1);
  CHECK(tangent[0] == doctest::Approx(0.5));

  auto both = segment_circle_crossings({-3, 0}, {3, 0}, {0, 0}, 2.0);
  REQUIRE(both.size() == 2);
  CHECK(both[0] == doctest::Approx(1.0 / 6.0));
  CHECK(both[1] == doctest::Approx(5.0 / 6.0));
}

TEST_CASE("polygon validation") {
  CHECK_THROWS_AS(Polygon({{0, 0}, {1, 0}}), SelfIntersectingInput);
  CHECK_THROWS_AS(Polygon({{0, 0}, {1, 1}, {0, 0}, {1, 0}}),
                  SelfIntersectingInput);
  // bowtie
  CHECK_THROWS_AS(Polygon({{0, 0}, {2, 2}, {2, 0}, {0, 2}}),
                  SelfIntersectingInput);
  // zero area
  CHECK_THROWS_AS(Polygon({{0, 0}, {1, 0}, {2, 0}}), SelfIntersectingInput);

  // clockwise input is normalized to CCW
  Polygon p({{0, 0}, {0, 1}, {1, 1}, {1, 0}});
  double s = 0;
  const auto& v = p.vertices();
  for (std::size_t i = 0; i < v.size(); ++i)
    s += cross2(v[i], v[(i + 1) % v.size()]);
  CHECK(s > 0);

  // collinear triple accepted
  CHECK_NOTHROW(Polygon({{0, 0}, {1, 0}, {2, 0}, {2, 1}, {0, 1}}));
}

TEST_CASE("polygon distance and containment") {
  Polygon sq = testing::unit_square();
  CHECK(sq.contains({0.5, 0.5}));
  CHECK_FALSE(sq.contains({1.5, 0.5}));
  CHECK(sq.distance({0.5, 0.5}) == 0.0);
  CHECK(sq.distance({2.0, 0.5}) == doctest::Approx(1.0));
  CHECK(sq.distance({-3.0, -4.0}) == doctest::Approx(5.0));
}

TEST_CASE("inflate_polygon area bounds vs closed-form Minkowski area") {
  Polygon sq = testing::unit_square();
  for (int arc : {8, 16, 64}) {
    auto region = inflate_polygon(sq, 1.0, arc);
    const double exact = 5.0 + M_PI;
    const double sec = 1.0 / std::cos(M_PI / arc);
    CHECK(region.boundary.area() >= exact - 1e-9);
    CHECK(region.boundary.area() <= exact * sec * sec + 1e-9);
  }
}

TEST_CASE("inflate_polygon containment via rejection sampling") {
  Polygon tri({{0, 0}, {4, 0}, {0, 4}});
  auto region = inflate_polygon(tri, 1.0, 64);
  TestRng rng(7);
  int tested = 0;
  while (tested < 10000) {
    const Point2 q = rng.point(-2.5, 6.5);
    if (tri.distance(q) > 1.0) continue;
    ++tested;
    // within distance 1 of the source: must be inside or on the boundary
    const bool inside =
        region.boundary.contains(q) || region.boundary.boundary_distance(q) <= 1e-9;
    REQUIRE(inside);
  }
}

TEST_CASE("inflate_polygon circumscription tightens with resolution") {
  Polygon sq = testing::unit_square();
  auto coarse = inflate_polygon(sq, 1.0, 8);
  auto fine = inflate_polygon(sq, 1.0, 64);
  for (const Point2& p : fine.boundary.vertices()) {
    const bool inside =
        coarse.boundary.contains(p) || coarse.boundary.boundary_distance(p) <= 1e-9;
    CHECK(inside);
  }
  CHECK(fine.boundary.area() < coarse.boundary.area());
}

TEST_CASE("inflate_polygon rejects bad input") {
  Polygon sq = testing::unit_square();
  CHECK_THROWS(inflate_polygon(sq, 1.0, 4));
  CHECK_THROWS(inflate_polygon(sq, -1.0, 64));
}

TEST_CASE("inflated region of a concave polygon still contains the offset") {
  // L-shape with arms wide relative to the radius.
  Polygon ell({{0, 0}, {6, 0}, {6, 3}, {3, 3}, {3, 6}, {0, 6}});
  auto region = inflate_polygon(ell, 1.0, 32);
  TestRng rng(11);
  int tested = 0;
  while (tested < 5000) {
    const Point2 q = rng.point(-2.0, 8.0);
    if (ell.distance(q) > 1.0) continue;
    ++tested;
    const bool inside =
        region.boundary.contains(q) || region.boundary.boundary_distance(q) <= 1e-9;
    REQUIRE(inside);
  }
}

TEST_CASE("disk_region") {
  auto square = disk_region({0, 0}, 2.0, 4);
  REQUIRE(square.boundary.size() == 4);
  for (const Point2& p : square.boundary.vertices())
    CHECK(p.norm() == doctest::Approx(2.0 * std::sqrt(2.0)));

  auto fine = disk_region({3, -1}, 2.0, 64);
  REQUIRE(fine.boundary.size() == 64);
  const double expect = 2.0 / std::cos(M_PI / 64);
  for (const Point2& p : fine.boundary.vertices())
    CHECK((p - Point2(3, -1)).norm() == doctest::Approx(expect));

  TestRng rng(3);
  for (int i = 0; i < 10000; ++i) {
    const double ang = rng.uniform(0, 2 * M_PI);
    const double rad = 2.0 * std::sqrt(rng.uniform(0, 1));
    const Point2 q = Point2(3, -1) + rad * Point2(std::cos(ang), std::sin(ang));
    const bool inside =
        fine.boundary.contains(q) || fine.boundary.boundary_distance(q) <= 1e-9;
    REQUIRE(inside);
  }
}

TEST_CASE("conservativeness: outside every unit inflation means clearance >= 1") {
  TestRng rng(23);
  Polygon poly = testing::random_convex(rng, {0, 0}, 2.0);
  auto region = inflate_polygon(poly, 1.0, 64);
  int tested = 0;
  while (tested < 2000) {
    const Point2 a = rng.point(-6, 6);
    const Point2 b = rng.point(-6, 6);
    if (segment_intersects_interior(a, b, region)) continue;
    if (region.boundary.contains(a) || region.boundary.contains(b)) continue;
    ++tested;
    REQUIRE(dist_segment_polygon(a, b, poly) >= 1.0 - 1e-9);
  }
}

TEST_CASE("segment_intersects_interior") {
  auto region = inflate_polygon(testing::square_at(5, 0, 1), 1.0, 16);
  CHECK(segment_intersects_interior({0, 0}, {10, 0}, region));
  CHECK_FALSE(segment_intersects_interior({0, 5}, {10, 5}, region));
  // segment ending on the boundary is not interior
  CHECK_FALSE(segment_intersects_interior({0, 0}, {3, 0}, region));
}

TEST_CASE("PolyPath basics") {
  PolyPath p({{0, 0}, {10, 0}});
  CHECK(p.length() == doctest::Approx(10.0));
  CHECK(p.point_at(0.0) == Point2(0, 0));
  CHECK(p.point_at(1.0) == Point2(10, 0));
  CHECK(p.point_at(0.25) == Point2(2.5, 0));

  PolyPath single({{1, 1}});
  CHECK(single.length() == 0.0);
  CHECK(single.point_at(0.7) == Point2(1, 1));
}

TEST_CASE("path_point_min_dist") {
  PolyPath p({{0, 0}, {10, 0}});
  auto [d1, t1] = path_point_min_dist(p, {5, 3});
  CHECK(d1 == doctest::Approx(3.0));
  CHECK(t1 == doctest::Approx(0.5));
  auto [d2, t2] = path_point_min_dist(p, {12, 0});
  CHECK(d2 == doctest::Approx(2.0));
  CHECK(t2 == doctest::Approx(1.0));
  PolyPath single({{1, 1}});
  auto [d3, t3] = path_point_min_dist(single, {4, 5});
  CHECK(d3 == doctest::Approx(5.0));
  CHECK(t3 == 0.0);
}

TEST_CASE("path_blocking_intervals") {
  PolyPath p({{0, 0}, {10, 0}});
  auto iv = path_blocking_intervals(p, {5, 1}, 2.0);
  REQUIRE(iv.size() == 1);
  CHECK(iv[0].first == doctest::Approx((5.0 - std::sqrt(3.0)) / 10.0));
  CHECK(iv[0].second == doctest::Approx((5.0 + std::sqrt(3.0)) / 10.0));

  CHECK(path_blocking_intervals(p, {5, 7}, 2.0).empty());

  auto from_start = path_blocking_intervals(p, {0, 0}, 2.0);
  REQUIRE(from_start.size() == 1);
  CHECK(from_start[0].first == 0.0);

  // interval split across a waypoint merges
  PolyPath bent({{0, 0}, {5, 0.2}, {10, 0}});
  auto merged = path_blocking_intervals(bent, {5, 1}, 2.0);
  REQUIRE(merged.size() == 1);
}

TEST_CASE("blocking interval endpoints sit on the circle") {
  TestRng rng(17);
  for (int trial = 0; trial < 300; ++trial) {
    std::vector<Point2> pts;
    const int n = rng.uniform_int(2, 5);
    for (int i = 0; i < n; ++i) pts.push_back(rng.point(-10, 10));
    PolyPath path(pts);
    if (path.waypoints().size() < 2) continue;
    const Point2 c = rng.point(-10, 10);
    const double r = rng.uniform(0.5, 4.0);
    auto intervals = path_blocking_intervals(path, c, r);
    double covered = 0.0;
    for (auto [a, b] : intervals) {
      REQUIRE(b > a);
      covered += b - a;
      for (double t : {a, b}) {
        if (t <= 1e-12 || t >= 1.0 - 1e-12) continue;
        REQUIRE((path.point_at(t) - c).norm() == doctest::Approx(r).epsilon(1e-9));
      }
    }
    CHECK(covered <= 1.0 + 1e-9);
  }
}

TEST_CASE("last_circle_crossing") {
  PolyPath p({{10, 0}, {0, 0}});
  auto t = last_circle_crossing(p, {0, 0}, 2.0);
  REQUIRE(t.has_value());
  CHECK(*t == doctest::Approx(0.8));
  CHECK(p.point_at(*t) == Point2(2, 0));

  PolyPath inside({{0.5, 0}, {0, 0.5}});
  CHECK_FALSE(last_circle_crossing(inside, {0, 0}, 2.0).has_value());
}

TEST_CASE("last_circle_crossing agrees with per-segment crossings") {
  TestRng rng(29);
  for (int trial = 0; trial < 1000; ++trial) {
    std::vector<Point2> pts;
    const int n = rng.uniform_int(2, 6);
    for (int i = 0; i < n; ++i) pts.push_back(rng.point(-8, 8));
    PolyPath path(pts);
    if (path.waypoints().size() < 2) continue;
    const Point2 c = rng.point(-8, 8);
    const double r = rng.uniform(0.5, 5.0);
    const auto got = last_circle_crossing(path, c, r);
    // brute force over segments
    const auto& wp = path.waypoints();
    const auto& cum = path.cumulative_lengths();
    std::optional<double> expect;
    for (std::size_t i = 0; i + 1 < wp.size(); ++i) {
      for (double u : segment_circle_crossings(wp[i], wp[i + 1], c, r)) {
        const double t = (cum[i] + u * (cum[i + 1] - cum[i])) / path.length();
        if (!expect || t > *expect) expect = t;
      }
    }
    REQUIRE(got.has_value() == expect.has_value());
    if (got) CHECK(*got == doctest::Approx(*expect).epsilon(1e-12));
  }
}

TEST_CASE("subpath_from") {
  PolyPath p({{0, 0}, {10, 0}});
  auto same = subpath_from(p, 0.0);
  CHECK(same.length() == doctest::Approx(10.0));
  CHECK(same.waypoints().size() == 2);

  auto tail = subpath_from(p, 0.5);
  CHECK(tail.length() == doctest::Approx(5.0));
  CHECK(tail.front() == Point2(5, 0));
  CHECK(tail.back() == Point2(10, 0));

  auto end = subpath_from(p, 1.0);
  CHECK(end.length() == 0.0);
  CHECK(end.front() == Point2(10, 0));

  PolyPath bent({{0, 0}, {4, 0}, {4, 4}});
  auto half = subpath_from(bent, 0.25);
  CHECK(half.length() == doctest::Approx(6.0));
  CHECK(half.front() == Point2(2, 0));
  CHECK(half.waypoints().size() == 3);
}

TEST_CASE("triangle clearance bound (1e3 smoke)") {
  // |AB| = 2, |AC| >= 2, |BC| >= 2*sqrt(3) implies dist(C, AB) >= 2.
  TestRng rng(41);
  const Point2 a(0, 0), b(2, 0);
  int tested = 0;
  while (tested < 1000) {
    const Point2 c = rng.point(-10, 12);
    if ((c - a).norm() < 2.0 || (c - b).norm() < 2.0 * std::sqrt(3.0)) continue;
    ++tested;
    REQUIRE(dist_point_segment(c, a, b) >= 2.0 - 1e-9);
  }
}
