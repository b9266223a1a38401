#include <doctest.h>

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "../support/geometry_properties.hpp"
#include "eqarea/errors.hpp"
#include "eqarea/geometry.hpp"

using namespace eqarea;

TEST_CASE("polyline construction") {
  const Polyline p({{0, 0}, {0, 0}, {1, 1}, {1, 1 + 1e-17}, {2, 0}});
  CHECK(p.size() == 3);
  CHECK_THROWS(Polyline({{0, 0}, {NAN, 1}}));
}

TEST_CASE("polygon area oracles") {
  const std::vector<Point> l_hexagon{{0, 0}, {2, 0}, {2, 1}, {1, 1}, {1, 2}, {0, 2}};
  CHECK(polygon_area(l_hexagon) == doctest::Approx(3.0));
  std::vector<Point> reversed(l_hexagon.rbegin(), l_hexagon.rend());
  CHECK(polygon_area(reversed) == doctest::Approx(-3.0));

  const int m = 4096;
  std::vector<Point> semicircle;
  for (int k = 0; k <= m; ++k) {
    const double a = std::numbers::pi * k / m;
    semicircle.push_back({std::cos(a), std::sin(a)});
  }
  const double exact_polygon = 0.5 * m * std::sin(std::numbers::pi / m);
  CHECK(polygon_area(semicircle) == doctest::Approx(exact_polygon).epsilon(1e-14));
  CHECK(std::abs(polygon_area(semicircle) - std::numbers::pi / 2) < 1e-6);

  CHECK_THROWS_AS(polygon_area(std::vector<Point>{{0, 0}, {1, 1}}), std::invalid_argument);
}

TEST_CASE("s-curve area") {
  const std::vector<Point> c{{0, 0}, {2, 0}, {2, 2}, {0, 2}, {5, 5}};
  CHECK(s_curve_signed_area(c, 0, 3) == doctest::Approx(4.0));
  CHECK(s_curve_signed_area(c, 0, 1) == 0.0);
  CHECK_THROWS_AS(s_curve_signed_area(c, 3, 1), std::invalid_argument);
}

TEST_CASE("area under graph") {
  const std::vector<Point> c{{-1, 0}, {0, 1}, {1, 0}};
  CHECK(area_under_graph(c) == doctest::Approx(1.0));
  const std::vector<Point> with_jump{{0, 1}, {1, 1}, {1, 0}, {2, 0}};
  CHECK(area_under_graph(with_jump) == doctest::Approx(1.0));
}

TEST_CASE("compensated sum") {
  CompensatedSum s;
  s.add(1.0);
  for (int i = 0; i < 1000; ++i) s.add(1e-17);
  s.add(-1.0);
  CHECK(s.value() == doctest::Approx(1e-14).epsilon(1e-6));
}

TEST_CASE("lobe through a single fold") {
  // x goes 0 -> 2 -> 1 -> 3: one fold between x = 1 and x = 2.
  const std::vector<Point> c{{0, 0}, {2, 1}, {1, 2}, {3, 3}};
  const Lobe right = locate_lobe(c, 1.5, 1);
  CHECK_FALSE(right.empty);
  CHECK(right.first == 1);
  CHECK(right.last == 1);
  CHECK(right.enter.point.x == 1.5);
  CHECK(right.enter.point.y == doctest::Approx(0.75));
  CHECK(right.exit.point.y == doctest::Approx(1.5));
  CHECK(right.area == doctest::Approx(0.1875));
  const Lobe left = locate_lobe(c, 1.5, 2);
  CHECK(left.area == doctest::Approx(0.5 * 0.75 * 0.5));

  // Anchor on the line: no lobe.
  CHECK(locate_lobe(c, 2.0, 1).empty);
  CHECK(lobe_area(c, 2.0, 1) == 0.0);
}

TEST_CASE("lobe areas are monotone in the cut position") {
  const std::vector<Point> c{{0, 0}, {1.5, 0.5}, {2, 1}, {1.6, 1.5}, {1, 2}, {3, 3}};
  double prev_right = 1e300;
  double prev_left = -1.0;
  for (double x = 1.05; x < 1.95; x += 0.05) {
    const double right = lobe_area(c, x, 2);
    const double left = lobe_area(c, x, 4);
    CHECK(right <= prev_right);
    CHECK(left >= prev_left);
    prev_right = right;
    prev_left = left;
  }
}

TEST_CASE("lobe reaching the curve end is malformed") {
  const std::vector<Point> c{{0, 0}, {2, 1}, {1, 2}};
  CHECK_THROWS_AS(locate_lobe(c, 1.5, 2), MalformedFoldError);
}

TEST_CASE("geometry properties (small sample)") {
  CHECK(testing::chord_split_property(200, 1).max_relative_error <= 1e-12);
  CHECK(testing::orientation_property(200, 2).failures == 0);
  CHECK(testing::shear_invariance_property(200, 3).max_relative_error <= 1e-12);
}
