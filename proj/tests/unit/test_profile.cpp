#include <doctest.h>

#include <cmath>
#include <numbers>

#include "eqarea/errors.hpp"
#include "eqarea/profile.hpp"

using namespace eqarea;

TEST_CASE("built-in profiles") {
  const auto box = builtin_profile("box");
  CHECK(box(-0.5) == 1.0);
  CHECK(box(0.5) == 0.0);
  CHECK(initial_area(box) == doctest::Approx(1.0));
  const auto hat = builtin_profile("hat");
  CHECK(hat(0.0) == 1.0);
  CHECK(hat(-0.5) == 0.5);
  CHECK(initial_area(hat) == doctest::Approx(1.0));
  const auto g = builtin_profile("gaussian_triple");
  CHECK(initial_area(g) == doctest::Approx((0.9 + 0.7 + 0.85) * std::sqrt(std::numbers::pi))
                               .epsilon(1e-12));
  const auto r = builtin_profile("riemann_step", {0.8, 0.2});
  CHECK(r(-0.5) == 0.8);
  CHECK(r(0.5) == 0.2);
  CHECK(r.segments().size() == 2);
  CHECK(builtin_profile("riemann_step").segments().size() == 1);
  CHECK_THROWS_AS(builtin_profile("nope"), ConfigError);
}

TEST_CASE("profile validation") {
  CHECK_THROWS_AS(PiecewiseProfile({}), ConfigError);
  CHECK_THROWS_AS(expression_profile({{0.0, 1.0, "1"}, {1.5, 2.0, "1"}}), ConfigError);
  CHECK_THROWS_AS(expression_profile({{1.0, 0.0, "1"}}), ConfigError);
  CHECK_THROWS_AS(expression_profile({{0.0, 1.0, "log(x)"}}), ConfigError);
}

TEST_CASE("breakpoints and jumps") {
  const auto hat = builtin_profile("hat");
  const auto b = hat.breakpoints();
  REQUIRE(b.size() == 3);
  CHECK_FALSE(b[0].is_jump());  // 0 -> 0 at x = -1
  CHECK_FALSE(b[1].is_jump());
  CHECK(hat.jump_points().empty());
  const auto box = builtin_profile("box");
  CHECK(box.jump_points().size() == 2);
}

TEST_CASE("sampling places breakpoints and jump runs exactly") {
  const auto box = builtin_profile("box");
  const SampledCurve s = sample_gamma0(box, 100, 8);
  const auto& c = s.curve;
  std::size_t on_left = 0;
  std::size_t on_right = 0;
  for (const Point& p : c) {
    if (p.x == -1.0) ++on_left;
    if (p.x == 0.0) ++on_right;
  }
  CHECK(on_left == 8);
  CHECK(on_right == 8);
  CHECK(s.xi.size() == c.size());
  CHECK(s.piece.size() == c.size());
  for (std::size_t i = 1; i < c.size(); ++i) CHECK(c[i].x >= c[i - 1].x);
  // Area under the sampled curve is exact for piecewise-linear data.
  CHECK(area_under_graph(c.vertices()) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK_THROWS_AS(sample_gamma0(box, 8, 8), ConfigError);
  CHECK_THROWS_AS(sample_gamma0(box, 100, 1), ConfigError);
}

TEST_CASE("quadrature against an expression profile") {
  const auto p = expression_profile({{0.0, 1.0, "x^2"}, {1.0, 3.0, "exp(-x)"}});
  CHECK(initial_area(p) == doctest::Approx(1.0 / 3.0 + std::exp(-1.0) - std::exp(-3.0))
                               .epsilon(1e-13));
  CHECK(p.integral(0.5, 2.0) ==
        doctest::Approx((1.0 - 0.125) / 3.0 + std::exp(-1.0) - std::exp(-2.0)).epsilon(1e-13));
}
