#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <vector>

#include "eqarea/characteristics.hpp"
#include "eqarea/errors.hpp"
#include "eqarea/solver.hpp"

using namespace eqarea;

namespace {

ShearedCurve as_sheared(std::vector<Point> pts) {
  ShearedCurve c;
  c.t = 1.0;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    c.source_params.push_back(static_cast<double>(i));
    c.piece.push_back(0);
  }
  c.vertices = Polyline(std::move(pts));
  return c;
}

bool is_graph(const Polyline& c) {
  for (std::size_t i = 1; i < c.size(); ++i) {
    if (c[i].x < c[i - 1].x) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("significant points") {
  CHECK_FALSE(find_significant_points(std::vector<Point>{{0, 0}, {1, 1}, {1, 2}, {3, 0}}));

  const std::vector<Point> single{{-5, 0}, {4, 1}, {1, 2}, {8, 3}};
  const auto s = find_significant_points(single);
  REQUIRE(s);
  CHECK(s->tau1 == 1);
  CHECK(s->tau2 == 2);
  CHECK(s->beta == 4.0);
  CHECK(s->alpha == 1.0);
  CHECK(s->gamma == s->beta);
  CHECK_FALSE(s->next_max);

  const std::vector<Point> twice{{-5, 0}, {4, 1}, {1, 2}, {3, 3}, {2, 4}, {8, 5}};
  const auto d = find_significant_points(twice);
  REQUIRE(d);
  REQUIRE(d->next_max);
  CHECK(*d->next_max == 3);
  CHECK(d->gamma == 3.0);
  CHECK(d->gamma < d->beta);

  CHECK_THROWS_AS(find_significant_points(std::vector<Point>{{0, 0}, {2, 1}, {1, 2}}),
                  MalformedFoldError);
  CHECK_THROWS_AS(find_significant_points(std::vector<Point>{{0, 0}, {-1, 1}, {3, 2}}),
                  MalformedFoldError);
}

TEST_CASE("sheared hat fold landmarks") {
  const Flux b = builtin_flux("burgers");
  const auto g = shear_polyline(b, sample_gamma0(builtin_profile("hat"), 1000, 64), 2.0);
  const auto pts = g.vertices.vertices();
  const auto s = find_significant_points(pts);
  REQUIRE(s);
  // Right extreme is the sheared peak (0, 1) -> (2, 1); left extreme the foot (1, 0).
  CHECK(s->beta == doctest::Approx(2.0));
  CHECK(s->alpha == doctest::Approx(1.0));
  CHECK(s->gamma == s->beta);
}

TEST_CASE("area balance changes sign across the fold") {
  const std::vector<Point> c{{-5, 0}, {4, 1}, {1, 2}, {8, 3}};
  const auto s = *find_significant_points(c);
  CHECK(area_balance(c, s, s.alpha + 1e-9) < 0.0);
  CHECK(area_balance(c, s, s.beta - 1e-9) > 0.0);
  const CutResult cut = equal_area_cut(builtin_flux("burgers"), c, s);
  CHECK(cut.kind == CutCase::kBalanced);
  CHECK(std::abs(area_balance(c, s, cut.shock.x)) < 1e-12);
  CHECK(area_under_graph(cut.curve.vertices()) == doctest::Approx(area_under_graph(c)));
  CHECK(is_graph(cut.curve));
}

TEST_CASE("overhang case conserves area and leaves a graph") {
  // Second fold's maximum x = 3 lies below beta = 10 and the first fold's
  // right lobe outweighs the left one at gamma.  y falls along the curve as
  // it does for a sheared convex-flux profile.
  const std::vector<Point> c{{-5, 5}, {10, 4}, {1, 3}, {3, 2}, {2, 1}, {12, 0}};
  const Flux b = builtin_flux("burgers");
  const auto sig = *find_significant_points(c);
  CHECK(sig.gamma == 3.0);
  CHECK(area_balance(c, sig, sig.gamma) < 0.0);
  const CutResult cut = equal_area_cut(b, c, sig);
  CHECK(cut.kind == CutCase::kOverhang);
  CHECK(cut.shock.x > sig.gamma);
  CHECK(cut.shock.x < sig.beta);
  CHECK(lobe_area(c, cut.shock.x, sig.tau1) ==
        doctest::Approx(lobe_area(c, sig.gamma, sig.tau2)).epsilon(1e-12));
  CHECK(area_under_graph(cut.curve.vertices()) == doctest::Approx(area_under_graph(c)));

  const SolutionCurve s = resolve_folds(b, as_sheared(c));
  CHECK(is_graph(s.curve));
  CHECK(s.polygon_area_drift < 1e-12);
  CHECK(s.cuts_performed >= 2);
  for (const Shock& k : s.shocks) CHECK(k.u_minus > k.u_plus);
}

TEST_CASE("hat closed form at t = 2") {
  const SolutionCurve s =
      solve_at_time(builtin_flux("burgers"), builtin_profile("hat"), 2.0, {1000, 64});
  REQUIRE(s.shocks.size() == 1);
  CHECK(s.shocks[0].x == doctest::Approx(std::sqrt(6.0) - 1.0).epsilon(1e-12));
  CHECK(s.shocks[0].u_minus == doctest::Approx(std::sqrt(6.0) / 3.0).epsilon(1e-12));
  CHECK(std::abs(s.shocks[0].u_plus) < 1e-12);
  CHECK(s.area_ok());
  CHECK(is_graph(s.curve));
}

TEST_CASE("Riemann problem closed form") {
  const Flux b = builtin_flux("burgers");
  const auto p = builtin_profile("riemann_step");
  const SolutionCurve s = solve_at_time(b, p, 1.0);
  REQUIRE(s.shocks.size() == 1);
  CHECK(std::abs(s.shocks[0].x - 0.5) < 1e-12);
  CHECK(s.shocks[0].u_minus == doctest::Approx(1.0));
  CHECK(s.shocks[0].u_plus == doctest::Approx(0.0));
  CHECK(s.shocks[0].rh_speed == doctest::Approx(0.5));
  // Fan, plateau and the right state; right limit at the shock.
  CHECK(evaluate(s, -0.5) == doctest::Approx(0.5));
  CHECK(evaluate(s, 0.25) == doctest::Approx(1.0));
  CHECK(evaluate(s, 0.75) == 0.0);
  CHECK(evaluate(s, 0.5) == 0.0);
  CHECK(evaluate(s, -100.0) == 0.0);
  CHECK(evaluate(s, 100.0) == 0.0);
}

TEST_CASE("no folds before the breaking time") {
  const SolutionCurve s =
      solve_at_time(builtin_flux("burgers"), builtin_profile("hat"), 0.5);
  CHECK(s.shocks.empty());
  CHECK(s.cuts_performed == 0);
  CHECK(s.x_extrema == 0);
}

TEST_CASE("concave flux flips the jump orientation") {
  const Flux l = builtin_flux("lwr_traffic", {0.0, 1.0});
  const SolutionCurve s = solve_at_time(l, builtin_profile("riemann_step", {0.2, 0.8}), 0.5);
  REQUIRE(s.shocks.size() == 2);
  CHECK(s.shocks[0].x == doctest::Approx(-0.6));
  CHECK(std::abs(s.shocks[1].x) < 1e-9);
  for (const Shock& k : s.shocks) CHECK(k.u_minus < k.u_plus);
  CHECK(s.area_ok());
}

TEST_CASE("gaussian triple at t = 4.25") {
  const Flux b = builtin_flux("burgers");
  const auto p = builtin_profile("gaussian_triple");
  const SolutionCurve s = solve_at_time(b, p, 4.25);
  CHECK(s.cuts_performed == 3);
  CHECK(s.shocks.size() == 3);
  CHECK(s.area_ok());
  CHECK(is_graph(s.curve));
  CHECK(std::is_sorted(s.shocks.begin(), s.shocks.end(),
                       [](const Shock& a, const Shock& c) { return a.x < c.x; }));
  for (const Shock& k : s.shocks) {
    CHECK(k.u_minus > k.u_plus);
    CHECK(k.s_curve_length > 0.0);
  }
  // Polygonal error bound shrinks quadratically.
  const SolutionCurve fine = solve_at_time(b, p, 4.25, {2000, 64});
  const double ratio = s.epsilon_estimate / fine.epsilon_estimate;
  CHECK(ratio > 3.0);
  CHECK(ratio < 5.0);
}

TEST_CASE("solves are deterministic") {
  const Flux b = builtin_flux("burgers");
  const auto p = builtin_profile("gaussian_triple");
  const SolutionCurve a = solve_at_time(b, p, 6.0);
  const SolutionCurve c = solve_at_time(b, p, 6.0);
  REQUIRE(a.curve.size() == c.curve.size());
  for (std::size_t i = 0; i < a.curve.size(); ++i) CHECK(a.curve[i] == c.curve[i]);
}

TEST_CASE("solver errors") {
  const Flux b = builtin_flux("burgers");
  CHECK_THROWS_AS(solve_at_time(b, builtin_profile("hat"), -1.0), ConfigError);
  CHECK_THROWS_AS(shock_displacement_estimate(1e-4, 1.0, 0.0), NumericalError);
  CHECK(shock_displacement_estimate(1e-4, 2.0, 0.5) == doctest::Approx(4e-4));
}
