#include <doctest.h>

#include <cmath>

#include "eqarea/validation.hpp"

using namespace eqarea;

TEST_CASE("entropy orientation") {
  CHECK(entropy_admissible(Convexity::kStrictlyConvex, 1.0, 0.0));
  CHECK_FALSE(entropy_admissible(Convexity::kStrictlyConvex, 0.0, 1.0));
  CHECK(entropy_admissible(Convexity::kStrictlyConcave, 0.2, 0.8));
  CHECK_FALSE(entropy_admissible(Convexity::kStrictlyConcave, 0.8, 0.2));
}

TEST_CASE("validate the Riemann and hat problems") {
  const Flux b = builtin_flux("burgers");
  for (auto [name, t] : {std::pair{"riemann_step", 1.0}, std::pair{"hat", 2.0}}) {
    const auto p = builtin_profile(name);
    const SolutionCurve s = solve_at_time(b, p, t);
    const ValidationReport r = validate(b, p, s);
    CHECK(r.conservation_residual <= r.conservation_tolerance);
    CHECK(r.entropy_ok);
    REQUIRE(r.rh_residuals.size() == 1);
    CHECK(r.max_rh_residual() < 1e-6);
  }
}

TEST_CASE("finite-difference shock speed on the hat") {
  // x_s(t) = sqrt(2 (1 + t)) - 1 for t >= 1.
  const Flux b = builtin_flux("burgers");
  const auto p = builtin_profile("hat");
  const double fd = shock_speed_fd(b, p, 0, 2.0, 1e-3);
  CHECK(fd == doctest::Approx(1.0 / std::sqrt(6.0)).epsilon(1e-6));
}

TEST_CASE("validate the gaussian triple") {
  const Flux b = builtin_flux("burgers");
  const auto p = builtin_profile("gaussian_triple");
  const SolutionCurve s = solve_at_time(b, p, 4.25);
  const ValidationReport r = validate(b, p, s);
  CHECK(r.conservation_residual <= r.conservation_tolerance);
  CHECK(r.entropy_ok);
  CHECK(r.rh_residuals.size() == 3);
  CHECK(r.max_rh_residual() < 1e-2);
}

TEST_CASE("L1 distance") {
  const Sampled zero{[](double) { return 0.0; }, 0.0, 1.0};
  const Sampled one{[](double) { return 1.0; }, 0.0, 2.0};
  CHECK(l1_distance(zero, one) == doctest::Approx(2.0));
  CHECK(l1_distance(one, one) == 0.0);
  const Sampled ramp{[](double x) { return x; }, 0.0, 1.0};
  CHECK(l1_distance(zero, ramp) == doctest::Approx(0.5).epsilon(1e-8));
}

TEST_CASE("L1 distance between solves shrinks under refinement") {
  const Flux b = builtin_flux("burgers");
  const auto p = builtin_profile("gaussian_triple");
  const SolutionCurve ref = solve_at_time(b, p, 4.25, {8000, 64});
  double prev = 1e300;
  for (std::size_t n : {500, 1000, 2000}) {
    const SolutionCurve s = solve_at_time(b, p, 4.25, {n, 64});
    const double e = l1_distance(sampled(s), sampled(ref), 100000);
    CHECK(e < prev);
    prev = e;
  }
}
