#include <doctest.h>

#include <cmath>

#include "eqarea/root_finding.hpp"

using eqarea::secant_bracketed;

TEST_CASE("secant converges superlinearly on smooth roots") {
  auto f = [](double x) { return x * x - 2.0; };
  const auto r = secant_bracketed(f, 1.0, f(1.0), 2.0, f(2.0), 1.0, 2.0, 1e-14);
  CHECK(r.x == doctest::Approx(std::sqrt(2.0)).epsilon(1e-14));
  CHECK(r.iterations <= 10);
  CHECK_FALSE(r.bisection_fallback);
}

TEST_CASE("secant respects the bracket") {
  // Flat tails send plain secant steps far away.
  auto f = [](double x) { return std::tanh(20.0 * (x - 0.3)); };
  const auto r = secant_bracketed(f, -1.0, f(-1.0), 1.0, f(1.0), -1.0, 1.0, 1e-14);
  CHECK(r.x == doctest::Approx(0.3).epsilon(1e-13));
}

TEST_CASE("root at an end point") {
  auto f = [](double x) { return x - 1.0; };
  const auto r = secant_bracketed(f, 0.0, -1.0, 1.0, 0.0, 0.0, 1.0, 1e-14);
  CHECK(r.x == 1.0);
  CHECK(r.iterations == 0);
}

TEST_CASE("bisection fallback after the secant budget") {
  auto f = [](double x) { return std::cbrt(x - 0.1); };
  const auto r = secant_bracketed(f, -1.0, f(-1.0), 1.0, f(1.0), -1.0, 1.0, 1e-14, 2);
  CHECK(r.x == doctest::Approx(0.1).epsilon(1e-12));
}
