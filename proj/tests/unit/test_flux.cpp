#include <doctest.h>

#include <cmath>

#include "eqarea/errors.hpp"
#include "eqarea/flux.hpp"

using namespace eqarea;

TEST_CASE("built-in fluxes") {
  const Flux b = builtin_flux("burgers");
  CHECK(b.eval(2.0) == 2.0);
  CHECK(b.deriv(3.0) == 3.0);
  CHECK(b.convexity() == Convexity::kStrictlyConvex);
  const Flux l = builtin_flux("lwr_traffic", {0.0, 1.0});
  CHECK(l.eval(0.5) == doctest::Approx(0.25));
  CHECK(l.deriv(0.25) == doctest::Approx(0.5));
  CHECK(l.convexity() == Convexity::kStrictlyConcave);
  CHECK_THROWS_AS(builtin_flux("nope"), ConfigError);
}

TEST_CASE("derivatives agree with finite differences") {
  for (const char* name : {"burgers", "lwr_traffic"}) {
    const Flux f = builtin_flux(name, {0.0, 1.0});
    for (double u = 0.05; u < 1.0; u += 0.1) {
      const double h = 1e-6;
      CHECK(f.deriv(u) == doctest::Approx((f.eval(u + h) - f.eval(u - h)) / (2 * h)).epsilon(1e-7));
      CHECK(f.second_deriv(u) ==
            doctest::Approx((f.deriv(u + h) - f.deriv(u - h)) / (2 * h)).epsilon(1e-7));
    }
  }
}

TEST_CASE("convexity is verified by sampling") {
  CHECK_NOTHROW(expression_flux("u^4/12 + u^2/2", "u^3/3 + u", "u^2 + 1",
                                Convexity::kStrictlyConvex));
  CHECK_THROWS_AS(expression_flux("u^2/2", "u", "1", Convexity::kStrictlyConcave), ConfigError);
  CHECK_THROWS_AS(expression_flux("u^3/6", "u^2/2", "u", Convexity::kStrictlyConvex), ConfigError);
}

TEST_CASE("Rankine-Hugoniot speed") {
  const Flux b = builtin_flux("burgers");
  CHECK(rankine_hugoniot_speed(b, 1.0, 0.0) == doctest::Approx(0.5));
  CHECK(rankine_hugoniot_speed(b, 0.3, 0.3) == doctest::Approx(0.3));
  // Symmetric in its arguments.
  CHECK(rankine_hugoniot_speed(b, 0.2, 0.9) == rankine_hugoniot_speed(b, 0.9, 0.2));
  // Mean-value property: the speed lies between the characteristic speeds.
  const Flux l = builtin_flux("lwr_traffic", {0.0, 1.0});
  for (double a = 0.0; a <= 1.0; a += 0.125) {
    for (double c = 0.0; c <= 1.0; c += 0.125) {
      if (a == c) continue;
      const double s = rankine_hugoniot_speed(l, a, c);
      CHECK(s >= std::min(l.deriv(a), l.deriv(c)) - 1e-14);
      CHECK(s <= std::max(l.deriv(a), l.deriv(c)) + 1e-14);
    }
  }
}

TEST_CASE("max_speed") {
  const Flux b = builtin_flux("burgers");
  CHECK(b.max_speed(-2.0, 1.0) == 2.0);
  CHECK(b.max_speed(0.0, 1.0) == 1.0);
}
