#include "eqarea/flux.hpp"

#include <cmath>

#include <fmt/format.h>

#include "eqarea/errors.hpp"
#include "eqarea/expression.hpp"

namespace eqarea {

namespace {

constexpr int kConvexitySamples = 1001;
constexpr double kDegenerateJump = 1e-12;

}  // namespace

std::string_view to_string(Convexity c) {
  return c == Convexity::kStrictlyConvex ? "strictly_convex" : "strictly_concave";
}

Flux::Flux(std::string name, Fn eval, Fn deriv, Fn second_deriv, Convexity convexity,
           StateRange range)
    : name_(std::move(name)),
      eval_(std::move(eval)),
      deriv_(std::move(deriv)),
      second_deriv_(std::move(second_deriv)),
      convexity_(convexity),
      range_(range) {
  if (!(range_.lo < range_.hi) || !std::isfinite(range_.lo) || !std::isfinite(range_.hi)) {
    throw ConfigError(fmt::format("flux '{}': invalid working range [{}, {}]", name_, range_.lo,
                                  range_.hi));
  }
  const double sign = convexity_ == Convexity::kStrictlyConvex ? 1.0 : -1.0;
  for (int i = 0; i < kConvexitySamples; ++i) {
    const double u = range_.lo + (range_.hi - range_.lo) * i / (kConvexitySamples - 1);
    const double f2 = second_deriv_(u);
    if (!std::isfinite(f2) || !(sign * f2 > 0.0)) {
      throw ConfigError(fmt::format("flux '{}': declared {} but f''({}) = {}", name_,
                                    to_string(convexity_), u, f2));
    }
  }
}

double Flux::max_speed(double lo, double hi) const {
  return std::max(std::abs(deriv_(lo)), std::abs(deriv_(hi)));
}

Flux builtin_flux(std::string_view name, StateRange range) {
  if (name == "burgers") {
    return Flux(
        "burgers", [](double u) { return 0.5 * u * u; }, [](double u) { return u; },
        [](double) { return 1.0; }, Convexity::kStrictlyConvex, range);
  }
  if (name == "lwr_traffic") {
    return Flux(
        "lwr_traffic", [](double u) { return u * (1.0 - u); },
        [](double u) { return 1.0 - 2.0 * u; }, [](double) { return -2.0; },
        Convexity::kStrictlyConcave, range);
  }
  throw ConfigError(fmt::format("unknown flux '{}' (known: burgers, lwr_traffic)", name));
}

Flux expression_flux(std::string_view expr, std::string_view deriv_expr,
                     std::string_view second_deriv_expr, Convexity convexity, StateRange range) {
  auto f = Expression::parse(expr, "u");
  auto df = Expression::parse(deriv_expr, "u");
  auto d2f = Expression::parse(second_deriv_expr, "u");
  return Flux(fmt::format("custom({})", expr), std::move(f), std::move(df), std::move(d2f),
              convexity, range);
}

double rankine_hugoniot_speed(const Flux& flux, double u_minus, double u_plus) {
  const double jump = u_plus - u_minus;
  if (std::abs(jump) < kDegenerateJump) return flux.deriv(0.5 * (u_plus + u_minus));
  return (flux.eval(u_plus) - flux.eval(u_minus)) / jump;
}

}  // namespace eqarea
