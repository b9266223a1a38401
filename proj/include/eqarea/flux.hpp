#pragma once

#include <functional>
#include <string>
#include <string_view>

namespace eqarea {

enum class Convexity { kStrictlyConvex, kStrictlyConcave };

std::string_view to_string(Convexity c);

/// Closed interval of states on which a flux's convexity is asserted.
struct StateRange {
  double lo = -2.0;
  double hi = 2.0;
};

/// Flux function f of a scalar conservation law u_t + f(u)_x = 0.
///
/// Carries analytic f, f' and f''.  Construction samples f'' over the
/// working range and rejects a declared convexity that does not hold, since
/// the orientation of admissible jumps depends on it.  Immutable once built.
class Flux {
 public:
  using Fn = std::function<double(double)>;

  Flux(std::string name, Fn eval, Fn deriv, Fn second_deriv, Convexity convexity,
       StateRange range = {});

  double eval(double u) const { return eval_(u); }
  double deriv(double u) const { return deriv_(u); }
  double second_deriv(double u) const { return second_deriv_(u); }

  Convexity convexity() const { return convexity_; }
  const StateRange& range() const { return range_; }
  const std::string& name() const { return name_; }

  /// max |f'| over [lo, hi]; f' is monotone so the endpoints suffice.
  double max_speed(double lo, double hi) const;

 private:
  std::string name_;
  Fn eval_;
  Fn deriv_;
  Fn second_deriv_;
  Convexity convexity_;
  StateRange range_;
};

/// burgers: f(u) = u^2/2 (convex).  lwr_traffic: f(u) = u(1-u) (concave).
Flux builtin_flux(std::string_view name, StateRange range = {});

/// Flux from expression strings in the variable `u`.
Flux expression_flux(std::string_view expr, std::string_view deriv_expr,
                     std::string_view second_deriv_expr, Convexity convexity,
                     StateRange range = {});

/// Shock speed (f(u+) - f(u-)) / (u+ - u-); falls back to f' at the mean
/// state when the jump is below 1e-12.
double rankine_hugoniot_speed(const Flux& flux, double u_minus, double u_plus);

}  // namespace eqarea
