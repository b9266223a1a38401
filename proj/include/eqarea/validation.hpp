#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "eqarea/flux.hpp"
#include "eqarea/godunov.hpp"
#include "eqarea/profile.hpp"
#include "eqarea/solver.hpp"

namespace eqarea {

struct RhResidual {
  double x = 0.0;
  double fd_speed = 0.0;
  double rh_speed = 0.0;
  double residual = 0.0;
};

struct ValidationReport {
  double conservation_residual = 0.0;
  double conservation_tolerance = 0.0;
  std::vector<RhResidual> rh_residuals;
  bool entropy_ok = true;
  std::optional<double> l1_vs_reference;

  double max_rh_residual() const;
};

/// True when the jump goes the admissible way for the flux: down for convex
/// f, up for concave f.
bool entropy_admissible(Convexity convexity, double u_minus, double u_plus);

/// Central-difference speed of shock `shock_index` of the solve at t, from
/// solves at t - dt and t + dt.  Shocks are matched by nearest position
/// within 10 dt max|f'|; a change in shock count across the stencil throws
/// UnmatchedShockError.
double shock_speed_fd(const Flux& flux, const PiecewiseProfile& profile, std::size_t shock_index,
                      double t, double dt, const SolveParams& params = {});

/// Conservation, Rankine-Hugoniot and entropy checks of a solve.  dt <= 0
/// selects the default 1e-3 t.
ValidationReport validate(const Flux& flux, const PiecewiseProfile& profile,
                          const SolutionCurve& solution, double dt = 0.0);

/// Anything that can be sampled pointwise on a known interval.  The
/// sampled() adaptors keep a reference to their argument.
struct Sampled {
  std::function<double(double)> value;
  double x_min = 0.0;
  double x_max = 0.0;
};

Sampled sampled(const SolutionCurve& solution);
Sampled sampled(const Grid1D& grid);

/// Composite midpoint rule for \int |a - b| over the union of both ranges.
double l1_distance(const Sampled& a, const Sampled& b, std::size_t grid = 10000);

}  // namespace eqarea
