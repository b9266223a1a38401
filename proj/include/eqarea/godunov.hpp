#pragma once

#include <cstddef>
#include <vector>

#include "eqarea/flux.hpp"
#include "eqarea/profile.hpp"

namespace eqarea {

/// Uniform grid of cell averages.
struct Grid1D {
  double x_min = 0.0;
  double x_max = 0.0;
  std::size_t n_cells = 0;
  double dx = 0.0;
  std::vector<double> averages;

  double center(std::size_t i) const { return x_min + (static_cast<double>(i) + 0.5) * dx; }
  /// Piecewise-constant reconstruction; zero outside [x_min, x_max].
  double value_at(double x) const;
  double total() const;  ///< sum of averages * dx
};

/// Exact Riemann flux for a convex or concave f: the minimum of f over
/// [u_l, u_r] when u_l <= u_r, the maximum over [u_r, u_l] otherwise.
double godunov_flux(const Flux& flux, double u_left, double u_right);

/// Cell averages of the initial data on a grid spanning the support plus
/// max(1, t_final * max|f'|) on each side.
Grid1D initial_grid(const Flux& flux, const PiecewiseProfile& profile, double t_final,
                    std::size_t n_cells);

struct GodunovStats {
  std::size_t steps = 0;
  /// Total variation after each step, including the initial state.
  std::vector<double> total_variation;
  /// Sum of averages * dx after each step, including the initial state.
  std::vector<double> mass;
};

/// First-order Godunov scheme with zero-gradient boundaries, time step
/// cfl * dx / max|f'(u)| recomputed every step; the last step lands on
/// t_final exactly.  Interface fluxes and the update run under OpenMP.
Grid1D godunov_solve(const Flux& flux, const PiecewiseProfile& profile, double t_final,
                     std::size_t n_cells, double cfl = 0.9, GodunovStats* stats = nullptr);

/// Single-threaded reference; bitwise identical to godunov_solve.
Grid1D godunov_solve_serial(const Flux& flux, const PiecewiseProfile& profile, double t_final,
                            std::size_t n_cells, double cfl = 0.9, GodunovStats* stats = nullptr);

}  // namespace eqarea
