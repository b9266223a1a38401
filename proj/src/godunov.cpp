#include "eqarea/godunov.hpp"

#include <algorithm>
#include <cmath>

#include <fmt/format.h>

#include "eqarea/errors.hpp"

namespace eqarea {

namespace {

constexpr int kStationaryBisections = 200;

// Root of f' in [lo, hi], given that f' changes sign there.
double stationary_point(const Flux& flux, double lo, double hi) {
  double flo = flux.deriv(lo);
  for (int i = 0; i < kStationaryBisections && lo < hi; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    const double fm = flux.deriv(mid);
    if (fm == 0.0) return mid;
    if (std::signbit(fm) == std::signbit(flo)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

void check_inputs(double t_final, std::size_t n_cells, double cfl) {
  if (!(cfl > 0.0 && cfl <= 0.9)) {
    throw ConfigError(fmt::format("cfl must lie in (0, 0.9], got {}", cfl));
  }
  if (!(t_final >= 0.0) || !std::isfinite(t_final)) {
    throw ConfigError(fmt::format("t_final must be finite and >= 0, got {}", t_final));
  }
  if (n_cells < 2) throw ConfigError(fmt::format("need at least 2 cells, got {}", n_cells));
}

double total_variation(const std::vector<double>& u) {
  double tv = 0.0;
  for (std::size_t i = 1; i < u.size(); ++i) tv += std::abs(u[i] - u[i - 1]);
  return tv;
}

template <bool kParallel>
Grid1D run(const Flux& flux, const PiecewiseProfile& profile, double t_final,
           std::size_t n_cells, double cfl, GodunovStats* stats) {
  check_inputs(t_final, n_cells, cfl);
  Grid1D grid = initial_grid(flux, profile, t_final, n_cells);
  std::vector<double>& u = grid.averages;
  const auto n = static_cast<std::ptrdiff_t>(n_cells);
  // flux_at[i] is the flux through the left face of cell i; faces 0 and n
  // use zero-gradient ghost cells.
  std::vector<double> flux_at(n_cells + 1);

  if (stats) {
    stats->total_variation.push_back(total_variation(u));
    stats->mass.push_back(grid.total());
  }
  double t = 0.0;
  std::size_t steps = 0;
  while (t < t_final) {
    double speed = 0.0;
    if constexpr (kParallel) {
#pragma omp parallel for reduction(max : speed) schedule(static)
      for (std::ptrdiff_t i = 0; i < n; ++i) {
        speed = std::max(speed, std::abs(flux.deriv(u[static_cast<std::size_t>(i)])));
      }
    } else {
      for (double v : u) speed = std::max(speed, std::abs(flux.deriv(v)));
    }
    if (speed == 0.0) break;
    double dt = cfl * grid.dx / speed;
    if (t + dt >= t_final) dt = t_final - t;
    const double ratio = dt / grid.dx;

    auto face = [&](std::ptrdiff_t f) {
      const std::size_t l = static_cast<std::size_t>(std::max<std::ptrdiff_t>(f - 1, 0));
      const std::size_t r = static_cast<std::size_t>(std::min<std::ptrdiff_t>(f, n - 1));
      flux_at[static_cast<std::size_t>(f)] = godunov_flux(flux, u[l], u[r]);
    };
    if constexpr (kParallel) {
#pragma omp parallel
      {
#pragma omp for schedule(static)
        for (std::ptrdiff_t f = 0; f <= n; ++f) face(f);
#pragma omp for schedule(static)
        for (std::ptrdiff_t i = 0; i < n; ++i) {
          const auto k = static_cast<std::size_t>(i);
          u[k] -= ratio * (flux_at[k + 1] - flux_at[k]);
        }
      }
    } else {
      for (std::ptrdiff_t f = 0; f <= n; ++f) face(f);
      for (std::size_t k = 0; k < n_cells; ++k) u[k] -= ratio * (flux_at[k + 1] - flux_at[k]);
    }
    t = (dt == t_final - t) ? t_final : t + dt;
    ++steps;
    if (stats) {
      stats->total_variation.push_back(total_variation(u));
      stats->mass.push_back(grid.total());
    }
  }
  if (stats) stats->steps = steps;
  return grid;
}

}  // namespace

double Grid1D::value_at(double x) const {
  if (n_cells == 0 || x < x_min || x > x_max) return 0.0;
  const auto i = std::min(static_cast<std::size_t>((x - x_min) / dx), n_cells - 1);
  return averages[i];
}

double Grid1D::total() const {
  double sum = 0.0;
  for (double v : averages) sum += v;
  return sum * dx;
}

double godunov_flux(const Flux& flux, double u_left, double u_right) {
  const double lo = std::min(u_left, u_right);
  const double hi = std::max(u_left, u_right);
  const double f_lo = flux.eval(lo);
  const double f_hi = flux.eval(hi);
  const bool minimize = u_left <= u_right;
  double best = minimize ? std::min(f_lo, f_hi) : std::max(f_lo, f_hi);
  const double d_lo = flux.deriv(lo);
  const double d_hi = flux.deriv(hi);
  if (lo < hi && std::signbit(d_lo) != std::signbit(d_hi) && d_lo != 0.0 && d_hi != 0.0) {
    const double f_star = flux.eval(stationary_point(flux, lo, hi));
    best = minimize ? std::min(best, f_star) : std::max(best, f_star);
  }
  return best;
}

Grid1D initial_grid(const Flux& flux, const PiecewiseProfile& profile, double t_final,
                    std::size_t n_cells) {
  const auto [lo, hi] = profile.value_range();
  const double margin = std::max(1.0, t_final * flux.max_speed(lo, hi));
  Grid1D g;
  g.x_min = profile.support_min() - margin;
  g.x_max = profile.support_max() + margin;
  g.n_cells = n_cells;
  g.dx = (g.x_max - g.x_min) / static_cast<double>(n_cells);
  g.averages.resize(n_cells);
  for (std::size_t i = 0; i < n_cells; ++i) {
    const double a = g.x_min + static_cast<double>(i) * g.dx;
    g.averages[i] = profile.integral(a, a + g.dx) / g.dx;
  }
  return g;
}

Grid1D godunov_solve(const Flux& flux, const PiecewiseProfile& profile, double t_final,
                     std::size_t n_cells, double cfl, GodunovStats* stats) {
  return run<true>(flux, profile, t_final, n_cells, cfl, stats);
}

Grid1D godunov_solve_serial(const Flux& flux, const PiecewiseProfile& profile, double t_final,
                            std::size_t n_cells, double cfl, GodunovStats* stats) {
  return run<false>(flux, profile, t_final, n_cells, cfl, stats);
}

}  // namespace eqarea
