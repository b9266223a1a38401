#include "eqarea/validation.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <fmt/format.h>

#include "eqarea/errors.hpp"

namespace eqarea {

namespace {

constexpr double kDefaultDtFraction = 1e-3;
constexpr double kMatchRadiusFactor = 10.0;

const Shock& nearest_shock(const std::vector<Shock>& shocks, double x, double radius, double t) {
  const Shock* best = nullptr;
  double best_distance = std::numeric_limits<double>::infinity();
  for (const Shock& s : shocks) {
    const double d = std::abs(s.x - x);
    if (d < best_distance) {
      best_distance = d;
      best = &s;
    }
  }
  if (!best || best_distance > radius) {
    throw UnmatchedShockError(
        fmt::format("no shock within {} of x = {} at t = {}", radius, x, t));
  }
  return *best;
}

}  // namespace

double ValidationReport::max_rh_residual() const {
  double m = 0.0;
  for (const auto& r : rh_residuals) m = std::max(m, r.residual);
  return m;
}

bool entropy_admissible(Convexity convexity, double u_minus, double u_plus) {
  return convexity == Convexity::kStrictlyConvex ? u_minus > u_plus : u_minus < u_plus;
}

double shock_speed_fd(const Flux& flux, const PiecewiseProfile& profile, std::size_t shock_index,
                      double t, double dt, const SolveParams& params) {
  if (!(dt > 0.0) || t - dt < 0.0) {
    throw ConfigError(fmt::format("finite-difference step {} invalid at t = {}", dt, t));
  }
  const SolutionCurve mid = solve_at_time(flux, profile, t, params);
  if (shock_index >= mid.shocks.size()) {
    throw UnmatchedShockError(fmt::format("t = {} has {} shocks, requested index {}", t,
                                          mid.shocks.size(), shock_index));
  }
  const SolutionCurve before = solve_at_time(flux, profile, t - dt, params);
  const SolutionCurve after = solve_at_time(flux, profile, t + dt, params);
  if (before.shocks.size() != mid.shocks.size() || after.shocks.size() != mid.shocks.size()) {
    throw UnmatchedShockError(fmt::format(
        "shock count changes across [{}, {}]: {} / {} / {}", t - dt, t + dt,
        before.shocks.size(), mid.shocks.size(), after.shocks.size()));
  }
  const auto [lo, hi] = profile.value_range();
  const double radius = kMatchRadiusFactor * dt * flux.max_speed(lo, hi);
  const double x = mid.shocks[shock_index].x;
  const double x_before = nearest_shock(before.shocks, x, radius, t - dt).x;
  const double x_after = nearest_shock(after.shocks, x, radius, t + dt).x;
  return (x_after - x_before) / (2.0 * dt);
}

ValidationReport validate(const Flux& flux, const PiecewiseProfile& profile,
                          const SolutionCurve& solution, double dt) {
  ValidationReport report;
  const double area = initial_area(profile);
  report.conservation_residual =
      std::abs(area_under_graph(solution.curve.vertices()) - area);
  report.conservation_tolerance = solution.params.area_tol * (1.0 + std::abs(area));
  if (dt <= 0.0) dt = kDefaultDtFraction * solution.t;
  for (std::size_t i = 0; i < solution.shocks.size(); ++i) {
    const Shock& s = solution.shocks[i];
    if (!entropy_admissible(flux.convexity(), s.u_minus, s.u_plus)) report.entropy_ok = false;
    RhResidual r;
    r.x = s.x;
    r.rh_speed = rankine_hugoniot_speed(flux, s.u_minus, s.u_plus);
    r.fd_speed = shock_speed_fd(flux, profile, i, solution.t, dt, solution.params);
    r.residual = std::abs(r.fd_speed - r.rh_speed);
    report.rh_residuals.push_back(r);
  }
  return report;
}

Sampled sampled(const SolutionCurve& solution) {
  const auto pts = solution.curve.vertices();
  if (pts.empty()) return {[](double) { return 0.0; }, 0.0, 0.0};
  return {[&solution](double x) { return evaluate(solution, x); }, pts.front().x, pts.back().x};
}

Sampled sampled(const Grid1D& grid) {
  return {[&grid](double x) { return grid.value_at(x); }, grid.x_min, grid.x_max};
}

double l1_distance(const Sampled& a, const Sampled& b, std::size_t grid) {
  if (grid == 0) throw std::invalid_argument("l1_distance needs at least one cell");
  const double lo = std::min(a.x_min, b.x_min);
  const double hi = std::max(a.x_max, b.x_max);
  if (!(hi > lo)) return 0.0;
  const double h = (hi - lo) / static_cast<double>(grid);
  double sum = 0.0;
  for (std::size_t i = 0; i < grid; ++i) {
    const double x = lo + (static_cast<double>(i) + 0.5) * h;
    sum += std::abs(a.value(x) - b.value(x));
  }
  return sum * h;
}

}  // namespace eqarea
