#include "eqarea/characteristics.hpp"

#include <cmath>
#include <stdexcept>

#include <fmt/format.h>

namespace eqarea {

namespace {

void check_time(double t) {
  if (!(t >= 0.0) || !std::isfinite(t)) {
    throw std::invalid_argument(fmt::format("shear time must be finite and >= 0, got {}", t));
  }
}

ShearedCurve make_result(const SampledCurve& gamma0, double t, std::vector<Point> pts) {
  ShearedCurve out;
  out.t = t;
  out.vertices = Polyline(std::move(pts));
  out.source_params = gamma0.xi;
  out.piece = gamma0.piece;
  return out;
}

}  // namespace

Point apply_shear(const Flux& flux, Point p, double t) {
  return {p.x + flux.deriv(p.y) * t, p.y};
}

ShearedCurve shear_polyline(const Flux& flux, const SampledCurve& gamma0, double t) {
  check_time(t);
  const auto src = gamma0.curve.vertices();
  std::vector<Point> pts(src.size());
  const auto n = static_cast<std::ptrdiff_t>(src.size());
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    pts[static_cast<std::size_t>(i)] = apply_shear(flux, src[static_cast<std::size_t>(i)], t);
  }
  return make_result(gamma0, t, std::move(pts));
}

ShearedCurve shear_polyline_serial(const Flux& flux, const SampledCurve& gamma0, double t) {
  check_time(t);
  std::vector<Point> pts;
  pts.reserve(gamma0.curve.size());
  for (const Point& p : gamma0.curve) pts.push_back(apply_shear(flux, p, t));
  return make_result(gamma0, t, std::move(pts));
}

std::size_t count_x_extrema(std::span<const Point> curve) {
  if (curve.size() < 3) return 0;
  std::size_t count = 0;
  int previous = 0;
  for (std::size_t i = 0; i + 1 < curve.size(); ++i) {
    const double dx = curve[i + 1].x - curve[i].x;
    if (std::abs(dx) <= kCutTieTolerance) continue;
    const int dir = dx > 0.0 ? 1 : -1;
    if (previous != 0 && dir != previous) ++count;
    previous = dir;
  }
  return count;
}

}  // namespace eqarea
