#pragma once

#include <cstddef>
#include <vector>

#include "eqarea/flux.hpp"
#include "eqarea/geometry.hpp"
#include "eqarea/profile.hpp"

namespace eqarea {

/// The time-t image of the initial curve under (x, y) -> (x + f'(y) t, y).
struct ShearedCurve {
  double t = 0.0;
  Polyline vertices;
  std::vector<double> source_params;  ///< initial position xi of each vertex
  std::vector<int> piece;             ///< arc labels carried over from SampledCurve
};

Point apply_shear(const Flux& flux, Point p, double t);

/// Vertex-wise shear, parallelised over vertices with OpenMP.
ShearedCurve shear_polyline(const Flux& flux, const SampledCurve& gamma0, double t);

/// Single-threaded reference for shear_polyline; results are bitwise equal.
ShearedCurve shear_polyline_serial(const Flux& flux, const SampledCurve& gamma0, double t);

/// Number of strict local extrema of the x-coordinate along the vertex
/// order.  Runs of equal x (within 1e-14) count as a single sample.
std::size_t count_x_extrema(std::span<const Point> curve);

inline std::size_t count_x_extrema(const ShearedCurve& curve) {
  return count_x_extrema(curve.vertices.vertices());
}

}  // namespace eqarea
