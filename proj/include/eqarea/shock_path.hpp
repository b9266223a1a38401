#pragma once

#include <cstddef>
#include <vector>

#include "eqarea/flux.hpp"
#include "eqarea/geometry.hpp"
#include "eqarea/profile.hpp"
#include "eqarea/solver.hpp"

namespace eqarea {

/// Two or more paths joining into one between two consecutive slices.
struct MergeEvent {
  double t_before = 0.0;
  double t_after = 0.0;
  std::vector<std::size_t> paths;  ///< paths[0] continues, the rest end here
};

/// Shock curves in the (x, t)-plane; points hold (x, t).
struct ShockPathSet {
  std::vector<double> times;
  std::vector<std::size_t> shock_counts;  ///< per slice
  std::vector<std::vector<Point>> paths;
  /// RH speed recorded with each path point, parallel to `paths`.
  std::vector<std::vector<double>> rh_speeds;
  std::vector<MergeEvent> merge_events;
};

/// Shock positions of one slice, paired with the RH speeds.
struct SliceShocks {
  double t = 0.0;
  std::vector<double> x;
  std::vector<double> rh_speed;
};

/// Solves each slice independently; slices run in parallel on `jobs`
/// OpenMP threads (jobs == 0 uses the runtime default).
std::vector<SliceShocks> solve_slices(const Flux& flux, const PiecewiseProfile& profile,
                                      const std::vector<double>& times,
                                      const SolveParams& params, std::size_t jobs);

/// Links slice shocks into paths.  Shocks of the previous slice are advanced
/// by their RH speed, then matched one-to-one to the nearest current shock
/// within `radius`, closest pairs first.  A previous shock left over joins
/// its nearest current shock, which records a merge.
ShockPathSet link_slices(const std::vector<SliceShocks>& slices, double radius);

/// Solves at n_times uniform times over [t_start, t_end] and links shocks
/// with radius 2 dt_sweep max|f'|.  A failing slice aborts with its error.
ShockPathSet sweep(const Flux& flux, const PiecewiseProfile& profile, double t_start,
                   double t_end, std::size_t n_times, const SolveParams& params = {},
                   std::size_t jobs = 1);

}  // namespace eqarea
