#include "eqarea/shock_path.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <limits>
#include <optional>

#include <fmt/format.h>
#include <omp.h>

#include "eqarea/errors.hpp"

namespace eqarea {

namespace {

constexpr double kLinkRadiusFactor = 2.0;

[[noreturn]] void rethrow_with_time(std::exception_ptr error, double t) {
  try {
    std::rethrow_exception(error);
  } catch (const ConfigError& e) {
    throw ConfigError(fmt::format("t = {}: {}", t, e.what()));
  } catch (const Error& e) {
    throw NumericalError(fmt::format("t = {}: {}", t, e.what()));
  }
}

}  // namespace

std::vector<SliceShocks> solve_slices(const Flux& flux, const PiecewiseProfile& profile,
                                      const std::vector<double>& times,
                                      const SolveParams& params, std::size_t jobs) {
  std::vector<SliceShocks> out(times.size());
  std::vector<std::exception_ptr> errors(times.size());
  const auto n = static_cast<std::ptrdiff_t>(times.size());
  const int threads = jobs == 0 ? omp_get_max_threads() : static_cast<int>(jobs);
#pragma omp parallel for num_threads(threads) schedule(dynamic, 1)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    const auto k = static_cast<std::size_t>(i);
    try {
      const SolutionCurve sol = solve_at_time(flux, profile, times[k], params);
      out[k].t = times[k];
      for (const Shock& s : sol.shocks) {
        out[k].x.push_back(s.x);
        out[k].rh_speed.push_back(s.rh_speed);
      }
    } catch (...) {
      errors[k] = std::current_exception();
    }
  }
  for (std::size_t k = 0; k < times.size(); ++k) {
    if (errors[k]) rethrow_with_time(errors[k], times[k]);
  }
  return out;
}

ShockPathSet link_slices(const std::vector<SliceShocks>& slices, double radius) {
  ShockPathSet set;
  // Path id of each shock in the previous slice.
  std::vector<std::size_t> previous_ids;
  const SliceShocks* previous = nullptr;

  auto start_path = [&](double x, double t, double speed) {
    set.paths.push_back({{x, t}});
    set.rh_speeds.push_back({speed});
    return set.paths.size() - 1;
  };

  for (const SliceShocks& slice : slices) {
    set.times.push_back(slice.t);
    set.shock_counts.push_back(slice.x.size());
    const std::size_t n_prev = previous ? previous->x.size() : 0;
    const double dt = previous ? slice.t - previous->t : 0.0;
    // Previous shocks advanced by their RH speed over the slice gap.
    std::vector<double> predicted(n_prev);
    for (std::size_t j = 0; j < n_prev; ++j) {
      predicted[j] = previous->x[j] + previous->rh_speed[j] * dt;
    }

    // One-to-one matches first, closest pairs first.
    struct Candidate {
      double distance;
      std::size_t prev;
      std::size_t cur;
    };
    std::vector<Candidate> candidates;
    for (std::size_t j = 0; j < n_prev; ++j) {
      for (std::size_t i = 0; i < slice.x.size(); ++i) {
        const double d = std::abs(slice.x[i] - predicted[j]);
        if (d <= radius) candidates.push_back({d, j, i});
      }
    }
    std::stable_sort(candidates.begin(), candidates.end(),
                     [](const Candidate& a, const Candidate& b) { return a.distance < b.distance; });
    constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();
    std::vector<std::size_t> match_of_prev(n_prev, kNone);
    std::vector<std::size_t> match_of_cur(slice.x.size(), kNone);
    for (const Candidate& c : candidates) {
      if (match_of_prev[c.prev] != kNone || match_of_cur[c.cur] != kNone) continue;
      match_of_prev[c.prev] = c.cur;
      match_of_cur[c.cur] = c.prev;
    }

    std::vector<std::size_t> ids(slice.x.size(), kNone);
    for (std::size_t i = 0; i < slice.x.size(); ++i) {
      const std::size_t j = match_of_cur[i];
      if (j == kNone) {
        ids[i] = start_path(slice.x[i], slice.t, slice.rh_speed[i]);
      } else {
        ids[i] = previous_ids[j];
        set.paths[ids[i]].push_back({slice.x[i], slice.t});
        set.rh_speeds[ids[i]].push_back(slice.rh_speed[i]);
      }
    }

    // Predecessors left without a partner end on the nearest surviving
    // shock: a merge.
    std::vector<std::vector<std::size_t>> absorbed(slice.x.size());
    for (std::size_t j = 0; j < n_prev; ++j) {
      if (match_of_prev[j] != kNone) continue;
      std::optional<std::size_t> best;
      double best_distance = std::numeric_limits<double>::infinity();
      for (std::size_t i = 0; i < slice.x.size(); ++i) {
        const double d = std::abs(slice.x[i] - predicted[j]);
        if (d < best_distance) {
          best_distance = d;
          best = i;
        }
      }
      if (!best || best_distance > radius) continue;  // the shock vanished
      const std::size_t id = previous_ids[j];
      set.paths[id].push_back({slice.x[*best], slice.t});
      set.rh_speeds[id].push_back(slice.rh_speed[*best]);
      absorbed[*best].push_back(id);
    }
    for (std::size_t i = 0; i < slice.x.size(); ++i) {
      if (absorbed[i].empty()) continue;
      MergeEvent m{previous->t, slice.t, {ids[i]}};
      m.paths.insert(m.paths.end(), absorbed[i].begin(), absorbed[i].end());
      set.merge_events.push_back(std::move(m));
    }

    previous_ids = std::move(ids);
    previous = &slice;
  }
  return set;
}

ShockPathSet sweep(const Flux& flux, const PiecewiseProfile& profile, double t_start,
                   double t_end, std::size_t n_times, const SolveParams& params,
                   std::size_t jobs) {
  if (!(t_start >= 0.0) || !(t_end > t_start) || !std::isfinite(t_end)) {
    throw ConfigError(fmt::format("sweep needs 0 <= t_start < t_end, got [{}, {}]", t_start,
                                  t_end));
  }
  if (n_times < 2) throw ConfigError(fmt::format("sweep needs n_times >= 2, got {}", n_times));
  std::vector<double> times(n_times);
  const double step = (t_end - t_start) / static_cast<double>(n_times - 1);
  for (std::size_t k = 0; k < n_times; ++k) times[k] = t_start + step * static_cast<double>(k);
  times.back() = t_end;

  const auto [lo, hi] = profile.value_range();
  const double radius = kLinkRadiusFactor * step * flux.max_speed(lo, hi);
  return link_slices(solve_slices(flux, profile, times, params, jobs), radius);
}

}  // namespace eqarea
