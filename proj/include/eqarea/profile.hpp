#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "eqarea/geometry.hpp"

namespace eqarea {

/// One smooth piece of the initial data, h(x) = value(x) on [a, b].
struct ProfileSegment {
  double a = 0.0;
  double b = 0.0;
  std::function<double(double)> value;
};

/// A point where the piecewise description changes: segment boundaries,
/// including both ends of the support.
struct Breakpoint {
  double x = 0.0;
  double left = 0.0;   ///< h(x-)
  double right = 0.0;  ///< h(x+)
  bool is_jump() const;
};

/// Initial condition h: piecewise C^1 with compact support, zero outside.
///
/// Segments must tile the support exactly and be ordered.  Inside the
/// support h is right-continuous at interior breakpoints.
class PiecewiseProfile {
 public:
  explicit PiecewiseProfile(std::vector<ProfileSegment> segments, std::string name = "custom");

  double operator()(double x) const;

  double support_min() const { return segments_.front().a; }
  double support_max() const { return segments_.back().b; }
  const std::vector<ProfileSegment>& segments() const { return segments_; }
  const std::string& name() const { return name_; }

  std::vector<Breakpoint> breakpoints() const;
  /// Breakpoints with a nonzero jump.
  std::vector<Breakpoint> jump_points() const;

  /// Smallest and largest value taken (0 included, since h vanishes
  /// outside the support); sampled at 257 points per segment plus ends.
  std::pair<double, double> value_range() const;

  /// \int_a^b h dx by adaptive Gauss-Kronrod per segment overlap.
  double integral(double a, double b) const;

 private:
  std::vector<ProfileSegment> segments_;
  std::string name_;
};

struct ProfileParams {
  double u_left = 1.0;   ///< riemann_step: value on [-1, 0]
  double u_right = 0.0;  ///< riemann_step: value on [0, 1]; omitted when 0
};

/// box, hat, gaussian_triple, riemann_step.
PiecewiseProfile builtin_profile(std::string_view name, const ProfileParams& params = {});

struct SegmentSpec {
  double a = 0.0;
  double b = 0.0;
  std::string expr;  ///< expression in x
};

PiecewiseProfile expression_profile(const std::vector<SegmentSpec>& specs);

/// The initial curve: graph of h with vertical runs at the jumps.
///
/// `xi` is the initial position of each vertex (the jump location for
/// run vertices).  `piece` labels the smooth arc a vertex samples: each
/// region between breakpoints, each jump run, and each continuous
/// breakpoint vertex get their own label.
struct SampledCurve {
  Polyline curve;
  std::vector<double> xi;
  std::vector<int> piece;
};

inline constexpr std::size_t kDefaultPoints = 1000;
inline constexpr std::size_t kDefaultJumpSubpoints = 64;

/// Samples h at `n_points` uniformly spaced parameters covering the support
/// plus a 5% margin on either side.  The grid parameter nearest each
/// breakpoint is moved onto it; jumps become runs of `jump_subpoints`
/// vertices at the jump's x with uniformly spaced y.
SampledCurve sample_gamma0(const PiecewiseProfile& profile, std::size_t n_points = kDefaultPoints,
                           std::size_t jump_subpoints = kDefaultJumpSubpoints);

/// \int h dx, relative tolerance 1e-12.
double initial_area(const PiecewiseProfile& profile);

}  // namespace eqarea
