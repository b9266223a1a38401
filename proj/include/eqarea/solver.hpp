#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "eqarea/characteristics.hpp"
#include "eqarea/flux.hpp"
#include "eqarea/geometry.hpp"
#include "eqarea/profile.hpp"

namespace eqarea {

/// Fold landmarks of a multivalued curve, scanning in parameter order.
///
/// tau1 is the first local maximum of x, tau2 the first local minimum after
/// it; beta = x(tau1), alpha = x(tau2), and gamma = min(beta, x at the next
/// local maximum after tau2), or beta when there is none.
struct SignificantPoints {
  std::size_t tau1 = 0;
  std::size_t tau2 = 0;
  double beta = 0.0;
  double alpha = 0.0;
  double gamma = 0.0;
  std::optional<std::size_t> next_max;
};

/// nullopt when x is non-decreasing along the whole curve (the curve is
/// already a graph).  Throws MalformedFoldError when a local maximum has no
/// following local minimum.
std::optional<SignificantPoints> find_significant_points(std::span<const Point> curve);

/// p(x) = p2(x) - p1(x): lobe area through tau2 minus lobe area through tau1,
/// both cut off by the vertical line at x.
double area_balance(std::span<const Point> curve, const SignificantPoints& sig, double x);

enum class CutCase {
  kBalanced,  ///< p(gamma) >= 0: delta is the zero of p on (alpha, gamma]
  kOverhang,  ///< p(gamma) < 0: p1(delta) = p2(gamma) with delta in (gamma, beta)
};

struct Shock {
  double x = 0.0;
  double u_minus = 0.0;
  double u_plus = 0.0;
  double rh_speed = 0.0;
  double balanced_area = 0.0;
  int secant_iters = 0;
  /// Arc length of the excised S-curve on the unresolved polyline.
  double s_curve_length = 0.0;
};

struct CutResult {
  Polyline curve;
  Shock shock;
  CutCase kind = CutCase::kBalanced;
};

inline constexpr double kDefaultRootTolerance = 1e-14;

/// One step of the equal-area construction: balances the two lobes of the
/// first fold and replaces them by a vertical cut.
CutResult equal_area_cut(const Flux& flux, std::span<const Point> curve,
                         const SignificantPoints& sig, double root_tol = kDefaultRootTolerance);

struct SolveParams {
  std::size_t n_points = kDefaultPoints;
  std::size_t jump_subpoints = kDefaultJumpSubpoints;
  double root_tol = kDefaultRootTolerance;
  /// Conservation tolerance is area_tol * (1 + |initial area|).
  double area_tol = 1e-9;
};

struct SolutionCurve {
  double t = 0.0;
  /// Single-valued graph; shocks appear as vertical vertex pairs.
  Polyline curve;
  std::vector<Shock> shocks;
  double initial_area = 0.0;
  /// |area under curve - exact initial area|.
  double area_drift = 0.0;
  /// |area under curve - area under the sampled initial polyline|; isolates
  /// the cutting from sampling error.
  double polygon_area_drift = 0.0;
  double epsilon_estimate = 0.0;
  std::size_t cuts_performed = 0;
  std::size_t x_extrema = 0;  ///< of the sheared curve before cutting
  std::vector<int> secant_iterations;  ///< one entry per cut, in order
  Convexity convexity = Convexity::kStrictlyConvex;
  SolveParams params;

  bool area_ok() const { return area_drift <= params.area_tol * (1.0 + std::abs(initial_area)); }
};

/// Entropy solution at time t, computed directly from the initial data:
/// shear the sampled initial curve, then cut folds until single-valued.
SolutionCurve solve_at_time(const Flux& flux, const PiecewiseProfile& profile, double t,
                            const SolveParams& params = {});

/// Same as solve_at_time, starting from an already sheared curve.
SolutionCurve resolve_folds(const Flux& flux, const ShearedCurve& sheared,
                            const SolveParams& params = {});

/// Linear interpolation on the solution graph; the right limit at a shock,
/// zero outside the curve's x-range.
double evaluate(const SolutionCurve& solution, double x);

/// Chord-deviation bound for a polyline approximating a smooth curve:
/// max over edges of L^2 kappa / 8, with kappa estimated from the turning
/// angle at the edge's endpoints.  Vertices where arcs meet are skipped.
double epsilon_estimate(const ShearedCurve& curve);

/// Shock displacement implied by an eps-band around the polyline,
/// eps * l / s.
double shock_displacement_estimate(double epsilon, double s_curve_length, double shock_height);

}  // namespace eqarea
