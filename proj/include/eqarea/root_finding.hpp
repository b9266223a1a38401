#pragma once

#include <algorithm>
#include <cmath>
#include <limits>

namespace eqarea {

struct RootResult {
  double x = 0.0;
  int iterations = 0;
  bool bisection_fallback = false;  ///< secant budget exhausted
};

/// Secant iteration safeguarded by a sign bracket.
///
/// [lo, hi] must bracket a sign change, f_lo and f_hi being the known values
/// there.  The secant starts from x0, x1; any iterate leaving the current
/// bracket is replaced by its midpoint.  Converges when a step is below
/// tol * max(1, |x|).  After `max_secant` steps without convergence the
/// remaining bracket is bisected down to the same tolerance.
template <class F>
RootResult secant_bracketed(F&& f, double lo, double f_lo, double hi, double f_hi, double x0,
                            double x1, double tol, int max_secant = 60) {
  RootResult r;
  if (f_lo == 0.0) return {lo, 0, false};
  if (f_hi == 0.0) return {hi, 0, false};

  double a = lo, fa = f_lo, b = hi;
  auto shrink = [&](double x, double fx) {
    if (std::signbit(fx) == std::signbit(fa)) {
      a = x;
      fa = fx;
    } else {
      b = x;
    }
  };
  auto scale = [tol](double x) { return tol * std::max(1.0, std::abs(x)); };

  double xp = x0;
  double fp = x0 == hi ? f_hi : f(x0);
  shrink(xp, fp);
  double xc = x1;
  double fc = x1 == hi ? f_hi : (x1 == lo ? f_lo : f(x1));
  shrink(xc, fc);

  while (r.iterations < max_secant) {
    if (fc == 0.0) {
      r.x = xc;
      return r;
    }
    ++r.iterations;
    double xn = std::numeric_limits<double>::quiet_NaN();
    if (fc != fp) xn = xc - fc * (xc - xp) / (fc - fp);
    const double left = std::min(a, b), right = std::max(a, b);
    // A sub-tolerance correction means xc already is the root, even when
    // roundoff in f pushes the correction just outside the bracket.
    if (std::abs(xn - xc) <= scale(xc)) {
      r.x = std::clamp(xn, left, right);
      return r;
    }
    if (!(xn > left && xn < right)) xn = 0.5 * (a + b);
    const double fn = f(xn);
    shrink(xn, fn);
    if (std::abs(xn - xc) <= scale(xn) || std::abs(b - a) <= scale(xn) || fn == 0.0) {
      r.x = xn;
      return r;
    }
    xp = xc;
    fp = fc;
    xc = xn;
    fc = fn;
  }

  r.bisection_fallback = true;
  while (std::abs(b - a) > scale(a)) {
    const double m = 0.5 * (a + b);
    const double fm = f(m);
    ++r.iterations;
    if (fm == 0.0) {
      r.x = m;
      return r;
    }
    shrink(m, fm);
  }
  r.x = 0.5 * (a + b);
  return r;
}

}  // namespace eqarea
