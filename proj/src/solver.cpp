#include "eqarea/solver.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include <fmt/format.h>

#include "eqarea/errors.hpp"
#include "eqarea/root_finding.hpp"

namespace eqarea {

namespace {

// Secant start offset from the bracket end where the balance is known.
constexpr double kSecantStartOffset = 1e-3;
// Extra cuts allowed beyond half the extremum count before giving up.
constexpr std::size_t kCutSafetyMargin = 8;
// Vertical pairs must agree in x to this tolerance to be reported as shocks.
constexpr double kVerticalTolerance = 1e-12;

// Polyline under construction plus per-vertex bookkeeping: position along
// the unresolved polyline (fractional vertex index) and the id of the cut
// that created the vertex, if any.
struct WorkingCurve {
  std::vector<Point> pts;
  std::vector<double> param;
  std::vector<int> cut;

  void push(Point p, double prm, int id) {
    pts.push_back(p);
    param.push_back(prm);
    cut.push_back(id);
  }
};

struct CutRecord {
  double delta = 0.0;
  double u_minus = 0.0;
  double u_plus = 0.0;
  double area = 0.0;
  int iterations = 0;
  CutCase kind = CutCase::kBalanced;
  bool closure = false;  // second cut of the overhang case, never a shock
};

// A vertex range [first, last] to drop and the crossings that replace it.
struct Excision {
  std::size_t first = 0;
  std::size_t last = 0;
  CutCrossing enter;
  CutCrossing exit;
  int id = -1;
};

CutCrossing vertex_crossing(std::span<const Point> pts, std::size_t v) {
  return {pts[v], v, true};
}

double crossing_param(const WorkingCurve& wc, const CutCrossing& c, std::size_t inner) {
  const std::size_t o = c.outer_vertex;
  const double dx = wc.pts[inner].x - wc.pts[o].x;
  if (dx == 0.0) return wc.param[o];
  const double s = std::clamp((c.point.x - wc.pts[o].x) / dx, 0.0, 1.0);
  return wc.param[o] + s * (wc.param[inner] - wc.param[o]);
}

WorkingCurve splice(WorkingCurve& wc, const std::vector<Excision>& cuts) {
  // Crossings at existing vertices keep the vertex and take the new cut id.
  for (const Excision& e : cuts) {
    if (e.enter.at_vertex) wc.cut[e.enter.outer_vertex] = e.id;
    if (e.exit.at_vertex) wc.cut[e.exit.outer_vertex] = e.id;
  }
  WorkingCurve out;
  out.pts.reserve(wc.pts.size());
  out.param.reserve(wc.pts.size());
  out.cut.reserve(wc.pts.size());
  std::size_t cursor = 0;
  auto copy_until = [&](std::size_t end) {
    for (; cursor < end; ++cursor) out.push(wc.pts[cursor], wc.param[cursor], wc.cut[cursor]);
  };
  for (const Excision& e : cuts) {
    copy_until(e.first);
    if (!e.enter.at_vertex) {
      out.push(e.enter.point, crossing_param(wc, e.enter, e.first), e.id);
    }
    if (!e.exit.at_vertex) {
      out.push(e.exit.point, crossing_param(wc, e.exit, e.last), e.id);
    }
    cursor = e.last + 1;
  }
  copy_until(wc.pts.size());

  // Drop coincident neighbours, keeping whichever carries a cut id.
  WorkingCurve dedup;
  dedup.pts.reserve(out.pts.size());
  dedup.param.reserve(out.pts.size());
  dedup.cut.reserve(out.pts.size());
  for (std::size_t i = 0; i < out.pts.size(); ++i) {
    if (!dedup.pts.empty()) {
      const Point& q = dedup.pts.back();
      if (std::hypot(out.pts[i].x - q.x, out.pts[i].y - q.y) < kDuplicateVertexDistance) {
        if (out.cut[i] >= 0) dedup.cut.back() = out.cut[i];
        continue;
      }
    }
    dedup.push(out.pts[i], out.param[i], out.cut[i]);
  }
  return dedup;
}

// One step of the construction on a working curve.  Appends the cut records
// it creates and replaces `wc` by the cut curve.
void cut_once(WorkingCurve& wc, const SignificantPoints& sig, double root_tol,
              std::vector<CutRecord>& records) {
  const std::span<const Point> pts = wc.pts;
  auto p1 = [&](double x) { return lobe_area(pts, x, sig.tau1); };
  auto p2 = [&](double x) { return lobe_area(pts, x, sig.tau2); };

  const double p1_gamma = p1(sig.gamma);
  const double p2_gamma = p2(sig.gamma);
  const double balance_gamma = p2_gamma - p1_gamma;

  CutRecord rec;
  std::vector<Excision> excisions;
  const int id = static_cast<int>(records.size());

  if (balance_gamma >= 0.0) {
    rec.kind = CutCase::kBalanced;
    auto balance = [&](double x) { return p2(x) - p1(x); };
    const double at_alpha = -p1(sig.alpha);
    const RootResult root = secant_bracketed(
        balance, sig.alpha, at_alpha, sig.gamma, balance_gamma,
        sig.alpha + kSecantStartOffset * (sig.gamma - sig.alpha), sig.gamma, root_tol);
    rec.delta = root.x;
    rec.iterations = root.iterations;

    const Lobe upper = locate_lobe(pts, rec.delta, sig.tau1);
    const Lobe lower = locate_lobe(pts, rec.delta, sig.tau2);
    Excision e;
    e.id = id;
    e.first = upper.empty ? sig.tau1 + 1 : upper.first;
    e.enter = upper.empty ? vertex_crossing(pts, sig.tau1) : upper.enter;
    e.last = lower.empty ? sig.tau2 - 1 : lower.last;
    e.exit = lower.empty ? vertex_crossing(pts, sig.tau2) : lower.exit;
    if (e.first > e.last) {
      throw MalformedFoldError(fmt::format("degenerate fold at x = {}", rec.delta));
    }
    rec.area = upper.area;
    rec.u_minus = e.enter.point.y;
    rec.u_plus = e.exit.point.y;
    excisions.push_back(e);
    records.push_back(rec);
  } else {
    rec.kind = CutCase::kOverhang;
    auto excess = [&](double x) { return p1(x) - p2_gamma; };
    const RootResult root = secant_bracketed(
        excess, sig.gamma, p1_gamma - p2_gamma, sig.beta, -p2_gamma,
        sig.beta - kSecantStartOffset * (sig.beta - sig.gamma), sig.gamma, root_tol);
    rec.delta = root.x;
    rec.iterations = root.iterations;

    const Lobe upper = locate_lobe(pts, rec.delta, sig.tau1);
    const Lobe lower = locate_lobe(pts, sig.gamma, sig.tau2);
    if (lower.empty || (!upper.empty && upper.last >= lower.first)) {
      throw MalformedFoldError(
          fmt::format("overlapping lobes at x = {} and x = {}", rec.delta, sig.gamma));
    }
    if (!upper.empty) {
      excisions.push_back({upper.first, upper.last, upper.enter, upper.exit, id});
      rec.u_minus = upper.enter.point.y;
      rec.u_plus = upper.exit.point.y;
    } else {
      rec.u_minus = rec.u_plus = pts[sig.tau1].y;
    }
    rec.area = upper.area;
    records.push_back(rec);

    CutRecord closure = rec;
    closure.delta = sig.gamma;
    closure.area = lower.area;
    closure.u_minus = lower.enter.point.y;
    closure.u_plus = lower.exit.point.y;
    closure.closure = true;
    excisions.push_back({lower.first, lower.last, lower.enter, lower.exit, id + 1});
    records.push_back(closure);
  }
  wc = splice(wc, excisions);
}

WorkingCurve working_from(std::span<const Point> pts) {
  WorkingCurve wc;
  wc.pts.assign(pts.begin(), pts.end());
  wc.param.resize(pts.size());
  std::iota(wc.param.begin(), wc.param.end(), 0.0);
  wc.cut.assign(pts.size(), -1);
  return wc;
}

// Arc length along a polyline at fractional vertex positions.
class ArcLength {
 public:
  explicit ArcLength(std::span<const Point> pts) : pts_(pts), cumulative_(pts.size(), 0.0) {
    for (std::size_t i = 1; i < pts.size(); ++i) {
      cumulative_[i] = cumulative_[i - 1] + edge(i - 1);
    }
  }

  double at(double param) const {
    if (cumulative_.empty()) return 0.0;
    const double clamped = std::clamp(param, 0.0, static_cast<double>(pts_.size() - 1));
    const auto i = static_cast<std::size_t>(std::floor(clamped));
    if (i + 1 >= pts_.size()) return cumulative_.back();
    return cumulative_[i] + (clamped - static_cast<double>(i)) * edge(i);
  }

 private:
  double edge(std::size_t i) const {
    return std::hypot(pts_[i + 1].x - pts_[i].x, pts_[i + 1].y - pts_[i].y);
  }

  std::span<const Point> pts_;
  std::vector<double> cumulative_;
};

}  // namespace

std::optional<SignificantPoints> find_significant_points(std::span<const Point> curve) {
  const std::size_t n = curve.size();
  auto direction = [&](std::size_t i) {
    const double dx = curve[i + 1].x - curve[i].x;
    if (std::abs(dx) <= kCutTieTolerance) return 0;
    return dx > 0.0 ? 1 : -1;
  };

  std::optional<std::size_t> tau1;
  bool rising = false;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    const int d = direction(i);
    if (d > 0) rising = true;
    if (d < 0) {
      if (!rising) {
        throw MalformedFoldError("x decreases at the start of the curve");
      }
      tau1 = i;
      break;
    }
  }
  if (!tau1) return std::nullopt;

  SignificantPoints sig;
  sig.tau1 = *tau1;
  std::optional<std::size_t> tau2;
  for (std::size_t i = sig.tau1 + 1; i + 1 < n; ++i) {
    if (direction(i) > 0) {
      tau2 = i;
      break;
    }
  }
  if (!tau2) {
    throw MalformedFoldError(fmt::format(
        "local maximum of x at vertex {} has no following local minimum", sig.tau1));
  }
  sig.tau2 = *tau2;
  for (std::size_t i = sig.tau2 + 1; i + 1 < n; ++i) {
    if (direction(i) < 0) {
      sig.next_max = i;
      break;
    }
  }
  sig.beta = curve[sig.tau1].x;
  sig.alpha = curve[sig.tau2].x;
  sig.gamma = sig.next_max ? std::min(sig.beta, curve[*sig.next_max].x) : sig.beta;
  return sig;
}

double area_balance(std::span<const Point> curve, const SignificantPoints& sig, double x) {
  return lobe_area(curve, x, sig.tau2) - lobe_area(curve, x, sig.tau1);
}

CutResult equal_area_cut(const Flux& flux, std::span<const Point> curve,
                         const SignificantPoints& sig, double root_tol) {
  if (!(root_tol > 0.0)) {
    throw std::invalid_argument(fmt::format("root tolerance must be > 0, got {}", root_tol));
  }
  WorkingCurve wc = working_from(curve);
  std::vector<CutRecord> records;
  cut_once(wc, sig, root_tol, records);
  const CutRecord& rec = records.front();

  CutResult out;
  out.kind = rec.kind;
  out.shock.x = rec.delta;
  out.shock.u_minus = rec.u_minus;
  out.shock.u_plus = rec.u_plus;
  out.shock.rh_speed = rankine_hugoniot_speed(flux, rec.u_minus, rec.u_plus);
  out.shock.balanced_area = rec.area;
  out.shock.secant_iters = rec.iterations;
  const ArcLength arc(curve);
  for (std::size_t i = 0; i + 1 < wc.pts.size(); ++i) {
    if (wc.cut[i] == 0 && wc.cut[i + 1] == 0) {
      out.shock.s_curve_length = arc.at(wc.param[i + 1]) - arc.at(wc.param[i]);
      break;
    }
  }
  out.curve = Polyline(std::move(wc.pts));
  return out;
}

SolutionCurve resolve_folds(const Flux& flux, const ShearedCurve& sheared,
                            const SolveParams& params) {
  if (!(params.root_tol > 0.0) || !(params.area_tol > 0.0)) {
    throw ConfigError("root_tol and area_tol must be > 0");
  }
  const auto src = sheared.vertices.vertices();
  if (src.size() < 2) throw std::invalid_argument("sheared curve needs at least 2 vertices");

  // Pad both ends with a horizontal run so the far ends are strictly
  // increasing in x past every fold.
  const auto [min_it, max_it] = std::minmax_element(
      src.begin(), src.end(), [](const Point& a, const Point& b) { return a.x < b.x; });
  const double pad = std::max(1.0, 0.05 * (max_it->x - min_it->x));
  std::vector<Point> padded;
  padded.reserve(src.size() + 2);
  padded.push_back({min_it->x - pad, src.front().y});
  padded.insert(padded.end(), src.begin(), src.end());
  padded.push_back({max_it->x + pad, src.back().y});

  SolutionCurve sol;
  sol.t = sheared.t;
  sol.params = params;
  sol.convexity = flux.convexity();
  sol.x_extrema = count_x_extrema(sheared);
  sol.epsilon_estimate = epsilon_estimate(sheared);
  const double polygon_area0 = area_under_graph(padded);
  sol.initial_area = polygon_area0;

  WorkingCurve wc = working_from(padded);
  std::vector<CutRecord> records;
  const std::size_t max_cuts = sol.x_extrema / 2 + kCutSafetyMargin;
  while (auto sig = find_significant_points(wc.pts)) {
    if (sol.cuts_performed >= max_cuts) {
      throw NonTerminationError(fmt::format(
          "t = {}: {} cuts exceed the bound from {} extrema of x", sheared.t,
          sol.cuts_performed, sol.x_extrema));
    }
    const std::size_t before = records.size();
    cut_once(wc, *sig, params.root_tol, records);
    sol.secant_iterations.push_back(records[before].iterations);
    ++sol.cuts_performed;
  }

  // What remains is a graph up to tie-level wiggles; flatten them.
  for (std::size_t i = 1; i < wc.pts.size(); ++i) {
    wc.pts[i].x = std::max(wc.pts[i].x, wc.pts[i - 1].x);
  }

  const ArcLength arc(padded);
  for (std::size_t i = 0; i + 1 < wc.pts.size(); ++i) {
    const int id = wc.cut[i];
    if (id < 0 || wc.cut[i + 1] != id) continue;
    const CutRecord& rec = records[static_cast<std::size_t>(id)];
    if (rec.closure) continue;
    if (std::abs(wc.pts[i + 1].x - wc.pts[i].x) > kVerticalTolerance) continue;
    Shock s;
    s.x = wc.pts[i].x;
    s.u_minus = wc.pts[i].y;
    s.u_plus = wc.pts[i + 1].y;
    s.rh_speed = rankine_hugoniot_speed(flux, s.u_minus, s.u_plus);
    s.balanced_area = rec.area;
    s.secant_iters = rec.iterations;
    s.s_curve_length = std::abs(arc.at(wc.param[i + 1]) - arc.at(wc.param[i]));
    sol.shocks.push_back(s);
  }

  sol.curve = Polyline(std::move(wc.pts));
  const double final_area = area_under_graph(sol.curve.vertices());
  sol.polygon_area_drift = std::abs(final_area - polygon_area0);
  sol.area_drift = sol.polygon_area_drift;
  return sol;
}

SolutionCurve solve_at_time(const Flux& flux, const PiecewiseProfile& profile, double t,
                            const SolveParams& params) {
  if (!(t >= 0.0) || !std::isfinite(t)) {
    throw ConfigError(fmt::format("solve time must be finite and >= 0, got {}", t));
  }
  const SampledCurve gamma0 = sample_gamma0(profile, params.n_points, params.jump_subpoints);
  SolutionCurve sol = resolve_folds(flux, shear_polyline(flux, gamma0, t), params);
  sol.initial_area = initial_area(profile);
  sol.area_drift = std::abs(area_under_graph(sol.curve.vertices()) - sol.initial_area);
  return sol;
}

double evaluate(const SolutionCurve& solution, double x) {
  const auto pts = solution.curve.vertices();
  if (pts.empty() || x < pts.front().x || x > pts.back().x) return 0.0;
  const auto it = std::upper_bound(pts.begin(), pts.end(), x,
                                   [](double v, const Point& p) { return v < p.x; });
  if (it == pts.end()) return pts.back().y;
  const Point& hi = *it;
  const Point& lo = *(it - 1);
  if (lo.x == x) return lo.y;
  return lo.y + (x - lo.x) / (hi.x - lo.x) * (hi.y - lo.y);
}

double epsilon_estimate(const ShearedCurve& curve) {
  const auto pts = curve.vertices.vertices();
  const std::size_t n = pts.size();
  if (n < 3 || curve.piece.size() != n) return 0.0;

  auto length = [&](std::size_t i) {
    return std::hypot(pts[i + 1].x - pts[i].x, pts[i + 1].y - pts[i].y);
  };
  // Turning-angle curvature at interior vertices of a single arc; -1 where
  // undefined.
  std::vector<double> kappa(n, -1.0);
  for (std::size_t i = 1; i + 1 < n; ++i) {
    if (curve.piece[i - 1] != curve.piece[i] || curve.piece[i + 1] != curve.piece[i]) continue;
    const double ax = pts[i].x - pts[i - 1].x, ay = pts[i].y - pts[i - 1].y;
    const double bx = pts[i + 1].x - pts[i].x, by = pts[i + 1].y - pts[i].y;
    const double turn = std::atan2(std::abs(ax * by - ay * bx), ax * bx + ay * by);
    const double mean_length = 0.5 * (length(i - 1) + length(i));
    if (mean_length > 0.0) kappa[i] = turn / mean_length;
  }
  double eps = 0.0;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    const double k = std::max(kappa[i], kappa[i + 1]);
    if (k < 0.0) continue;
    const double len = length(i);
    eps = std::max(eps, 0.125 * len * len * k);
  }
  return eps;
}

double shock_displacement_estimate(double epsilon, double s_curve_length, double shock_height) {
  if (!(shock_height > 1e-12)) {
    throw NumericalError(fmt::format("degenerate shock height {}", shock_height));
  }
  return epsilon * s_curve_length / shock_height;
}

}  // namespace eqarea
