#include "eqarea/profile.hpp"

#include <algorithm>
#include <cmath>

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <fmt/format.h>

#include "eqarea/errors.hpp"
#include "eqarea/expression.hpp"

namespace eqarea {

namespace {

constexpr double kMarginFraction = 0.05;
constexpr double kQuadratureTolerance = 1e-12;
constexpr unsigned kQuadratureDepth = 20;

double integrate_segment(const ProfileSegment& s, double a, double b) {
  if (!(a < b)) return 0.0;
  return boost::math::quadrature::gauss_kronrod<double, 61>::integrate(
      s.value, a, b, kQuadratureDepth, kQuadratureTolerance);
}

}  // namespace

bool Breakpoint::is_jump() const { return std::abs(right - left) >= kDuplicateVertexDistance; }

PiecewiseProfile::PiecewiseProfile(std::vector<ProfileSegment> segments, std::string name)
    : segments_(std::move(segments)), name_(std::move(name)) {
  if (segments_.empty()) throw ConfigError("profile has empty support");
  for (std::size_t i = 0; i < segments_.size(); ++i) {
    const auto& s = segments_[i];
    if (!std::isfinite(s.a) || !std::isfinite(s.b) || !(s.a < s.b)) {
      throw ConfigError(fmt::format("profile segment {} has invalid interval [{}, {}]", i, s.a, s.b));
    }
    if (!s.value) throw ConfigError(fmt::format("profile segment {} has no value function", i));
    if (i > 0 && segments_[i - 1].b != s.a) {
      throw ConfigError(fmt::format("profile segments {} and {} do not tile: {} != {}", i - 1, i,
                                    segments_[i - 1].b, s.a));
    }
    for (double x : {s.a, 0.5 * (s.a + s.b), s.b}) {
      if (!std::isfinite(s.value(x))) {
        throw ConfigError(fmt::format("profile segment {} is not finite at x = {}", i, x));
      }
    }
  }
}

double PiecewiseProfile::operator()(double x) const {
  if (x < support_min() || x > support_max()) return 0.0;
  auto it = std::upper_bound(segments_.begin(), segments_.end(), x,
                             [](double v, const ProfileSegment& s) { return v < s.b; });
  if (it == segments_.end()) --it;  // x == support_max
  return it->value(x);
}

std::vector<Breakpoint> PiecewiseProfile::breakpoints() const {
  std::vector<Breakpoint> out;
  out.reserve(segments_.size() + 1);
  out.push_back({segments_.front().a, 0.0, segments_.front().value(segments_.front().a)});
  for (std::size_t i = 1; i < segments_.size(); ++i) {
    out.push_back({segments_[i].a, segments_[i - 1].value(segments_[i].a),
                   segments_[i].value(segments_[i].a)});
  }
  out.push_back({segments_.back().b, segments_.back().value(segments_.back().b), 0.0});
  return out;
}

std::vector<Breakpoint> PiecewiseProfile::jump_points() const {
  auto all = breakpoints();
  std::erase_if(all, [](const Breakpoint& b) { return !b.is_jump(); });
  return all;
}

std::pair<double, double> PiecewiseProfile::value_range() const {
  double lo = 0.0;
  double hi = 0.0;
  constexpr int kSamples = 257;
  for (const auto& s : segments_) {
    for (int k = 0; k < kSamples; ++k) {
      const double v = s.value(s.a + (s.b - s.a) * k / (kSamples - 1));
      lo = std::min(lo, v);
      hi = std::max(hi, v);
    }
  }
  return {lo, hi};
}

double PiecewiseProfile::integral(double a, double b) const {
  double sum = 0.0;
  for (const auto& s : segments_) sum += integrate_segment(s, std::max(a, s.a), std::min(b, s.b));
  return sum;
}

PiecewiseProfile builtin_profile(std::string_view name, const ProfileParams& params) {
  if (name == "box") {
    return PiecewiseProfile({{-1.0, 0.0, [](double) { return 1.0; }}}, "box");
  }
  if (name == "hat") {
    return PiecewiseProfile({{-1.0, 0.0, [](double x) { return 1.0 + x; }},
                             {0.0, 1.0, [](double x) { return 1.0 - x; }}},
                            "hat");
  }
  if (name == "gaussian_triple") {
    return PiecewiseProfile({{-10.0, 10.0,
                              [](double x) {
                                return 0.9 * std::exp(-x * x) +
                                       0.7 * std::exp(-(x - 2.0) * (x - 2.0)) +
                                       0.85 * std::exp(-(x + 2.0) * (x + 2.0));
                              }}},
                            "gaussian_triple");
  }
  if (name == "riemann_step") {
    const double ul = params.u_left;
    const double ur = params.u_right;
    std::vector<ProfileSegment> segs{{-1.0, 0.0, [ul](double) { return ul; }}};
    if (ur != 0.0) segs.push_back({0.0, 1.0, [ur](double) { return ur; }});
    return PiecewiseProfile(std::move(segs), "riemann_step");
  }
  throw ConfigError(fmt::format(
      "unknown profile '{}' (known: box, hat, gaussian_triple, riemann_step)", name));
}

PiecewiseProfile expression_profile(const std::vector<SegmentSpec>& specs) {
  std::vector<ProfileSegment> segs;
  segs.reserve(specs.size());
  for (const auto& s : specs) {
    auto e = Expression::parse(s.expr, "x");
    segs.push_back({s.a, s.b, std::move(e)});
  }
  return PiecewiseProfile(std::move(segs), "custom");
}

SampledCurve sample_gamma0(const PiecewiseProfile& profile, std::size_t n_points,
                           std::size_t jump_subpoints) {
  if (n_points < 16) throw ConfigError(fmt::format("n_points must be >= 16, got {}", n_points));
  if (jump_subpoints < 2) {
    throw ConfigError(fmt::format("jump_subpoints must be >= 2, got {}", jump_subpoints));
  }
  const double width = profile.support_max() - profile.support_min();
  const double margin = kMarginFraction * width;
  const double lo = profile.support_min() - margin;
  const double hi = profile.support_max() + margin;
  const double step = (hi - lo) / static_cast<double>(n_points - 1);

  // Grid slot -> breakpoint occupying it; breakpoints that lose the race for
  // a slot are sampled in addition to the grid.
  const auto breaks = profile.breakpoints();
  std::vector<int> slot_owner(n_points, -1);
  std::vector<int> extra;
  for (std::size_t b = 0; b < breaks.size(); ++b) {
    const auto k = static_cast<std::size_t>(std::lround((breaks[b].x - lo) / step));
    if (slot_owner[k] < 0) {
      slot_owner[k] = static_cast<int>(b);
    } else {
      extra.push_back(static_cast<int>(b));
    }
  }

  struct Entry {
    double xi;
    int breakpoint;  // -1 for a plain grid sample
  };
  std::vector<Entry> entries;
  entries.reserve(n_points + extra.size());
  for (std::size_t k = 0; k < n_points; ++k) {
    if (slot_owner[k] >= 0) {
      entries.push_back({breaks[static_cast<std::size_t>(slot_owner[k])].x, slot_owner[k]});
    } else {
      entries.push_back({lo + step * static_cast<double>(k), -1});
    }
  }
  for (int b : extra) entries.push_back({breaks[static_cast<std::size_t>(b)].x, b});
  std::stable_sort(entries.begin(), entries.end(),
                   [](const Entry& l, const Entry& r) { return l.xi < r.xi; });

  std::vector<Point> pts;
  std::vector<double> xi;
  std::vector<int> piece;
  auto emit = [&](Point p, double param, int label) {
    if (!pts.empty() && std::hypot(p.x - pts.back().x, p.y - pts.back().y) <
                            kDuplicateVertexDistance) {
      return;
    }
    pts.push_back(p);
    xi.push_back(param);
    piece.push_back(label);
  };

  int label = 0;  // smooth region left of the first breakpoint
  for (const Entry& e : entries) {
    if (e.breakpoint < 0) {
      emit({e.xi, profile(e.xi)}, e.xi, label);
      continue;
    }
    const Breakpoint& b = breaks[static_cast<std::size_t>(e.breakpoint)];
    ++label;
    if (b.is_jump()) {
      const auto k = static_cast<double>(jump_subpoints - 1);
      for (std::size_t j = 0; j < jump_subpoints; ++j) {
        const double y = j + 1 == jump_subpoints
                             ? b.right
                             : b.left + (b.right - b.left) * static_cast<double>(j) / k;
        emit({b.x, y}, b.x, label);
      }
    } else {
      emit({b.x, b.left}, b.x, label);
    }
    ++label;  // next smooth region
  }
  return {Polyline(std::move(pts)), std::move(xi), std::move(piece)};
}

double initial_area(const PiecewiseProfile& profile) {
  return profile.integral(profile.support_min(), profile.support_max());
}

}  // namespace eqarea
