#include "eqarea/geometry.hpp"

#include <cmath>
#include <stdexcept>

#include <fmt/format.h>

#include "eqarea/errors.hpp"

namespace eqarea {

namespace {

// a*b - c*d with one rounding error (Kahan's fma trick).
double diff_of_products(double a, double b, double c, double d) {
  const double cd = c * d;
  const double err = std::fma(-c, d, cd);
  const double dop = std::fma(a, b, -cd);
  return dop + err;
}

CutCrossing crossing(std::span<const Point> curve, std::size_t outer, std::size_t inner,
                     double cut_x) {
  const Point& o = curve[outer];
  const Point& in = curve[inner];
  CutCrossing c;
  c.outer_vertex = outer;
  if (std::abs(o.x - cut_x) <= kCutTieTolerance) {
    c.at_vertex = true;
    c.point = o;
    return c;
  }
  const double s = (cut_x - o.x) / (in.x - o.x);
  c.point = {cut_x, o.y + s * (in.y - o.y)};
  return c;
}

}  // namespace

Polyline::Polyline(std::vector<Point> vertices) {
  vertices_.reserve(vertices.size());
  for (const Point& p : vertices) {
    if (!std::isfinite(p.x) || !std::isfinite(p.y)) {
      throw std::invalid_argument(fmt::format("non-finite vertex ({}, {})", p.x, p.y));
    }
    if (!vertices_.empty()) {
      const Point& q = vertices_.back();
      if (std::hypot(p.x - q.x, p.y - q.y) < kDuplicateVertexDistance) continue;
    }
    vertices_.push_back(p);
  }
}

void CompensatedSum::add(double v) {
  const double t = sum_ + v;
  if (std::abs(sum_) >= std::abs(v)) {
    correction_ += (sum_ - t) + v;
  } else {
    correction_ += (v - t) + sum_;
  }
  sum_ = t;
}

double triangle_signed_area(Point t0, Point t1, Point t2) {
  return 0.5 * diff_of_products(t1.x - t0.x, t2.y - t0.y, t2.x - t0.x, t1.y - t0.y);
}

double polygon_area(std::span<const Point> ring) {
  if (ring.size() < 3) {
    throw std::invalid_argument(
        fmt::format("polygon_area needs at least 3 vertices, got {}", ring.size()));
  }
  // Terms touching the anchor twice vanish, so the fan runs over i = 1..n-2.
  CompensatedSum sum;
  const Point t0 = ring.front();
  for (std::size_t i = 1; i + 1 < ring.size(); ++i) {
    sum.add(triangle_signed_area(t0, ring[i], ring[i + 1]));
  }
  return sum.value();
}

double s_curve_signed_area(std::span<const Point> curve, std::size_t i1, std::size_t i2) {
  if (i1 >= i2 || i2 >= curve.size()) {
    throw std::invalid_argument(
        fmt::format("invalid sub-polyline [{}, {}] of {} vertices", i1, i2, curve.size()));
  }
  if (i2 - i1 < 2) return 0.0;
  return polygon_area(curve.subspan(i1, i2 - i1 + 1));
}

double area_under_graph(std::span<const Point> curve) {
  CompensatedSum sum;
  for (std::size_t i = 0; i + 1 < curve.size(); ++i) {
    sum.add(0.5 * (curve[i].y + curve[i + 1].y) * (curve[i + 1].x - curve[i].x));
  }
  return sum.value();
}

Lobe locate_lobe(std::span<const Point> curve, double cut_x, std::size_t anchor) {
  if (anchor >= curve.size()) {
    throw std::invalid_argument(fmt::format("lobe anchor {} out of range", anchor));
  }
  Lobe lobe;
  const double offset = curve[anchor].x - cut_x;
  if (std::abs(offset) <= kCutTieTolerance) {
    lobe.empty = true;
    lobe.first = lobe.last = anchor;
    lobe.enter.point = lobe.exit.point = curve[anchor];
    lobe.enter.at_vertex = lobe.exit.at_vertex = true;
    lobe.enter.outer_vertex = lobe.exit.outer_vertex = anchor;
    return lobe;
  }
  const double side = offset > 0.0 ? 1.0 : -1.0;
  auto inside = [&](std::size_t i) { return side * (curve[i].x - cut_x) > kCutTieTolerance; };

  std::size_t first = anchor;
  while (first > 0 && inside(first - 1)) --first;
  std::size_t last = anchor;
  while (last + 1 < curve.size() && inside(last + 1)) ++last;
  if (first == 0 || last + 1 == curve.size()) {
    throw MalformedFoldError(fmt::format(
        "cut x = {} does not close a lobe through vertex {} (x = {})", cut_x, anchor,
        curve[anchor].x));
  }
  lobe.first = first;
  lobe.last = last;
  lobe.enter = crossing(curve, first - 1, first, cut_x);
  lobe.exit = crossing(curve, last + 1, last, cut_x);

  std::vector<Point> ring;
  ring.reserve(last - first + 3);
  ring.push_back(lobe.enter.point);
  ring.insert(ring.end(), curve.begin() + static_cast<std::ptrdiff_t>(first),
              curve.begin() + static_cast<std::ptrdiff_t>(last) + 1);
  ring.push_back(lobe.exit.point);
  lobe.area = std::abs(polygon_area(ring));
  return lobe;
}

double lobe_area(std::span<const Point> curve, double cut_x, std::size_t anchor) {
  return locate_lobe(curve, cut_x, anchor).area;
}

}  // namespace eqarea
