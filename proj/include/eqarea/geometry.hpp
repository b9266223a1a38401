#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace eqarea {

struct Point {
  double x = 0.0;
  double y = 0.0;

  friend bool operator==(const Point&, const Point&) = default;
};

/// Ordered planar vertex sequence.  Construction drops consecutive vertices
/// closer than 1e-15 and rejects non-finite coordinates.
class Polyline {
 public:
  Polyline() = default;
  explicit Polyline(std::vector<Point> vertices);

  std::span<const Point> vertices() const { return vertices_; }
  std::size_t size() const { return vertices_.size(); }
  const Point& operator[](std::size_t i) const { return vertices_[i]; }

  auto begin() const { return vertices_.begin(); }
  auto end() const { return vertices_.end(); }

 private:
  std::vector<Point> vertices_;
};

inline constexpr double kDuplicateVertexDistance = 1e-15;
/// Vertices within this distance of a vertical cut line count as lying on it.
inline constexpr double kCutTieTolerance = 1e-14;

/// Running sum with Neumaier compensation.
class CompensatedSum {
 public:
  void add(double v);
  double value() const { return sum_ + correction_; }

 private:
  double sum_ = 0.0;
  double correction_ = 0.0;
};

/// Half the determinant [[x1-x0, y1-y0], [x2-x0, y2-y0]]; positive for
/// counterclockwise triangles.
double triangle_signed_area(Point t0, Point t1, Point t2);

/// Triangle-fan area anchored at the first vertex; the ring closes
/// implicitly.  Throws std::invalid_argument for fewer than 3 vertices.
double polygon_area(std::span<const Point> ring);

/// Signed area enclosed by vertices [i1, i2] closed by the chord i2 -> i1.
double s_curve_signed_area(std::span<const Point> curve, std::size_t i1, std::size_t i2);

/// Signed area between the polyline and the x-axis, sum of trapezoids
/// 0.5 (y_i + y_{i+1}) (x_{i+1} - x_i).  Folded parts cancel correctly.
double area_under_graph(std::span<const Point> curve);

/// Where a lobe's boundary meets the cut line x = c.
struct CutCrossing {
  Point point;
  /// Index of the vertex outside the lobe adjacent to the crossing.  When
  /// `at_vertex` is set the crossing is that vertex itself (a tie).
  std::size_t outer_vertex = 0;
  bool at_vertex = false;
};

/// The parameter-connected run of vertices strictly on one side of a cut
/// line, containing an anchor vertex, closed by the line.
struct Lobe {
  std::size_t first = 0;  ///< first vertex strictly inside
  std::size_t last = 0;   ///< last vertex strictly inside
  CutCrossing enter;
  CutCrossing exit;
  double area = 0.0;      ///< unsigned
  bool empty = false;     ///< anchor on the line; no lobe
};

/// Locates the lobe through `anchor` cut off by x = cut_x.  Throws
/// MalformedFoldError when the run reaches an end of the curve without
/// crossing back over the line.
Lobe locate_lobe(std::span<const Point> curve, double cut_x, std::size_t anchor);

/// Unsigned area of locate_lobe(curve, cut_x, anchor); zero when the anchor
/// lies on the line.
double lobe_area(std::span<const Point> curve, double cut_x, std::size_t anchor);

}  // namespace eqarea
