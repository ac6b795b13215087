#pragma once

#include <vector>

namespace fareycorr {

struct Point2 {
  double x = 0.0;
  double y = 0.0;
};

/// Closed half-plane {(x, y) : a x + b y <= c}.
struct HalfPlane {
  double a = 0.0;
  double b = 0.0;
  double c = 0.0;

  double excess(const Point2& p) const noexcept { return a * p.x + b * p.y - c; }
  bool contains(const Point2& p) const noexcept { return excess(p) <= 0.0; }
};

struct Rect {
  double x0 = 0.0;
  double y0 = 0.0;
  double x1 = 0.0;
  double y1 = 0.0;

  double area() const noexcept { return (x1 - x0) * (y1 - y0); }
};

/// Convex polygon as a counter-clockwise vertex list; empty when degenerate.
class ConvexPolygon {
 public:
  ConvexPolygon() = default;
  explicit ConvexPolygon(std::vector<Point2> vertices) : vertices_(std::move(vertices)) {}

  static ConvexPolygon from_rect(const Rect& r);

  const std::vector<Point2>& vertices() const noexcept { return vertices_; }
  bool empty() const noexcept { return vertices_.size() < 3; }

  /// Shoelace area, taken relative to the first vertex.
  double area() const noexcept;

  Rect bounding_box() const noexcept;

  /// Sutherland-Hodgman step against one half-plane.
  ConvexPolygon clipped(const HalfPlane& h) const;

  ConvexPolygon clipped(const Rect& r) const;

 private:
  std::vector<Point2> vertices_;
};

}  // namespace fareycorr
