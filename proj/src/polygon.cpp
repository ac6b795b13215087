#include "fareycorr/polygon.hpp"

#include <algorithm>

namespace fareycorr {

ConvexPolygon ConvexPolygon::from_rect(const Rect& r) {
  return ConvexPolygon({{r.x0, r.y0}, {r.x1, r.y0}, {r.x1, r.y1}, {r.x0, r.y1}});
}

double ConvexPolygon::area() const noexcept {
  if (empty()) return 0.0;
  const Point2 o = vertices_.front();
  double twice = 0.0;
  for (std::size_t i = 1; i + 1 < vertices_.size(); ++i) {
    const double ux = vertices_[i].x - o.x;
    const double uy = vertices_[i].y - o.y;
    const double vx = vertices_[i + 1].x - o.x;
    const double vy = vertices_[i + 1].y - o.y;
    twice += ux * vy - uy * vx;
  }
  return std::max(0.0, 0.5 * twice);
}

Rect ConvexPolygon::bounding_box() const noexcept {
  if (vertices_.empty()) return {};
  Rect box{vertices_[0].x, vertices_[0].y, vertices_[0].x, vertices_[0].y};
  for (const Point2& p : vertices_) {
    box.x0 = std::min(box.x0, p.x);
    box.y0 = std::min(box.y0, p.y);
    box.x1 = std::max(box.x1, p.x);
    box.y1 = std::max(box.y1, p.y);
  }
  return box;
}

ConvexPolygon ConvexPolygon::clipped(const HalfPlane& h) const {
  if (empty()) return {};
  std::vector<Point2> out;
  out.reserve(vertices_.size() + 1);
  const std::size_t n = vertices_.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Point2& p = vertices_[i];
    const Point2& q = vertices_[(i + 1) % n];
    const double ep = h.excess(p);
    const double eq = h.excess(q);
    if (ep <= 0.0) out.push_back(p);
    if ((ep < 0.0 && eq > 0.0) || (ep > 0.0 && eq < 0.0)) {
      const double t = ep / (ep - eq);
      out.push_back({p.x + t * (q.x - p.x), p.y + t * (q.y - p.y)});
    }
  }
  if (out.size() < 3) return {};
  return ConvexPolygon(std::move(out));
}

ConvexPolygon ConvexPolygon::clipped(const Rect& r) const {
  return clipped(HalfPlane{-1.0, 0.0, -r.x0})
      .clipped(HalfPlane{1.0, 0.0, r.x1})
      .clipped(HalfPlane{0.0, -1.0, -r.y0})
      .clipped(HalfPlane{0.0, 1.0, r.y1});
}

}  // namespace fareycorr
