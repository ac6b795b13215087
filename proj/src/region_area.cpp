#include "fareycorr/region_area.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <random>
#include <string>
#include <vector>

#include "fareycorr/errors.hpp"
#include "fareycorr/numeric.hpp"

namespace fareycorr {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

struct Range {
  double lo;
  double hi;
};

enum class Verdict { kIn, kOut, kUnknown };

struct Cell {
  Rect rect;
  double piece_area;
  int depth;

  friend bool operator<(const Cell& lhs, const Cell& rhs) {
    return lhs.piece_area < rhs.piece_area;
  }
};

// Convex polygon with inline storage; the hot path of the quadtree must not
// allocate. Omega has at most 4 + 2 (nu - 1) edges and a rectangle clip adds
// at most 4 more vertices.
constexpr std::size_t kMaxVertices = 64;
constexpr int kMaxAreaDimension = (kMaxVertices - 8) / 2;

struct InlinePolygon {
  std::array<Point2, kMaxVertices> v;
  std::size_t n = 0;

  double area() const noexcept {
    if (n < 3) return 0.0;
    double twice = 0.0;
    for (std::size_t i = 1; i + 1 < n; ++i) {
      twice += (v[i].x - v[0].x) * (v[i + 1].y - v[0].y) - (v[i].y - v[0].y) * (v[i + 1].x - v[0].x);
    }
    return std::max(0.0, 0.5 * twice);
  }
};

void clip(const InlinePolygon& in, const HalfPlane& h, InlinePolygon& out) noexcept {
  out.n = 0;
  for (std::size_t i = 0; i < in.n; ++i) {
    const Point2& p = in.v[i];
    const Point2& q = in.v[i + 1 == in.n ? 0 : i + 1];
    const double ep = h.excess(p);
    const double eq = h.excess(q);
    if (ep <= 0.0) out.v[out.n++] = p;
    if ((ep < 0.0 && eq > 0.0) || (ep > 0.0 && eq < 0.0)) {
      const double t = ep / (ep - eq);
      out.v[out.n++] = {p.x + t * (q.x - p.x), p.y + t * (q.y - p.y)};
    }
  }
  if (out.n < 3) out.n = 0;
}

class CellClassifier {
 public:
  CellClassifier(const CorrelationTerm& term, const BoxRegion& box)
      : box_(box), omega_(omega_polygon(term)), planes_(omega_constraints(term)) {
    for (std::size_t j = 0; j < term.dimension(); ++j) {
      a_.push_back(static_cast<double>(term.a[j]));
      b_.push_back(static_cast<double>(term.b[j]));
    }
    t_.resize(a_.size());
    omega_inline_.n = omega_.vertices().size();
    std::copy(omega_.vertices().begin(), omega_.vertices().end(), omega_inline_.v.begin());
  }

  const ConvexPolygon& omega() const noexcept { return omega_; }

  // Classifies rect intersected with Omega; sets piece_area to that
  // intersection's area.
  Verdict classify(const Rect& rect, double& piece_area) {
    const Point2 corners[4] = {{rect.x0, rect.y0}, {rect.x1, rect.y0}, {rect.x1, rect.y1}, {rect.x0, rect.y1}};
    bool rect_inside = true;
    for (const HalfPlane& h : planes_) {
      if (!(h.contains(corners[0]) && h.contains(corners[1]) && h.contains(corners[2]) &&
            h.contains(corners[3]))) {
        rect_inside = false;
        break;
      }
    }

    if (rect_inside) {
      // y (A y - B x) is decreasing in x and increasing in y while A y - B x > 0,
      // so its range over the rectangle is attained at two corners.
      piece_area = rect.area();
      for (std::size_t j = 0; j < t_.size(); ++j) {
        const double low = rect.y0 * (a_[j] * rect.y0 - b_[j] * rect.x1);
        const double high = rect.y1 * (a_[j] * rect.y1 - b_[j] * rect.x0);
        const double numer = kThreeOverPiSquared * b_[j];
        t_[j] = {numer / high, low > 0.0 ? numer / low : kInf};
      }
      return judge();
    }

    clip(omega_inline_, HalfPlane{-1.0, 0.0, -rect.x0}, scratch_[0]);
    clip(scratch_[0], HalfPlane{1.0, 0.0, rect.x1}, scratch_[1]);
    clip(scratch_[1], HalfPlane{0.0, -1.0, -rect.y0}, scratch_[0]);
    clip(scratch_[0], HalfPlane{0.0, 1.0, rect.y1}, scratch_[1]);
    const InlinePolygon& piece = scratch_[1];
    piece_area = piece.area();
    if (piece.n == 0 || piece_area <= 0.0) return Verdict::kOut;

    Range y{kInf, -kInf};
    for (std::size_t i = 0; i < piece.n; ++i) {
      y.lo = std::min(y.lo, piece.v[i].y);
      y.hi = std::max(y.hi, piece.v[i].y);
    }
    for (std::size_t j = 0; j < t_.size(); ++j) {
      Range s{kInf, -kInf};
      for (std::size_t i = 0; i < piece.n; ++i) {
        const double value = a_[j] * piece.v[i].y - b_[j] * piece.v[i].x;
        s.lo = std::min(s.lo, value);
        s.hi = std::max(s.hi, value);
      }
      const double numer = kThreeOverPiSquared * b_[j];
      t_[j].lo = s.hi > 0.0 ? numer / (y.hi * s.hi) : kInf;
      t_[j].hi = s.lo > 0.0 ? numer / (y.lo * s.lo) : kInf;
    }
    return judge();
  }

 private:
  // Compares Phi = T o T_{A,B}, bounded through t_, against the box.
  Verdict judge() const {
    bool all_inside = true;
    const std::size_t last = t_.size() - 1;
    for (std::size_t j = 0; j <= last; ++j) {
      if (t_[j].lo == kInf) return Verdict::kOut;
      Range phi = t_[j];
      if (j < last) phi = {t_[j].lo - t_[j + 1].hi, t_[j].hi - t_[j + 1].lo};
      const Interval& axis = box_[j];
      if (phi.hi < axis.lo || phi.lo >= axis.hi) return Verdict::kOut;
      if (!(phi.lo >= axis.lo && phi.hi < axis.hi)) all_inside = false;
    }
    return all_inside ? Verdict::kIn : Verdict::kUnknown;
  }

  const BoxRegion& box_;
  ConvexPolygon omega_;
  InlinePolygon omega_inline_;
  std::vector<HalfPlane> planes_;
  std::vector<double> a_;
  std::vector<double> b_;
  std::vector<Range> t_;
  InlinePolygon scratch_[2];
};

void check_term_and_box(const CorrelationTerm& term, const BoxRegion& box) {
  validate_term(term);
  if (box.nu() != term.nu()) throw DomainError("box dimension does not match the term");
  if (!box.in_positive_orthant()) throw DomainError("box must lie in the positive orthant");
  if (static_cast<int>(term.dimension()) > kMaxAreaDimension) {
    throw DomainError("nu too large for area evaluation");
  }
}

// Uniform double in [0, 1) from the top 53 bits.
double unit_draw(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace

bool term_region_contains(const CorrelationTerm& term, const BoxRegion& box, double x, double y) {
  if (!(x >= 0.0 && x <= y && y <= 1.0 && y >= omega_min_y(term.lambda))) return false;
  // Phi_j = t_j - t_{j+1}, Phi_last = t_last; checked as each t_j appears.
  double previous = 0.0;
  for (std::size_t j = 0; j < term.dimension(); ++j) {
    const double b = static_cast<double>(term.b[j]);
    const double s = static_cast<double>(term.a[j]) * y - b * x;
    if (!(s > 0.0 && s <= 1.0)) return false;
    const double t = kThreeOverPiSquared * b / (y * s);
    if (j > 0 && !box[j - 1].contains(previous - t)) return false;
    previous = t;
  }
  return box[term.dimension() - 1].contains(previous);
}

AreaEstimate term_area(const CorrelationTerm& term, const BoxRegion& box, double tol,
                       const QuadtreeOptions& options) {
  check_term_and_box(term, box);
  if (!(tol > 0.0)) throw DomainError("tolerance must be positive");

  CellClassifier classifier(term, box);
  AreaEstimate result;
  if (classifier.omega().empty()) return result;

  CompensatedSum inside;
  std::vector<Cell> undecided;  // max-heap on piece_area
  CompensatedSum boundary;

  const auto visit = [&](const Rect& rect, int depth) {
    double piece_area = 0.0;
    const Verdict v = classifier.classify(rect, piece_area);
    ++result.cells;
    if (v == Verdict::kIn) {
      inside.add(piece_area);
    } else if (v == Verdict::kUnknown) {
      undecided.push_back({rect, piece_area, depth});
      std::push_heap(undecided.begin(), undecided.end());
      boundary.add(piece_area);
    }
  };

  const auto exact_boundary = [&] {
    CompensatedSum exact;
    for (const Cell& c : undecided) exact.add(c.piece_area);
    return exact.value();
  };

  visit(classifier.omega().bounding_box(), 0);
  for (;;) {
    while (!undecided.empty() && boundary.value() > tol) {
      std::pop_heap(undecided.begin(), undecided.end());
      const Cell cell = undecided.back();
      undecided.pop_back();
      if (cell.depth >= options.max_depth || result.cells + 4 > options.max_cells) {
        const double residual = cell.piece_area + exact_boundary();
        throw ConvergenceError("area refinement stopped at depth " + std::to_string(cell.depth) +
                                   " after " + std::to_string(result.cells) +
                                   " cells with undecided area " + std::to_string(residual) +
                                   " > tol " + std::to_string(tol),
                               residual);
      }
      boundary.add(-cell.piece_area);
      const Rect& r = cell.rect;
      const double xm = 0.5 * (r.x0 + r.x1);
      const double ym = 0.5 * (r.y0 + r.y1);
      visit({r.x0, r.y0, xm, ym}, cell.depth + 1);
      visit({xm, r.y0, r.x1, ym}, cell.depth + 1);
      visit({r.x0, ym, xm, r.y1}, cell.depth + 1);
      visit({xm, ym, r.x1, r.y1}, cell.depth + 1);
    }
    // The running total may drift by rounding; stop only on the exact sum.
    const double exact = exact_boundary();
    if (undecided.empty() || exact <= tol) break;
    boundary = CompensatedSum();
    boundary.add(exact);
  }

  CompensatedSum rest;
  for (const Cell& c : undecided) rest.add(c.piece_area);
  result.inside = inside.value();
  result.boundary = rest.value();
  result.error_bound = 0.5 * result.boundary;
  result.value = result.inside + result.error_bound;
  return result;
}

MonteCarloEstimate monte_carlo_term_area(const CorrelationTerm& term, const BoxRegion& box,
                                         std::uint64_t samples, std::uint64_t seed) {
  check_term_and_box(term, box);
  if (samples < 2) throw DomainError("Monte Carlo needs at least 2 samples");
  MonteCarloEstimate out;
  const ConvexPolygon omega = omega_polygon(term);
  if (omega.empty()) {
    out.samples = samples;
    return out;
  }
  const Rect bbox = omega.bounding_box();

  const auto grid = static_cast<std::uint64_t>(
      std::max(1.0, std::floor(std::sqrt(static_cast<double>(samples) / 16.0))));
  const std::uint64_t per_stratum = std::max<std::uint64_t>(2, samples / (grid * grid));
  const double dx = (bbox.x1 - bbox.x0) / static_cast<double>(grid);
  const double dy = (bbox.y1 - bbox.y0) / static_cast<double>(grid);

  std::mt19937_64 rng(seed);
  CompensatedSum fraction;
  CompensatedSum variance;
  for (std::uint64_t i = 0; i < grid; ++i) {
    for (std::uint64_t k = 0; k < grid; ++k) {
      std::uint64_t hits = 0;
      for (std::uint64_t n = 0; n < per_stratum; ++n) {
        const double x = bbox.x0 + (static_cast<double>(i) + unit_draw(rng)) * dx;
        const double y = bbox.y0 + (static_cast<double>(k) + unit_draw(rng)) * dy;
        if (term_region_contains(term, box, x, y)) ++hits;
      }
      const double p = static_cast<double>(hits) / static_cast<double>(per_stratum);
      fraction.add(p);
      variance.add(p * (1.0 - p) / static_cast<double>(per_stratum - 1));
    }
  }
  const double strata = static_cast<double>(grid * grid);
  const double bbox_area = bbox.area();
  out.samples = grid * grid * per_stratum;
  out.value = bbox_area * fraction.value() / strata;
  out.std_error = bbox_area * std::sqrt(variance.value()) / strata;
  return out;
}

}  // namespace fareycorr
