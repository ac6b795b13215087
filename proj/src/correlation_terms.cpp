#include "fareycorr/correlation_terms.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "fareycorr/errors.hpp"
#include "fareycorr/numeric.hpp"

namespace fareycorr {
namespace {

// Relative slack on pruning comparisons; errs toward keeping a term.
constexpr double kPruneSlack = 1e-9;

struct AxisCandidate {
  std::int64_t a;
  std::int64_t b;
  double y_lo;
  double y_hi;
};

class TermSearch {
 public:
  TermSearch(double lambda, std::vector<std::vector<AxisCandidate>> axes)
      : lambda_(lambda), axes_(std::move(axes)), a_(axes_.size()), b_(axes_.size()) {}

  std::vector<CorrelationTerm> run() {
    descend(0, omega_min_y(lambda_), 1.0);
    std::sort(found_.begin(), found_.end());
    return std::move(found_);
  }

 private:
  void descend(std::size_t j, double y_lo, double y_hi) {
    if (j == axes_.size()) {
      CorrelationTerm term{a_, b_, lambda_};
      if (omega_polygon(term).area() > 0.0) found_.push_back(std::move(term));
      return;
    }
    for (const AxisCandidate& c : axes_[j]) {
      const double lo = std::max(y_lo, c.y_lo);
      const double hi = std::min(y_hi, c.y_hi);
      if (lo > hi * (1.0 + kPruneSlack)) continue;
      a_[j] = c.a;
      b_[j] = c.b;
      descend(j + 1, lo, hi);
    }
  }

  double lambda_;
  std::vector<std::vector<AxisCandidate>> axes_;
  std::vector<std::int64_t> a_;
  std::vector<std::int64_t> b_;
  std::vector<CorrelationTerm> found_;
};

}  // namespace

void validate_term(const CorrelationTerm& term) {
  if (term.a.empty() || term.a.size() != term.b.size()) {
    throw DomainError("A and B must be nonempty vectors of equal length");
  }
  if (!(term.lambda > 0.0)) throw DomainError("Lambda must be positive");
  for (std::size_t j = 0; j < term.a.size(); ++j) {
    if (term.a[j] < 1 || term.b[j] < 1) throw DomainError("A and B entries must be >= 1");
    if (std::gcd(term.a[j], term.b[j]) != 1) throw DomainError("A_j and B_j must be coprime");
  }
}

double c_lambda(double lambda) noexcept { return lambda / kThreeOverPiSquared; }

double omega_min_y(double lambda) noexcept { return kThreeOverPiSquared / lambda; }

std::vector<HalfPlane> omega_constraints(const CorrelationTerm& term) {
  std::vector<HalfPlane> planes{
      {-1.0, 0.0, 0.0},                        // x >= 0
      {1.0, -1.0, 0.0},                        // x <= y
      {0.0, 1.0, 1.0},                         // y <= 1
      {0.0, -1.0, -omega_min_y(term.lambda)},  // y >= 3/(pi^2 Lambda)
  };
  for (std::size_t j = 0; j < term.a.size(); ++j) {
    const double a = static_cast<double>(term.a[j]);
    const double b = static_cast<double>(term.b[j]);
    planes.push_back({b, -a, 0.0});  // A y - B x >= 0
    planes.push_back({-b, a, 1.0});  // A y - B x <= 1
  }
  return planes;
}

ConvexPolygon omega_polygon(const CorrelationTerm& term) {
  const double y0 = omega_min_y(term.lambda);
  if (!(y0 < 1.0)) return {};
  ConvexPolygon poly({{0.0, y0}, {y0, y0}, {1.0, 1.0}, {0.0, 1.0}});
  const auto planes = omega_constraints(term);
  for (std::size_t i = 4; i < planes.size() && !poly.empty(); ++i) {
    poly = poly.clipped(planes[i]);
  }
  return poly;
}

std::vector<double> map_t_ab(const CorrelationTerm& term, double x, double y) {
  if (!(y > 0.0)) throw DomainError("T_{A,B} needs y > 0");
  std::vector<double> out(term.a.size());
  for (std::size_t j = 0; j < out.size(); ++j) {
    const double b = static_cast<double>(term.b[j]);
    const double s = static_cast<double>(term.a[j]) * y - b * x;
    if (!(s > 0.0)) throw DomainError("T_{A,B} needs A_j y - B_j x > 0");
    out[j] = kThreeOverPiSquared * b / (y * s);
  }
  return out;
}

std::vector<double> difference_transform(std::span<const double> u) {
  std::vector<double> out(u.begin(), u.end());
  for (std::size_t j = 0; j + 1 < u.size(); ++j) out[j] = u[j] - u[j + 1];
  return out;
}

std::vector<double> suffix_sum_transform(std::span<const double> v) {
  std::vector<double> out(v.begin(), v.end());
  for (std::size_t j = v.size(); j-- > 1;) out[j - 1] = v[j - 1] + out[j];
  return out;
}

std::vector<double> map_phi(const CorrelationTerm& term, double x, double y) {
  return difference_transform(map_t_ab(term, x, y));
}

std::vector<CorrelationTerm> enumerate_terms(int nu, double lambda, const BoxRegion& box,
                                             const TermLimits& limits) {
  if (nu < 2) throw DomainError("nu must be at least 2");
  if (box.nu() != nu) throw DomainError("box dimension does not match nu - 1");
  if (!box.in_positive_orthant()) throw DomainError("box must lie in the positive orthant");
  if (!(lambda > 0.0) || !std::isfinite(lambda)) throw DomainError("Lambda must be positive");
  if (lambda > limits.max_lambda) {
    throw RangeError("Lambda " + std::to_string(lambda) + " exceeds the configured maximum " +
                     std::to_string(limits.max_lambda));
  }
  for (const Interval& axis : box.intervals()) {
    if (axis.hi > lambda) throw DomainError("box must lie inside (0, Lambda)^{nu-1}");
  }

  const double c = c_lambda(lambda);
  if (c < 1.0) return {};
  const auto bound = static_cast<std::int64_t>(std::ceil(nu * c * c));
  const double y_floor = omega_min_y(lambda);

  // Top of axis j of T^{-1}(box): the largest value T_{A,B} component j may take.
  std::vector<double> top(box.dimension());
  {
    std::vector<double> his;
    for (const Interval& axis : box.intervals()) his.push_back(axis.hi);
    top = suffix_sum_transform(his);
  }

  std::vector<std::vector<AxisCandidate>> axes(box.dimension());
  for (std::size_t j = 0; j < axes.size(); ++j) {
    const double t_max = top[j] * (1.0 + kPruneSlack);
    for (std::int64_t b = 1; b <= bound; ++b) {
      if (kThreeOverPiSquared * static_cast<double>(b) > t_max) break;
      // A - B > c forces y <= 1/(A - B) < 1/c <= y_floor.
      const std::int64_t a_stop = std::min(bound, b + static_cast<std::int64_t>(std::floor(c)) + 1);
      for (std::int64_t a = 1; a <= a_stop; ++a) {
        if (std::gcd(a, b) != 1) continue;
        const double reach = std::sqrt(kThreeOverPiSquared * static_cast<double>(b) /
                                       (static_cast<double>(a) * t_max));
        const double y_lo = std::max(y_floor, reach * (1.0 - kPruneSlack));
        const double y_hi = a > b ? std::min(1.0, 1.0 / static_cast<double>(a - b)) : 1.0;
        if (y_lo > y_hi * (1.0 + kPruneSlack)) continue;
        axes[j].push_back({a, b, y_lo, y_hi});
      }
    }
  }
  return TermSearch(lambda, std::move(axes)).run();
}

}  // namespace fareycorr
