#include "fareycorr/spacing.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "fareycorr/errors.hpp"
#include "fareycorr/parallel.hpp"

namespace fareycorr {
namespace {

// Unscaled slack added on both sides of every search arc. Far above the
// rounding error of a difference of two numbers in [0, 1), far below any
// meaningful gap.
constexpr double kArcSlack = 1e-12;

struct IndexRange {
  std::size_t begin = 0;
  std::size_t end = 0;
};

// Indices of points that can satisfy x - y in interval/scale + Z for a given
// x, as at most two ranges of the sorted array. A superset: the caller still
// applies scaled_difference_in.
class ArcSearch {
 public:
  ArcSearch(std::span<const double> points, double scale) : points_(points), scale_(scale) {}

  int ranges(double x, const Interval& interval, IndexRange (&out)[2]) const {
    const double width = interval.width() / scale_ + 2.0 * kArcSlack;
    if (width >= 1.0) {
      out[0] = {0, points_.size()};
      return 1;
    }
    double start = x - interval.hi / scale_ - kArcSlack;
    start -= std::floor(start);
    const double stop = start + width;
    if (stop < 1.0) {
      out[0] = {lower(start), upper(stop)};
      return 1;
    }
    out[0] = {lower(start), points_.size()};
    out[1] = {0, upper(stop - 1.0)};
    return 2;
  }

 private:
  std::size_t lower(double v) const {
    return static_cast<std::size_t>(std::lower_bound(points_.begin(), points_.end(), v) -
                                    points_.begin());
  }
  std::size_t upper(double v) const {
    return static_cast<std::size_t>(std::upper_bound(points_.begin(), points_.end(), v) -
                                    points_.begin());
  }

  std::span<const double> points_;
  double scale_;
};

class TupleCounter {
 public:
  TupleCounter(std::span<const double> points, const BoxRegion& box)
      : points_(points),
        axes_(box.intervals()),
        scale_(static_cast<double>(points.size())),
        search_(points, scale_),
        chain_(axes_.size() + 1) {}

  std::uint64_t count_from_anchors(std::size_t begin, std::size_t end) {
    std::uint64_t total = 0;
    for (std::size_t i = begin; i < end; ++i) {
      chain_[0] = i;
      total += extend(1);
    }
    return total;
  }

 private:
  // chain_[0..depth) is fixed; choose chain_[depth].
  std::uint64_t extend(std::size_t depth) {
    const Interval& axis = axes_[depth - 1];
    const double x = points_[chain_[depth - 1]];
    IndexRange found[2];
    const int n = search_.ranges(x, axis, found);
    std::uint64_t total = 0;
    for (int r = 0; r < n; ++r) {
      for (std::size_t k = found[r].begin; k < found[r].end; ++k) {
        if (in_chain(k, depth)) continue;
        if (!scaled_difference_in(x - points_[k], scale_, axis)) continue;
        if (depth == axes_.size()) {
          ++total;
        } else {
          chain_[depth] = k;
          total += extend(depth + 1);
        }
      }
    }
    return total;
  }

  bool in_chain(std::size_t k, std::size_t depth) const {
    for (std::size_t d = 0; d < depth; ++d) {
      if (chain_[d] == k) return true;
    }
    return false;
  }

  std::span<const double> points_;
  const std::vector<Interval>& axes_;
  double scale_;
  ArcSearch search_;
  std::vector<std::size_t> chain_;
};

}  // namespace

bool scaled_difference_in(double difference, double scale, const Interval& interval) noexcept {
  const double m0 = std::ceil(interval.lo / scale - difference);
  for (double m = m0 - 1.0; m <= m0 + 1.0; m += 1.0) {
    const double s = (difference + m) * scale;
    if (s >= interval.lo) return s < interval.hi;
  }
  return false;
}

void validate_points(std::span<const double> points, std::size_t min_count) {
  if (points.size() < min_count) {
    throw DomainError("need at least " + std::to_string(min_count) + " points, got " +
                      std::to_string(points.size()));
  }
  for (std::size_t i = 0; i < points.size(); ++i) {
    const double x = points[i];
    if (!(x >= 0.0 && x < 1.0)) throw DomainError("points must lie in [0, 1)");
    if (i > 0 && !(points[i - 1] < x)) {
      throw DomainError("points must be strictly ascending (sorted, no repeated values)");
    }
  }
}

CorrelationEstimate empirical_correlation(std::span<const double> points, int nu,
                                          const BoxRegion& box, unsigned workers) {
  if (nu < 2) throw DomainError("nu must be at least 2");
  if (box.nu() != nu) throw DomainError("box dimension does not match nu - 1");
  validate_points(points, static_cast<std::size_t>(nu));

  const auto chunks = partition(points.size(), workers);
  std::vector<std::uint64_t> partial(chunks.size(), 0);
  for_each_chunk(points.size(), workers, [&](std::size_t index, Chunk chunk) {
    TupleCounter counter(points, box);
    partial[index] = counter.count_from_anchors(chunk.begin, chunk.end);
  });

  CorrelationEstimate estimate{nu, box, points.size(), 0, 0.0};
  for (const std::uint64_t c : partial) estimate.tuple_count += c;
  estimate.value =
      static_cast<double>(estimate.tuple_count) / static_cast<double>(estimate.n_points);
  return estimate;
}

double symmetric_correlation(std::span<const double> points, int nu,
                             std::span<const double> lambdas, unsigned workers) {
  if (static_cast<int>(lambdas.size()) != nu - 1) {
    throw DomainError("need nu - 1 half-widths");
  }
  const auto estimate = empirical_correlation(points, nu, BoxRegion::symmetric(lambdas), workers);
  return std::ldexp(estimate.value, -(nu - 1));
}

std::vector<double> histogram_edges(double lambda_max, int bins) {
  if (bins < 1) throw DomainError("bins must be at least 1");
  if (!(lambda_max > 0.0) || !std::isfinite(lambda_max)) {
    throw DomainError("lambda_max must be positive");
  }
  std::vector<double> edges(static_cast<std::size_t>(bins) + 1);
  for (int i = 0; i < bins; ++i) edges[i] = lambda_max * i / bins;
  edges[bins] = lambda_max;
  return edges;
}

std::vector<HistogramBin> pair_correlation_histogram(std::span<const double> points,
                                                     double lambda_max, int bins,
                                                     unsigned workers) {
  const std::vector<double> edges = histogram_edges(lambda_max, bins);
  validate_points(points, 2);
  const double scale = static_cast<double>(points.size());
  if (!(lambda_max < scale)) throw DomainError("lambda_max must be below the point count");

  const Interval range{0.0, lambda_max};
  const auto chunks = partition(points.size(), workers);
  std::vector<std::vector<std::uint64_t>> partial(chunks.size());
  for_each_chunk(points.size(), workers, [&](std::size_t index, Chunk chunk) {
    std::vector<std::uint64_t> counts(static_cast<std::size_t>(bins), 0);
    ArcSearch search(points, scale);
    IndexRange found[2];
    // Anchor is x_2; candidates x_1 lie ahead of it on the circle.
    for (std::size_t i = chunk.begin; i < chunk.end; ++i) {
      const double anchor = points[i];
      const int n = search.ranges(anchor, {-range.hi, -range.lo}, found);
      for (int r = 0; r < n; ++r) {
        for (std::size_t k = found[r].begin; k < found[r].end; ++k) {
          if (k == i) continue;
          const double diff = points[k] - anchor;
          // Same representative scaled_difference_in would pick for any bin.
          const double m = std::ceil(-diff);
          double s = (diff + (m - 1.0)) * scale;
          if (s < 0.0) s = (diff + m) * scale;
          if (s < 0.0) s = (diff + (m + 1.0)) * scale;
          if (!(s < lambda_max)) continue;
          const auto bin = std::upper_bound(edges.begin(), edges.end(), s) - edges.begin() - 1;
          ++counts[static_cast<std::size_t>(bin)];
        }
      }
    }
    partial[index] = std::move(counts);
  });

  const double bin_width = lambda_max / bins;
  std::vector<HistogramBin> out(static_cast<std::size_t>(bins));
  for (std::size_t b = 0; b < out.size(); ++b) {
    out[b].lo = edges[b];
    out[b].hi = edges[b + 1];
    for (const auto& counts : partial) out[b].count += counts[b];
    out[b].density = static_cast<double>(out[b].count) / scale / bin_width;
  }
  return out;
}

}  // namespace fareycorr
