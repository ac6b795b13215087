#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "fareycorr/box.hpp"

namespace fareycorr {

/// Raw tuple count of a nu-level correlation measure and its normalization.
struct CorrelationEstimate {
  int nu = 2;
  BoxRegion box;
  std::uint64_t n_points = 0;
  std::uint64_t tuple_count = 0;
  double value = 0.0;  // tuple_count / n_points
};

/// One bin of the pair correlation histogram.
struct HistogramBin {
  double lo = 0.0;
  double hi = 0.0;
  std::uint64_t count = 0;
  double density = 0.0;  // count / (N * lambda_max / bins)

  double center() const noexcept { return 0.5 * (lo + hi); }
};

/// Whether some representative of `difference` mod 1, scaled by `scale`,
/// falls in [interval.lo, interval.hi), i.e. difference is in
/// interval / scale + Z. The representative tested is (difference + m) * scale
/// for the least integer m that reaches interval.lo. Every counting routine in
/// this module, and the brute-force oracle in the tests, go through this
/// predicate, so their counts agree bit for bit.
bool scaled_difference_in(double difference, double scale, const Interval& interval) noexcept;

/// Throws DomainError unless points are strictly ascending, lie in [0, 1) and
/// number at least `min_count`.
void validate_points(std::span<const double> points, std::size_t min_count);

/// (1/N) #{(x_1..x_nu) distinct : (x_1 - x_2, ..., x_{nu-1} - x_nu) in box/N + Z^{nu-1}}.
///
/// Sorted-window scan on the circle: from each anchor x_1 the next point is
/// searched only in the arc that can satisfy the current axis, so the cost is
/// O(N w^{nu-1}) with w the mean window occupancy. Anchors are split across
/// `workers` threads; the integer reduction makes the result independent of
/// the worker count.
CorrelationEstimate empirical_correlation(std::span<const double> points, int nu,
                                          const BoxRegion& box, unsigned workers = 1);

/// 2^{-nu+1} times the measure of prod_j [-lambda_j, lambda_j).
double symmetric_correlation(std::span<const double> points, int nu,
                             std::span<const double> lambdas, unsigned workers = 1);

/// Pair correlation counts of x_1 - x_2 over the bins [i D, (i+1) D),
/// D = lambda_max / bins, filled by one window pass. Requires lambda_max < N
/// so that each ordered pair lands in at most one bin.
std::vector<HistogramBin> pair_correlation_histogram(std::span<const double> points,
                                                     double lambda_max, int bins,
                                                     unsigned workers = 1);

/// Bin edges used by pair_correlation_histogram: edge i is lambda_max * i / bins,
/// with the last edge pinned to lambda_max.
std::vector<double> histogram_edges(double lambda_max, int bins);

}  // namespace fareycorr
