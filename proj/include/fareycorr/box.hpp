#pragma once

#include <span>
#include <string>
#include <vector>

namespace fareycorr {

/// Half-open interval [lo, hi).
struct Interval {
  double lo = 0.0;
  double hi = 0.0;

  double width() const noexcept { return hi - lo; }
  bool contains(double v) const noexcept { return lo <= v && v < hi; }

  friend bool operator==(const Interval&, const Interval&) = default;
};

/// Axis-aligned box in R^(nu-1), the argument of a nu-level correlation
/// measure. Every axis is half-open [lo, hi).
class BoxRegion {
 public:
  /// Throws DomainError if the list is empty or some axis has lo >= hi or a
  /// non-finite bound.
  explicit BoxRegion(std::vector<Interval> intervals);

  /// Product of [-lambda_j, lambda_j) over all axes.
  static BoxRegion symmetric(std::span<const double> lambdas);

  /// Parses "lo:hi,lo:hi,...". Throws DomainError on malformed text.
  static BoxRegion parse(const std::string& text);

  int nu() const noexcept { return static_cast<int>(intervals_.size()) + 1; }
  std::size_t dimension() const noexcept { return intervals_.size(); }
  const std::vector<Interval>& intervals() const noexcept { return intervals_; }
  const Interval& operator[](std::size_t j) const { return intervals_[j]; }

  /// True when every lower edge is >= 0. A zero lower edge is read as open,
  /// which changes nothing for Lebesgue-measure statements.
  bool in_positive_orthant() const noexcept { return positive_; }

  /// max_j max(|lo_j|, |hi_j|).
  double max_abs_coordinate() const noexcept;

  /// The box seen by the reversed tuple: axis j becomes -axis(nu-2-j).
  BoxRegion reversed_negated() const;

  bool contains(std::span<const double> point) const noexcept;

  /// "lo:hi,lo:hi" with 17 significant digits, the inverse of parse().
  std::string to_string() const;

  friend bool operator==(const BoxRegion&, const BoxRegion&) = default;

 private:
  std::vector<Interval> intervals_;
  bool positive_ = false;
};

}  // namespace fareycorr
