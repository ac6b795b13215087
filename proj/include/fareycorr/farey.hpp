#pragma once

#include <compare>
#include <cstdint>
#include <iterator>
#include <vector>

namespace fareycorr {

/// Reduced fraction a/q with 1 <= a <= q.
struct FareyFraction {
  std::int64_t a = 0;
  std::int64_t q = 1;

  double value() const noexcept { return static_cast<double>(a) / static_cast<double>(q); }

  /// Position on the circle R/Z, in [0, 1). Maps 1/1 to 0.
  double unit_interval_value() const noexcept { return a == q ? 0.0 : value(); }

  friend bool operator==(const FareyFraction&, const FareyFraction&) = default;

  /// Orders by rational value (cross multiplication, exact for q <= 2^31).
  friend std::strong_ordering operator<=>(const FareyFraction& lhs, const FareyFraction& rhs) {
    return lhs.a * rhs.q <=> rhs.a * lhs.q;
  }
};

/// Lazily walks F_Q in increasing order, from 1/Q to 1/1, using the next-term
/// recurrence: after a/q < a'/q', the next term is (k a' - a)/(k q' - q) with
/// k = floor((Q + q) / q'). Only two fractions of state are kept.
class FareyRange {
 public:
  class iterator {
   public:
    using iterator_category = std::input_iterator_tag;
    using value_type = FareyFraction;
    using difference_type = std::ptrdiff_t;
    using pointer = const FareyFraction*;
    using reference = const FareyFraction&;

    iterator() = default;

    reference operator*() const noexcept { return current_; }
    pointer operator->() const noexcept { return &current_; }

    iterator& operator++() noexcept {
      if (current_.a == current_.q) {
        done_ = true;
        return *this;
      }
      const std::int64_t k = (order_ + previous_.q) / current_.q;
      const FareyFraction next{k * current_.a - previous_.a, k * current_.q - previous_.q};
      previous_ = current_;
      current_ = next;
      return *this;
    }

    void operator++(int) noexcept { ++*this; }

    friend bool operator==(const iterator& it, std::default_sentinel_t) noexcept { return it.done_; }

   private:
    friend class FareyRange;
    explicit iterator(std::int64_t order) noexcept
        : order_(order), previous_{0, 1}, current_{1, order} {}

    std::int64_t order_ = 1;
    FareyFraction previous_{};
    FareyFraction current_{};
    bool done_ = false;
  };

  /// Throws DomainError for order 0.
  explicit FareyRange(std::int64_t order);

  iterator begin() const noexcept { return iterator(order_); }
  std::default_sentinel_t end() const noexcept { return {}; }

  std::int64_t order() const noexcept { return order_; }

 private:
  std::int64_t order_;
};

/// Materialized F_Q restricted to (0, 1], ascending.
class FareySequence {
 public:
  /// Default ceiling on the order accepted by farey_sequence(); N_Q is then
  /// about 1.2e8 fractions (16 bytes each).
  static constexpr std::int64_t kDefaultMaxOrder = 20'000;

  FareySequence(std::int64_t order, std::vector<FareyFraction> items)
      : order_(order), items_(std::move(items)) {}

  std::int64_t order() const noexcept { return order_; }
  std::size_t size() const noexcept { return items_.size(); }
  const std::vector<FareyFraction>& items() const noexcept { return items_; }
  const FareyFraction& operator[](std::size_t i) const { return items_[i]; }

  auto begin() const noexcept { return items_.begin(); }
  auto end() const noexcept { return items_.end(); }

 private:
  std::int64_t order_;
  std::vector<FareyFraction> items_;
};

/// Builds F_Q. Throws DomainError for order 0 and SizingError when the order
/// exceeds `max_order`.
FareySequence farey_sequence(std::int64_t order,
                             std::int64_t max_order = FareySequence::kDefaultMaxOrder);

/// Points of F_Q as reals in [0, 1), ascending: 1/1 becomes 0 and moves to the
/// front. This is the input format of the spacing functions.
std::vector<double> unit_interval_points(std::int64_t order,
                                         std::int64_t max_order = FareySequence::kDefaultMaxOrder);

}  // namespace fareycorr
