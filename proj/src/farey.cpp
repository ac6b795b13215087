#include "fareycorr/farey.hpp"

#include <cmath>
#include <string>

#include "fareycorr/errors.hpp"

namespace fareycorr {
namespace {

void check_order(std::int64_t order, std::int64_t max_order) {
  if (order < 1) throw DomainError("Farey order must be at least 1");
  if (order > max_order) {
    throw SizingError("Farey order " + std::to_string(order) + " exceeds the configured maximum " +
                      std::to_string(max_order));
  }
}

// 3Q^2/pi^2 + Q log Q + Q overshoots N_Q for every Q >= 1.
std::size_t capacity_hint(std::int64_t order) {
  const double q = static_cast<double>(order);
  return static_cast<std::size_t>(0.30396355092702 * q * q + q * std::log(q) + q + 1.0);
}

}  // namespace

FareyRange::FareyRange(std::int64_t order) : order_(order) {
  if (order < 1) throw DomainError("Farey order must be at least 1");
}

FareySequence farey_sequence(std::int64_t order, std::int64_t max_order) {
  check_order(order, max_order);
  std::vector<FareyFraction> items;
  items.reserve(capacity_hint(order));
  for (const FareyFraction& f : FareyRange(order)) items.push_back(f);
  return FareySequence(order, std::move(items));
}

std::vector<double> unit_interval_points(std::int64_t order, std::int64_t max_order) {
  check_order(order, max_order);
  std::vector<double> points;
  points.reserve(capacity_hint(order));
  points.push_back(0.0);
  for (const FareyFraction& f : FareyRange(order)) {
    if (f.a != f.q) points.push_back(f.value());
  }
  return points;
}

}  // namespace fareycorr
