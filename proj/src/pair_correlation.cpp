#include "fareycorr/pair_correlation.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "fareycorr/errors.hpp"
#include "fareycorr/numeric.hpp"

namespace fareycorr {
namespace {

double scaled_argument(double lambda) { return lambda / kThreeOverPiSquared; }

// Largest integer k with k < c (strict).
std::uint64_t last_index_below(double c) {
  if (!(c > 1.0)) return 0;
  const double f = std::ceil(c) - 1.0;
  return static_cast<std::uint64_t>(f);
}

void require_limit(const SieveTables& tables, std::uint64_t needed, const char* what) {
  if (needed > tables.limit()) {
    throw RangeError(std::string(what) + " needs a sieve limit of " + std::to_string(needed) +
                     ", table has " + std::to_string(tables.limit()));
  }
}

// sum_{1 <= q < x} phi(q) log(x / q), compensated, in increasing q.
double totient_log_sum(const SieveTables& tables, double x) {
  const std::uint64_t last = last_index_below(x);
  require_limit(tables, last, "totient-log sum");
  CompensatedSum sum;
  const auto phi = tables.phi_table();
  for (std::uint64_t q = 1; q <= last; ++q) {
    sum.add(static_cast<double>(phi[q]) * std::log(x / static_cast<double>(q)));
  }
  return sum.value();
}

}  // namespace

std::uint64_t g2_required_limit(double lambda) {
  return std::max<std::uint64_t>(1, last_index_below(scaled_argument(lambda)));
}

double g2(const SieveTables& tables, double lambda) {
  if (!(lambda > 0.0) || !std::isfinite(lambda)) throw DomainError("lambda must be positive");
  const double c = scaled_argument(lambda);
  if (c <= 1.0) return 0.0;
  return kInverseZeta2 / (lambda * lambda) * totient_log_sum(tables, c);
}

double g2_integral(const SieveTables& tables, double a, double b) {
  if (!(a > 0.0) || !(a <= b)) throw DomainError("g2_integral needs 0 < a <= b");
  const std::uint64_t last = last_index_below(scaled_argument(b));
  require_limit(tables, last, "g2 integral");
  const auto phi = tables.phi_table();
  const auto antiderivative = [](double lambda, double threshold) {
    return -(std::log(lambda / threshold) + 1.0) / lambda;
  };
  CompensatedSum sum;
  for (std::uint64_t k = 1; k <= last; ++k) {
    const double threshold = static_cast<double>(k) * kThreeOverPiSquared;
    const double from = std::max(a, threshold);
    if (from >= b) continue;
    sum.add(static_cast<double>(phi[k]) * (antiderivative(b, threshold) -
                                           antiderivative(from, threshold)));
  }
  return kInverseZeta2 * sum.value();
}

double g_reference(ReferenceModel model, double lambda) {
  if (!(lambda > 0.0)) throw DomainError("lambda must be positive");
  switch (model) {
    case ReferenceModel::kPoisson:
      return 1.0;
    case ReferenceModel::kGue: {
      const double s = std::sin(kPi * lambda) / (kPi * lambda);
      return 1.0 - s * s;
    }
  }
  return 1.0;
}

double weighted_totient_log_sum(const SieveTables& tables, double x) {
  if (!(x > 1.0) || !std::isfinite(x)) throw DomainError("x must exceed 1");
  return totient_log_sum(tables, x);
}

std::vector<AsymptoticPoint> g2_asymptotic_diagnostic(const SieveTables& tables,
                                                      std::span<const double> lambdas) {
  std::vector<AsymptoticPoint> out;
  out.reserve(lambdas.size());
  for (const double lambda : lambdas) {
    const double value = g2(tables, lambda);
    out.push_back({lambda, value, lambda * std::abs(value - 1.0)});
  }
  return out;
}

}  // namespace fareycorr
