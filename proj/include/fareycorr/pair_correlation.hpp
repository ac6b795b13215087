#pragma once

#include <span>
#include <vector>

#include "fareycorr/sieve.hpp"

namespace fareycorr {

/// Limiting pair correlation density of Farey fractions,
///   g2(lambda) = 6/(pi^2 lambda^2) sum_{1 <= k < pi^2 lambda / 3} phi(k) log(pi^2 lambda / (3k)).
/// The summation bound is strict, so g2 vanishes on (0, 3/pi^2]. The scaled
/// argument pi^2 lambda / 3 is computed as lambda / (3/pi^2), which makes it
/// exactly k at lambda = k * (3/pi^2) for small k.
/// Throws DomainError for lambda <= 0 and RangeError if the table is too short.
double g2(const SieveTables& tables, double lambda);

/// Smallest sieve limit that g2 needs at `lambda`.
std::uint64_t g2_required_limit(double lambda);

/// Closed-form integral of g2 over [a, b], 0 < a <= b, summed term by term
/// from the antiderivative -(log(lambda/lambda_k) + 1)/lambda of each log
/// term above its threshold lambda_k = 3k/pi^2.
double g2_integral(const SieveTables& tables, double a, double b);

enum class ReferenceModel { kGue, kPoisson };

/// GUE: 1 - sin^2(pi lambda)/(pi lambda)^2. Poisson: 1.
double g_reference(ReferenceModel model, double lambda);

/// S(x) = sum_{1 <= q < x} phi(q) log(x / q). Main term 3x^2 / (2 pi^2).
double weighted_totient_log_sum(const SieveTables& tables, double x);

struct AsymptoticPoint {
  double lambda = 0.0;
  double g2 = 0.0;
  double scaled_deviation = 0.0;  // lambda * |g2 - 1|
};

std::vector<AsymptoticPoint> g2_asymptotic_diagnostic(const SieveTables& tables,
                                                      std::span<const double> lambdas);

}  // namespace fareycorr
