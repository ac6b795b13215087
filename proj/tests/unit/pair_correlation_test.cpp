#include <cmath>
#include <numbers>
#include <vector>

#include "doctest.h"
#include "fareycorr/errors.hpp"
#include "fareycorr/pair_correlation.hpp"
#include "fareycorr/sieve.hpp"
#include "oracles.hpp"

using namespace fareycorr;

namespace {
constexpr double kPi2 = std::numbers::pi * std::numbers::pi;
}

TEST_CASE("pair density vanishes up to 3/pi^2") {
  const auto t = build_sieves(10);
  CHECK(g2(t, 0.25) == 0.0);
  CHECK(g2(t, 3.0 / kPi2) == 0.0);
  for (double l = 1e-6; l <= 3.0 / kPi2; l += 0.001) REQUIRE(g2(t, l) == 0.0);
  CHECK(g2(t, 0.3040) > 0.0);
}

TEST_CASE("pair density at 6/pi^2 is a single log term") {
  const auto t = build_sieves(10);
  const double expected = kPi2 / 6.0 * std::numbers::ln2;
  CHECK(g2(t, 6.0 / kPi2) == doctest::Approx(expected).epsilon(1e-13));
  CHECK(static_cast<double>(oracle::g2_direct(6.0L / (std::numbers::pi_v<long double> *
                                                      std::numbers::pi_v<long double>))) ==
        doctest::Approx(1.1401814106428528).epsilon(1e-13));
}

TEST_CASE("pair density against an extended-precision sum") {
  const auto t = build_sieves(100000);
  for (double l : {0.31, 0.5, 0.9, 1.0, 1.7, 2.5, 10.0, 77.7, 300.0, 10000.0}) {
    const double ref = static_cast<double>(oracle::g2_direct(l));
    REQUIRE(g2(t, l) == doctest::Approx(ref).epsilon(1e-11));
  }
}

TEST_CASE("pair density is continuous across each threshold") {
  const auto t = build_sieves(100);
  const double eps = 1e-6;
  for (int k = 1; k <= 30; ++k) {
    const double lk = 3.0 * k / kPi2;
    const double jump = std::abs(g2(t, lk + eps) - g2(t, lk - eps));
    REQUIRE(jump <= 50.0 * eps);
  }
}

TEST_CASE("threshold itself excludes the entering term") {
  const auto t = build_sieves(100);
  // At lambda = 3k/pi^2 the k-th term contributes log 1 = 0 either way; the
  // required table size shows the strict inequality.
  CHECK(g2_required_limit(3.0 * 5.0 / kPi2) <= 5);
  CHECK(g2_required_limit(3.0 * 5.5 / kPi2) == 5);
}

TEST_CASE("closed-form integral against adaptive quadrature") {
  const auto t = build_sieves(1000);
  for (const auto& [a, b] : std::vector<std::pair<double, double>>{
           {0.1, 0.25}, {0.2, 0.5}, {0.4, 0.9}, {0.55, 0.7}, {1.0, 3.0}, {2.9, 7.3}}) {
    const double ref = oracle::g2_integral_adaptive(a, b, 1e-11);
    REQUIRE(g2_integral(t, a, b) == doctest::Approx(ref).epsilon(1e-8));
  }
  CHECK(g2_integral(t, 0.1, 0.3) == 0.0);
  CHECK(g2_integral(t, 1.0, 1.0) == 0.0);
}

TEST_CASE("reference curves") {
  CHECK(g_reference(ReferenceModel::kPoisson, 0.37) == 1.0);
  CHECK(g_reference(ReferenceModel::kPoisson, 12.0) == 1.0);
  CHECK(g_reference(ReferenceModel::kGue, 1.0) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(g_reference(ReferenceModel::kGue, 0.5) ==
        doctest::Approx(1.0 - 4.0 / kPi2).epsilon(1e-14));
  CHECK(g_reference(ReferenceModel::kGue, 1e-4) < 1e-6);
}

TEST_CASE("weighted totient-log sum") {
  const auto t = build_sieves(10000);
  CHECK(weighted_totient_log_sum(t, 1.5) == doctest::Approx(0.405465108108164).epsilon(1e-14));
  CHECK(weighted_totient_log_sum(t, 3.0) == doctest::Approx(1.504077396776274).epsilon(1e-14));
  const double x = 1e4;
  const double ratio = weighted_totient_log_sum(t, x) * 2.0 * kPi2 / (3.0 * x * x);
  CHECK(ratio >= 0.999);
  CHECK(ratio <= 1.001);
  // The pair density is the same sum in disguise.
  for (double l : {0.7, 5.0, 123.4}) {
    const double xl = kPi2 * l / 3.0;
    CHECK(g2(t, l) == doctest::Approx(weighted_totient_log_sum(t, xl) * 2.0 * kPi2 /
                                      (3.0 * xl * xl)).epsilon(1e-13));
  }
}

TEST_CASE("asymptotic diagnostic") {
  const auto t = build_sieves(100000);
  const std::vector<double> ladder = {10.0, 100.0, 1000.0};
  const auto pts = g2_asymptotic_diagnostic(t, ladder);
  REQUIRE(pts.size() == 3);
  for (const auto& p : pts) {
    CHECK(std::isfinite(p.scaled_deviation));
    CHECK(p.scaled_deviation >= 0.0);
    CHECK(p.scaled_deviation <= 10.0 * pts.front().scaled_deviation);
  }
  const double ref10 = static_cast<double>(oracle::g2_direct(10.0L));
  CHECK(pts[0].g2 == doctest::Approx(ref10).epsilon(1e-12));
  CHECK(pts[0].scaled_deviation == doctest::Approx(10.0 * std::abs(ref10 - 1.0)).epsilon(1e-9));
}

TEST_CASE("pair density errors") {
  const auto t = build_sieves(10);
  CHECK_THROWS_AS(g2(t, 0.0), DomainError);
  CHECK_THROWS_AS(g2(t, -1.0), DomainError);
  CHECK_THROWS_AS(g2(t, 10.0), RangeError);
  CHECK_THROWS_AS(g2_integral(t, 0.0, 1.0), DomainError);
  CHECK_THROWS_AS(g2_integral(t, 2.0, 1.0), DomainError);
  CHECK_THROWS_AS(g2_integral(t, 1.0, 10.0), RangeError);
  CHECK_THROWS_AS(weighted_totient_log_sum(t, 1.0), DomainError);
  CHECK_THROWS_AS(weighted_totient_log_sum(t, 12.5), RangeError);
  CHECK_THROWS_AS(g_reference(ReferenceModel::kGue, 0.0), DomainError);
  const std::vector<double> too_far = {10.0, 1e6};
  CHECK_THROWS_AS(g2_asymptotic_diagnostic(t, too_far), RangeError);
}
