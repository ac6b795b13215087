#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include "doctest.h"
#include "fareycorr/errors.hpp"
#include "fareycorr/nu_level.hpp"
#include "oracles.hpp"

using namespace fareycorr;

TEST_CASE("two-level measure vanishes below 3/pi^2") {
  const double edge = 3.0 / (std::numbers::pi * std::numbers::pi);
  const auto r = nu_level_measure(2, BoxRegion({{0.0, edge}}), 1e-4);
  CHECK(r.value == 0.0);
  CHECK(r.error_bound == 0.0);
}

TEST_CASE("two-level measure equals the integrated pair density") {
  std::mt19937_64 rng(2024);
  std::uniform_real_distribution<double> u(0.4, 2.0);
  for (int i = 0; i < 10; ++i) {
    double a = u(rng);
    double b = u(rng);
    if (a > b) std::swap(a, b);
    if (b - a < 0.05) b = std::min(2.0, a + 0.05);
    const double tol = 1e-4;
    const auto r = nu_level_measure(2, BoxRegion({{a, b}}), tol);
    CHECK(r.error_bound <= tol);
    CHECK(r.term_count > 0);
    CHECK(r.lambda == b);
    CHECK(std::abs(r.value - oracle::g2_integral_adaptive(a, b)) <= tol + 1e-8);
  }
}

TEST_CASE("two-level measure adds over a partition") {
  const double tol = 1e-4;
  const double lambda = 1.5;
  NuLevelOptions o;
  o.lambda = lambda;
  const auto whole = nu_level_measure(2, BoxRegion({{0.0, lambda}}), tol, o);
  const auto left = nu_level_measure(2, BoxRegion({{0.0, 0.8}}), tol, o);
  const auto right = nu_level_measure(2, BoxRegion({{0.8, lambda}}), tol, o);
  CHECK(std::abs(whole.value - left.value - right.value) <= 3.0 * tol);
}

TEST_CASE("per-term results are sorted and sum to the measure") {
  std::vector<CorrelationTerm> terms;
  std::vector<AreaEstimate> areas;
  const double tol = 1e-3;
  const BoxRegion box({{0.4, 1.0}, {0.4, 1.0}});
  const auto r = nu_level_measure(3, box, tol, {}, terms, areas);
  REQUIRE(terms.size() == areas.size());
  CHECK(r.term_count == terms.size());
  CHECK(std::is_sorted(terms.begin(), terms.end()));
  double sum = 0.0;
  double err = 0.0;
  for (const auto& a : areas) {
    CHECK(a.boundary <= tol / static_cast<double>(terms.size()) * (1 + 1e-12));
    sum += a.value;
    err += a.error_bound;
  }
  CHECK(r.value == doctest::Approx(2.0 * sum).epsilon(1e-12));
  CHECK(r.error_bound <= tol);
  CHECK(r.error_bound == doctest::Approx(2.0 * err).epsilon(1e-12));
}

TEST_CASE("worker count does not change the bits") {
  const BoxRegion box({{0.4, 1.0}, {0.4, 1.0}});
  NuLevelOptions one;
  NuLevelOptions many;
  many.workers = 4;
  const auto a = nu_level_measure(3, box, 2e-3, one);
  const auto b = nu_level_measure(3, box, 2e-3, many);
  CHECK(a.value == b.value);
  CHECK(a.error_bound == b.error_bound);
}

TEST_CASE("nu-level errors") {
  CHECK_THROWS_AS(nu_level_measure(2, BoxRegion({{-1.0, 1.0}}), 1e-3), DomainError);
  CHECK_THROWS_AS(nu_level_measure(3, BoxRegion({{0.5, 1.0}}), 1e-3), DomainError);
  CHECK_THROWS_AS(nu_level_measure(2, BoxRegion({{0.5, 1.0}}), 0.0), DomainError);
  NuLevelOptions small;
  small.lambda = 0.8;
  CHECK_THROWS_AS(nu_level_measure(2, BoxRegion({{0.5, 1.0}}), 1e-3, small), DomainError);
}
