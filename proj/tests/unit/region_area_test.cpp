#include <cmath>
#include <numbers>
#include <vector>

#include "doctest.h"
#include "fareycorr/correlation_terms.hpp"
#include "fareycorr/errors.hpp"
#include "fareycorr/region_area.hpp"
#include "oracles.hpp"

using namespace fareycorr;

namespace {

std::vector<std::pair<double, double>> pairs(const BoxRegion& box) {
  std::vector<std::pair<double, double>> out;
  for (const auto& i : box.intervals()) out.emplace_back(i.lo, i.hi);
  return out;
}

}  // namespace

TEST_CASE("boxes below 3/pi^2 have zero area for every term") {
  const double edge = 3.0 / (std::numbers::pi * std::numbers::pi);
  const BoxRegion b2({{0.01, edge}});
  const BoxRegion b3({{0.01, edge}, {0.02, edge * 0.9}});
  for (std::int64_t a = 1; a <= 4; ++a) {
    for (std::int64_t b = 1; b <= 4; ++b) {
      if (std::gcd(a, b) != 1) continue;
      const auto r2 = term_area({{a}, {b}, 2.0}, b2, 1e-6);
      CHECK(r2.value == 0.0);
      CHECK(r2.boundary == 0.0);
      const auto r3 = term_area({{a, b}, {b, a}, 2.0}, b3, 1e-6);
      CHECK(r3.value == 0.0);
    }
  }
}

TEST_CASE("empty Omega gives zero area") {
  // (A - B) y >= 4 * 3/pi^2 > 1 on the strip, so A y - B x <= 1 fails for all x <= y.
  const CorrelationTerm t{{5}, {1}, 1.0};
  CHECK(omega_polygon(t).empty());
  const auto area = term_area(t, BoxRegion({{0.3, 1.0}}), 1e-6);
  CHECK(area.value == 0.0);
  CHECK(area.cells <= 1);
  const CorrelationTerm far{{1}, {1}, 0.2};  // strip starts above y = 1
  CHECK(omega_polygon(far).empty());
  CHECK(term_area(far, BoxRegion({{0.1, 0.2}}), 1e-6).value == 0.0);
}

TEST_CASE("single term against stratified Monte Carlo") {
  const CorrelationTerm t{{1}, {1}, 1.0};
  const BoxRegion box({{0.5, 0.9}});
  const auto area = term_area(t, box, 1e-6);
  CHECK(area.boundary <= 1e-6);
  CHECK(area.error_bound == doctest::Approx(area.boundary / 2));
  CHECK(area.value == doctest::Approx(area.inside + area.boundary / 2));
  const auto mc = oracle::term_area_monte_carlo(t.a, t.b, t.lambda, pairs(box), 790, 16, 7);
  CHECK(std::abs(area.value - mc.value) <= 3.0 * mc.std_error);
  const auto lib_mc = monte_carlo_term_area(t, box, 10'000'000, 11);
  CHECK(lib_mc.samples >= 9'000'000);
  CHECK(std::abs(area.value - lib_mc.value) <= 3.0 * lib_mc.std_error + area.error_bound);
}

TEST_CASE("bracket holds and narrows with the tolerance") {
  const CorrelationTerm t{{2, 1}, {1, 1}, 1.2};
  const BoxRegion box({{0.35, 1.2}, {0.4, 1.1}});
  const auto coarse = term_area(t, box, 1e-3);
  const auto fine = term_area(t, box, 1e-6);
  CHECK(coarse.boundary <= 1e-3);
  CHECK(fine.boundary <= 1e-6);
  CHECK(coarse.inside <= fine.inside + 1e-15);
  CHECK(fine.inside <= coarse.inside + coarse.boundary + 1e-15);
  CHECK(fine.inside + fine.boundary <= coarse.inside + coarse.boundary + 1e-15);
  const auto mc = oracle::term_area_monte_carlo(t.a, t.b, t.lambda, pairs(box), 600, 16, 5);
  CHECK(std::abs(fine.value - mc.value) <= 3.0 * mc.std_error + fine.error_bound);
}

TEST_CASE("area is monotone in the box") {
  const CorrelationTerm t{{1}, {1}, 2.0};
  const double tol = 1e-5;
  const auto inner = term_area(t, BoxRegion({{0.6, 1.2}}), tol);
  const auto outer = term_area(t, BoxRegion({{0.5, 1.6}}), tol);
  CHECK(inner.value <= outer.value + 2.0 * tol);
  const CorrelationTerm t3{{1, 2}, {1, 1}, 1.5};
  const auto inner3 = term_area(t3, BoxRegion({{0.5, 1.0}, {0.5, 1.0}}), tol);
  const auto outer3 = term_area(t3, BoxRegion({{0.4, 1.5}, {0.3, 1.2}}), tol);
  CHECK(inner3.value <= outer3.value + 2.0 * tol);
}

TEST_CASE("pointwise membership agrees with the oracle predicate") {
  const BoxRegion box({{0.35, 1.5}, {0.4, 1.4}});
  const auto p = pairs(box);
  int inside = 0;
  for (const auto& t : enumerate_terms(3, 1.5, box)) {
    for (int i = 0; i < 60; ++i) {
      for (int k = 0; k < 60; ++k) {
        const double x = (i + 0.37) / 60;
        const double y = (k + 0.61) / 60;
        const bool lib = term_region_contains(t, box, x, y);
        REQUIRE(lib == oracle::in_term_region(t.a, t.b, t.lambda, p, x, y));
        inside += lib;
      }
    }
  }
  CHECK(inside > 0);
}

TEST_CASE("Monte Carlo estimate is reproducible") {
  const CorrelationTerm t{{2}, {1}, 1.0};
  const BoxRegion box({{0.4, 1.0}});
  const auto a = monte_carlo_term_area(t, box, 100000, 42);
  const auto b = monte_carlo_term_area(t, box, 100000, 42);
  const auto c = monte_carlo_term_area(t, box, 100000, 43);
  CHECK(a.value == b.value);
  CHECK(a.std_error == b.std_error);
  CHECK(a.value != c.value);
}

TEST_CASE("area errors") {
  const CorrelationTerm t{{1}, {1}, 1.0};
  CHECK_THROWS_AS(term_area(t, BoxRegion({{-0.5, 0.5}}), 1e-4), DomainError);
  CHECK_THROWS_AS(term_area(t, BoxRegion({{0.5, 0.9}}), 0.0), DomainError);
  CHECK_THROWS_AS(term_area(t, BoxRegion({{0.5, 0.9}, {0.5, 0.9}}), 1e-4), DomainError);
  CHECK_THROWS_AS(term_area({{2}, {2}, 1.0}, BoxRegion({{0.5, 0.9}}), 1e-4), DomainError);
  CHECK_THROWS_AS(monte_carlo_term_area(t, BoxRegion({{0.5, 0.9}}), 1, 1), DomainError);

  QuadtreeOptions shallow;
  shallow.max_depth = 3;
  try {
    term_area(t, BoxRegion({{0.5, 0.9}}), 1e-8, shallow);
    FAIL("expected a convergence error");
  } catch (const ConvergenceError& e) {
    CHECK(e.residual() > 1e-8);
  }
  QuadtreeOptions few;
  few.max_cells = 100;
  CHECK_THROWS_AS(term_area(t, BoxRegion({{0.5, 0.9}}), 1e-8, few), ConvergenceError);
}
