#include <atomic>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "fareycorr/format.hpp"
#include "fareycorr/numeric.hpp"
#include "fareycorr/parallel.hpp"

using namespace fareycorr;

TEST_CASE("compensated sum recovers cancelled low-order terms") {
  CompensatedSum s;
  s.add(1.0);
  for (int i = 0; i < 1000; ++i) s.add(1e-16);
  s.add(-1.0);
  CHECK(s.value() == doctest::Approx(1e-13).epsilon(1e-12));

  CompensatedSum big;
  big += 1e100;
  big += 1.0;
  big += -1e100;
  CHECK(big.value() == 1.0);

  CompensatedSum left, right;
  left.add(0.1);
  right.add(0.2);
  left.merge(right);
  CHECK(left.value() == doctest::Approx(0.3));

  CompensatedComplexSum c;
  c.add({1.0, -1.0});
  c.add({0.5, 1.0});
  CHECK(c.value() == std::complex<double>(1.5, 0.0));
}

TEST_CASE("partition covers the range in order") {
  for (std::size_t count : {0u, 1u, 7u, 100u}) {
    for (unsigned workers : {1u, 3u, 8u, 200u}) {
      const auto chunks = partition(count, workers);
      std::size_t next = 0;
      for (const auto& c : chunks) {
        CHECK(c.begin == next);
        CHECK(c.end >= c.begin);
        next = c.end;
      }
      CHECK(next == count);
      CHECK(chunks.size() <= std::max<std::size_t>(1, workers));
    }
  }
}

TEST_CASE("for_each_chunk visits everything and rethrows") {
  std::vector<int> seen(1000, 0);
  for_each_chunk(seen.size(), 4, [&](std::size_t, Chunk c) {
    for (std::size_t i = c.begin; i < c.end; ++i) ++seen[i];
  });
  for (int v : seen) REQUIRE(v == 1);
  CHECK_THROWS_AS(for_each_chunk(10, 3,
                                 [](std::size_t i, Chunk) {
                                   if (i == 1) throw std::runtime_error("boom");
                                 }),
                  std::runtime_error);
}

TEST_CASE("reals print with 17 significant digits and round-trip") {
  CHECK(format_real(0.1) == "0.10000000000000001");
  CHECK(format_real(1.0) == "1");
  for (double v : {std::acos(-1.0), 1.0 / 3.0, 6.02e23, -2.5e-300}) {
    CHECK(std::stod(format_real(v)) == v);
  }
}
