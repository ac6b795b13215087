#include "fareycorr/sieve.hpp"

#include <cstdlib>
#include <limits>
#include <string>

#include "fareycorr/errors.hpp"

namespace fareycorr {

SieveTables::SieveTables(std::uint64_t limit, std::uint64_t max_limit) : limit_(limit) {
  if (limit == 0) throw SizingError("sieve limit must be at least 1");
  if (limit > max_limit) {
    throw SizingError("sieve limit " + std::to_string(limit) + " exceeds the configured maximum " +
                      std::to_string(max_limit));
  }
  if (limit > std::numeric_limits<std::uint32_t>::max()) {
    throw SizingError("sieve limit must fit the 32-bit totient table");
  }
  const std::size_t size = static_cast<std::size_t>(limit) + 1;
  phi_.assign(size, 0);
  mu_.assign(size, 0);
  mertens_.assign(size, 0);
  phi_cumulative_.assign(size, 0);

  // Linear sieve: every composite is struck exactly once, by its least prime.
  std::vector<std::uint32_t> primes;
  phi_[1] = 1;
  mu_[1] = 1;
  for (std::uint64_t n = 2; n <= limit; ++n) {
    if (phi_[n] == 0) {
      primes.push_back(static_cast<std::uint32_t>(n));
      phi_[n] = static_cast<std::uint32_t>(n - 1);
      mu_[n] = -1;
    }
    for (const std::uint32_t p : primes) {
      const std::uint64_t m = n * p;
      if (m > limit) break;
      if (n % p == 0) {
        phi_[m] = phi_[n] * p;
        mu_[m] = 0;
        break;
      }
      phi_[m] = phi_[n] * (p - 1);
      mu_[m] = static_cast<std::int8_t>(-mu_[n]);
    }
  }

  for (std::uint64_t n = 1; n <= limit; ++n) {
    mertens_[n] = mertens_[n - 1] + mu_[n];
    phi_cumulative_[n] = phi_cumulative_[n - 1] + phi_[n];
  }
}

std::uint64_t SieveTables::checked(std::uint64_t n) const {
  if (n == 0 || n > limit_) {
    throw RangeError("index " + std::to_string(n) + " is outside [1, " + std::to_string(limit_) +
                     "]");
  }
  return n;
}

std::uint64_t configured_max_sieve_limit() {
  if (const char* raw = std::getenv(SieveTables::kLimitEnvVar)) {
    char* end = nullptr;
    const unsigned long long value = std::strtoull(raw, &end, 10);
    if (end != raw && *end == '\0' && value > 0) return value;
  }
  return SieveTables::kDefaultMaxLimit;
}

SieveTables build_sieves(std::uint64_t limit) {
  return SieveTables(limit, configured_max_sieve_limit());
}

std::uint64_t farey_cardinality(const SieveTables& tables, std::uint64_t order) {
  if (order == 0) throw RangeError("Farey order must be at least 1");
  return tables.phi_cumulative(order);
}

}  // namespace fareycorr
