#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace fareycorr {

/// Tables of Euler's totient phi, the Moebius function mu, the Mertens
/// function M(n) = sum_{k<=n} mu(k) and the totient summatory function
/// N_n = sum_{k<=n} phi(k), for 0 <= n <= limit (index 0 holds zeros).
///
/// Memory is about 21 bytes per index (4 for phi, 1 for mu, 8 each for the
/// two cumulative arrays), i.e. roughly three machine words. The linear sieve
/// needs a transient prime list of about limit / ln(limit) entries on top.
///
/// Immutable once built; safe to share between threads.
class SieveTables {
 public:
  /// Largest limit accepted when no ceiling is given explicitly.
  static constexpr std::uint64_t kDefaultMaxLimit = 100'000'000;

  /// Name of the environment variable that overrides kDefaultMaxLimit.
  static constexpr const char* kLimitEnvVar = "FAREYCORR_MAX_SIEVE_LIMIT";

  /// Builds all tables up to `limit`. Throws SizingError if limit is 0 or
  /// exceeds `max_limit`.
  SieveTables(std::uint64_t limit, std::uint64_t max_limit);

  std::uint64_t limit() const noexcept { return limit_; }

  std::uint32_t phi(std::uint64_t n) const { return phi_[checked(n)]; }
  int mu(std::uint64_t n) const { return mu_[checked(n)]; }
  std::int64_t mertens(std::uint64_t n) const { return mertens_[checked(n)]; }
  std::uint64_t phi_cumulative(std::uint64_t n) const { return phi_cumulative_[checked(n)]; }

  std::span<const std::uint32_t> phi_table() const noexcept { return phi_; }
  std::span<const std::int8_t> mu_table() const noexcept { return mu_; }
  std::span<const std::int64_t> mertens_table() const noexcept { return mertens_; }
  std::span<const std::uint64_t> phi_cumulative_table() const noexcept { return phi_cumulative_; }

 private:
  std::uint64_t checked(std::uint64_t n) const;

  std::uint64_t limit_;
  std::vector<std::uint32_t> phi_;
  std::vector<std::int8_t> mu_;
  std::vector<std::int64_t> mertens_;
  std::vector<std::uint64_t> phi_cumulative_;
};

/// Ceiling on sieve limits: $FAREYCORR_MAX_SIEVE_LIMIT if set to a positive
/// integer, otherwise SieveTables::kDefaultMaxLimit.
std::uint64_t configured_max_sieve_limit();

SieveTables build_sieves(std::uint64_t limit);

/// |F_Q| = N_Q = sum_{k<=Q} phi(k). Throws RangeError if Q is 0 or beyond the
/// table.
std::uint64_t farey_cardinality(const SieveTables& tables, std::uint64_t order);

}  // namespace fareycorr
