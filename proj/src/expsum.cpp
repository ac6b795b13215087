#include "fareycorr/expsum.hpp"

#include <cmath>
#include <cstdlib>

#include "fareycorr/errors.hpp"
#include "fareycorr/numeric.hpp"

namespace fareycorr {
namespace {

// r a mod q in [0, q); (r mod q) a < q^2 cannot overflow for supported orders.
std::int64_t phase_residue(const FareyFraction& f, std::int64_t r) {
  std::int64_t residue = (r % f.q) * f.a % f.q;
  if (residue < 0) residue += f.q;
  return residue;
}

std::complex<double> root_of_unity(std::int64_t k, std::int64_t q) {
  const double angle = 2.0 * kPi * static_cast<double>(k) / static_cast<double>(q);
  return {std::cos(angle), std::sin(angle)};
}

std::complex<double> phase(const FareyFraction& f, std::int64_t r) {
  return root_of_unity(phase_residue(f, r), f.q);
}

}  // namespace

std::complex<double> farey_exponential_sum_direct(const FareySequence& sequence, std::int64_t r) {
  CompensatedComplexSum sum;
  for (const FareyFraction& f : sequence) sum.add(phase(f, r));
  return sum.value();
}

std::complex<double> farey_exponential_sum_direct(std::int64_t order, std::int64_t r) {
  CompensatedComplexSum sum;
  for (const FareyFraction& f : FareyRange(order)) sum.add(phase(f, r));
  return sum.value();
}

std::vector<std::complex<double>> farey_exponential_sums_direct(const FareySequence& sequence,
                                                                std::span<const std::int64_t> rs) {
  const std::int64_t order = sequence.order();
  std::vector<std::vector<std::complex<double>>> roots(static_cast<std::size_t>(order) + 1);
  for (std::int64_t q = 1; q <= order; ++q) {
    auto& table = roots[static_cast<std::size_t>(q)];
    table.reserve(static_cast<std::size_t>(q));
    for (std::int64_t k = 0; k < q; ++k) table.push_back(root_of_unity(k, q));
  }
  std::vector<CompensatedComplexSum> sums(rs.size());
  for (const FareyFraction& f : sequence) {
    const auto& table = roots[static_cast<std::size_t>(f.q)];
    for (std::size_t i = 0; i < rs.size(); ++i) {
      sums[i].add(table[static_cast<std::size_t>(phase_residue(f, rs[i]))]);
    }
  }
  std::vector<std::complex<double>> out;
  out.reserve(rs.size());
  for (const auto& sum : sums) out.push_back(sum.value());
  return out;
}

std::int64_t farey_exponential_sum_identity(const SieveTables& tables, std::int64_t order,
                                            std::int64_t r) {
  if (r == 0) throw DomainError("r must be nonzero; use farey_cardinality for r = 0");
  if (order < 1) throw RangeError("Farey order must be at least 1");
  const auto q = static_cast<std::uint64_t>(order);
  if (q > tables.limit()) throw RangeError("Farey order exceeds the sieve limit");
  const std::uint64_t magnitude = static_cast<std::uint64_t>(std::llabs(r));
  std::int64_t total = 0;
  for (std::uint64_t d = 1; d * d <= magnitude; ++d) {
    if (magnitude % d != 0) continue;
    const std::uint64_t pair[2] = {d, magnitude / d};
    for (int i = 0; i < (pair[0] == pair[1] ? 1 : 2); ++i) {
      const std::uint64_t divisor = pair[i];
      if (divisor > q) continue;
      total += static_cast<std::int64_t>(divisor) * tables.mertens(q / divisor);
    }
  }
  return total;
}

}  // namespace fareycorr
