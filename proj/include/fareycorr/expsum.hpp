#pragma once

#include <complex>
#include <cstdint>
#include <span>
#include <vector>

#include "fareycorr/farey.hpp"
#include "fareycorr/sieve.hpp"

namespace fareycorr {

/// sum over gamma in F_Q of e(r gamma), e(t) = exp(2 pi i t), accumulated in
/// sequence order with compensated sums. The phase r a / q is reduced mod 1
/// in exact integer arithmetic before conversion to radians.
std::complex<double> farey_exponential_sum_direct(const FareySequence& sequence, std::int64_t r);

/// Streaming variant over F_Q without materializing the sequence.
std::complex<double> farey_exponential_sum_direct(std::int64_t order, std::int64_t r);

/// Direct sums for several frequencies in one pass over the sequence, using
/// per-denominator tables of q-th roots of unity. Bit-identical to calling the
/// single-frequency overload for each r.
std::vector<std::complex<double>> farey_exponential_sums_direct(const FareySequence& sequence,
                                                                std::span<const std::int64_t> rs);

/// Divisor-sum form of the same quantity: sum over d | r, d <= Q of
/// d M(floor(Q / d)). Exact. Throws DomainError for r = 0 and RangeError when
/// Q exceeds the table.
std::int64_t farey_exponential_sum_identity(const SieveTables& tables, std::int64_t order,
                                            std::int64_t r);

}  // namespace fareycorr
