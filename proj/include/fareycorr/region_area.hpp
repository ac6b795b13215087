#pragma once

#include <cstdint>

#include "fareycorr/box.hpp"
#include "fareycorr/correlation_terms.hpp"

namespace fareycorr {

/// Certified area bracket: inside <= true area <= inside + boundary.
struct AreaEstimate {
  double value = 0.0;        // inside + boundary / 2
  double error_bound = 0.0;  // boundary / 2
  double inside = 0.0;
  double boundary = 0.0;
  std::uint64_t cells = 0;  // cells classified
};

struct QuadtreeOptions {
  int max_depth = 40;
  std::uint64_t max_cells = 200'000'000;
};

/// Whether (x, y) lies in Omega_{A,B,Lambda} and Phi_{A,B}(x, y) lies in box.
/// Pointwise evaluation, used for sampling.
bool term_region_contains(const CorrelationTerm& term, const BoxRegion& box, double x, double y);

/// Area of {(x, y) in Omega_{A,B,Lambda} : Phi_{A,B}(x, y) in box} by adaptive
/// quadtree subdivision of Omega's bounding box.
///
/// Each cell is intersected exactly with the polygon Omega. On that piece the
/// components of T_{A,B} are bounded by interval arithmetic (y and
/// A_j y - B_j x are linear, so their ranges come from the piece's vertices),
/// and Phi = T o T_{A,B} by interval differences. A piece is IN when every
/// component range is inside its box axis, OUT when some range misses its
/// axis, and otherwise split. The largest undecided pieces are split first
/// until their total area is <= tol.
///
/// Throws DomainError for a box outside the positive orthant or a bad term or
/// tol, and ConvergenceError (carrying the residual bracket) when max_depth or
/// max_cells is reached first.
AreaEstimate term_area(const CorrelationTerm& term, const BoxRegion& box, double tol,
                       const QuadtreeOptions& options = {});

struct MonteCarloEstimate {
  double value = 0.0;
  double std_error = 0.0;
  std::uint64_t samples = 0;
};

/// Stratified Monte Carlo estimate of the same area: a g x g grid of strata
/// over Omega's bounding box with an equal number of uniform samples each.
/// Deterministic for a given seed (mt19937_64, 53-bit mantissa draws).
MonteCarloEstimate monte_carlo_term_area(const CorrelationTerm& term, const BoxRegion& box,
                                         std::uint64_t samples, std::uint64_t seed);

}  // namespace fareycorr
