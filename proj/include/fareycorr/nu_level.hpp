#pragma once

#include <cstdint>

#include "fareycorr/box.hpp"
#include "fareycorr/correlation_terms.hpp"
#include "fareycorr/region_area.hpp"

namespace fareycorr {

struct NuLevelOptions {
  /// Lambda with box inside (0, Lambda)^{nu-1}; 0 selects the largest upper edge.
  double lambda = 0.0;
  unsigned workers = 1;
  TermLimits limits{};
  QuadtreeOptions quadtree{};
};

struct NuLevelResult {
  int nu = 2;
  BoxRegion box;
  double value = 0.0;
  double error_bound = 0.0;
  std::size_t term_count = 0;
  double tol = 0.0;
  double lambda = 0.0;
};

/// Limiting nu-level correlation measure of Farey fractions on a box in the
/// positive orthant:
///   R(box) = 2 sum_{(A_j, B_j) = 1} area(Omega_{A,B,Lambda} cap Phi_{A,B}^{-1}(box)).
/// Each enumerated term gets tolerance tol / term_count, so the total error
/// bound 2 sum_i error_i stays <= tol. Term areas may be computed on several
/// workers; the sum is always taken in lexicographic (A, B) order.
NuLevelResult nu_level_measure(int nu, const BoxRegion& box, double tol,
                               const NuLevelOptions& options = {});

/// Same as above, returning per-term areas (lexicographic order) as well.
NuLevelResult nu_level_measure(int nu, const BoxRegion& box, double tol,
                               const NuLevelOptions& options,
                               std::vector<CorrelationTerm>& terms,
                               std::vector<AreaEstimate>& areas);

}  // namespace fareycorr
