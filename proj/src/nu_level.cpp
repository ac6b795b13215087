#include "fareycorr/nu_level.hpp"

#include <algorithm>

#include "fareycorr/errors.hpp"
#include "fareycorr/numeric.hpp"
#include "fareycorr/parallel.hpp"

namespace fareycorr {

NuLevelResult nu_level_measure(int nu, const BoxRegion& box, double tol,
                               const NuLevelOptions& options,
                               std::vector<CorrelationTerm>& terms,
                               std::vector<AreaEstimate>& areas) {
  if (!(tol > 0.0)) throw DomainError("tolerance must be positive");
  if (box.nu() != nu) throw DomainError("box dimension does not match nu - 1");
  if (!box.in_positive_orthant()) {
    throw DomainError("box must lie in the positive orthant; reverse and negate it first");
  }
  double lambda = options.lambda;
  if (lambda == 0.0) {
    for (const Interval& axis : box.intervals()) lambda = std::max(lambda, axis.hi);
  }

  terms = enumerate_terms(nu, lambda, box, options.limits);
  areas.assign(terms.size(), AreaEstimate{});
  NuLevelResult result{nu, box, 0.0, 0.0, terms.size(), tol, lambda};
  if (terms.empty()) return result;

  const double term_tol = tol / static_cast<double>(terms.size());
  for_each_chunk(terms.size(), options.workers, [&](std::size_t, Chunk chunk) {
    for (std::size_t i = chunk.begin; i < chunk.end; ++i) {
      areas[i] = term_area(terms[i], box, term_tol, options.quadtree);
    }
  });

  CompensatedSum value;
  CompensatedSum error;
  for (const AreaEstimate& area : areas) {
    value.add(area.value);
    error.add(area.error_bound);
  }
  result.value = 2.0 * value.value();
  result.error_bound = 2.0 * error.value();
  return result;
}

NuLevelResult nu_level_measure(int nu, const BoxRegion& box, double tol,
                               const NuLevelOptions& options) {
  std::vector<CorrelationTerm> terms;
  std::vector<AreaEstimate> areas;
  return nu_level_measure(nu, box, tol, options, terms, areas);
}

}  // namespace fareycorr
