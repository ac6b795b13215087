#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "fareycorr/box.hpp"
#include "fareycorr/polygon.hpp"

namespace fareycorr {

/// One summand of the nu-level area formula: integer vectors A, B of length
/// nu - 1 with gcd(A_j, B_j) = 1, and the scale Lambda that bounds the box.
struct CorrelationTerm {
  std::vector<std::int64_t> a;
  std::vector<std::int64_t> b;
  double lambda = 1.0;

  int nu() const noexcept { return static_cast<int>(a.size()) + 1; }
  std::size_t dimension() const noexcept { return a.size(); }

  /// Lexicographic in (A, B).
  friend auto operator<=>(const CorrelationTerm& lhs, const CorrelationTerm& rhs) {
    if (auto c = lhs.a <=> rhs.a; c != 0) return c;
    return lhs.b <=> rhs.b;
  }
  friend bool operator==(const CorrelationTerm& lhs, const CorrelationTerm& rhs) {
    return lhs.a == rhs.a && lhs.b == rhs.b;
  }
};

/// Throws DomainError unless A and B have equal nonzero length, positive
/// entries, coprime pairs, and lambda > 0.
void validate_term(const CorrelationTerm& term);

/// c_Lambda = pi^2 Lambda / 3.
double c_lambda(double lambda) noexcept;

/// Lower edge 3/(pi^2 Lambda) of the y-range of Omega_{A,B,Lambda}.
double omega_min_y(double lambda) noexcept;

/// T_{A,B}(x, y)_j = (3/pi^2) B_j / (y (A_j y - B_j x)). Throws DomainError if
/// y <= 0 or some A_j y - B_j x <= 0.
std::vector<double> map_t_ab(const CorrelationTerm& term, double x, double y);

/// Half-planes cutting out Omega_{A,B,Lambda}: 0 <= x <= y <= 1,
/// y >= 3/(pi^2 Lambda), 0 <= A_j y - B_j x <= 1. The open/closed status of
/// each edge does not affect areas.
std::vector<HalfPlane> omega_constraints(const CorrelationTerm& term);

/// Omega_{A,B,Lambda} as an exactly clipped convex polygon (empty if degenerate).
ConvexPolygon omega_polygon(const CorrelationTerm& term);

/// T(u) = (u_1 - u_2, ..., u_{n-1} - u_n, u_n).
std::vector<double> difference_transform(std::span<const double> u);

/// T^{-1}(v) = suffix sums (v_1 + ... + v_n, ..., v_n).
std::vector<double> suffix_sum_transform(std::span<const double> v);

/// Phi_{A,B} = T o T_{A,B}.
std::vector<double> map_phi(const CorrelationTerm& term, double x, double y);

struct TermLimits {
  /// Largest Lambda accepted; the term count grows like c_Lambda^{4(nu-1)}.
  double max_lambda = 64.0;
};

/// Every coprime (A, B) with entries in [1, ceil(nu c_Lambda^2)] whose area
/// term can be nonzero for `box`, sorted lexicographically.
///
/// A candidate is dropped only when one of these exact necessary conditions
/// fails, so the result is a superset of the contributing terms:
///  * T_{A,B} component j is at least (3/pi^2) B_j on Omega, hence must stay
///    below the top of axis j of T^{-1}(box);
///  * a point of Omega reaching that range needs y >= sqrt((3/pi^2) B_j / (A_j t_j))
///    and, when A_j > B_j, y <= 1 / (A_j - B_j); these y-ranges and
///    y >= 3/(pi^2 Lambda) must intersect over all j;
///  * the convex polygon Omega_{A,B,Lambda}, clipped exactly, has positive area.
///
/// Throws DomainError if the box is not in the positive orthant, does not
/// match nu, or is not inside (0, Lambda)^{nu-1}; RangeError if Lambda exceeds
/// limits.max_lambda.
std::vector<CorrelationTerm> enumerate_terms(int nu, double lambda, const BoxRegion& box,
                                             const TermLimits& limits = {});

}  // namespace fareycorr
