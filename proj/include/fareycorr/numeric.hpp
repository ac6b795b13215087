#pragma once

#include <cmath>
#include <complex>
#include <numbers>

namespace fareycorr {

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kPiSquared = std::numbers::pi * std::numbers::pi;

/// 3/pi^2: the asymptotic density N_Q / Q^2 and the repulsion threshold of g2.
inline constexpr double kThreeOverPiSquared = 3.0 / kPiSquared;

/// 1/zeta(2) = 6/pi^2.
inline constexpr double kInverseZeta2 = 6.0 / kPiSquared;

/// Neumaier's variant of Kahan summation. Order dependent, so callers that
/// need run-to-run identical results must feed terms in a fixed order.
class CompensatedSum {
 public:
  void add(double term) noexcept {
    const double t = sum_ + term;
    if (std::abs(sum_) >= std::abs(term)) {
      compensation_ += (sum_ - t) + term;
    } else {
      compensation_ += (term - t) + sum_;
    }
    sum_ = t;
  }

  CompensatedSum& operator+=(double term) noexcept {
    add(term);
    return *this;
  }

  void merge(const CompensatedSum& other) noexcept {
    add(other.sum_);
    add(other.compensation_);
  }

  double value() const noexcept { return sum_ + compensation_; }

 private:
  double sum_ = 0.0;
  double compensation_ = 0.0;
};

/// Componentwise compensated accumulation of complex terms.
class CompensatedComplexSum {
 public:
  void add(std::complex<double> term) noexcept {
    re_.add(term.real());
    im_.add(term.imag());
  }

  void merge(const CompensatedComplexSum& other) noexcept {
    re_.merge(other.re_);
    im_.merge(other.im_);
  }

  std::complex<double> value() const noexcept { return {re_.value(), im_.value()}; }

 private:
  CompensatedSum re_;
  CompensatedSum im_;
};

}  // namespace fareycorr
