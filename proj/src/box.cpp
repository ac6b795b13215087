#include "fareycorr/box.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>

#include "fareycorr/errors.hpp"
#include "fareycorr/format.hpp"

namespace fareycorr {

BoxRegion::BoxRegion(std::vector<Interval> intervals) : intervals_(std::move(intervals)) {
  if (intervals_.empty()) throw DomainError("a box needs at least one axis");
  positive_ = true;
  for (const Interval& axis : intervals_) {
    if (!std::isfinite(axis.lo) || !std::isfinite(axis.hi)) {
      throw DomainError("box bounds must be finite");
    }
    if (!(axis.lo < axis.hi)) throw DomainError("box axis needs lo < hi");
    if (axis.lo < 0.0) positive_ = false;
  }
}

BoxRegion BoxRegion::symmetric(std::span<const double> lambdas) {
  std::vector<Interval> axes;
  axes.reserve(lambdas.size());
  for (const double lambda : lambdas) {
    if (!(lambda > 0.0)) throw DomainError("symmetric box half-widths must be positive");
    axes.push_back({-lambda, lambda});
  }
  return BoxRegion(std::move(axes));
}

BoxRegion BoxRegion::parse(const std::string& text) {
  std::vector<Interval> axes;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t comma = std::min(text.find(',', start), text.size());
    const std::string item = text.substr(start, comma - start);
    const std::size_t colon = item.find(':');
    if (colon == std::string::npos) throw DomainError("box axis '" + item + "' is not lo:hi");
    const std::string lo_text = item.substr(0, colon);
    const std::string hi_text = item.substr(colon + 1);
    char* end = nullptr;
    const double lo = std::strtod(lo_text.c_str(), &end);
    if (lo_text.empty() || *end != '\0') throw DomainError("bad lower bound '" + lo_text + "'");
    const double hi = std::strtod(hi_text.c_str(), &end);
    if (hi_text.empty() || *end != '\0') throw DomainError("bad upper bound '" + hi_text + "'");
    axes.push_back({lo, hi});
    start = comma + 1;
  }
  return BoxRegion(std::move(axes));
}

double BoxRegion::max_abs_coordinate() const noexcept {
  double m = 0.0;
  for (const Interval& axis : intervals_) {
    m = std::max({m, std::abs(axis.lo), std::abs(axis.hi)});
  }
  return m;
}

BoxRegion BoxRegion::reversed_negated() const {
  std::vector<Interval> axes(intervals_.rbegin(), intervals_.rend());
  for (Interval& axis : axes) axis = {-axis.hi, -axis.lo};
  return BoxRegion(std::move(axes));
}

bool BoxRegion::contains(std::span<const double> point) const noexcept {
  if (point.size() != intervals_.size()) return false;
  for (std::size_t j = 0; j < point.size(); ++j) {
    if (!intervals_[j].contains(point[j])) return false;
  }
  return true;
}

std::string BoxRegion::to_string() const {
  std::string out;
  for (std::size_t j = 0; j < intervals_.size(); ++j) {
    if (j) out += ',';
    out += format_real(intervals_[j].lo);
    out += ':';
    out += format_real(intervals_[j].hi);
  }
  return out;
}

}  // namespace fareycorr
