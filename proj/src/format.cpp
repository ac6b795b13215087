#include "fareycorr/format.hpp"

#include <cstdio>

namespace fareycorr {

std::string format_real(double value) {
  char buffer[64];
  std::snprintf(buffer, sizeof buffer, "%.17g", value);
  return buffer;
}

}  // namespace fareycorr
