#pragma once

#include <string>

namespace fareycorr {

/// Formats with 17 significant digits ("%.17g"), enough to round-trip a double.
std::string format_real(double value);

}  // namespace fareycorr
