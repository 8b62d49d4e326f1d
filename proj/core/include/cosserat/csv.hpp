#pragma once

#include <string>

namespace cosserat {

/// Shortest-round-trip-safe text for a double: 17 significant digits.
std::string format_double(double v);

}  // namespace cosserat
