#pragma once

#include <cstdint>

#include "cosserat/fields.hpp"

namespace cosserat {

/// Sum of Fourier modes cos(2 pi (kx x/lx + ky y/ly) + phase) for
/// 0 <= kx, ky <= modes, (kx, ky) != (0, 0), with coefficients uniform in
/// [-1, 1] and phases uniform in [0, 2 pi), divided by the mode count and
/// scaled by amplitude.  Fields are drawn in the order u1, u2, theta, each
/// mode consuming coefficient then phase.  Rates are zero.
FieldState random_smooth_state(const Grid& grid, std::uint64_t seed, double amplitude, int modes);

/// Same construction applied to the rates v1, v2, omega (drawn after the
/// displacement fields from the same generator).
FieldState random_smooth_state_with_rates(const Grid& grid, std::uint64_t seed, double amplitude, int modes);

}  // namespace cosserat
