#pragma once

#include <numbers>

namespace gft {

// k = sqrt(2) + 1, the scale of the cardioid-like function phi_R.
inline constexpr double kPhiR = std::numbers::sqrt2 + 1.0;
inline constexpr double kE = std::numbers::e;
inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

}  // namespace gft
