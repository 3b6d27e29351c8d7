#pragma once

#include <numbers>

namespace moems {

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kVacuumPermittivity = 8.8541878128e-12;  // F/m
inline constexpr double kPlanck = 6.62607015e-34;                // J s
inline constexpr double kSpeedOfLight = 2.99792458e8;            // m/s

}  // namespace moems
