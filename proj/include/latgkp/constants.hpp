#pragma once

namespace latgkp::constants {

// CODATA 2018
inline constexpr double hbar = 1.054571817e-34;        // J s
inline constexpr double c_light = 2.99792458e8;        // m/s
inline constexpr double atomic_mass_unit = 1.66053906892e-27;  // kg
inline constexpr double pi = 3.14159265358979323846;
inline constexpr double two_pi = 2.0 * pi;
inline constexpr double sqrt_pi = 1.77245385090551602730;

}  // namespace latgkp::constants
