#pragma once

// CODATA-2018 / SI-2019 values. Planck's constant is exact by definition.

namespace atomwalk::constants {

inline constexpr double pi = 3.14159265358979323846264338327950288;
inline constexpr double two_pi = 2.0 * pi;

inline constexpr double planck = 6.62607015e-34;              // J s, exact
inline constexpr double hbar = planck / two_pi;               // J s
inline constexpr double atomic_mass_unit = 1.66053906660e-27; // kg

}  // namespace atomwalk::constants
