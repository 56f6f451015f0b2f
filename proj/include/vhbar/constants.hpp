#pragma once

// Physical constants and unit conversions, SI throughout.

namespace vhbar::constants {

inline constexpr double pi = 3.14159265358979323846;

inline constexpr double c_light = 2.99792458e8;     // m/s
inline constexpr double G_newton = 6.67430e-11;     // m^3 kg^-1 s^-2
inline constexpr double hbar_si = 1.0546e-34;       // J s, present measured value

inline constexpr double year = 3.15576e7;           // s, Julian year
inline constexpr double kpc = 3.0856775814913673e19; // m
inline constexpr double M_sun = 1.989e30;           // kg
inline constexpr double hour = 3600.0;              // s

inline constexpr double arcsec = pi / (180.0 * 3600.0); // rad

} // namespace vhbar::constants
