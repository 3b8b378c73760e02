// Copyright 2026 The hfshift Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#pragma once

namespace hfshift::constants {

inline constexpr double pi = 3.14159265358979323846;
inline constexpr double two_pi = 2.0 * pi;

/// Reduced Planck constant, J*s (CODATA).
inline constexpr double hbar = 1.054571817e-34;

// Unit conversions used at the library boundaries. Internally everything is
// SI (m, kg, s, T, rad/s); measured inputs arrive in pm, cm^-3 and gauss.
inline constexpr double pm_to_m = 1e-12;
inline constexpr double m_to_pm = 1e12;
inline constexpr double per_cm3_to_per_m3 = 1e6;
inline constexpr double per_m3_to_per_cm3 = 1e-6;
inline constexpr double gauss_to_tesla = 1e-4;
inline constexpr double tesla_to_gauss = 1e4;

/// Field-shift coefficient conversion between the SI convention
/// (tesla per m^-3, i.e. T*m^3) and the experimental convention
/// (gauss per cm^-3, i.e. G*cm^3): C_gauss_cm3 = 1e10 * C_tesla_m3.
inline constexpr double coeff_si_to_gauss_cm3 = 1e10;
inline constexpr double coeff_gauss_cm3_to_si = 1e-10;

}  // namespace hfshift::constants
