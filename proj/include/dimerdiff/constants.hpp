//---------------------------------------------------------------------------//
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file dimerdiff/constants.hpp
//! Internal unit system: meV, nm, ps, amu. Angles in radians unless a name
//! says otherwise.
//---------------------------------------------------------------------------//
#pragma once

#include <numbers>

namespace dimerdiff::units
{
inline constexpr double pi = std::numbers::pi;

//! Reduced Planck constant [meV ps]
inline constexpr double hbar = 0.6582119569;

//! Atomic mass unit expressed in meV ps^2 / nm^2
inline constexpr double amu = 1.66053906660e-27 / 1.602176634e-28;

//! hbar^2 / (1 amu) [meV nm^2]
inline constexpr double hbar2_per_amu = hbar * hbar / amu;

//! Boltzmann constant [meV / K]
inline constexpr double boltzmann = 8.617333262e-2;

//! One metre per second in nm / ps
inline constexpr double meter_per_second = 1.0e-3;

//! One microelectronvolt in meV
inline constexpr double micro_ev = 1.0e-3;

inline constexpr double degree = pi / 180.0;

constexpr double to_radians(double deg) { return deg * degree; }
constexpr double to_degrees(double rad) { return rad / degree; }

}  // namespace dimerdiff::units
