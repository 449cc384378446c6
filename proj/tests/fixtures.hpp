//---------------------------------------------------------------------------//
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file tests/fixtures.hpp
//! Shared dimer species and grating parameters for the test suites.
//---------------------------------------------------------------------------//
#pragma once

#include "dimerdiff/bound_states.hpp"
#include "dimerdiff/constants.hpp"
#include "dimerdiff/diffraction_engine.hpp"

namespace dimerdiff::test
{
inline constexpr double d2_mass = 4.028204;
inline constexpr double h2_mass = 2.015650;
inline constexpr double lj_epsilon = 3.35;
inline constexpr double lj_sigma = 0.303;

inline RadialPotential calibrated_potential()
{
    return RadialPotential::lennard_jones(lj_epsilon, lj_sigma);
}

inline DimerSpecies const& d2d2()
{
    static DimerSpecies const species = DimerSpecies::solve(
        "(o-D2)2", {"o-D2", d2_mass, 22.0}, {"o-D2", d2_mass, 22.0}, true,
        calibrated_potential(), 8);
    return species;
}

inline DimerSpecies const& h2d2()
{
    static DimerSpecies const species = DimerSpecies::solve(
        "p-H2-o-D2", {"p-H2", h2_mass, 44.0}, {"o-D2", d2_mass, 22.0}, false,
        calibrated_potential(), 8);
    return species;
}

inline GratingGeometry grating(double wedge_deg = 5.0)
{
    return {100.0, 60.0, 120.0, units::to_radians(wedge_deg)};
}

inline BeamSpec beam(double incidence_deg)
{
    BeamSpec b;
    b.speed = 500 * units::meter_per_second;
    b.velocity_spread = 0.08;
    b.incidence = units::to_radians(incidence_deg);
    b.temperature = 0.4;
    return b;
}

inline DiffractionSetup setup(DimerSpecies const& species,
                              double incidence_deg,
                              double c3 = 0.32,
                              double wedge_deg = 5.0)
{
    return {species, beam(incidence_deg), grating(wedge_deg), {c3, c3}};
}

}  // namespace dimerdiff::test
