//---------------------------------------------------------------------------//
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file dimerdiff/kinematics.hpp
//! Conservation laws, peak angles and beam-regime diagnostics.
//---------------------------------------------------------------------------//
#pragma once

#include <string>
#include <vector>

#include "bound_states.hpp"
#include "grating_optics.hpp"

namespace dimerdiff
{
//---------------------------------------------------------------------------//
//! Incident dimer beam
struct BeamSpec
{
    double speed = 0.5;            //!< mean v' = <P'>/M [nm/ps]
    double velocity_spread = 0.08; //!< dv'/v'
    double incidence = 0;          //!< theta' [rad]
    double temperature = 0.4;      //!< translational T_b [K]
    double w0 = 3e-3;              //!< zeroth-order peak width [deg]
    double dw = 7e-4;              //!< velocity-spread width term [deg]

    // Throws DomainError on v' <= 0, spread outside [0, 1), |theta'| >= 90 deg
    void validate() const;
};

//! Centre-of-mass momentum M v' [meV ps / nm]
double dimer_momentum(double total_mass, double speed);

//! Kinetic energy P^2 / 2M [meV]
double kinetic_energy(double momentum, double total_mass);

//! Delta P_y = n 2 pi hbar / d [meV ps / nm]
double momentum_transfer(int n, double period);

/*!
 * Angle of the n-th principal maximum for an internal energy change
 * delta_e = E_final - E_initial:
 *
 *   sin(theta_n) = (1 - delta_e / (P'^2/2M))^{-1/2} [sin(theta') + n 2 pi hbar / (P' d)]
 *
 * Throws ClosedChannel when delta_e >= P'^2/2M and EvanescentOrder when
 * |sin(theta_n)| > 1.
 */
double diffraction_angle(int n,
                         double incidence,
                         double momentum,
                         double total_mass,
                         double delta_e,
                         double period);

//---------------------------------------------------------------------------//
//! Regime diagnostics; warnings are advisory
struct RegimeReport
{
    double kinetic_energy = 0;        //!< dimer P'^2/2M [meV]
    double binding_ratio = 0;         //!< |E_0| / kinetic energy
    double wavelength = 0;            //!< lambda' [nm]
    double slit_ratio = 0;            //!< s / lambda'
    double bar_ratio = 0;             //!< (d - s) / lambda'
    double constituent_energy[2] = {0, 0};  //!< m_i v'^2 / 2 [meV]
    std::vector<std::string> warnings;

    bool ok() const { return warnings.empty(); }
};

inline constexpr double binding_ratio_limit = 0.1;
inline constexpr double diffraction_ratio_limit = 100.0;

RegimeReport validate_regime(DimerSpecies const& species,
                             BeamSpec const& beam,
                             GratingGeometry const& grating);

}  // namespace dimerdiff
