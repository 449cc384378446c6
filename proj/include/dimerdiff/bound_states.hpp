//---------------------------------------------------------------------------//
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file dimerdiff/bound_states.hpp
//! Rotational bound states of a weakly bound two-body cluster.
//---------------------------------------------------------------------------//
#pragma once

#include <array>
#include <complex>
#include <string>
#include <vector>

#include "potential.hpp"

namespace dimerdiff
{
//---------------------------------------------------------------------------//
/*!
 * Lowest vibrational state of end-over-end rotation l.
 *
 * The radial function R_l is tabulated on a strictly increasing grid [nm]
 * with values in nm^{-3/2}, normalised so that int R_l^2 r^2 dr = 1. Outside
 * the grid it is taken as zero.
 */
struct BoundState
{
    int l = 0;
    double energy = 0;  //!< [meV], negative
    std::vector<double> radius;
    std::vector<double> values;

    // Interpolated R_l(r) (cubic Lagrange on the four nearest grid points)
    double operator()(double r) const;

    // int R_l^2 r^2 dr on the stored grid
    double norm() const;

    // Sign changes of R_l, ignoring points below 1e-8 of the peak
    int node_count() const;

    //! Radii enclosing the region where |r R_l| exceeds rel * max |r R_l|
    std::pair<double, double> support(double rel) const;
};

//---------------------------------------------------------------------------//
//! Numerical settings for the Numerov eigenvalue search
struct SolverOptions
{
    //! Step of the uniform grid in x = ln r
    double log_step = 2.0e-3;
    //! Bisection stops when the energy bracket is narrower than this [meV]
    double energy_tolerance = 1.0e-6;
    int max_iterations = 200;
    //! Inner boundary where V exceeds this multiple of the well depth
    double core_factor = 1.0e3;
    //! Decades of WKB decay beyond the outer turning point
    double tail_decades = 12.0;
    //! Box radius for the existence test, in units of the well position
    double search_box_factor = 500.0;
};

// Solve for every zero-node bound state with 0 <= l <= l_max
std::vector<BoundState> solve_bound_states(RadialPotential const& potential,
                                           double reduced_mass,
                                           int l_max,
                                           SolverOptions const& options = {});

//---------------------------------------------------------------------------//
//! A dimer constituent treated as a point particle
struct Constituent
{
    std::string name;
    double mass = 0;  //!< [amu]
    //! Lowest internal (j = 0 -> 2) excitation energy [meV]; 0 if unknown
    double rotational_threshold = 0;
};

class DimerSpecies
{
  public:
    DimerSpecies(std::string name,
                 Constituent first,
                 Constituent second,
                 bool identical,
                 std::vector<BoundState> states);

    // Solve the radial problem with the species' reduced mass
    static DimerSpecies solve(std::string name,
                              Constituent first,
                              Constituent second,
                              bool identical,
                              RadialPotential const& potential,
                              int l_max,
                              SolverOptions const& options = {});

    std::string const& name() const { return name_; }
    Constituent const& first() const { return first_; }
    Constituent const& second() const { return second_; }
    bool identical() const { return identical_; }
    double total_mass() const { return first_.mass + second_.mass; }
    double reduced_mass() const
    {
        return first_.mass * second_.mass / total_mass();
    }

    std::vector<BoundState> const& states() const { return states_; }
    bool has_state(int l) const;
    // Throws UnknownState
    BoundState const& state(int l) const;

  private:
    std::string name_;
    Constituent first_;
    Constituent second_;
    bool identical_;
    std::vector<BoundState> states_;
};

//! E_{l_to} - E_{l_from} [meV]
double transition_energy(DimerSpecies const& species, int l_from, int l_to);

//! Internal state |l m>
struct StateIndex
{
    int l = 0;
    int m = 0;
};

/*!
 * Form factor F(q) = int d^3r exp(-i q.r) phi_final^*(r) phi_initial(r).
 *
 * The wave vector q = p / hbar is in nm^{-1}. Evaluated through the
 * partial-wave expansion of the plane wave.
 */
std::complex<double> form_factor(DimerSpecies const& species,
                                 StateIndex final_state,
                                 StateIndex initial_state,
                                 std::array<double, 3> const& wavevector);

}  // namespace dimerdiff
