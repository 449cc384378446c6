//---------------------------------------------------------------------------//
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file dimerdiff/config.hpp
//! JSON run configuration.
//---------------------------------------------------------------------------//
#pragma once

#include <filesystem>
#include <string>

#include "bound_states.hpp"
#include "diffraction_engine.hpp"
#include "grating_optics.hpp"
#include "kinematics.hpp"

namespace dimerdiff
{
//! Dimer interaction selection
struct PotentialConfig
{
    std::string kind = "lennard_jones";  //!< lennard_jones | tabulated | zero
    double epsilon = 0;                  //!< [meV]
    double sigma = 0;                    //!< [nm]
    std::filesystem::path file;          //!< tabulated r [nm], V [meV]
    Interpolation interpolation = Interpolation::pchip;
};

struct OutputConfig
{
    std::filesystem::path directory = "out";
    int n_min = -10;
    int n_max = 10;
    bool components = true;
    double population_floor = 1e-4;
    double detection_floor = 0;
    double grid_step = 1e-4;    //!< [deg]
    double grid_margin = 0.05;  //!< [deg]
};

struct RunConfig
{
    std::string species_name;
    Constituent first;
    Constituent second;
    bool identical = false;
    PotentialConfig potential;
    int l_max = 10;

    BeamSpec beam;
    GratingGeometry grating;
    VdwCoupling coupling;

    QuadratureSpec quadrature;
    SolverOptions solver;
    bool check_convergence = false;
    double convergence_tolerance = 0.005;

    OutputConfig output;
};

// Parse JSON text; relative file names resolve against base_dir. Throws
// ConfigError on malformed input, unknown keys or invalid values.
RunConfig parse_config(std::string const& text,
                       std::filesystem::path const& base_dir = {});

RunConfig load_config(std::filesystem::path const& path);

RadialPotential make_potential(PotentialConfig const& config);

DimerSpecies solve_species(RunConfig const& config);

DiffractionSetup make_setup(RunConfig const& config, DimerSpecies species);

}  // namespace dimerdiff
