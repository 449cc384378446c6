//---------------------------------------------------------------------------//
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file dimerdiff/diffraction_engine.hpp
//! Dimer transmission function and inelastic diffraction intensities.
//---------------------------------------------------------------------------//
#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include "bound_states.hpp"
#include "grating_optics.hpp"
#include "kinematics.hpp"

namespace dimerdiff
{
//---------------------------------------------------------------------------//
//! Transition |l' m'> -> |l m>; the grating conserves m
struct TransitionChannel
{
    int l_initial = 0;
    int m_initial = 0;
    int l_final = 0;
    int m_final = 0;
    double delta_e = 0;  //!< E_final - E_initial [meV]

    bool elastic() const { return l_initial == l_final; }
};

//---------------------------------------------------------------------------//
/*!
 * Quadrature orders for the (Y, r, alpha) integral.
 *
 * r is integrated with Gauss-Legendre in ln r between the inner and outer
 * edges of the bound-state support; alpha with Gauss-Legendre on [-1, 0]
 * and [0, 1] separately (n_alpha / 2 points each); Y with the panel rule of
 * YQuadrature at n_y points per period.
 */
struct QuadratureSpec
{
    int n_y = 4096;
    int n_r = 200;
    int n_alpha = 64;
    //! Outer radius [nm]; 0 selects it from the bound states
    double r_max = 0;
    //! |r R_l| relative level defining the radial support
    double radial_cutoff = 1e-10;
    double edge_band = 0.1;  //!< [nm]
    double y_offset = 0;     //!< [nm]

    // Multiply n_y, n_r and n_alpha by factor (n_alpha stays even)
    QuadratureSpec scaled(double factor) const;

    // Throws DomainError; requires n_alpha >= 2 l_max + 8
    void validate(int l_max) const;

    YQuadrature y_rule() const;
};

//---------------------------------------------------------------------------//
/*!
 * Fourier amplitudes of the dimer transmission function.
 *
 * For every (r, alpha) node the pair correlation
 *
 *   C_n(u) = (1/d) int dY exp(-2 pi i n Y / d) tau_1(Y + (m2/M) u) tau_2(Y - (m1/M) u)
 *
 * with u = alpha r is tabulated for all requested orders in one pass; the
 * amplitude of a channel is then the weighted sum
 *
 *   sqrt((2l+1)(2l'+1)) sum_{r,alpha} w r^2 R_l R_l' Pi_{ll'}^m(alpha) C_n(alpha r).
 */
class DiffractionEngine
{
  public:
    DiffractionEngine(DimerSpecies species,
                      PointParticleTransmission first,
                      PointParticleTransmission second,
                      QuadratureSpec const& quadrature,
                      int n_min,
                      int n_max,
                      int threads = 1);

    DimerSpecies const& species() const { return species_; }
    QuadratureSpec const& quadrature() const { return quadrature_; }
    int n_min() const { return n_min_; }
    int n_max() const { return n_max_; }
    double r_lower() const { return r_lower_; }
    double r_upper() const { return r_upper_; }

    //! tau^dim_{l m, l' m}(Y) evaluated directly on the (r, alpha) nodes
    std::complex<double>
    dimer_transmission(int l_final, int l_initial, int m, double y) const;

    //! (1/d) int exp(-2 pi i n Y / d) tau^dim_{l m, l' m}(Y) dY
    std::complex<double>
    amplitude(int n, int l_final, int l_initial, int m) const;

    /*!
     * (2l+1) p_{l'} sum_{|m| <= min(l,l')} |amplitude|^2 with p_{l'} the
     * supplied initial-state weight.
     */
    double intensity(int n,
                     int l_final,
                     int l_initial,
                     double initial_weight) const;

  private:
    DimerSpecies species_;
    PointParticleTransmission first_;
    PointParticleTransmission second_;
    QuadratureSpec quadrature_;
    int n_min_;
    int n_max_;

    double r_lower_ = 0;
    double r_upper_ = 0;
    std::vector<double> r_nodes_;
    std::vector<double> r_weights_;  // include r^2 dr = r^3 d(ln r)
    std::vector<double> a_nodes_;
    std::vector<double> a_weights_;
    std::vector<std::vector<double>> radial_;  // R_l at r nodes, by state
    std::vector<std::complex<double>> table_;  // [ir][ia][n]

    QuadratureRule y_reference_;
    PanelSpec y_panels_;

    struct Workspace;
    std::size_t state_index(int l) const;
    void build_table(int threads);
    void correlation(double u, std::complex<double>* out, Workspace& work) const;
};

//---------------------------------------------------------------------------//
//! Thermal weights p_l = (2l+1) exp(-E_l / k T), normalised over bound states
std::vector<double>
thermal_populations(DimerSpecies const& species, double temperature);

//! Everything needed to evaluate diffraction of one dimer beam
struct DiffractionSetup
{
    DimerSpecies species;
    BeamSpec beam;
    GratingGeometry grating;
    VdwCoupling coupling;

    //! tau of constituent 0 or 1
    PointParticleTransmission transmission(int which) const;
};

// Relative intensity of one order; throws ClosedChannel for closed channels
double intensity(DiffractionSetup const& setup,
                 int n,
                 int l_final,
                 int l_initial,
                 QuadratureSpec const& quadrature = {});

//---------------------------------------------------------------------------//
enum SweepFlag : std::uint32_t
{
    selection_rule_zero = 1u << 0,
    evanescent = 1u << 1,
    closed = 1u << 2,
    accuracy_warning = 1u << 3,
};

std::string describe_flags(std::uint32_t flags);

struct SweepEntry
{
    TransitionChannel channel;  //!< m fields unused (summed)
    int n = 0;
    double intensity = 0;   //!< relative to the total elastic zeroth order
    double angle = 0;       //!< theta_n [rad], NaN when not propagating
    std::uint32_t flags = 0;
};

struct SweepOptions
{
    //! Also evaluate channels forbidden by the identical-particle parity rule
    bool include_forbidden = false;
    //! Repeat with doubled quadrature and flag unconverged intensities
    bool check_convergence = false;
    double convergence_tolerance = 0.005;
    //! Intensities below this (relative) level are not convergence-checked
    double significance = 1e-6;
    int threads = 1;
};

struct SweepResult
{
    std::vector<SweepEntry> entries;
    std::vector<int> levels;          //!< l of each bound state
    std::vector<double> populations;  //!< by bound state
    double elastic_zeroth = 0;        //!< normalisation (absolute units)
    std::vector<std::string> errors;
};

// Every open channel between bound states for orders n_min..n_max
SweepResult channel_sweep(DiffractionSetup const& setup,
                          QuadratureSpec const& quadrature,
                          int n_min,
                          int n_max,
                          SweepOptions const& options = {});

}  // namespace dimerdiff
