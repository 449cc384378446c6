//---------------------------------------------------------------------------//
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file dimerdiff/grating_optics.hpp
//! Point-particle transmission through a grating of trapezoidal bars.
//---------------------------------------------------------------------------//
#pragma once

#include <complex>
#include <utility>
#include <vector>

#include "quadrature.hpp"

namespace dimerdiff
{
//---------------------------------------------------------------------------//
/*!
 * Grating of equally spaced trapezoidal bars.
 *
 * The grating is periodic in y and the bars run along z. At the exit face
 * (x = 0) the slit spans (-s/2, s/2); the bar walls lean outward by the wedge
 * angle so that the entrance face (x = -t) is wider by t tan(beta) per side.
 */
struct GratingGeometry
{
    double period = 100;    //!< d [nm]
    double slit = 60;       //!< s [nm]
    double thickness = 120; //!< t [nm]
    double wedge = 0;       //!< beta [rad]

    // Throws DomainError unless 0 < s < d, t > 0, 0 <= beta < pi/2
    void validate() const;
};

//! van der Waals C3 of each constituent with the bar material [meV nm^3]
struct VdwCoupling
{
    double c3_first = 0;
    double c3_second = 0;
};

//! Incident constituent (momentum is the mass share of the dimer momentum)
struct ConstituentBeam
{
    double mass = 0;       //!< [amu]
    double speed = 0;      //!< v' [nm/ps]
    double incidence = 0;  //!< theta' [rad]

    double momentum() const;  //!< [meV ps / nm]
    double momentum_x() const;
    double momentum_y() const;
};

//---------------------------------------------------------------------------//
//! Open part of one slit, (lower, upper) in y [nm]; empty if lower >= upper
struct OpenInterval
{
    double lower = 0;
    double upper = 0;

    double width() const { return upper > lower ? upper - lower : 0.0; }
    bool empty() const { return !(upper > lower); }
    bool contains(double y) const { return y > lower && y < upper; }
};

// Slit region not hidden behind a bar for incidence angle theta'
OpenInterval open_interval(GratingGeometry const& geometry, double incidence);

//---------------------------------------------------------------------------//
/*!
 * Eikonal transmission function tau(y) of one constituent.
 *
 * tau vanishes behind bars and in the shadow; in the open interval it is the
 * pure phase exp(i Phi(y)) accumulated along the straight path through the
 * -C3/L^3 attraction of the two bars confining the slit. For theta' > beta
 * the closed form is used; otherwise the depth integral over the bars is
 * evaluated numerically. Negative angles use the mirror image y -> -y.
 */
class PointParticleTransmission
{
  public:
    PointParticleTransmission(GratingGeometry const& geometry,
                              double c3,
                              double speed,
                              double incidence);

    GratingGeometry const& geometry() const { return geometry_; }
    double c3() const { return c3_; }
    double speed() const { return speed_; }
    double incidence() const { return incidence_; }
    OpenInterval const& open() const { return open_; }

    //! Phi(y); throws DomainError unless y lies inside open()
    double phase(double y) const;

    //! |dPhi/dy| inside open(), used to size quadrature panels
    double phase_rate(double y) const;

    //! Periodic tau(y)
    std::complex<double> operator()(double y) const;

    //! Reduce y into [-d/2, d/2)
    double reduce(double y) const;

    //! True when the closed-form phase applies (|theta'| > beta)
    bool analytic() const { return analytic_; }

  private:
    GratingGeometry geometry_;
    double c3_;
    double speed_;
    double incidence_;
    OpenInterval open_;
    bool mirrored_;
    bool analytic_;
    double tan_theta_;  // of |theta'|
    double tan_beta_;
    double prefactor_;  // C3 / (hbar v' cos^4 theta')

    double phase_unmirrored(double y) const;
    double rate_unmirrored(double y) const;
    // int_{-t}^{0} h^{-power} dx for the right and left wall distances
    std::pair<double, double> depth_integral(double y, int power) const;
};

//! Phi(y) for one constituent beam (convenience wrapper)
double phase_shift(GratingGeometry const& geometry,
                   double c3,
                   ConstituentBeam const& beam,
                   double y);

//! tau(y) for one constituent beam (convenience wrapper)
std::complex<double> transmission_pp(GratingGeometry const& geometry,
                                     double c3,
                                     ConstituentBeam const& beam,
                                     double y);

//---------------------------------------------------------------------------//
/*!
 * Resolution of the periodic Y quadrature.
 *
 * Panels of \c panel_order Gauss-Legendre points cover each open region;
 * in the smooth interior the density is \c points_per_period per grating
 * period and near the walls panels shrink so each spans at most
 * 8 * 4096 / points_per_period radians. Points closer than \c edge_band to
 * a wall of a constituent with C3 > 0 are left out.
 */
struct YQuadrature
{
    int points_per_period = 4096;
    int panel_order = 16;
    double edge_band = 0.1;   //!< [nm]
    double offset = 0;        //!< shift of the integration window [nm]

    PanelSpec panels(double period) const;
};

//! Fourier coefficient c_n of tau over one period
struct FourierCoefficient
{
    int n;
    std::complex<double> value;
};

// c_n = (1/d) int_{-d/2}^{d/2} exp(-2 pi i n Y / d) tau(Y) dY, n in [n_min, n_max]
std::vector<FourierCoefficient>
pp_diffraction_amplitudes(PointParticleTransmission const& tau,
                          int n_min,
                          int n_max,
                          YQuadrature const& quadrature = {});

//! Hoinkes' rule: C3 scales with the static dipole polarizability
double estimate_c3_hoinkes(double reference_c3,
                           double reference_polarizability,
                           double target_polarizability);

}  // namespace dimerdiff
