//---------------------------------------------------------------------------//
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file dimerdiff/potential.hpp
//---------------------------------------------------------------------------//
#pragma once

#include <filesystem>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace dimerdiff
{
//! Interpolation rule between tabulated potential points
enum class Interpolation
{
    linear,
    pchip,  //!< monotone piecewise cubic Hermite
};

Interpolation interpolation_from_string(std::string const& name);

//---------------------------------------------------------------------------//
/*!
 * Spherically symmetric interaction between the two dimer constituents.
 *
 * Energies in meV, radii in nm. The analytic form is Lennard-Jones (12,6);
 * the tabulated form interpolates (r, V) pairs, acts as a hard wall below its
 * first radius and vanishes beyond its last.
 */
class RadialPotential
{
  public:
    //! Location and value of the potential minimum
    struct Well
    {
        double radius;
        double depth;  //!< V at the minimum (negative)
    };

    static RadialPotential lennard_jones(double epsilon, double sigma);
    static RadialPotential tabulated(std::vector<double> radius,
                                     std::vector<double> value,
                                     Interpolation rule = Interpolation::pchip);
    static RadialPotential from_file(std::filesystem::path const& path,
                                     Interpolation rule = Interpolation::pchip);
    static RadialPotential zero();

    double operator()(double r) const { return eval_(r); }

    //! Deepest point, or nothing if the potential is never attractive
    std::optional<Well> well() const { return well_; }

    //! Radius below which the wave function is forced to vanish (0 if none)
    double hard_wall() const { return hard_wall_; }

    /*!
     * Smallest radius r >= hard_wall() inside the repulsive core with
     * V(r) <= threshold. Requires a well.
     */
    double core_radius(double threshold) const;

    std::string const& description() const { return description_; }

  private:
    RadialPotential() = default;

    std::function<double(double)> eval_;
    std::optional<Well> well_;
    double hard_wall_ = 0;
    std::string description_;
};

}  // namespace dimerdiff
