//---------------------------------------------------------------------------//
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file tests/oracles/pairwise_phase.hpp
//! Eikonal phase from a direct area integral over the bar cross sections.
//---------------------------------------------------------------------------//
#pragma once

#include <cmath>
#include <limits>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "dimerdiff/constants.hpp"

namespace dimerdiff::oracle
{
/*!
 * Phase accumulated along the straight line through (x = 0, y) at angle
 * theta to the x axis, for a half-space wall density giving -C3/L^3.
 *
 * The pairwise -C6/R^6 sum over the bar volume, integrated along the whole
 * line and over the bar length in z, leaves
 *
 *   Phi = 3 C3 / (hbar v) * int_bars rho^{-4} dA
 *
 * where rho is the in-plane distance from the line to the area element.
 * Each bar occupies -t <= x <= 0 and extends to infinity away from the slit;
 * the walls lean outward by beta so the entrance is wider.
 */
inline double pairwise_phase(double slit,
                             double thickness,
                             double wedge,
                             double c3,
                             double speed,
                             double theta,
                             double y)
{
    using boost::math::quadrature::gauss_kronrod;
    double const inf = std::numeric_limits<double>::infinity();
    double const tb = std::tan(wedge);
    double const tt = std::tan(theta);
    double const ct = std::cos(theta);
    double const tol = 1e-13;

    auto line = [&](double x) { return y + x * tt; };
    auto kernel = [&](double x, double yp) {
        double rho = std::abs(yp - line(x)) * ct;
        return std::pow(rho, -4);
    };
    auto right = [&](double x) {
        double wall = 0.5 * slit - x * tb;
        return gauss_kronrod<double, 61>::integrate(
            [&](double yp) { return kernel(x, yp); }, wall, inf, 15, tol);
    };
    auto left = [&](double x) {
        double wall = -0.5 * slit + x * tb;
        return gauss_kronrod<double, 61>::integrate(
            [&](double yp) { return kernel(x, yp); }, -inf, wall, 15, tol);
    };
    double area = gauss_kronrod<double, 61>::integrate(right, -thickness, 0.0, 15, tol)
                  + gauss_kronrod<double, 61>::integrate(left, -thickness, 0.0, 15, tol);
    return 3 * c3 / (units::hbar * speed) * area;
}

}  // namespace dimerdiff::oracle
