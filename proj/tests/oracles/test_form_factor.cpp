//---------------------------------------------------------------------------//
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file tests/oracles/test_form_factor.cpp
//---------------------------------------------------------------------------//
#include <cmath>
#include <complex>
#include <vector>

#include <boost/math/quadrature/gauss.hpp>
#include <boost/math/special_functions/spherical_harmonic.hpp>
#include <doctest.h>

#include "fixtures.hpp"

using namespace dimerdiff;

namespace
{
/*!
 * int d^3r exp(-i q.r) R_f(r) Y_f^*(r^) R_i(r) Y_i(r^) on a tensor grid:
 * Gauss panels in ln r, Gauss-Legendre in cos(theta), trapezoid in phi.
 */
std::complex<double> tensor_form_factor(DimerSpecies const& species,
                                        StateIndex f,
                                        StateIndex i,
                                        std::array<double, 3> const& q)
{
    using boost::math::quadrature::gauss;
    using boost::math::spherical_harmonic;
    auto const& sf = species.state(f.l);
    auto const& si = species.state(i.l);
    double r_lo = std::max(sf.radius.front(), si.radius.front());
    double r_hi = std::min(sf.radius.back(), si.radius.back());

    int const n_phi = 96;
    auto const& ct = gauss<double, 60>::abscissa();
    auto const& cw = gauss<double, 60>::weights();
    // Angular grid: weight * Y_f^* Y_i and the projection of r^ on q
    std::vector<std::complex<double>> weight;
    std::vector<double> projection;
    auto node = [&](double c, double w) {
        double th = std::acos(c);
        double s = std::sqrt(1 - c * c);
        for (int k = 0; k < n_phi; ++k)
        {
            double ph = 2 * units::pi * k / n_phi;
            weight.push_back(w * (2 * units::pi / n_phi)
                             * std::conj(spherical_harmonic(f.l, f.m, th, ph))
                             * spherical_harmonic(i.l, i.m, th, ph));
            projection.push_back(q[0] * s * std::cos(ph) + q[1] * s * std::sin(ph)
                                 + q[2] * c);
        }
    };
    for (std::size_t j = 0; j < ct.size(); ++j)
    {
        node(ct[j], cw[j]);
        if (ct[j] != 0)
            node(-ct[j], cw[j]);
    }
    auto angular = [&](double r) {
        std::complex<double> sum = 0;
        for (std::size_t k = 0; k < weight.size(); ++k)
            sum += weight[k] * std::polar(1.0, -r * projection[k]);
        return sum;
    };

    std::complex<double> total = 0;
    double const panel = 0.05;
    double a = std::log(r_lo), b = std::log(r_hi);
    int const panels = int(std::ceil((b - a) / panel));
    auto const& rx = gauss<double, 10>::abscissa();
    auto const& rw = gauss<double, 10>::weights();
    for (int p = 0; p < panels; ++p)
    {
        double lo = a + (b - a) * p / panels, hi = a + (b - a) * (p + 1) / panels;
        double half = 0.5 * (hi - lo), mid = 0.5 * (hi + lo);
        for (std::size_t j = 0; j < rx.size(); ++j)
        {
            for (double sgn : {-1.0, 1.0})
            {
                if (rx[j] == 0 && sgn > 0)
                    continue;
                double r = std::exp(mid + sgn * half * rx[j]);
                double w = half * rw[j] * r * r * r;
                total += w * sf(r) * si(r) * angular(r);
            }
        }
    }
    return total;
}
}  // namespace

TEST_CASE("form factor agrees with a three-dimensional tensor quadrature")
{
    auto const& species = test::h2d2();
    std::array<double, 3> dir{0.36, -0.48, 0.8};
    for (double qmag : {0.3, 1.0, 2.5})
    {
        std::array<double, 3> q{qmag * dir[0], qmag * dir[1], qmag * dir[2]};
        for (auto [f, i] : {std::pair{StateIndex{0, 0}, StateIndex{0, 0}},
                            {StateIndex{1, 0}, StateIndex{0, 0}},
                            {StateIndex{2, 1}, StateIndex{1, 0}},
                            {StateIndex{2, -2}, StateIndex{0, 0}},
                            {StateIndex{1, -1}, StateIndex{2, 1}}})
        {
            CAPTURE(qmag);
            CAPTURE(f.l);
            CAPTURE(f.m);
            CAPTURE(i.l);
            CAPTURE(i.m);
            auto ours = form_factor(species, f, i, q);
            auto ref = tensor_form_factor(species, f, i, q);
            double scale = std::max(std::abs(ref), 1e-3);
            CHECK(std::abs(ours - ref) / scale < 1e-6);
        }
    }
}
