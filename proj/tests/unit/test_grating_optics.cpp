//---------------------------------------------------------------------------//
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file tests/unit/test_grating_optics.cpp
//---------------------------------------------------------------------------//
#include <algorithm>
#include <cmath>

#include <doctest.h>

#include "dimerdiff/errors.hpp"
#include "fixtures.hpp"

using namespace dimerdiff;
using namespace dimerdiff::test;
using units::to_radians;

namespace
{
double const speed = 0.5;
}

TEST_CASE("geometry validation")
{
    CHECK_NOTHROW(grating().validate());
    CHECK_THROWS_AS((GratingGeometry{100, 100, 120, 0}.validate()), DomainError);
    CHECK_THROWS_AS((GratingGeometry{100, 0, 120, 0}.validate()), DomainError);
    CHECK_THROWS_AS((GratingGeometry{100, 60, 0, 0}.validate()), DomainError);
    CHECK_THROWS_AS((GratingGeometry{100, 60, 120, -0.1}.validate()), DomainError);
    CHECK_THROWS_AS(PointParticleTransmission(grating(), -1.0, speed, 0.0), DomainError);
}

TEST_CASE("open interval and shadow")
{
    auto g = grating();
    auto at_wedge = open_interval(g, g.wedge);
    CHECK(at_wedge.lower == doctest::Approx(-30));
    CHECK(at_wedge.upper == doctest::Approx(30));

    auto normal = open_interval(g, 0.0);
    CHECK(normal.width() == doctest::Approx(60));

    double th = to_radians(14);
    auto shadowed = open_interval(g, th);
    double expect = 60 - 120 * (std::tan(th) - std::tan(g.wedge));
    CHECK(shadowed.width() == doctest::Approx(expect).epsilon(1e-14));
    CHECK(shadowed.upper == doctest::Approx(30));
    auto mirrored = open_interval(g, -th);
    CHECK(mirrored.lower == doctest::Approx(-30));
    CHECK(mirrored.width() == doctest::Approx(expect).epsilon(1e-14));

    // Fully shadowed
    auto closed = open_interval(g, to_radians(40));
    CHECK(closed.empty());
    CHECK(closed.width() == 0.0);

    // Continuity of the shadow through theta' = beta
    double eps = 1e-9;
    CHECK(open_interval(g, g.wedge + eps).width()
          == doctest::Approx(60).epsilon(1e-8));
    CHECK_THROWS_AS(open_interval(g, units::pi / 2), DomainError);
}

TEST_CASE("transmission is a periodic pure phase on the open interval")
{
    for (double deg : {0.0, 3.0, 14.0, -14.0})
    {
        PointParticleTransmission tau(grating(), 0.32, speed, to_radians(deg));
        auto open = tau.open();
        for (double y = -49.75; y < 50; y += 0.5)
        {
            auto v = tau(y);
            if (open.contains(y))
                CHECK(std::abs(v) == doctest::Approx(1.0).epsilon(1e-14));
            else
                CHECK(v == std::complex<double>(0.0));
            CHECK(tau(y + 100) == v);
            CHECK(tau(y - 300) == v);
        }
    }
}

TEST_CASE("zero coupling gives the Kirchhoff indicator")
{
    PointParticleTransmission tau(grating(0), 0.0, speed, 0.0);
    CHECK(tau(0.0) == std::complex<double>(1.0));
    CHECK(tau(29.9) == std::complex<double>(1.0));
    CHECK(tau(30.1) == std::complex<double>(0.0));
    CHECK(tau.phase(10.0) == 0.0);
    CHECK_THROWS_AS(tau.phase(40.0), DomainError);
}

TEST_CASE("phase is positive and diverges toward both walls")
{
    for (double deg : {0.0, 3.0, 14.0})
    {
        PointParticleTransmission tau(grating(), 0.32, speed, to_radians(deg));
        auto open = tau.open();
        int const n = 2001;
        double h = (open.width() - 0.02) / (n - 1);
        std::vector<double> phi(n);
        for (int i = 0; i < n; ++i)
            phi[i] = tau.phase(open.lower + 0.01 + i * h);
        auto imin = std::min_element(phi.begin(), phi.end()) - phi.begin();
        CHECK(phi[imin] > 0);
        CHECK(imin > 0);
        CHECK(imin < n - 1);
        // Single minimum: decreasing before it, increasing after
        for (int i = 1; i <= imin; ++i)
            CHECK(phi[i] < phi[i - 1]);
        for (int i = imin + 1; i < n; ++i)
            CHECK(phi[i] > phi[i - 1]);
        CHECK(phi.front() > 100 * phi[imin]);
        CHECK(phi.back() > 100 * phi[imin]);
    }
}

TEST_CASE("negative incidence mirrors the transmission")
{
    PointParticleTransmission pos(grating(), 0.32, speed, to_radians(14));
    PointParticleTransmission neg(grating(), 0.32, speed, to_radians(-14));
    for (double y = -25.3; y < 30; y += 1.1)
        CHECK(std::abs(pos(y) - neg(-y)) < 1e-15);
}

TEST_CASE("analytic and numerical depth integrals meet at the wedge angle")
{
    // The phase is continuous in theta': the gap between the two branches
    // shrinks in proportion to the distance from theta' = beta
    auto g = grating();
    auto gap = [&](double delta, double y) {
        PointParticleTransmission above(g, 0.32, speed, g.wedge + delta);
        PointParticleTransmission below(g, 0.32, speed, g.wedge - delta);
        CHECK(above.analytic());
        CHECK(!below.analytic());
        return std::abs(above.phase(y) - below.phase(y));
    };
    for (double y = -25.0; y <= 25.0; y += 5)
    {
        CAPTURE(y);
        double coarse = gap(1e-4, y);
        double fine = gap(1e-5, y);
        CHECK(fine == doctest::Approx(0.1 * coarse).epsilon(0.05));
    }
}

TEST_CASE("wrappers agree with the transmission object")
{
    ConstituentBeam b{d2_mass, speed, to_radians(14)};
    PointParticleTransmission tau(grating(), 0.32, speed, b.incidence);
    CHECK(phase_shift(grating(), 0.32, b, 10.0) == tau.phase(10.0));
    CHECK(transmission_pp(grating(), 0.32, b, 10.0) == tau(10.0));
    CHECK(b.momentum() == doctest::Approx(d2_mass * units::amu * speed));
    CHECK(b.momentum_x() == doctest::Approx(b.momentum() * std::cos(b.incidence)));
}

TEST_CASE("Kirchhoff Fourier coefficients are sinc functions")
{
    PointParticleTransmission tau(grating(0), 0.0, speed, 0.0);
    auto c = pp_diffraction_amplitudes(tau, -10, 10);
    REQUIRE(c.size() == 21);
    double c0 = std::abs(c[10].value);
    CHECK(c0 == doctest::Approx(0.6).epsilon(1e-14));
    for (auto const& fc : c)
    {
        double x = units::pi * fc.n * 0.6;
        double sinc = fc.n == 0 ? 1.0 : std::sin(x) / x;
        CHECK(std::norm(fc.value) / (c0 * c0) == doctest::Approx(sinc * sinc).scale(1).epsilon(1e-12));
    }
    CHECK(std::norm(c[11].value) / (c0 * c0) == doctest::Approx(0.2546).epsilon(1e-4));
    CHECK_THROWS_AS(pp_diffraction_amplitudes(tau, 2, 1), DomainError);
}

TEST_CASE("Parseval bound and open fraction")
{
    PointParticleTransmission kirchhoff(grating(), 0.0, speed, to_radians(14));
    auto c = pp_diffraction_amplitudes(kirchhoff, -200, 200);
    double sum = 0;
    for (auto const& fc : c)
        sum += std::norm(fc.value);
    CHECK(sum <= 1.0);
    CHECK(std::abs(sum - kirchhoff.open().width() / 100) < 1e-3);

    for (double deg : {0.0, 14.0, 16.0})
    {
        PointParticleTransmission tau(grating(), 0.32, speed, to_radians(deg));
        double s = 0;
        for (auto const& fc : pp_diffraction_amplitudes(tau, -200, 200))
            s += std::norm(fc.value);
        CHECK(s <= 1.0);
        CHECK(s <= tau.open().width() / 100 + 1e-12);
    }
}

TEST_CASE("C3 scaling with polarisability")
{
    CHECK(estimate_c3_hoinkes(0.32, 5.4, 5.4) == 0.32);
    CHECK(estimate_c3_hoinkes(0.32, 5.4, 5.454) == doctest::Approx(0.3232));
    CHECK_THROWS_AS(estimate_c3_hoinkes(0.32, 0.0, 1.0), DomainError);
}
