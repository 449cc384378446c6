//---------------------------------------------------------------------------//
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file tests/unit/test_potential.cpp
//---------------------------------------------------------------------------//
#include <cmath>
#include <filesystem>
#include <fstream>

#include <doctest.h>

#include "dimerdiff/errors.hpp"
#include "dimerdiff/potential.hpp"

using namespace dimerdiff;

namespace
{
std::filesystem::path write_temp(std::string const& name, std::string const& text)
{
    auto path = std::filesystem::temp_directory_path() / name;
    std::ofstream(path) << text;
    return path;
}
}  // namespace

TEST_CASE("Lennard-Jones well and core")
{
    auto v = RadialPotential::lennard_jones(3.35, 0.303);
    REQUIRE(v.well());
    double rm = std::pow(2.0, 1.0 / 6) * 0.303;
    CHECK(v.well()->radius == doctest::Approx(rm));
    CHECK(v.well()->depth == doctest::Approx(-3.35));
    CHECK(v(rm) == doctest::Approx(-3.35));
    CHECK(v(0.303) == doctest::Approx(0.0).scale(1));
    CHECK(v.hard_wall() == 0.0);

    double rc = v.core_radius(3350.0);
    CHECK(v(rc) == doctest::Approx(3350.0).epsilon(1e-8));
    CHECK(rc < 0.303);

    CHECK_THROWS_AS(RadialPotential::lennard_jones(-1, 0.3), DomainError);
    CHECK_THROWS_AS(RadialPotential::lennard_jones(1, 0), DomainError);
}

TEST_CASE("tabulated potential interpolates and clamps")
{
    std::vector<double> r{0.3, 0.35, 0.4, 0.5, 0.7, 1.0, 2.0};
    auto lj = RadialPotential::lennard_jones(3.0, 0.3);
    std::vector<double> v;
    for (double x : r)
        v.push_back(x < 2.0 ? lj(x) : 0.0);

    for (auto rule : {Interpolation::linear, Interpolation::pchip})
    {
        auto p = RadialPotential::tabulated(r, v, rule);
        for (std::size_t i = 0; i < r.size(); ++i)
            CHECK(p(r[i]) == doctest::Approx(v[i]).scale(1));
        CHECK(p(0.1) == doctest::Approx(v.front()));
        CHECK(p(5.0) == 0.0);
        CHECK(p.hard_wall() == 0.3);
        REQUIRE(p.well());
        CHECK(p.well()->radius == 0.35);
    }
    // Linear interpolation is exact at the midpoint of a segment
    auto lin = RadialPotential::tabulated(r, v, Interpolation::linear);
    CHECK(lin(0.45) == doctest::Approx(0.5 * (v[2] + v[3])));

    // Monotone cubic does not overshoot the data between samples
    auto cubic = RadialPotential::tabulated(r, v, Interpolation::pchip);
    for (double x = 0.5; x < 2.0; x += 0.01)
        CHECK(cubic(x) >= v[1] - 1e-12);
}

TEST_CASE("tabulated potential validation")
{
    CHECK_THROWS_AS(RadialPotential::tabulated({0.1, 0.2}, {1.0}), DomainError);
    CHECK_THROWS_AS(RadialPotential::tabulated({0.1, 0.2}, {1.0, 0.0}), DomainError);
    CHECK_THROWS_AS(RadialPotential::tabulated({0.2, 0.1}, {1.0, 0.0},
                                               Interpolation::linear),
                    DomainError);
    CHECK_THROWS_AS(RadialPotential::tabulated({0.1, 0.2, 0.3, 0.4},
                                               {1.0, -1.0, -0.5, -0.1}),
                    DomainError);
    CHECK_THROWS_AS(RadialPotential::tabulated({-0.1, 0.2}, {1.0, 0.0},
                                               Interpolation::linear),
                    DomainError);
    CHECK_THROWS_AS(interpolation_from_string("spline"), ConfigError);
}

TEST_CASE("potential file parsing")
{
    auto good = write_temp("dimerdiff_pot_good.dat",
                           "# r V\n0.3 10\n0.4 -2  # well\n\n0.8 -0.5\n1.5 0\n");
    auto p = RadialPotential::from_file(good, Interpolation::linear);
    CHECK(p(0.4) == doctest::Approx(-2));
    CHECK(p.description().find("dimerdiff_pot_good.dat") != std::string::npos);

    auto bad = write_temp("dimerdiff_pot_bad.dat", "0.3 10\n0.4 -2 7\n");
    CHECK_THROWS_WITH_AS(RadialPotential::from_file(bad),
                         doctest::Contains(":2:"), ConfigError);
    auto short_file = write_temp("dimerdiff_pot_short.dat", "0.3 10\n");
    CHECK_THROWS_AS(RadialPotential::from_file(short_file), ConfigError);
    CHECK_THROWS_AS(RadialPotential::from_file("/nonexistent/file.dat"), ConfigError);
}

TEST_CASE("zero potential has no well")
{
    auto z = RadialPotential::zero();
    CHECK(!z.well());
    CHECK(z(0.5) == 0.0);
    CHECK_THROWS_AS(z.core_radius(1.0), DomainError);
}
