//---------------------------------------------------------------------------//
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file tests/unit/test_quadrature.cpp
//---------------------------------------------------------------------------//
#include <cmath>
#include <numeric>

#include <doctest.h>

#include "dimerdiff/quadrature.hpp"

using namespace dimerdiff;

TEST_CASE("Gauss-Legendre integrates polynomials of degree 2n-1 exactly")
{
    for (int n : {1, 2, 5, 16, 64})
    {
        auto rule = gauss_legendre(n, -0.5, 2.0);
        for (int k = 0; k < 2 * n; ++k)
        {
            double sum = 0;
            for (std::size_t i = 0; i < rule.size(); ++i)
                sum += rule.weights[i] * std::pow(rule.nodes[i], k);
            double exact = (std::pow(2.0, k + 1) - std::pow(-0.5, k + 1))
                           / (k + 1);
            CHECK(sum == doctest::Approx(exact).epsilon(1e-12));
        }
    }
}

TEST_CASE("Gauss-Legendre nodes are ordered and symmetric")
{
    auto rule = gauss_legendre(33);
    for (std::size_t i = 1; i < rule.size(); ++i)
        CHECK(rule.nodes[i] > rule.nodes[i - 1]);
    for (std::size_t i = 0; i < rule.size(); ++i)
    {
        CHECK(rule.nodes[i] == doctest::Approx(-rule.nodes[32 - i]).epsilon(1e-15));
        CHECK(rule.weights[i] == doctest::Approx(rule.weights[32 - i]).epsilon(1e-13));
    }
}

TEST_CASE("log radial rule integrates extended radial functions")
{
    auto rule = log_radial_rule(1e-4, 80.0);
    double sum = 0;
    for (std::size_t i = 0; i < rule.size(); ++i)
    {
        double r = rule.nodes[i];
        sum += rule.weights[i] * r * r * std::exp(-r);
    }
    // int_0^inf r^2 e^{-r} = 2, truncation errors are below 1e-12
    CHECK(sum == doctest::Approx(2.0).epsilon(1e-10));
}

TEST_CASE("compensated sum recovers cancelled terms")
{
    CompensatedSum<double> acc;
    acc.add(1.0);
    acc.add(1e100);
    acc.add(1.0);
    acc.add(-1e100);
    CHECK(acc.value() == 2.0);

    CompensatedSum<std::complex<double>> cacc;
    cacc.add({1.0, -1.0});
    cacc.add({1e100, 1e100});
    cacc.add({1.0, -1.0});
    cacc.add({-1e100, -1e100});
    CHECK(cacc.value() == std::complex<double>(2.0, -2.0));
}

TEST_CASE("phase-adapted panels tile the interval in order")
{
    auto reference = gauss_legendre(16);
    PanelSpec spec{16, 1.0, 2.0};
    // Rate diverging at both ends, like the wall singularities
    auto rate = [](double y) { return 1 / std::pow(y + 0.1, 3) + 1 / std::pow(10.1 - y, 3); };
    std::vector<double> nodes, weights;
    append_phase_adapted_panels(0.0, 10.0, rate, spec, reference, nodes, weights);

    CHECK(nodes.size() % 16 == 0);
    CHECK(nodes.size() >= 16 * 10);
    for (std::size_t i = 1; i < nodes.size(); ++i)
        CHECK(nodes[i] > nodes[i - 1]);
    CHECK(std::accumulate(weights.begin(), weights.end(), 0.0)
          == doctest::Approx(10.0).epsilon(1e-13));

    // Oscillatory test integral int_0^10 cos(Phi(y)) with Phi' = rate
    auto phi = [](double y) {
        return -0.5 / std::pow(y + 0.1, 2) + 0.5 / std::pow(10.1 - y, 2);
    };
    double sum = 0;
    for (std::size_t i = 0; i < nodes.size(); ++i)
        sum += weights[i] * std::cos(phi(nodes[i]));
    std::vector<double> fine_nodes, fine_weights;
    PanelSpec fine{16, 0.1, 0.2};
    append_phase_adapted_panels(0.0, 10.0, rate, fine, reference, fine_nodes, fine_weights);
    double ref = 0;
    for (std::size_t i = 0; i < fine_nodes.size(); ++i)
        ref += fine_weights[i] * std::cos(phi(fine_nodes[i]));
    CHECK(sum == doctest::Approx(ref).epsilon(1e-10));
}
