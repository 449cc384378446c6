// SPDX-License-Identifier: Apache-2.0
#include "dimerdiff/special_functions.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <numbers>
#include <string>

#include <gsl/gsl_sf_coupling.h>

#include "dimerdiff/errors.hpp"

namespace dimerdiff
{
namespace
{
double log_factorial(int n)
{
    return std::lgamma(n + 1.0);
}
}  // namespace

double pi_function(int l, int lp, int m, double alpha)
{
    int const am = std::abs(m);
    if (l < 0 || lp < 0 || am > std::min(l, lp))
    {
        throw DomainError("pi_function: |m| = " + std::to_string(am)
                          + " exceeds min(l, l')");
    }
    if (!(std::abs(alpha) <= 1.0))
        throw DomainError("pi_function: alpha outside [-1, 1]");

    double log_norm = 0.5
                      * (log_factorial(l - am) + log_factorial(lp - am)
                         - log_factorial(l + am) - log_factorial(lp + am));
    // std::assoc_legendre omits the Condon-Shortley phase; it cancels in the
    // product of two functions with the same order.
    return 0.5 * std::exp(log_norm) * std::assoc_legendre(l, am, alpha)
           * std::assoc_legendre(lp, am, alpha);
}

double wigner_3j(int j1, int j2, int j3, int m1, int m2, int m3)
{
    if (j1 < 0 || j2 < 0 || j3 < 0)
        throw DomainError("wigner_3j: negative angular momentum");
    // GSL takes doubled angular momenta
    return gsl_sf_coupling_3j(2 * j1, 2 * j2, 2 * j3, 2 * m1, 2 * m2, 2 * m3);
}

double gaunt(int l1, int m1, int l2, int m2, int l3, int m3)
{
    // int Y1^* Y2 Y3 = (-1)^m1 int Y_{l1,-m1} Y2 Y3
    double pref = std::sqrt((2 * l1 + 1) * (2 * l2 + 1) * (2 * l3 + 1)
                            / (4 * std::numbers::pi));
    double value = pref * wigner_3j(l1, l2, l3, 0, 0, 0)
                   * wigner_3j(l1, l2, l3, -m1, m2, m3);
    return (std::abs(m1) % 2 == 0) ? value : -value;
}

std::complex<double> spherical_harmonic(int l, int m, double theta, double phi)
{
    int const am = std::abs(m);
    if (am > l)
        return 0.0;
    // std::sph_legendre includes the Condon-Shortley phase
    double y = std::sph_legendre(l, am, theta);
    std::complex<double> value = std::polar(y, am * phi);
    if (m < 0)
    {
        value = std::conj(value);
        if (am % 2 == 1)
            value = -value;
    }
    return value;
}

}  // namespace dimerdiff
