//---------------------------------------------------------------------------//
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file dimerdiff/special_functions.hpp
//---------------------------------------------------------------------------//
#pragma once

#include <complex>

namespace dimerdiff
{
/*!
 * Angular weight of the dimer transmission function.
 *
 * Pi_{l l'}^{m}(alpha) = 1/2 sqrt[(l-|m|)!(l'-|m|)! / ((l+|m|)!(l'+|m|)!)]
 *                        P_l^{|m|}(alpha) P_{l'}^{|m|}(alpha)
 *
 * Throws DomainError when |m| > min(l, l') or |alpha| > 1.
 */
double pi_function(int l, int lp, int m, double alpha);

//! Wigner 3j symbol (j1 j2 j3; m1 m2 m3) for integer arguments
double wigner_3j(int j1, int j2, int j3, int m1, int m2, int m3);

//! Gaunt integral  int Y_{l1 m1}^* Y_{l2 m2} Y_{l3 m3} dOmega
double gaunt(int l1, int m1, int l2, int m2, int l3, int m3);

//! Complex spherical harmonic with the Condon-Shortley phase
std::complex<double> spherical_harmonic(int l, int m, double theta, double phi);

}  // namespace dimerdiff
