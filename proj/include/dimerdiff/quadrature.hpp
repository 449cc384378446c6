//---------------------------------------------------------------------------//
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file dimerdiff/quadrature.hpp
//---------------------------------------------------------------------------//
#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <type_traits>
#include <utility>
#include <vector>

namespace dimerdiff
{
//---------------------------------------------------------------------------//
//! Nodes and weights of a one-dimensional rule
struct QuadratureRule
{
    std::vector<double> nodes;
    std::vector<double> weights;

    std::size_t size() const { return nodes.size(); }
};

// Gauss-Legendre rule of order n on [-1, 1]
QuadratureRule gauss_legendre(int n);

// Gauss-Legendre rule of order n mapped onto [a, b]
QuadratureRule gauss_legendre(int n, double a, double b);

/*!
 * Composite Gauss-Legendre rule in ln r over [r_lo, r_hi].
 *
 * Panels are at most panel_width wide in ln r. Nodes are radii and the
 * weights include the Jacobian, so sum w_i f(r_i) approximates int f dr.
 */
QuadratureRule log_radial_rule(double r_lo, double r_hi,
                               double panel_width = 0.05, int order = 8);

//---------------------------------------------------------------------------//
/*!
 * Neumaier-compensated accumulator.
 *
 * Works for double and std::complex<double>; the complex case compensates
 * real and imaginary parts independently.
 */
template<class T>
class CompensatedSum
{
  public:
    void add(T value);
    T value() const { return sum_ + correction_; }

  private:
    T sum_{};
    T correction_{};
};

namespace detail
{
inline void neumaier(double& sum, double& corr, double x)
{
    double t = sum + x;
    if (std::abs(sum) >= std::abs(x))
        corr += (sum - t) + x;
    else
        corr += (x - t) + sum;
    sum = t;
}
}  // namespace detail

template<class T>
void CompensatedSum<T>::add(T value)
{
    if constexpr (std::is_same_v<T, std::complex<double>>)
    {
        double sr = sum_.real(), si = sum_.imag();
        double cr = correction_.real(), ci = correction_.imag();
        detail::neumaier(sr, cr, value.real());
        detail::neumaier(si, ci, value.imag());
        sum_ = {sr, si};
        correction_ = {cr, ci};
    }
    else
    {
        detail::neumaier(sum_, correction_, value);
    }
}

//---------------------------------------------------------------------------//
/*!
 * Composite Gauss-Legendre rule whose panels follow the local phase rate of
 * an oscillatory integrand.
 *
 * The rate function must be convex on [a, b] (largest at the end points),
 * which holds for the sum of inverse-power wall singularities located at or
 * outside the interval. Each panel spans at most \c max_width and at most
 * \c max_phase radians of accumulated phase.
 */
struct PanelSpec
{
    int order = 16;
    double max_width = 0;
    double max_phase = 8.0;
};

template<class RateFn>
void append_phase_adapted_panels(double a,
                                 double b,
                                 RateFn&& rate,
                                 PanelSpec const& spec,
                                 QuadratureRule const& reference,
                                 std::vector<double>& nodes,
                                 std::vector<double>& weights)
{
    auto emit = [&](double lo, double hi) {
        double half = 0.5 * (hi - lo);
        double mid = 0.5 * (hi + lo);
        for (std::size_t i = 0; i < reference.size(); ++i)
        {
            nodes.push_back(mid + half * reference.nodes[i]);
            weights.push_back(half * reference.weights[i]);
        }
    };
    auto step = [&](double r) {
        double h = spec.max_width;
        if (r > 0 && spec.max_phase / r < h)
            h = spec.max_phase / r;
        return h;
    };

    double left = a;
    double right = b;
    // Right-hand panels are emitted after the loop so nodes stay ordered
    std::vector<std::pair<double, double>> right_panels;
    while (right - left > 0)
    {
        double rl = rate(left);
        double rr = rate(right);
        if (rl >= rr)
        {
            double h = std::min(step(rl), right - left);
            double next = (right - left - h < 1e-3 * h) ? right : left + h;
            emit(left, next);
            left = next;
        }
        else
        {
            double h = std::min(step(rr), right - left);
            double next = (right - left - h < 1e-3 * h) ? left : right - h;
            right_panels.emplace_back(next, right);
            right = next;
        }
    }
    for (auto it = right_panels.rbegin(); it != right_panels.rend(); ++it)
        emit(it->first, it->second);
}

}  // namespace dimerdiff
