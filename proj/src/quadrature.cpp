// SPDX-License-Identifier: Apache-2.0
#include "dimerdiff/quadrature.hpp"

#include <numbers>
#include <stdexcept>

namespace dimerdiff
{
namespace
{
// P_n(x) and P_{n-1}(x) by the three-term recurrence
std::pair<double, double> legendre_pair(int n, double x)
{
    double p0 = 1.0;
    double p1 = x;
    for (int k = 2; k <= n; ++k)
    {
        double pk = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = pk;
    }
    return {p1, p0};
}
}  // namespace

QuadratureRule gauss_legendre(int n)
{
    if (n < 1)
        throw std::invalid_argument("Gauss-Legendre order must be positive");
    if (n == 1)
        return {{0.0}, {2.0}};

    QuadratureRule rule;
    rule.nodes.resize(n);
    rule.weights.resize(n);
    for (int i = 0; i < (n + 1) / 2; ++i)
    {
        double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
        double dp = 1;
        for (int iter = 0; iter < 100; ++iter)
        {
            auto [pn, pm] = legendre_pair(n, x);
            dp = n * (x * pn - pm) / (x * x - 1.0);
            double dx = pn / dp;
            x -= dx;
            if (std::abs(dx) < 1e-16)
                break;
        }
        auto [pn, pm] = legendre_pair(n, x);
        dp = n * (x * pn - pm) / (x * x - 1.0);
        double w = 2.0 / ((1.0 - x * x) * dp * dp);
        rule.nodes[i] = -x;
        rule.nodes[n - 1 - i] = x;
        rule.weights[i] = w;
        rule.weights[n - 1 - i] = w;
    }
    if (n % 2 == 1)
        rule.nodes[n / 2] = 0.0;
    return rule;
}

QuadratureRule gauss_legendre(int n, double a, double b)
{
    QuadratureRule rule = gauss_legendre(n);
    double half = 0.5 * (b - a);
    double mid = 0.5 * (b + a);
    for (int i = 0; i < n; ++i)
    {
        rule.nodes[i] = mid + half * rule.nodes[i];
        rule.weights[i] *= half;
    }
    return rule;
}

QuadratureRule log_radial_rule(double r_lo, double r_hi, double panel_width,
                               int order)
{
    QuadratureRule rule;
    if (!(r_hi > r_lo) || !(r_lo > 0))
        return rule;
    double x_lo = std::log(r_lo);
    double x_hi = std::log(r_hi);
    int panels = std::max(1, int(std::ceil((x_hi - x_lo) / panel_width)));
    double h = (x_hi - x_lo) / panels;
    QuadratureRule ref = gauss_legendre(order);
    rule.nodes.reserve(panels * order);
    rule.weights.reserve(panels * order);
    for (int p = 0; p < panels; ++p)
    {
        double mid = x_lo + (p + 0.5) * h;
        for (int i = 0; i < order; ++i)
        {
            double r = std::exp(mid + 0.5 * h * ref.nodes[i]);
            rule.nodes.push_back(r);
            rule.weights.push_back(0.5 * h * ref.weights[i] * r);
        }
    }
    return rule;
}

}  // namespace dimerdiff
