// SPDX-License-Identifier: Apache-2.0
#include "dimerdiff/potential.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <memory>
#include <sstream>

// Boost 1.74's pchip calls isnan unqualified
#include <math.h>
#include <boost/math/interpolators/pchip.hpp>

#include "dimerdiff/errors.hpp"

namespace dimerdiff
{
Interpolation interpolation_from_string(std::string const& name)
{
    if (name == "linear")
        return Interpolation::linear;
    if (name == "pchip")
        return Interpolation::pchip;
    throw ConfigError("unknown interpolation rule '" + name + "'");
}

RadialPotential RadialPotential::lennard_jones(double epsilon, double sigma)
{
    if (!(epsilon > 0) || !(sigma > 0))
        throw DomainError("Lennard-Jones parameters must be positive");
    RadialPotential p;
    p.eval_ = [epsilon, sigma](double r) {
        double s6 = std::pow(sigma / r, 6);
        return 4.0 * epsilon * (s6 * s6 - s6);
    };
    p.well_ = Well{std::pow(2.0, 1.0 / 6.0) * sigma, -epsilon};
    std::ostringstream os;
    os << "Lennard-Jones(epsilon=" << epsilon << " meV, sigma=" << sigma << " nm)";
    p.description_ = os.str();
    return p;
}

RadialPotential RadialPotential::tabulated(std::vector<double> radius,
                                           std::vector<double> value,
                                           Interpolation rule)
{
    if (radius.size() != value.size())
        throw DomainError("tabulated potential: column lengths differ");
    std::size_t const min_points = (rule == Interpolation::pchip) ? 4 : 2;
    if (radius.size() < min_points)
        throw DomainError("tabulated potential: too few points");
    if (!(radius.front() > 0))
        throw DomainError("tabulated potential: radii must be positive");
    for (std::size_t i = 1; i < radius.size(); ++i)
    {
        if (!(radius[i] > radius[i - 1]))
            throw DomainError("tabulated potential: radii must be strictly increasing");
    }
    double vmax = 0;
    for (double v : value)
        vmax = std::max(vmax, std::abs(v));
    if (std::abs(value.back()) >= 1e-6 * vmax)
        throw DomainError("tabulated potential: last entry does not vanish");

    RadialPotential p;
    auto imin = std::min_element(value.begin(), value.end()) - value.begin();
    if (value[imin] < 0)
        p.well_ = Well{radius[imin], value[imin]};
    p.hard_wall_ = radius.front();
    double const r_first = radius.front();
    double const r_last = radius.back();
    double const v_first = value.front();

    if (rule == Interpolation::linear)
    {
        auto r = std::make_shared<std::vector<double>>(std::move(radius));
        auto v = std::make_shared<std::vector<double>>(std::move(value));
        p.eval_ = [r, v, r_first, r_last, v_first](double x) {
            if (x <= r_first)
                return v_first;
            if (x >= r_last)
                return 0.0;
            auto it = std::upper_bound(r->begin(), r->end(), x);
            std::size_t i = it - r->begin();
            double t = (x - (*r)[i - 1]) / ((*r)[i] - (*r)[i - 1]);
            return (1 - t) * (*v)[i - 1] + t * (*v)[i];
        };
        p.description_ = "tabulated (linear)";
    }
    else
    {
        using Spline = boost::math::interpolators::pchip<std::vector<double>>;
        auto spline = std::make_shared<Spline>(std::move(radius), std::move(value));
        p.eval_ = [spline, r_first, r_last, v_first](double x) {
            if (x <= r_first)
                return v_first;
            if (x >= r_last)
                return 0.0;
            return (*spline)(x);
        };
        p.description_ = "tabulated (pchip)";
    }
    return p;
}

RadialPotential RadialPotential::from_file(std::filesystem::path const& path,
                                           Interpolation rule)
{
    std::ifstream in(path);
    if (!in)
        throw ConfigError("cannot open potential file " + path.string());
    std::vector<double> r;
    std::vector<double> v;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line))
    {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos)
            line.erase(hash);
        std::istringstream ls(line);
        double a, b;
        if (!(ls >> a))
            continue;
        std::string rest;
        if (!(ls >> b) || (ls >> rest))
        {
            throw ConfigError(path.string() + ":" + std::to_string(lineno)
                              + ": expected two columns (r [nm], V [meV])");
        }
        r.push_back(a);
        v.push_back(b);
    }
    try
    {
        auto p = tabulated(std::move(r), std::move(v), rule);
        p.description_ += " from " + path.string();
        return p;
    }
    catch (DomainError const& e)
    {
        throw ConfigError(path.string() + ": " + e.what());
    }
}

RadialPotential RadialPotential::zero()
{
    RadialPotential p;
    p.eval_ = [](double) { return 0.0; };
    p.description_ = "zero";
    return p;
}

double RadialPotential::core_radius(double threshold) const
{
    if (!well_)
        throw DomainError("core_radius: potential has no attractive well");
    double hi = well_->radius;
    double lo = hard_wall_ > 0 ? hard_wall_ : 1e-3 * hi;
    if (eval_(lo) <= threshold)
        return lo;
    for (int i = 0; i < 200 && hi - lo > 1e-14 * hi; ++i)
    {
        double mid = 0.5 * (lo + hi);
        if (eval_(mid) > threshold)
            lo = mid;
        else
            hi = mid;
    }
    return lo;
}

}  // namespace dimerdiff
