// SPDX-License-Identifier: Apache-2.0
#include "dimerdiff/grating_optics.hpp"

#include <cmath>

#include "dimerdiff/constants.hpp"
#include "dimerdiff/errors.hpp"

namespace dimerdiff
{
void GratingGeometry::validate() const
{
    if (!(slit > 0) || !(slit < period))
        throw DomainError("grating requires 0 < slit < period");
    if (!(thickness > 0))
        throw DomainError("grating thickness must be positive");
    if (!(wedge >= 0) || !(wedge < units::pi / 2))
        throw DomainError("wedge angle must lie in [0, 90) degrees");
}

double ConstituentBeam::momentum() const
{
    return mass * units::amu * speed;
}

double ConstituentBeam::momentum_x() const
{
    return momentum() * std::cos(incidence);
}

double ConstituentBeam::momentum_y() const
{
    return momentum() * std::sin(incidence);
}

OpenInterval open_interval(GratingGeometry const& geometry, double incidence)
{
    if (!(std::abs(incidence) < units::pi / 2))
        throw DomainError("incidence angle must satisfy |theta'| < 90 degrees");
    double half = 0.5 * geometry.slit;
    double shadow = geometry.thickness
                    * (std::tan(std::abs(incidence)) - std::tan(geometry.wedge));
    OpenInterval result{-half, half};
    if (shadow > 0)
    {
        if (incidence > 0)
            result.lower += shadow;
        else
            result.upper -= shadow;
    }
    if (result.lower > result.upper)
        result.lower = result.upper = 0.5 * (result.lower + result.upper);
    return result;
}

//---------------------------------------------------------------------------//
PointParticleTransmission::PointParticleTransmission(GratingGeometry const& geometry,
                                                     double c3,
                                                     double speed,
                                                     double incidence)
    : geometry_(geometry)
    , c3_(c3)
    , speed_(speed)
    , incidence_(incidence)
    , open_(open_interval(geometry, incidence))
    , mirrored_(incidence < 0)
    , analytic_(std::abs(incidence) > geometry.wedge)
    , tan_theta_(std::tan(std::abs(incidence)))
    , tan_beta_(std::tan(geometry.wedge))
{
    geometry_.validate();
    if (!(c3 >= 0))
        throw DomainError("C3 must be non-negative");
    if (!(speed > 0))
        throw DomainError("beam speed must be positive");
    double c = std::cos(incidence);
    prefactor_ = c3 / (units::hbar * speed * c * c * c * c);
}

std::pair<double, double> PointParticleTransmission::depth_integral(double y,
                                                                    int power) const
{
    // Wall distances along the path y + x tan(theta), -t <= x <= 0:
    //   right: (s/2 - y) - x (tan beta + tan theta)
    //   left:  (s/2 + y) + x (tan theta - tan beta)
    double const t = geometry_.thickness;
    double const half = 0.5 * geometry_.slit;
    int const q = power - 1;
    auto inv_pow = [](double h, int k) {
        double h2 = h * h;
        switch (k)
        {
            case 2: return 1 / h2;
            case 3: return 1 / (h2 * h);
            default: return std::pow(h, -double(k));
        }
    };
    double const right_exit = half - y;
    double const right_slope = tan_beta_ + tan_theta_;
    double const right_entry = right_exit + t * right_slope;
    double const left_exit = half + y;
    double const left_slope = tan_theta_ - tan_beta_;
    double const left_entry = left_exit - t * left_slope;

    // (h1^{-q} - h2^{-q}) / (q slope)
    auto closed = [&](double h1, double h2, double slope) {
        return (inv_pow(h1, q) - inv_pow(h2, q)) / (q * slope);
    };
    auto numeric = [&](double entry, double exit) {
        if (std::abs(entry - exit) <= 1e-12 * exit)
            return t * inv_pow(exit, power);
        // Substitute u = ln h: dx = t h du / (h_exit - h_entry)
        static QuadratureRule const rule = gauss_legendre(16);
        double a = std::log(entry);
        double b = std::log(exit);
        double sum = 0;
        for (std::size_t i = 0; i < rule.size(); ++i)
        {
            double u = 0.5 * (a + b) + 0.5 * (b - a) * rule.nodes[i];
            sum += rule.weights[i] * std::exp(-q * u);
        }
        return std::abs(0.5 * (b - a) * sum * t / (exit - entry));
    };

    double right = closed(right_exit, right_entry, right_slope);
    // The closed form cancels badly when the left wall is nearly parallel
    // to the path
    bool use_closed = analytic_ && t * left_slope > 1e-2 * left_exit;
    double left = use_closed ? closed(left_entry, left_exit, left_slope)
                             : numeric(left_entry, left_exit);
    return {right, left};
}

double PointParticleTransmission::phase_unmirrored(double y) const
{
    auto [right, left] = depth_integral(y, 3);
    return prefactor_ * (right + left);
}

double PointParticleTransmission::rate_unmirrored(double y) const
{
    auto [right, left] = depth_integral(y, 4);
    return 3 * prefactor_ * std::abs(right - left);
}

double PointParticleTransmission::phase(double y) const
{
    if (!open_.contains(y))
        throw DomainError("phase: y lies outside the open part of the slit");
    if (c3_ == 0)
        return 0;
    return phase_unmirrored(mirrored_ ? -y : y);
}

double PointParticleTransmission::phase_rate(double y) const
{
    if (c3_ == 0)
        return 0;
    return rate_unmirrored(mirrored_ ? -y : y);
}

double PointParticleTransmission::reduce(double y) const
{
    double d = geometry_.period;
    return y - d * std::floor((y + 0.5 * d) / d);
}

std::complex<double> PointParticleTransmission::operator()(double y) const
{
    double r = reduce(y);
    if (!open_.contains(r))
        return 0.0;
    return std::polar(1.0, phase(r));
}

//---------------------------------------------------------------------------//
double phase_shift(GratingGeometry const& geometry,
                   double c3,
                   ConstituentBeam const& beam,
                   double y)
{
    return PointParticleTransmission(geometry, c3, beam.speed, beam.incidence)
        .phase(y);
}

std::complex<double> transmission_pp(GratingGeometry const& geometry,
                                     double c3,
                                     ConstituentBeam const& beam,
                                     double y)
{
    return PointParticleTransmission(geometry, c3, beam.speed, beam.incidence)(y);
}

PanelSpec YQuadrature::panels(double period) const
{
    if (points_per_period < panel_order || panel_order < 1)
        throw DomainError("Y quadrature needs at least one panel per period");
    PanelSpec spec;
    spec.order = panel_order;
    spec.max_width = period * panel_order / points_per_period;
    spec.max_phase = 8.0 * 4096.0 / points_per_period;
    return spec;
}

std::vector<FourierCoefficient>
pp_diffraction_amplitudes(PointParticleTransmission const& tau,
                          int n_min,
                          int n_max,
                          YQuadrature const& quadrature)
{
    if (n_min > n_max)
        throw DomainError("empty diffraction order range");
    double const d = tau.geometry().period;
    OpenInterval open = tau.open();
    double band = tau.c3() > 0 ? quadrature.edge_band : 0.0;
    std::vector<FourierCoefficient> result;
    for (int n = n_min; n <= n_max; ++n)
        result.push_back({n, 0.0});
    if (open.width() <= 2 * band)
        return result;

    PanelSpec spec = quadrature.panels(d);
    QuadratureRule reference = gauss_legendre(spec.order);
    std::vector<double> nodes;
    std::vector<double> weights;
    append_phase_adapted_panels(
        open.lower + band, open.upper - band,
        [&tau](double y) { return tau.phase_rate(y); }, spec, reference,
        nodes, weights);

    std::vector<CompensatedSum<std::complex<double>>> sums(result.size());
    for (std::size_t i = 0; i < nodes.size(); ++i)
    {
        std::complex<double> value = weights[i] * tau(nodes[i]) / d;
        for (std::size_t k = 0; k < result.size(); ++k)
        {
            double arg = -2 * units::pi * result[k].n * nodes[i] / d;
            sums[k].add(value * std::polar(1.0, arg));
        }
    }
    for (std::size_t k = 0; k < result.size(); ++k)
        result[k].value = sums[k].value();
    return result;
}

double estimate_c3_hoinkes(double reference_c3,
                           double reference_polarizability,
                           double target_polarizability)
{
    if (!(reference_c3 > 0) || !(reference_polarizability > 0)
        || !(target_polarizability > 0))
    {
        throw DomainError("C3 scaling requires positive inputs");
    }
    return reference_c3 * target_polarizability / reference_polarizability;
}

}  // namespace dimerdiff
