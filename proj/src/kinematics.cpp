// SPDX-License-Identifier: Apache-2.0
#include "dimerdiff/kinematics.hpp"

#include <cmath>
#include <sstream>

#include "dimerdiff/constants.hpp"
#include "dimerdiff/errors.hpp"

namespace dimerdiff
{
void BeamSpec::validate() const
{
    if (!(speed > 0))
        throw DomainError("beam speed must be positive");
    if (!(velocity_spread >= 0) || !(velocity_spread < 1))
        throw DomainError("velocity spread must lie in [0, 1)");
    if (!(std::abs(incidence) < units::pi / 2))
        throw DomainError("incidence angle must satisfy |theta'| < 90 degrees");
    if (!(temperature > 0))
        throw DomainError("beam temperature must be positive");
    if (!(w0 > 0) || !(dw >= 0))
        throw DomainError("peak width parameters must be positive");
}

double dimer_momentum(double total_mass, double speed)
{
    return total_mass * units::amu * speed;
}

double kinetic_energy(double momentum, double total_mass)
{
    return momentum * momentum / (2 * total_mass * units::amu);
}

double momentum_transfer(int n, double period)
{
    return n * 2 * units::pi * units::hbar / period;
}

double diffraction_angle(int n,
                         double incidence,
                         double momentum,
                         double total_mass,
                         double delta_e,
                         double period)
{
    if (!(momentum > 0) || !(total_mass > 0) || !(period > 0))
        throw DomainError("diffraction_angle requires positive P', M and d");
    double ke = kinetic_energy(momentum, total_mass);
    if (delta_e >= ke)
    {
        std::ostringstream os;
        os << "transition energy " << delta_e << " meV exceeds kinetic energy "
           << ke << " meV";
        throw ClosedChannel(os.str());
    }
    double s = (std::sin(incidence) + momentum_transfer(n, period) / momentum)
               / std::sqrt(1 - delta_e / ke);
    if (std::abs(s) > 1)
    {
        throw EvanescentOrder("order " + std::to_string(n) + " does not propagate");
    }
    return std::asin(s);
}

RegimeReport validate_regime(DimerSpecies const& species,
                             BeamSpec const& beam,
                             GratingGeometry const& grating)
{
    RegimeReport report;
    double const m_total = species.total_mass();
    double const p = dimer_momentum(m_total, beam.speed);
    report.kinetic_energy = kinetic_energy(p, m_total);
    report.wavelength = 2 * units::pi * units::hbar / p;
    report.slit_ratio = grating.slit / report.wavelength;
    report.bar_ratio = (grating.period - grating.slit) / report.wavelength;

    std::ostringstream os;
    if (species.states().empty())
    {
        report.warnings.push_back("species has no bound states");
    }
    else
    {
        double e0 = species.states().front().energy;
        report.binding_ratio = std::abs(e0) / report.kinetic_energy;
        if (report.binding_ratio >= binding_ratio_limit)
        {
            os << "binding energy is " << report.binding_ratio
               << " of the kinetic energy (limit " << binding_ratio_limit << ")";
            report.warnings.push_back(os.str());
        }
    }
    if (report.slit_ratio < diffraction_ratio_limit
        || report.bar_ratio < diffraction_ratio_limit)
    {
        os.str("");
        os << "slit and bar widths are only " << report.slit_ratio << " and "
           << report.bar_ratio << " de Broglie wavelengths (limit "
           << diffraction_ratio_limit << ")";
        report.warnings.push_back(os.str());
    }

    Constituent const* parts[2] = {&species.first(), &species.second()};
    for (int i = 0; i < 2; ++i)
    {
        double m = parts[i]->mass;
        report.constituent_energy[i] = 0.5 * m * units::amu * beam.speed * beam.speed;
        double threshold = parts[i]->rotational_threshold;
        if (threshold > 0 && report.constituent_energy[i] >= threshold)
        {
            os.str("");
            os << parts[i]->name << " kinetic energy "
               << report.constituent_energy[i]
               << " meV reaches its rotational excitation threshold "
               << threshold << " meV";
            report.warnings.push_back(os.str());
        }
    }
    return report;
}

}  // namespace dimerdiff
