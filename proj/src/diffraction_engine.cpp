// SPDX-License-Identifier: Apache-2.0
#include "dimerdiff/diffraction_engine.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <thread>

#include "dimerdiff/constants.hpp"
#include "dimerdiff/errors.hpp"
#include "dimerdiff/quadrature.hpp"
#include "dimerdiff/special_functions.hpp"

namespace dimerdiff
{
namespace
{
struct Segment
{
    double lower;
    double upper;
};

// Periodic images of (lower, upper) that fall inside [start, start + period)
void periodic_pieces(double lower,
                     double upper,
                     double start,
                     double period,
                     std::vector<Segment>& out)
{
    out.clear();
    if (!(upper > lower))
        return;
    double end = start + period;
    long k = long(std::floor((start - upper) / period));
    for (;; ++k)
    {
        double lo = lower + k * period;
        double hi = upper + k * period;
        if (lo >= end)
            break;
        lo = std::max(lo, start);
        hi = std::min(hi, end);
        if (hi > lo)
            out.push_back({lo, hi});
    }
}

}  // namespace

//---------------------------------------------------------------------------//
QuadratureSpec QuadratureSpec::scaled(double factor) const
{
    QuadratureSpec result = *this;
    result.n_y = int(std::lround(n_y * factor));
    result.n_r = int(std::lround(n_r * factor));
    result.n_alpha = 2 * int(std::lround(0.5 * n_alpha * factor));
    return result;
}

void QuadratureSpec::validate(int l_max) const
{
    if (n_y < 16 || n_r < 1 || n_alpha < 2)
        throw DomainError("quadrature orders must be positive");
    if (n_alpha % 2 != 0)
        throw DomainError("n_alpha must be even");
    if (n_alpha < 2 * l_max + 8)
    {
        throw DomainError("n_alpha must be at least 2 l_max + 8 = "
                          + std::to_string(2 * l_max + 8));
    }
    if (r_max < 0 || !(radial_cutoff > 0) || edge_band < 0)
        throw DomainError("invalid radial cutoff or edge band");
}

YQuadrature QuadratureSpec::y_rule() const
{
    YQuadrature rule;
    rule.points_per_period = n_y;
    rule.edge_band = edge_band;
    rule.offset = y_offset;
    return rule;
}

//---------------------------------------------------------------------------//
DiffractionEngine::DiffractionEngine(DimerSpecies species,
                                     PointParticleTransmission first,
                                     PointParticleTransmission second,
                                     QuadratureSpec const& quadrature,
                                     int n_min,
                                     int n_max,
                                     int threads)
    : species_(std::move(species))
    , first_(std::move(first))
    , second_(std::move(second))
    , quadrature_(quadrature)
    , n_min_(n_min)
    , n_max_(n_max)
{
    if (n_min > n_max)
        throw DomainError("empty diffraction order range");
    if (species_.states().empty())
        throw DomainError("species has no bound states");
    if (first_.geometry().period != second_.geometry().period)
        throw DomainError("constituents see different grating periods");
    quadrature_.validate(species_.states().back().l);

    r_lower_ = std::numeric_limits<double>::infinity();
    r_upper_ = 0;
    for (auto const& s : species_.states())
    {
        auto [lo, hi] = s.support(quadrature_.radial_cutoff);
        r_lower_ = std::min(r_lower_, lo);
        r_upper_ = std::max(r_upper_, hi);
    }
    if (quadrature_.r_max > 0)
        r_upper_ = std::min(r_upper_, quadrature_.r_max);
    if (!(r_upper_ > r_lower_))
        throw DomainError("empty radial integration range");

    auto rr = gauss_legendre(quadrature_.n_r, std::log(r_lower_), std::log(r_upper_));
    for (std::size_t i = 0; i < rr.size(); ++i)
    {
        double r = std::exp(rr.nodes[i]);
        r_nodes_.push_back(r);
        r_weights_.push_back(rr.weights[i] * r * r * r);
    }
    for (double sign : {-1.0, 1.0})
    {
        auto half = gauss_legendre(quadrature_.n_alpha / 2, 0.0, 1.0);
        for (std::size_t i = 0; i < half.size(); ++i)
        {
            a_nodes_.push_back(sign * half.nodes[i]);
            a_weights_.push_back(half.weights[i]);
        }
    }
    for (auto const& s : species_.states())
    {
        std::vector<double> values(r_nodes_.size());
        for (std::size_t i = 0; i < r_nodes_.size(); ++i)
            values[i] = s(r_nodes_[i]);
        radial_.push_back(std::move(values));
    }
    y_panels_ = quadrature_.y_rule().panels(first_.geometry().period);
    y_reference_ = gauss_legendre(y_panels_.order);
    build_table(std::max(threads, 1));
}

std::size_t DiffractionEngine::state_index(int l) const
{
    auto const& states = species_.states();
    for (std::size_t i = 0; i < states.size(); ++i)
    {
        if (states[i].l == l)
            return i;
    }
    throw UnknownState(l);
}

struct DiffractionEngine::Workspace
{
    std::vector<Segment> first;
    std::vector<Segment> second;
    std::vector<double> nodes;
    std::vector<double> weights;
    std::vector<CompensatedSum<std::complex<double>>> sums;
    std::vector<std::complex<double>> panel;
};

void DiffractionEngine::correlation(double u,
                                    std::complex<double>* out,
                                    Workspace& work) const
{
    double const d = first_.geometry().period;
    double const m_total = species_.total_mass();
    double const shift1 = species_.second().mass / m_total * u;
    double const shift2 = -species_.first().mass / m_total * u;
    int const n_count = n_max_ - n_min_ + 1;

    double const band1 = first_.c3() > 0 ? quadrature_.edge_band : 0.0;
    double const band2 = second_.c3() > 0 ? quadrature_.edge_band : 0.0;
    OpenInterval o1 = first_.open();
    OpenInterval o2 = second_.open();

    std::fill(out, out + n_count, std::complex<double>(0));
    double const start = -0.5 * d + quadrature_.y_offset;
    // Y ranges where tau_1(Y + shift1) and tau_2(Y + shift2) are non-zero
    auto& s1 = work.first;
    auto& s2 = work.second;
    periodic_pieces(o1.lower + band1 - shift1, o1.upper - band1 - shift1, start, d, s1);
    periodic_pieces(o2.lower + band2 - shift2, o2.upper - band2 - shift2, start, d, s2);

    PanelSpec const& spec = y_panels_;
    QuadratureRule const& reference = y_reference_;
    double const fourier_rate
        = 2 * units::pi * std::max(std::abs(n_min_), std::abs(n_max_)) / d;
    auto rate = [&](double y) {
        return first_.phase_rate(first_.reduce(y + shift1))
               + second_.phase_rate(second_.reduce(y + shift2)) + fourier_rate;
    };

    auto& nodes = work.nodes;
    auto& weights = work.weights;
    auto& sums = work.sums;
    auto& panel = work.panel;
    sums.assign(n_count, {});
    panel.assign(n_count, 0.0);

    double const k = -2 * units::pi / d;
    for (auto const& a : s1)
    {
        for (auto const& b : s2)
        {
            double lo = std::max(a.lower, b.lower);
            double hi = std::min(a.upper, b.upper);
            if (!(hi > lo))
                continue;
            nodes.clear();
            weights.clear();
            append_phase_adapted_panels(lo, hi, rate, spec, reference, nodes, weights);
            for (std::size_t i = 0; i < nodes.size(); ++i)
            {
                double y = nodes[i];
                std::complex<double> value = weights[i] * first_(y + shift1)
                                             * second_(y + shift2);
                // exp(-2 pi i n y / d) by recurrence outward from n = 0
                std::complex<double> const step = std::polar(1.0, k * y);
                std::complex<double> const back = std::conj(step);
                std::complex<double> phasor = value;
                for (int n = 0; n <= n_max_; ++n)
                {
                    if (n >= n_min_)
                        panel[n - n_min_] += phasor;
                    phasor *= step;
                }
                phasor = value * back;
                for (int n = -1; n >= n_min_; --n)
                {
                    if (n <= n_max_)
                        panel[n - n_min_] += phasor;
                    phasor *= back;
                }
                if ((i + 1) % reference.size() == 0)
                {
                    for (int n = 0; n < n_count; ++n)
                    {
                        sums[n].add(panel[n]);
                        panel[n] = 0;
                    }
                }
            }
        }
    }
    for (int n = 0; n < n_count; ++n)
        out[n] = (sums[n].value() + panel[n]) / d;
}

void DiffractionEngine::build_table(int threads)
{
    std::size_t const nr = r_nodes_.size();
    std::size_t const na = a_nodes_.size();
    std::size_t const nn = std::size_t(n_max_ - n_min_ + 1);
    table_.assign(nr * na * nn, 0.0);

    auto work = [&](std::size_t ir, Workspace& ws) {
        for (std::size_t ia = 0; ia < na; ++ia)
        {
            correlation(a_nodes_[ia] * r_nodes_[ir], &table_[(ir * na + ia) * nn], ws);
        }
    };
    if (threads <= 1)
    {
        Workspace ws;
        for (std::size_t ir = 0; ir < nr; ++ir)
            work(ir, ws);
        return;
    }
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t)
    {
        pool.emplace_back([&, t] {
            Workspace ws;
            for (std::size_t ir = t; ir < nr; ir += threads)
                work(ir, ws);
        });
    }
    for (auto& th : pool)
        th.join();
}

std::complex<double> DiffractionEngine::dimer_transmission(int l_final,
                                                           int l_initial,
                                                           int m,
                                                           double y) const
{
    auto const& rf = radial_[state_index(l_final)];
    auto const& ri = radial_[state_index(l_initial)];
    double const m_total = species_.total_mass();
    double const a = species_.second().mass / m_total;
    double const b = species_.first().mass / m_total;
    CompensatedSum<std::complex<double>> sum;
    for (std::size_t ia = 0; ia < a_nodes_.size(); ++ia)
    {
        double angular = a_weights_[ia]
                         * pi_function(l_final, l_initial, m, a_nodes_[ia]);
        for (std::size_t ir = 0; ir < r_nodes_.size(); ++ir)
        {
            double u = a_nodes_[ia] * r_nodes_[ir];
            sum.add(angular * r_weights_[ir] * rf[ir] * ri[ir]
                    * first_(y + a * u) * second_(y - b * u));
        }
    }
    return std::sqrt(double((2 * l_final + 1) * (2 * l_initial + 1))) * sum.value();
}

std::complex<double>
DiffractionEngine::amplitude(int n, int l_final, int l_initial, int m) const
{
    if (n < n_min_ || n > n_max_)
        throw DomainError("order outside the tabulated range");
    if (std::abs(m) > std::min(l_final, l_initial))
        throw DomainError("|m| exceeds min(l, l')");
    auto const& rf = radial_[state_index(l_final)];
    auto const& ri = radial_[state_index(l_initial)];
    std::size_t const na = a_nodes_.size();
    std::size_t const nn = std::size_t(n_max_ - n_min_ + 1);
    std::size_t const in = std::size_t(n - n_min_);

    std::vector<double> angular(na);
    for (std::size_t ia = 0; ia < na; ++ia)
        angular[ia] = a_weights_[ia] * pi_function(l_final, l_initial, m, a_nodes_[ia]);

    CompensatedSum<std::complex<double>> sum;
    for (std::size_t ir = 0; ir < r_nodes_.size(); ++ir)
    {
        std::complex<double> inner = 0;
        for (std::size_t ia = 0; ia < na; ++ia)
            inner += angular[ia] * table_[(ir * na + ia) * nn + in];
        sum.add(r_weights_[ir] * rf[ir] * ri[ir] * inner);
    }
    return std::sqrt(double((2 * l_final + 1) * (2 * l_initial + 1))) * sum.value();
}

double DiffractionEngine::intensity(int n,
                                    int l_final,
                                    int l_initial,
                                    double initial_weight) const
{
    int m_max = std::min(l_final, l_initial);
    double total = 0;
    for (int m = -m_max; m <= m_max; ++m)
        total += std::norm(amplitude(n, l_final, l_initial, m));
    return (2 * l_final + 1) * initial_weight * total;
}

//---------------------------------------------------------------------------//
std::vector<double>
thermal_populations(DimerSpecies const& species, double temperature)
{
    if (!(temperature > 0))
        throw DomainError("temperature must be positive");
    auto const& states = species.states();
    std::vector<double> p(states.size());
    if (states.empty())
        return p;
    double e0 = states.front().energy;
    double total = 0;
    for (std::size_t i = 0; i < states.size(); ++i)
    {
        p[i] = (2 * states[i].l + 1)
               * std::exp(-(states[i].energy - e0) / (units::boltzmann * temperature));
        total += p[i];
    }
    for (double& x : p)
        x /= total;
    return p;
}

PointParticleTransmission DiffractionSetup::transmission(int which) const
{
    double c3 = which == 0 ? coupling.c3_first : coupling.c3_second;
    return PointParticleTransmission(grating, c3, beam.speed, beam.incidence);
}

namespace
{
DiffractionEngine make_engine(DiffractionSetup const& setup,
                              QuadratureSpec const& quadrature,
                              int n_min,
                              int n_max,
                              int threads)
{
    return DiffractionEngine(setup.species, setup.transmission(0),
                             setup.transmission(1), quadrature, n_min, n_max,
                             threads);
}

double elastic_zeroth(DiffractionEngine const& engine,
                      std::vector<double> const& populations)
{
    auto const& states = engine.species().states();
    double total = 0;
    for (std::size_t i = 0; i < states.size(); ++i)
        total += engine.intensity(0, states[i].l, states[i].l, populations[i]);
    return total;
}

}  // namespace

double intensity(DiffractionSetup const& setup,
                 int n,
                 int l_final,
                 int l_initial,
                 QuadratureSpec const& quadrature)
{
    setup.beam.validate();
    auto const& species = setup.species;
    double delta_e = transition_energy(species, l_initial, l_final);
    double p = dimer_momentum(species.total_mass(), setup.beam.speed);
    if (delta_e >= kinetic_energy(p, species.total_mass()))
        throw ClosedChannel("transition energy exceeds the kinetic energy");

    auto engine = make_engine(setup, quadrature, std::min(n, 0), std::max(n, 0), 1);
    auto populations = thermal_populations(species, setup.beam.temperature);
    double weight = populations[std::size_t(
        std::find_if(species.states().begin(), species.states().end(),
                     [&](BoundState const& s) { return s.l == l_initial; })
        - species.states().begin())];
    return engine.intensity(n, l_final, l_initial, weight)
           / elastic_zeroth(engine, populations);
}

//---------------------------------------------------------------------------//
std::string describe_flags(std::uint32_t flags)
{
    std::string out;
    auto add = [&out](char const* s) {
        if (!out.empty())
            out += '|';
        out += s;
    };
    if (flags & selection_rule_zero)
        add("selection_rule_zero");
    if (flags & evanescent)
        add("evanescent");
    if (flags & closed)
        add("closed");
    if (flags & accuracy_warning)
        add("accuracy_warning");
    return out;
}

namespace
{
void fill_intensities(SweepResult& result,
                      DiffractionEngine const& engine,
                      std::vector<double> const& populations)
{
    auto const& states = engine.species().states();
    auto weight_of = [&](int l) {
        for (std::size_t i = 0; i < states.size(); ++i)
        {
            if (states[i].l == l)
                return populations[i];
        }
        throw UnknownState(l);
    };
    for (auto& e : result.entries)
    {
        if (e.flags & (evanescent | closed))
            continue;
        e.intensity = engine.intensity(e.n, e.channel.l_final, e.channel.l_initial,
                                       weight_of(e.channel.l_initial))
                      / result.elastic_zeroth;
    }
}

}  // namespace

SweepResult channel_sweep(DiffractionSetup const& setup,
                          QuadratureSpec const& quadrature,
                          int n_min,
                          int n_max,
                          SweepOptions const& options)
{
    SweepResult result;
    auto const& species = setup.species;
    auto const& states = species.states();
    if (n_min > n_max || states.empty())
    {
        if (states.empty())
            result.errors.push_back("species has no bound states");
        return result;
    }
    setup.beam.validate();
    setup.grating.validate();
    result.populations = thermal_populations(species, setup.beam.temperature);
    for (auto const& s : states)
        result.levels.push_back(s.l);

    double const momentum = dimer_momentum(species.total_mass(), setup.beam.speed);
    for (auto const& initial : states)
    {
        for (auto const& final : states)
        {
            bool forbidden = species.identical() && (initial.l + final.l) % 2 != 0;
            if (forbidden && !options.include_forbidden)
                continue;
            TransitionChannel channel;
            channel.l_initial = initial.l;
            channel.l_final = final.l;
            channel.delta_e = final.energy - initial.energy;
            for (int n = n_min; n <= n_max; ++n)
            {
                SweepEntry entry;
                entry.channel = channel;
                entry.n = n;
                if (forbidden)
                    entry.flags |= selection_rule_zero;
                try
                {
                    entry.angle = diffraction_angle(n, setup.beam.incidence, momentum,
                                                    species.total_mass(),
                                                    channel.delta_e,
                                                    setup.grating.period);
                }
                catch (ClosedChannel const& e)
                {
                    entry.flags |= closed;
                    entry.angle = std::numeric_limits<double>::quiet_NaN();
                    if (n == n_min)
                    {
                        std::ostringstream os;
                        os << "channel " << initial.l << "->" << final.l << ": "
                           << e.what();
                        result.errors.push_back(os.str());
                    }
                }
                catch (EvanescentOrder const& e)
                {
                    entry.flags |= evanescent;
                    entry.angle = std::numeric_limits<double>::quiet_NaN();
                    std::ostringstream os;
                    os << "channel " << initial.l << "->" << final.l << ": "
                       << e.what();
                    result.errors.push_back(os.str());
                }
                result.entries.push_back(entry);
            }
        }
    }

    int lo = std::min(n_min, 0);
    int hi = std::max(n_max, 0);
    {
        auto engine = make_engine(setup, quadrature, lo, hi, options.threads);
        result.elastic_zeroth = elastic_zeroth(engine, result.populations);
        if (!(result.elastic_zeroth > 0))
        {
            result.errors.push_back("zero elastic zeroth-order intensity");
            return result;
        }
        fill_intensities(result, engine, result.populations);
    }

    if (options.check_convergence)
    {
        SweepResult fine = result;
        auto engine = make_engine(setup, quadrature.scaled(2), lo, hi, options.threads);
        fine.elastic_zeroth = elastic_zeroth(engine, fine.populations);
        fill_intensities(fine, engine, fine.populations);
        for (std::size_t i = 0; i < result.entries.size(); ++i)
        {
            auto& e = result.entries[i];
            double ref = fine.entries[i].intensity;
            if (std::max(e.intensity, ref) < options.significance)
                continue;
            if (std::abs(e.intensity - ref) > options.convergence_tolerance * ref)
                e.flags |= accuracy_warning;
        }
    }
    return result;
}

}  // namespace dimerdiff
