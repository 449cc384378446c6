// SPDX-License-Identifier: Apache-2.0
#include "dimerdiff/bound_states.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "dimerdiff/constants.hpp"
#include "dimerdiff/errors.hpp"
#include "dimerdiff/quadrature.hpp"
#include "dimerdiff/special_functions.hpp"

namespace dimerdiff
{
namespace
{
constexpr double overflow_limit = 1e150;

//---------------------------------------------------------------------------//
// Radial equation on a uniform grid in x = ln r with phi = sqrt(r) R:
//   phi'' = [c r^2 (V - E) + (l + 1/2)^2] phi,  c = 2 mu / hbar^2
class RadialProblem
{
  public:
    RadialProblem(RadialPotential const& potential,
                  double mu,
                  int l,
                  double x_begin,
                  double step,
                  std::size_t size)
        : l_(l), x0_(x_begin), h_(step), c_(2 * mu / units::hbar2_per_amu)
    {
        r_.resize(size);
        v_.resize(size);
        for (std::size_t i = 0; i < size; ++i)
        {
            r_[i] = std::exp(x0_ + h_ * double(i));
            v_[i] = potential(r_[i]);
        }
    }

    std::size_t size() const { return r_.size(); }
    double radius(std::size_t i) const { return r_[i]; }
    double coupling() const { return c_; }

    double effective(std::size_t i) const
    {
        return v_[i] + l_ * (l_ + 1) / (c_ * r_[i] * r_[i]);
    }

    double min_effective() const
    {
        double m = std::numeric_limits<double>::infinity();
        for (std::size_t i = 0; i < size(); ++i)
            m = std::min(m, effective(i));
        return m;
    }

    // Outward Numerov from phi = 0 at the inner boundary, up to index last
    // (inclusive); returns the number of sign changes. If out is given the
    // solution is stored, rescaled consistently on overflow. Integration
    // stops early once the accumulated decay exponent beyond the last
    // classically allowed point exceeds max_decay, since no further node
    // can appear there.
    int outward(double energy,
                std::size_t last,
                std::vector<double>* out,
                double max_decay = std::numeric_limits<double>::infinity()) const
    {
        if (out)
            out->assign(last + 1, 0.0);
        double f_prev = factor(0, energy);
        double f_cur = factor(1, energy);
        double p_prev = 0.0;
        double p_cur = 1e-30;
        if (out)
            (*out)[1] = p_cur;
        int nodes = 0;
        double decay = 0;
        for (std::size_t i = 1; i < last; ++i)
        {
            double excess = effective(i + 1) - energy;
            if (excess < 0)
                decay = 0;
            else
                decay += std::sqrt(c_ * excess) * (r_[i + 1] - r_[i]);
            if (decay > max_decay)
                break;
            double f_next = factor(i + 1, energy);
            double g_cur = h2_ * coefficient(i, energy);
            double p_next = (2 * p_cur * (1 + 5 * g_cur / 12) - p_prev * f_prev)
                            / f_next;
            if ((p_next < 0 && p_cur > 0) || (p_next > 0 && p_cur < 0))
                ++nodes;
            else if (p_next == 0 && p_cur != 0)
                ++nodes;
            p_prev = p_cur;
            p_cur = p_next;
            f_prev = f_cur;
            f_cur = f_next;
            if (out)
                (*out)[i + 1] = p_cur;
            if (std::abs(p_cur) > overflow_limit)
            {
                p_prev /= overflow_limit;
                p_cur /= overflow_limit;
                if (out)
                {
                    for (std::size_t j = 0; j <= i + 1; ++j)
                        (*out)[j] /= overflow_limit;
                }
            }
        }
        return nodes;
    }

    // Inward Numerov from the outer end down to index first; the start
    // follows the local exponential decay
    std::vector<double> inward(double energy, std::size_t first) const
    {
        std::size_t n = size();
        std::vector<double> p(n, 0.0);
        std::size_t last = n - 1;
        double kappa = std::sqrt(std::max(coupling() * (effective(last) - energy), 0.0));
        p[last] = 1e-30;
        p[last - 1] = 1e-30 * std::exp(kappa * (r_[last] - r_[last - 1]))
                      * std::sqrt(r_[last - 1] / r_[last]);
        for (std::size_t i = last - 1; i > first; --i)
        {
            double g_cur = h2_ * coefficient(i, energy);
            p[i - 1] = (2 * p[i] * (1 + 5 * g_cur / 12)
                        - p[i + 1] * factor(i + 1, energy))
                       / factor(i - 1, energy);
            if (std::abs(p[i - 1]) > overflow_limit)
            {
                for (std::size_t j = i - 1; j < n; ++j)
                    p[j] /= overflow_limit;
            }
        }
        return p;
    }

  private:
    int l_;
    double x0_;
    double h_;
    double h2_ = h_ * h_;
    double c_;
    std::vector<double> r_;
    std::vector<double> v_;

    double coefficient(std::size_t i, double energy) const
    {
        double lh = l_ + 0.5;
        return c_ * r_[i] * r_[i] * (v_[i] - energy) + lh * lh;
    }
    double factor(std::size_t i, double energy) const
    {
        return 1 - h2_ * coefficient(i, energy) / 12;
    }
};

// Simpson rule on a uniform grid (trapezoid correction for an even count)
double simpson(std::vector<double> const& f, double h)
{
    std::size_t n = f.size();
    if (n < 2)
        return 0;
    if (n % 2 == 0)
    {
        std::vector<double> head(f.begin(), f.end() - 1);
        return simpson(head, h) + 0.5 * h * (f[n - 2] + f[n - 1]);
    }
    double s = f.front() + f.back();
    for (std::size_t i = 1; i + 1 < n; ++i)
        s += (i % 2 ? 4 : 2) * f[i];
    return s * h / 3;
}

BoundState solve_one(RadialPotential const& potential,
                     double mu,
                     int l,
                     double x_in,
                     double r_box,
                     SolverOptions const& options,
                     bool* exists)
{
    double const h = options.log_step;
    auto box_size = std::size_t(std::ceil((std::log(r_box) - x_in) / h)) + 1;
    RadialProblem box(potential, mu, l, x_in, h, box_size);

    double const max_decay = 2 * options.tail_decades * std::log(10.0);
    *exists = box.outward(0.0, box_size - 1, nullptr, max_decay) > 0;
    if (!*exists)
        return {};

    double lo = box.min_effective();
    double hi = 0.0;
    int iter = 0;
    while (hi - lo >= options.energy_tolerance)
    {
        if (iter++ >= options.max_iterations)
        {
            throw SolverFailure(l, lo, hi, "bisection did not converge");
        }
        double mid = 0.5 * (lo + hi);
        if (box.outward(mid, box_size - 1, nullptr, max_decay) > 0)
            hi = mid;
        else
            lo = mid;
    }
    double const energy = 0.5 * (lo + hi);

    // Outer classical turning point, then the decay length of the tail
    std::size_t turn = 0;
    for (std::size_t i = 0; i < box_size; ++i)
    {
        if (box.effective(i) < energy)
            turn = i;
    }
    if (turn == 0)
        throw SolverFailure(l, lo, hi, "no classically allowed region");
    double const target = options.tail_decades * std::log(10.0);
    double decay = 0;
    std::size_t end = turn;
    while (end + 1 < box_size && decay < target)
    {
        double k0 = std::sqrt(std::max(box.coupling() * (box.effective(end) - energy), 0.0));
        double k1 = std::sqrt(std::max(box.coupling() * (box.effective(end + 1) - energy), 0.0));
        decay += 0.5 * (k0 + k1) * (box.radius(end + 1) - box.radius(end));
        ++end;
    }
    if (decay < target)
    {
        throw SolverFailure(l, lo, hi, "state extends beyond the search box");
    }

    RadialProblem grid(potential, mu, l, x_in, h, end + 1);
    std::vector<double> phi;
    grid.outward(energy, turn, &phi);
    std::vector<double> tail = grid.inward(energy, turn);
    double scale = phi[turn] / tail[turn];
    phi.resize(grid.size());
    for (std::size_t i = turn + 1; i < grid.size(); ++i)
        phi[i] = tail[i] * scale;

    // int R^2 r^2 dr = int phi^2 r^2 dx
    std::vector<double> density(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i)
    {
        double r = grid.radius(i);
        density[i] = phi[i] * phi[i] * r * r;
    }
    double norm = std::sqrt(simpson(density, h));
    double sign = (phi[turn] < 0) ? -1.0 : 1.0;

    BoundState state;
    state.l = l;
    state.energy = energy;
    state.radius.resize(grid.size());
    state.values.resize(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i)
    {
        double r = grid.radius(i);
        state.radius[i] = r;
        state.values[i] = sign * phi[i] / (norm * std::sqrt(r));
    }
    if (state.node_count() != 0)
    {
        throw SolverFailure(l, lo, hi, "converged state has radial nodes");
    }
    return state;
}

}  // namespace

//---------------------------------------------------------------------------//
double BoundState::operator()(double r) const
{
    std::size_t n = radius.size();
    if (n < 4 || r < radius.front() || r > radius.back())
        return 0.0;
    auto it = std::upper_bound(radius.begin(), radius.end(), r);
    std::size_t i = std::size_t(it - radius.begin());
    // Points i-2 .. i+1 bracket r between i-1 and i
    std::size_t start = std::clamp<std::size_t>(i < 2 ? 0 : i - 2, 0, n - 4);
    double result = 0;
    for (std::size_t a = start; a < start + 4; ++a)
    {
        double w = 1;
        for (std::size_t b = start; b < start + 4; ++b)
        {
            if (b != a)
                w *= (r - radius[b]) / (radius[a] - radius[b]);
        }
        result += w * values[a];
    }
    return result;
}

double BoundState::norm() const
{
    if (radius.size() < 4)
        return 0;
    auto rule = log_radial_rule(radius.front(), radius.back(), 0.02, 8);
    CompensatedSum<double> sum;
    for (std::size_t i = 0; i < rule.size(); ++i)
    {
        double r = rule.nodes[i];
        double v = (*this)(r);
        sum.add(rule.weights[i] * v * v * r * r);
    }
    return sum.value();
}

int BoundState::node_count() const
{
    double peak = 0;
    for (double v : values)
        peak = std::max(peak, std::abs(v));
    int nodes = 0;
    int last_sign = 0;
    for (double v : values)
    {
        if (std::abs(v) < 1e-8 * peak)
            continue;
        int s = v > 0 ? 1 : -1;
        if (last_sign != 0 && s != last_sign)
            ++nodes;
        last_sign = s;
    }
    return nodes;
}

std::pair<double, double> BoundState::support(double rel) const
{
    double peak = 0;
    for (std::size_t i = 0; i < radius.size(); ++i)
        peak = std::max(peak, std::abs(radius[i] * values[i]));
    std::size_t first = radius.size();
    std::size_t last = 0;
    for (std::size_t i = 0; i < radius.size(); ++i)
    {
        if (std::abs(radius[i] * values[i]) > rel * peak)
        {
            first = std::min(first, i);
            last = i;
        }
    }
    if (first > last)
        return {0.0, 0.0};
    return {radius[first], radius[last]};
}

//---------------------------------------------------------------------------//
std::vector<BoundState> solve_bound_states(RadialPotential const& potential,
                                           double reduced_mass,
                                           int l_max,
                                           SolverOptions const& options)
{
    if (!(reduced_mass > 0))
        throw DomainError("reduced mass must be positive");
    if (l_max < 0)
        throw DomainError("l_max must be non-negative");
    if (!(options.log_step > 0) || !(options.energy_tolerance > 0))
        throw DomainError("solver step and tolerance must be positive");

    std::vector<BoundState> states;
    auto well = potential.well();
    if (!well)
        return states;

    double r_in = potential.core_radius(options.core_factor * std::abs(well->depth));
    r_in = std::max(r_in, potential.hard_wall());
    double r_box = options.search_box_factor * well->radius;
    double x_in = std::log(r_in);

    for (int l = 0; l <= l_max; ++l)
    {
        bool exists = false;
        BoundState s = solve_one(potential, reduced_mass, l, x_in, r_box, options, &exists);
        if (!exists)
            break;
        states.push_back(std::move(s));
    }
    return states;
}

//---------------------------------------------------------------------------//
DimerSpecies::DimerSpecies(std::string name,
                           Constituent first,
                           Constituent second,
                           bool identical,
                           std::vector<BoundState> states)
    : name_(std::move(name))
    , first_(std::move(first))
    , second_(std::move(second))
    , identical_(identical)
    , states_(std::move(states))
{
    if (!(first_.mass > 0) || !(second_.mass > 0))
        throw DomainError("constituent masses must be positive");
    if (identical_ && first_.mass != second_.mass)
        throw DomainError("identical constituents must have equal masses");
    std::sort(states_.begin(), states_.end(),
              [](BoundState const& a, BoundState const& b) { return a.l < b.l; });
    for (std::size_t i = 1; i < states_.size(); ++i)
    {
        if (states_[i].l == states_[i - 1].l)
            throw DomainError("duplicate bound state for l = "
                              + std::to_string(states_[i].l));
    }
}

DimerSpecies DimerSpecies::solve(std::string name,
                                 Constituent first,
                                 Constituent second,
                                 bool identical,
                                 RadialPotential const& potential,
                                 int l_max,
                                 SolverOptions const& options)
{
    double mu = first.mass * second.mass / (first.mass + second.mass);
    auto states = solve_bound_states(potential, mu, l_max, options);
    return DimerSpecies(std::move(name), std::move(first), std::move(second),
                        identical, std::move(states));
}

bool DimerSpecies::has_state(int l) const
{
    return std::any_of(states_.begin(), states_.end(),
                       [l](BoundState const& s) { return s.l == l; });
}

BoundState const& DimerSpecies::state(int l) const
{
    for (auto const& s : states_)
    {
        if (s.l == l)
            return s;
    }
    throw UnknownState(l);
}

double transition_energy(DimerSpecies const& species, int l_from, int l_to)
{
    return species.state(l_to).energy - species.state(l_from).energy;
}

//---------------------------------------------------------------------------//
std::complex<double> form_factor(DimerSpecies const& species,
                                 StateIndex final_state,
                                 StateIndex initial_state,
                                 std::array<double, 3> const& wavevector)
{
    auto const& rf = species.state(final_state.l);
    auto const& ri = species.state(initial_state.l);
    if (std::abs(final_state.m) > final_state.l
        || std::abs(initial_state.m) > initial_state.l)
    {
        throw DomainError("form_factor: |m| exceeds l");
    }

    auto [qx, qy, qz] = wavevector;
    double q = std::sqrt(qx * qx + qy * qy + qz * qz);
    double theta = q > 0 ? std::acos(std::clamp(qz / q, -1.0, 1.0)) : 0.0;
    double phi = std::atan2(qy, qx);

    double r_lo = std::max(rf.radius.front(), ri.radius.front());
    double r_hi = std::min(rf.radius.back(), ri.radius.back());
    auto rule = log_radial_rule(r_lo, r_hi, 0.02, 8);
    std::vector<double> overlap(rule.size());
    for (std::size_t i = 0; i < rule.size(); ++i)
    {
        double r = rule.nodes[i];
        overlap[i] = rule.weights[i] * r * r * rf(r) * ri(r);
    }

    // exp(-i q.r) = 4 pi sum_L (-i)^L j_L(qr) sum_M Y_LM(q) Y_LM^*(r)
    int const lf = final_state.l;
    int const li = initial_state.l;
    int const big_m = initial_state.m - final_state.m;
    std::complex<double> result = 0;
    for (int big_l = std::abs(lf - li); big_l <= lf + li; ++big_l)
    {
        if (std::abs(big_m) > big_l || (lf + li + big_l) % 2 != 0)
            continue;
        double angular = gaunt(lf, final_state.m, big_l, -big_m, li, initial_state.m);
        if (angular == 0)
            continue;
        CompensatedSum<double> rho;
        for (std::size_t i = 0; i < rule.size(); ++i)
        {
            rho.add(overlap[i]
                    * std::sph_bessel(unsigned(big_l), q * rule.nodes[i]));
        }
        std::complex<double> phase = std::pow(std::complex<double>(0, -1), big_l);
        double sign = (big_m % 2 == 0) ? 1.0 : -1.0;
        result += 4 * units::pi * phase * rho.value()
                  * spherical_harmonic(big_l, big_m, theta, phi) * sign * angular;
    }
    return result;
}

}  // namespace dimerdiff
