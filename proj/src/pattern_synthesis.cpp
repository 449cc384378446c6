// SPDX-License-Identifier: Apache-2.0
#include "dimerdiff/pattern_synthesis.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <sstream>
#include <tuple>

#include "dimerdiff/constants.hpp"
#include "dimerdiff/errors.hpp"

namespace dimerdiff
{
namespace
{
// Gaussians are evaluated out to this many widths
constexpr double cutoff_widths = 12.0;

double line_shape(Peak const& p, double theta)
{
    double x = (theta - p.angle) / p.width;
    return p.area / (std::sqrt(units::pi) * p.width) * std::exp(-x * x);
}

}  // namespace

double peak_width(int n, double w0, double dw)
{
    if (!(w0 > 0) || !(dw >= 0))
        throw DomainError("peak width parameters must satisfy w0 > 0, dw >= 0");
    double r = dw * n / w0;
    return w0 * std::sqrt(1 + r * r);
}

std::string channel_label(TransitionChannel const& channel)
{
    return std::to_string(channel.l_initial) + "->" + std::to_string(channel.l_final);
}

Pattern synthesize(std::vector<Peak> const& peaks, GridSpec const& grid)
{
    if (!(grid.step > 0))
        throw DomainError("grid step must be positive");
    Pattern pattern;
    if (peaks.empty() && !(grid.lower && grid.upper))
        return pattern;

    double lo = std::numeric_limits<double>::infinity();
    double hi = -lo;
    double w_min = lo;
    for (auto const& p : peaks)
    {
        if (!(p.width > 0) || !(p.area >= 0))
            throw DomainError("peaks need positive width and non-negative area");
        lo = std::min(lo, p.angle);
        hi = std::max(hi, p.angle);
        w_min = std::min(w_min, p.width);
    }
    lo = grid.lower.value_or(lo - grid.margin);
    hi = grid.upper.value_or(hi + grid.margin);
    if (!(hi > lo))
        throw DomainError("empty angular grid");
    if (grid.step > w_min / 5)
    {
        std::ostringstream os;
        os << "grid step " << grid.step << " deg is coarser than 1/5 of the "
           << "narrowest peak width " << w_min << " deg";
        pattern.warnings.push_back(os.str());
    }

    auto count = std::size_t(std::floor((hi - lo) / grid.step + 1e-9)) + 1;
    pattern.angle.resize(count);
    for (std::size_t i = 0; i < count; ++i)
        pattern.angle[i] = lo + grid.step * double(i);
    pattern.total.assign(count, 0.0);

    std::vector<std::size_t> component_of(peaks.size(), 0);
    if (grid.components)
    {
        for (std::size_t k = 0; k < peaks.size(); ++k)
        {
            std::string label = channel_label(peaks[k].channel);
            auto it = std::find(pattern.component_labels.begin(),
                                pattern.component_labels.end(), label);
            component_of[k] = std::size_t(it - pattern.component_labels.begin());
            if (it == pattern.component_labels.end())
                pattern.component_labels.push_back(label);
        }
        pattern.components.assign(pattern.component_labels.size(),
                                  std::vector<double>(count, 0.0));
    }

    for (std::size_t k = 0; k < peaks.size(); ++k)
    {
        auto const& p = peaks[k];
        double reach = cutoff_widths * p.width;
        auto first = std::size_t(std::max(0.0, std::ceil((p.angle - reach - lo) / grid.step)));
        double last_d = std::floor((p.angle + reach - lo) / grid.step);
        if (last_d < 0)
            continue;
        auto last = std::min(count - 1, std::size_t(last_d));
        for (std::size_t i = first; i <= last; ++i)
        {
            double v = line_shape(p, pattern.angle[i]);
            pattern.total[i] += v;
            if (grid.components)
                pattern.components[component_of[k]][i] += v;
        }
    }
    return pattern;
}

ResolvabilityReport resolvability(std::vector<Peak> const& peaks, double detection_floor)
{
    ResolvabilityReport report;
    report.status.resize(peaks.size());
    std::vector<std::size_t> order(peaks.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return peaks[a].angle < peaks[b].angle;
    });
    double w_max = 0;
    for (auto const& p : peaks)
        w_max = std::max(w_max, p.width);

    for (std::size_t a = 0; a < order.size(); ++a)
    {
        auto const& pa = peaks[order[a]];
        for (std::size_t b = a + 1; b < order.size(); ++b)
        {
            auto const& pb = peaks[order[b]];
            double sep = pb.angle - pa.angle;
            if (sep >= pa.width + w_max)
                break;
            // Elastic peaks of one order coincide for every l: one maximum
            bool same_maximum = pa.channel.elastic() && pb.channel.elastic()
                                && pa.n == pb.n;
            if (sep < pa.width + pb.width && !same_maximum)
            {
                std::size_t i = std::min(order[a], order[b]);
                std::size_t j = std::max(order[a], order[b]);
                report.overlaps.push_back({i, j, sep});
                report.status[i].overlapping = true;
                report.status[j].overlapping = true;
            }
        }
    }
    std::sort(report.overlaps.begin(), report.overlaps.end(),
              [](auto const& x, auto const& y) {
                  return std::tie(x.first, x.second) < std::tie(y.first, y.second);
              });

    for (std::size_t k = 0; k < peaks.size(); ++k)
    {
        auto const& p = peaks[k];
        double own = line_shape(p, p.angle);
        double others = 0;
        for (std::size_t j = 0; j < peaks.size(); ++j)
        {
            bool same_maximum = p.channel.elastic() && peaks[j].channel.elastic()
                                && p.n == peaks[j].n;
            if (j != k && !same_maximum)
                others += line_shape(peaks[j], p.angle);
        }
        report.status[k].masked = others >= own;
        report.status[k].below_floor = p.area < detection_floor;
    }
    return report;
}

std::vector<Peak> peaks_from_sweep(SweepResult const& sweep,
                                   BeamSpec const& beam,
                                   double population_floor)
{
    auto population = [&](int l) {
        for (std::size_t i = 0; i < sweep.levels.size(); ++i)
        {
            if (sweep.levels[i] == l)
                return sweep.populations[i];
        }
        return 0.0;
    };
    std::vector<Peak> peaks;
    for (auto const& e : sweep.entries)
    {
        if (e.flags & (evanescent | closed | selection_rule_zero))
            continue;
        if (!std::isfinite(e.angle))
            continue;
        if (e.channel.delta_e < 0 && population(e.channel.l_initial) <= population_floor)
            continue;
        Peak p;
        p.n = e.n;
        p.channel = e.channel;
        p.angle = units::to_degrees(e.angle);
        p.area = e.intensity;
        p.width = peak_width(e.n, beam.w0, beam.dw);
        peaks.push_back(p);
    }
    return peaks;
}

}  // namespace dimerdiff
