// SPDX-License-Identifier: Apache-2.0
#include "dimerdiff/cli.hpp"

#include <cmath>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <sstream>

#include <CLI11.hpp>

#include "dimerdiff/config.hpp"
#include "dimerdiff/constants.hpp"
#include "dimerdiff/errors.hpp"
#include "dimerdiff/pattern_synthesis.hpp"

namespace dimerdiff
{
namespace
{
//---------------------------------------------------------------------------//
class CsvWriter
{
  public:
    CsvWriter(std::filesystem::path const& path, std::vector<std::string> const& header)
        : path_(path), out_(path)
    {
        if (!out_)
            throw Error("cannot write " + path.string());
        out_ << std::setprecision(9);
        for (std::size_t i = 0; i < header.size(); ++i)
            out_ << (i ? "," : "") << header[i];
        out_ << '\n';
    }

    template<class... Ts>
    void row(Ts const&... values)
    {
        bool first = true;
        ((out_ << (first ? "" : ",") << values, first = false), ...);
        out_ << '\n';
    }

    std::ostream& stream() { return out_; }

  private:
    std::filesystem::path path_;
    std::ofstream out_;
};

std::filesystem::path output_directory(CommandOptions const& options,
                                       RunConfig const& config)
{
    auto dir = options.out ? *options.out : config.output.directory;
    std::filesystem::create_directories(dir);
    return dir;
}

RunConfig load(CommandOptions const& options)
{
    auto config = load_config(options.config);
    if (!(options.quadrature_scale > 0))
        throw ConfigError("--quadrature-scale must be positive");
    if (options.threads < 1)
        throw ConfigError("--threads must be at least 1");
    config.quadrature = config.quadrature.scaled(options.quadrature_scale);
    return config;
}

template<class F>
int guarded(std::ostream& err, F&& body)
{
    try
    {
        return body();
    }
    catch (ConfigError const& e)
    {
        err << "configuration error: " << e.what() << '\n';
        return exit_code::config_error;
    }
    catch (SolverFailure const& e)
    {
        err << "solver failure for l = " << e.l() << " (bracket "
            << e.lower_energy() << " .. " << e.upper_energy()
            << " meV): " << e.what() << '\n';
        return exit_code::solver_failure;
    }
    catch (DomainError const& e)
    {
        err << "invalid input: " << e.what() << '\n';
        return exit_code::config_error;
    }
    catch (std::exception const& e)
    {
        err << "error: " << e.what() << '\n';
        return exit_code::usage;
    }
}

void write_bound_states(std::filesystem::path const& dir, DimerSpecies const& species)
{
    CsvWriter table(dir / "bound_states.csv", {"l", "E_l_ueV"});
    for (auto const& s : species.states())
    {
        table.row(s.l, s.energy / units::micro_ev);
        CsvWriter wf(dir / ("wavefunction_l" + std::to_string(s.l) + ".csv"),
                     {"r_nm", "R_l"});
        for (std::size_t i = 0; i < s.radius.size(); ++i)
            wf.row(s.radius[i], s.values[i]);
    }
}

void print_transition_table(std::ostream& out, DimerSpecies const& species)
{
    auto const& states = species.states();
    out << "species " << species.name() << ": " << states.size() << " bound state"
        << (states.size() == 1 ? "" : "s") << '\n';
    out << std::setprecision(6);
    for (auto const& s : states)
        out << "  l = " << s.l << "  E = " << s.energy / units::micro_ev << " ueV\n";
    out << "  transition  E_l - E_l' [ueV]\n";
    for (auto const& from : states)
    {
        for (auto const& to : states)
        {
            if (to.l <= from.l)
                continue;
            if (species.identical() && (from.l + to.l) % 2 != 0)
                continue;
            out << "  " << from.l << " -> " << to.l << "      "
                << transition_energy(species, from.l, to.l) / units::micro_ev << '\n';
        }
    }
}

void print_regime(std::ostream& out, RegimeReport const& report)
{
    out << std::setprecision(6) << "regime: kinetic energy " << report.kinetic_energy
        << " meV, |E_0|/E_kin " << report.binding_ratio << ", lambda' "
        << report.wavelength << " nm, s/lambda' " << report.slit_ratio
        << ", (d-s)/lambda' " << report.bar_ratio << '\n';
    for (auto const& w : report.warnings)
        out << "warning: " << w << '\n';
}

}  // namespace

//---------------------------------------------------------------------------//
int cmd_bound_states(CommandOptions const& options, std::ostream& out, std::ostream& err)
{
    return guarded(err, [&] {
        auto config = load(options);
        auto species = solve_species(config);
        auto dir = output_directory(options, config);
        write_bound_states(dir, species);
        if (species.states().empty())
        {
            out << "no bound states for species " << species.name() << '\n';
            return exit_code::success;
        }
        print_transition_table(out, species);
        return exit_code::success;
    });
}

int cmd_pattern(CommandOptions const& options, std::ostream& out, std::ostream& err)
{
    return guarded(err, [&] {
        auto config = load(options);
        auto species = solve_species(config);
        auto dir = output_directory(options, config);
        write_bound_states(dir, species);
        if (species.states().empty())
        {
            out << "no bound states for species " << species.name()
                << "; nothing to diffract\n";
            return exit_code::success;
        }
        print_transition_table(out, species);
        print_regime(out, validate_regime(species, config.beam, config.grating));

        auto setup = make_setup(config, species);
        SweepOptions sweep_options;
        sweep_options.threads = options.threads;
        sweep_options.check_convergence = config.check_convergence;
        sweep_options.convergence_tolerance = config.convergence_tolerance;
        auto sweep = channel_sweep(setup, config.quadrature, config.output.n_min,
                                   config.output.n_max, sweep_options);
        for (auto const& e : sweep.errors)
            err << "warning: " << e << '\n';

        {
            CsvWriter csv(dir / "intensities.csv",
                          {"n", "l_initial", "l_final", "intensity", "theta_deg",
                           "delta_e_ueV", "flags"});
            for (auto const& e : sweep.entries)
            {
                csv.row(e.n, e.channel.l_initial, e.channel.l_final, e.intensity,
                        units::to_degrees(e.angle), e.channel.delta_e / units::micro_ev,
                        describe_flags(e.flags));
            }
        }

        auto peaks = peaks_from_sweep(sweep, config.beam, config.output.population_floor);
        auto report = resolvability(peaks, config.output.detection_floor);
        {
            CsvWriter csv(dir / "peaks.csv",
                          {"n", "l_initial", "l_final", "delta_e_ueV", "theta_deg",
                           "width_deg", "area", "resolvable", "overlapping", "masked",
                           "below_floor"});
            for (std::size_t i = 0; i < peaks.size(); ++i)
            {
                auto const& p = peaks[i];
                auto const& s = report.status[i];
                csv.row(p.n, p.channel.l_initial, p.channel.l_final,
                        p.channel.delta_e / units::micro_ev, p.angle, p.width, p.area,
                        int(s.resolvable()), int(s.overlapping), int(s.masked),
                        int(s.below_floor));
            }
        }

        GridSpec grid;
        grid.step = config.output.grid_step;
        grid.margin = config.output.grid_margin;
        grid.components = config.output.components;
        auto pattern = synthesize(peaks, grid);
        for (auto const& w : pattern.warnings)
            err << "warning: " << w << '\n';
        {
            std::vector<std::string> header{"theta_deg", "total"};
            for (auto const& label : pattern.component_labels)
                header.push_back(label);
            CsvWriter csv(dir / "pattern.csv", header);
            auto& os = csv.stream();
            for (std::size_t i = 0; i < pattern.angle.size(); ++i)
            {
                os << pattern.angle[i] << ',' << pattern.total[i];
                for (auto const& c : pattern.components)
                    os << ',' << c[i];
                os << '\n';
            }
        }

        std::map<std::string, std::pair<int, int>> counts;
        for (std::size_t i = 0; i < peaks.size(); ++i)
        {
            if (peaks[i].channel.elastic())
                continue;
            auto& c = counts[channel_label(peaks[i].channel)];
            ++c.second;
            if (report.status[i].resolvable())
                ++c.first;
        }
        out << "populations:";
        for (std::size_t i = 0; i < sweep.levels.size(); ++i)
            out << " p(" << sweep.levels[i] << ")=" << sweep.populations[i];
        out << '\n';
        for (auto const& [label, c] : counts)
        {
            out << "channel " << label << ": " << c.first << " of " << c.second
                << " peaks resolvable\n";
        }
        std::size_t warnings = 0;
        for (auto const& e : sweep.entries)
            warnings += (e.flags & accuracy_warning) ? 1 : 0;
        if (warnings)
            err << "warning: " << warnings << " intensities failed the convergence check\n";
        out << "wrote " << (dir / "pattern.csv").string() << '\n';
        return exit_code::success;
    });
}

int cmd_pp_diagnostics(CommandOptions const& options, std::ostream& out, std::ostream& err)
{
    return guarded(err, [&] {
        auto config = load(options);
        auto dir = output_directory(options, config);
        double const d = config.grating.period;
        YQuadrature yq = config.quadrature.y_rule();
        Constituent const* parts[2] = {&config.first, &config.second};
        double const c3[2] = {config.coupling.c3_first, config.coupling.c3_second};
        out << std::setprecision(9);
        for (int which = 0; which < 2; ++which)
        {
            PointParticleTransmission tau(config.grating, c3[which], config.beam.speed,
                                          config.beam.incidence);
            auto const tag = std::to_string(which + 1);
            auto open = tau.open();
            out << "constituent " << tag << " (" << parts[which]->name << "): open ("
                << open.lower << ", " << open.upper << ") nm, width " << open.width()
                << " nm, " << (tau.analytic() ? "closed-form" : "numerical")
                << " phase\n";

            CsvWriter profile(dir / ("pp_profile_" + tag + ".csv"),
                              {"y_nm", "open", "phase_rad", "re_tau", "im_tau"});
            int const samples = 2000;
            for (int i = 0; i < samples; ++i)
            {
                double y = -0.5 * d + d * i / samples;
                bool inside = open.contains(y);
                double phase = inside ? tau.phase(y) : 0.0;
                auto t = tau(y);
                profile.row(y, int(inside), phase, t.real(), t.imag());
            }

            auto coefficients = pp_diffraction_amplitudes(
                tau, config.output.n_min, config.output.n_max, yq);
            CsvWriter csv(dir / ("pp_coefficients_" + tag + ".csv"),
                          {"n", "re", "im", "abs2"});
            double total = 0;
            for (auto const& c : coefficients)
            {
                csv.row(c.n, c.value.real(), c.value.imag(), std::norm(c.value));
                total += std::norm(c.value);
            }
            out << "  sum |c_n|^2 over n in [" << config.output.n_min << ", "
                << config.output.n_max << "] = " << total << " (open fraction "
                << open.width() / d << ")\n";
        }
        return exit_code::success;
    });
}

//---------------------------------------------------------------------------//
int run_cli(int argc, char const* const* argv, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Inelastic diffraction of weakly bound dimers by a transmission grating",
                 "dimerdiff"};
    CommandOptions options;
    std::string config;
    std::string out_dir;
    app.add_option("--config", config, "JSON run configuration")->required();
    app.add_option("--out", out_dir, "output directory (overrides the config)");
    app.add_option("--threads", options.threads, "worker threads")
        ->check(CLI::PositiveNumber);
    app.add_option("--quadrature-scale", options.quadrature_scale,
                   "multiply all quadrature orders by this factor")
        ->check(CLI::PositiveNumber);
    app.require_subcommand(1);
    auto* bound = app.add_subcommand("bound-states", "solve and tabulate bound states");
    auto* pattern = app.add_subcommand("pattern", "compute the full diffraction pattern");
    auto* pp = app.add_subcommand("pp-diagnostics",
                                  "point-particle transmission diagnostics");
    for (auto* sub : {bound, pattern, pp})
        sub->fallthrough();

    try
    {
        app.parse(argc, argv);
    }
    catch (CLI::ParseError const& e)
    {
        int code = app.exit(e, out, err);
        return code == 0 ? exit_code::success : exit_code::usage;
    }
    options.config = config;
    if (!out_dir.empty())
        options.out = out_dir;

    if (bound->parsed())
        return cmd_bound_states(options, out, err);
    if (pattern->parsed())
        return cmd_pattern(options, out, err);
    return cmd_pp_diagnostics(options, out, err);
}

}  // namespace dimerdiff
