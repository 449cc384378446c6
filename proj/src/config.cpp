// SPDX-License-Identifier: Apache-2.0
#include "dimerdiff/config.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "dimerdiff/constants.hpp"
#include "dimerdiff/errors.hpp"

namespace dimerdiff
{
namespace
{
using nlohmann::json;

// Reads typed members of one JSON object and rejects unknown keys
class Block
{
  public:
    Block(json const& parent, std::string name, bool required)
        : name_(std::move(name))
    {
        if (parent.contains(name_))
        {
            node_ = &parent.at(name_);
            if (!node_->is_object())
                throw ConfigError("'" + name_ + "' must be an object");
        }
        else if (required)
        {
            throw ConfigError("missing block '" + name_ + "'");
        }
    }

    Block(json const& node, std::string name) : name_(std::move(name)), node_(&node)
    {
        if (!node_->is_object())
            throw ConfigError("'" + name_ + "' must be an object");
    }

    bool present() const { return node_ != nullptr; }
    json const& node() const { return *node_; }
    std::string const& name() const { return name_; }

    bool has(std::string const& key)
    {
        seen_.insert(key);
        return node_ && node_->contains(key);
    }

    template<class T>
    void read(std::string const& key, T& value)
    {
        if (!has(key))
            return;
        try
        {
            value = node_->at(key).get<T>();
        }
        catch (json::exception const&)
        {
            throw ConfigError("'" + name_ + "." + key + "' has the wrong type");
        }
    }

    template<class T>
    T require(std::string const& key)
    {
        if (!has(key))
            throw ConfigError("missing '" + name_ + "." + key + "'");
        T value{};
        read(key, value);
        return value;
    }

    void finish() const
    {
        if (!node_)
            return;
        for (auto it = node_->begin(); it != node_->end(); ++it)
        {
            if (!seen_.count(it.key()))
                throw ConfigError("unknown key '" + name_ + "." + it.key() + "'");
        }
    }

  private:
    std::string name_;
    json const* node_ = nullptr;
    std::set<std::string> seen_;
};

Constituent read_constituent(json const& node, std::string const& name)
{
    Block b(node, name);
    Constituent c;
    c.name = b.require<std::string>("name");
    c.mass = b.require<double>("mass_amu");
    b.read("rotational_threshold_mev", c.rotational_threshold);
    b.finish();
    if (!(c.mass > 0))
        throw ConfigError(name + ".mass_amu must be positive");
    return c;
}

template<class F>
void checked(F&& f)
{
    try
    {
        f();
    }
    catch (DomainError const& e)
    {
        throw ConfigError(e.what());
    }
}

}  // namespace

RunConfig parse_config(std::string const& text, std::filesystem::path const& base_dir)
{
    json root;
    try
    {
        root = json::parse(text, nullptr, true, true);
    }
    catch (json::parse_error const& e)
    {
        throw ConfigError(std::string("malformed JSON: ") + e.what());
    }
    if (!root.is_object())
        throw ConfigError("configuration must be a JSON object");

    RunConfig cfg;
    {
        Block top(root, "config");
        for (auto const& key : {"species", "beam", "grating", "numerics", "output"})
            top.has(key);
        top.finish();
    }

    Block species(root, "species", true);
    cfg.species_name = species.require<std::string>("name");
    if (!species.has("constituents") || !species.node().at("constituents").is_array()
        || species.node().at("constituents").size() != 2)
    {
        throw ConfigError("'species.constituents' must list exactly two entries");
    }
    cfg.first = read_constituent(species.node().at("constituents")[0], "constituents[0]");
    cfg.second = read_constituent(species.node().at("constituents")[1], "constituents[1]");
    species.read("identical", cfg.identical);
    species.read("l_max", cfg.l_max);
    if (cfg.l_max < 0)
        throw ConfigError("species.l_max must be non-negative");
    if (cfg.identical && cfg.first.mass != cfg.second.mass)
        throw ConfigError("identical constituents must have equal masses");
    if (!species.has("potential"))
        throw ConfigError("missing 'species.potential'");
    {
        Block pot(species.node().at("potential"), "species.potential");
        auto& p = cfg.potential;
        p.kind = pot.require<std::string>("kind");
        if (p.kind == "lennard_jones")
        {
            p.epsilon = pot.require<double>("epsilon_mev");
            p.sigma = pot.require<double>("sigma_nm");
            if (!(p.epsilon > 0) || !(p.sigma > 0))
                throw ConfigError("Lennard-Jones epsilon and sigma must be positive");
        }
        else if (p.kind == "tabulated")
        {
            std::filesystem::path file = pot.require<std::string>("file");
            p.file = file.is_relative() ? base_dir / file : file;
            std::string rule = "pchip";
            pot.read("interpolation", rule);
            p.interpolation = interpolation_from_string(rule);
            if (!std::filesystem::exists(p.file))
                throw ConfigError("potential file not found: " + p.file.string());
        }
        else if (p.kind != "zero")
        {
            throw ConfigError("unknown potential kind '" + p.kind + "'");
        }
        pot.finish();
    }
    species.finish();

    Block beam(root, "beam", true);
    {
        double speed = 500;
        double incidence = 0;
        beam.read("speed_m_per_s", speed);
        beam.read("incidence_deg", incidence);
        cfg.beam.speed = speed * units::meter_per_second;
        cfg.beam.incidence = units::to_radians(incidence);
        beam.read("velocity_spread", cfg.beam.velocity_spread);
        beam.read("temperature_k", cfg.beam.temperature);
        beam.read("w0_deg", cfg.beam.w0);
        beam.read("dw_deg", cfg.beam.dw);
        beam.finish();
        checked([&] { cfg.beam.validate(); });
    }

    Block grating(root, "grating", true);
    {
        double wedge = 0;
        grating.read("period_nm", cfg.grating.period);
        grating.read("slit_nm", cfg.grating.slit);
        grating.read("thickness_nm", cfg.grating.thickness);
        grating.read("wedge_deg", wedge);
        cfg.grating.wedge = units::to_radians(wedge);
        grating.read("c3_constituent1", cfg.coupling.c3_first);
        grating.read("c3_constituent2", cfg.coupling.c3_second);
        grating.read("edge_band_nm", cfg.quadrature.edge_band);
        grating.finish();
        checked([&] { cfg.grating.validate(); });
        if (!(cfg.coupling.c3_first >= 0) || !(cfg.coupling.c3_second >= 0))
            throw ConfigError("C3 coefficients must be non-negative");
    }

    Block numerics(root, "numerics", false);
    {
        auto& q = cfg.quadrature;
        numerics.read("n_y", q.n_y);
        numerics.read("n_r", q.n_r);
        numerics.read("n_alpha", q.n_alpha);
        numerics.read("r_max_nm", q.r_max);
        numerics.read("radial_cutoff", q.radial_cutoff);
        numerics.read("energy_tolerance_mev", cfg.solver.energy_tolerance);
        numerics.read("max_bisection_iterations", cfg.solver.max_iterations);
        numerics.read("log_step", cfg.solver.log_step);
        numerics.read("check_convergence", cfg.check_convergence);
        numerics.read("convergence_tolerance", cfg.convergence_tolerance);
        numerics.finish();
        checked([&] { q.validate(0); });
        if (!(cfg.solver.energy_tolerance > 0) || cfg.solver.max_iterations < 1
            || !(cfg.solver.log_step > 0))
        {
            throw ConfigError("invalid eigenvalue solver settings");
        }
    }

    Block output(root, "output", false);
    {
        auto& o = cfg.output;
        std::string dir = o.directory.string();
        output.read("directory", dir);
        o.directory = dir;
        output.read("n_min", o.n_min);
        output.read("n_max", o.n_max);
        output.read("components", o.components);
        output.read("population_floor", o.population_floor);
        output.read("detection_floor", o.detection_floor);
        output.read("grid_step_deg", o.grid_step);
        output.read("grid_margin_deg", o.grid_margin);
        output.finish();
        if (o.n_min > o.n_max)
            throw ConfigError("output.n_min exceeds output.n_max");
        if (!(o.grid_step > 0) || !(o.grid_margin >= 0))
            throw ConfigError("invalid angular grid settings");
    }
    return cfg;
}

RunConfig load_config(std::filesystem::path const& path)
{
    std::ifstream in(path);
    if (!in)
        throw ConfigError("cannot read configuration " + path.string());
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_config(ss.str(), path.parent_path());
}

RadialPotential make_potential(PotentialConfig const& config)
{
    if (config.kind == "lennard_jones")
        return RadialPotential::lennard_jones(config.epsilon, config.sigma);
    if (config.kind == "tabulated")
        return RadialPotential::from_file(config.file, config.interpolation);
    if (config.kind == "zero")
        return RadialPotential::zero();
    throw ConfigError("unknown potential kind '" + config.kind + "'");
}

DimerSpecies solve_species(RunConfig const& config)
{
    return DimerSpecies::solve(config.species_name, config.first, config.second,
                               config.identical, make_potential(config.potential),
                               config.l_max, config.solver);
}

DiffractionSetup make_setup(RunConfig const& config, DimerSpecies species)
{
    return DiffractionSetup{std::move(species), config.beam, config.grating,
                            config.coupling};
}

}  // namespace dimerdiff
