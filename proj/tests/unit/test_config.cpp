//---------------------------------------------------------------------------//
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file tests/unit/test_config.cpp
//---------------------------------------------------------------------------//
#include <cmath>
#include <filesystem>

#include <doctest.h>
#include <json.hpp>

#include "dimerdiff/config.hpp"
#include "dimerdiff/constants.hpp"
#include "dimerdiff/errors.hpp"

using namespace dimerdiff;
using nlohmann::json;

namespace
{
std::filesystem::path const configs = std::filesystem::path(DIMERDIFF_SOURCE_DIR) / "configs";

json minimal()
{
    return json::parse(R"({
      "species": {
        "name": "pair",
        "constituents": [{"name": "a", "mass_amu": 4.0}, {"name": "b", "mass_amu": 2.0}],
        "potential": {"kind": "lennard_jones", "epsilon_mev": 3.0, "sigma_nm": 0.3}
      },
      "beam": {"speed_m_per_s": 400, "incidence_deg": 10},
      "grating": {"period_nm": 100, "slit_nm": 50, "thickness_nm": 100, "wedge_deg": 4}
    })");
}

RunConfig parse(json const& j)
{
    return parse_config(j.dump());
}
}  // namespace

TEST_CASE("shipped configurations load")
{
    for (auto name : {"d2d2_14deg.json", "h2d2_16deg.json", "kirchhoff_pp.json",
                      "d2d2_tabulated.json", "zero_potential.json"})
    {
        CAPTURE(name);
        CHECK_NOTHROW(load_config(configs / name));
    }
    auto cfg = load_config(configs / "d2d2_14deg.json");
    CHECK(cfg.identical);
    CHECK(cfg.first.mass == cfg.second.mass);
    CHECK(units::to_degrees(cfg.beam.incidence) == doctest::Approx(14));
    CHECK(cfg.beam.speed == doctest::Approx(0.5));
    CHECK(cfg.coupling.c3_first == doctest::Approx(0.32));
    CHECK(units::to_degrees(cfg.grating.wedge) == doctest::Approx(5));

    auto tab = load_config(configs / "d2d2_tabulated.json");
    CHECK(tab.potential.kind == "tabulated");
    CHECK(tab.potential.file.is_absolute() == configs.is_absolute());
    CHECK(std::filesystem::exists(tab.potential.file));
}

TEST_CASE("defaults and conversions")
{
    auto cfg = parse(minimal());
    CHECK(cfg.species_name == "pair");
    CHECK(!cfg.identical);
    CHECK(cfg.beam.speed == doctest::Approx(0.4));
    CHECK(cfg.beam.incidence == doctest::Approx(10 * units::degree));
    CHECK(cfg.quadrature.n_y == QuadratureSpec{}.n_y);
    CHECK(cfg.output.n_min == -10);
    CHECK(cfg.output.directory == "out");
    auto v = make_potential(cfg.potential);
    CHECK(v.well()->depth == doctest::Approx(-3.0));
}

TEST_CASE("comments are accepted")
{
    auto text = minimal().dump(2);
    text.insert(1, "\n  // run parameters\n");
    CHECK_NOTHROW(parse_config(text));
}

TEST_CASE("malformed configurations are rejected")
{
    CHECK_THROWS_AS(parse_config("{not json"), ConfigError);
    CHECK_THROWS_AS(parse_config("[1, 2]"), ConfigError);

    auto unknown = minimal();
    unknown["beam"]["sped_m_per_s"] = 300;
    CHECK_THROWS_WITH_AS(parse(unknown), doctest::Contains("sped_m_per_s"), ConfigError);

    auto extra_block = minimal();
    extra_block["plotting"] = json::object();
    CHECK_THROWS_AS(parse(extra_block), ConfigError);

    auto missing = minimal();
    missing.erase("grating");
    CHECK_THROWS_AS(parse(missing), ConfigError);

    auto wrong_type = minimal();
    wrong_type["beam"]["incidence_deg"] = "ten";
    CHECK_THROWS_AS(parse(wrong_type), ConfigError);

    auto one = minimal();
    one["species"]["constituents"].erase(1);
    CHECK_THROWS_AS(parse(one), ConfigError);

    auto ident = minimal();
    ident["species"]["identical"] = true;
    CHECK_THROWS_AS(parse(ident), ConfigError);

    auto slit = minimal();
    slit["grating"]["slit_nm"] = 150;
    CHECK_THROWS_AS(parse(slit), ConfigError);

    auto speed = minimal();
    speed["beam"]["speed_m_per_s"] = -1;
    CHECK_THROWS_AS(parse(speed), ConfigError);

    auto alpha = minimal();
    alpha["numerics"] = {{"n_alpha", 7}};
    CHECK_THROWS_AS(parse(alpha), ConfigError);

    auto range = minimal();
    range["output"] = {{"n_min", 3}, {"n_max", 2}};
    CHECK_THROWS_AS(parse(range), ConfigError);

    auto kind = minimal();
    kind["species"]["potential"] = {{"kind", "morse"}};
    CHECK_THROWS_AS(parse(kind), ConfigError);

    auto file = minimal();
    file["species"]["potential"] = {{"kind", "tabulated"}, {"file", "missing.dat"}};
    CHECK_THROWS_AS(parse(file), ConfigError);

    CHECK_THROWS_AS(load_config("/nonexistent/run.json"), ConfigError);
}

TEST_CASE("species and setup from a configuration")
{
    auto cfg = load_config(configs / "h2d2_16deg.json");
    auto species = solve_species(cfg);
    CHECK(species.states().size() == 3);
    auto setup = make_setup(cfg, species);
    CHECK(setup.grating.period == cfg.grating.period);
    CHECK(setup.transmission(0).c3() == cfg.coupling.c3_first);

    auto zero = load_config(configs / "zero_potential.json");
    CHECK(solve_species(zero).states().empty());
}
