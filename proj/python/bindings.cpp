//---------------------------------------------------------------------------//
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file python/bindings.cpp
//---------------------------------------------------------------------------//
#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include "dimerdiff/bound_states.hpp"
#include "dimerdiff/config.hpp"
#include "dimerdiff/constants.hpp"
#include "dimerdiff/diffraction_engine.hpp"
#include "dimerdiff/errors.hpp"
#include "dimerdiff/grating_optics.hpp"
#include "dimerdiff/kinematics.hpp"
#include "dimerdiff/pattern_synthesis.hpp"
#include "dimerdiff/potential.hpp"
#include "dimerdiff/special_functions.hpp"

namespace py = pybind11;
using namespace dimerdiff;

namespace
{
void bind_errors(py::module_& m)
{
    auto base = py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
    py::register_exception<DomainError>(m, "DomainError", base.ptr());
    py::register_exception<SolverFailure>(m, "SolverFailure", base.ptr());
    py::register_exception<UnknownState>(m, "UnknownState", base.ptr());
    py::register_exception<ClosedChannel>(m, "ClosedChannel", base.ptr());
    py::register_exception<EvanescentOrder>(m, "EvanescentOrder", base.ptr());
    py::register_exception<ConfigError>(m, "ConfigError", base.ptr());
}

void bind_units(py::module_& m)
{
    auto u = m.def_submodule("units", "Internal unit system (meV, nm, ps, amu)");
    u.attr("hbar") = units::hbar;
    u.attr("amu") = units::amu;
    u.attr("boltzmann") = units::boltzmann;
    u.attr("meter_per_second") = units::meter_per_second;
    u.attr("micro_ev") = units::micro_ev;
    u.attr("degree") = units::degree;
}

void bind_bound_states(py::module_& m)
{
    py::enum_<Interpolation>(m, "Interpolation")
        .value("linear", Interpolation::linear)
        .value("pchip", Interpolation::pchip);

    py::class_<RadialPotential>(m, "RadialPotential")
        .def_static("lennard_jones", &RadialPotential::lennard_jones,
                    py::arg("epsilon"), py::arg("sigma"))
        .def_static("tabulated", &RadialPotential::tabulated,
                    py::arg("radius"), py::arg("value"),
                    py::arg("rule") = Interpolation::pchip)
        .def_static("from_file", &RadialPotential::from_file, py::arg("path"),
                    py::arg("rule") = Interpolation::pchip)
        .def_static("zero", &RadialPotential::zero)
        .def("__call__", &RadialPotential::operator(), py::arg("r"))
        .def("well",
             [](RadialPotential const& v) -> py::object {
                 auto w = v.well();
                 if (!w)
                     return py::none();
                 return py::make_tuple(w->radius, w->depth);
             })
        .def_property_readonly("hard_wall", &RadialPotential::hard_wall)
        .def_property_readonly("description", &RadialPotential::description);

    py::class_<SolverOptions>(m, "SolverOptions")
        .def(py::init<>())
        .def_readwrite("log_step", &SolverOptions::log_step)
        .def_readwrite("energy_tolerance", &SolverOptions::energy_tolerance)
        .def_readwrite("max_iterations", &SolverOptions::max_iterations)
        .def_readwrite("core_factor", &SolverOptions::core_factor)
        .def_readwrite("tail_decades", &SolverOptions::tail_decades)
        .def_readwrite("search_box_factor", &SolverOptions::search_box_factor);

    py::class_<BoundState>(m, "BoundState")
        .def(py::init<>())
        .def_readwrite("l", &BoundState::l)
        .def_readwrite("energy", &BoundState::energy)
        .def_readwrite("radius", &BoundState::radius)
        .def_readwrite("values", &BoundState::values)
        .def("__call__", &BoundState::operator(), py::arg("r"))
        .def("norm", &BoundState::norm)
        .def("node_count", &BoundState::node_count)
        .def("support", &BoundState::support, py::arg("rel") = 1e-10)
        .def("__repr__", [](BoundState const& s) {
            return "<BoundState l=" + std::to_string(s.l)
                   + " energy=" + std::to_string(s.energy) + " meV>";
        });

    m.def("solve_bound_states", &solve_bound_states, py::arg("potential"),
          py::arg("reduced_mass"), py::arg("l_max"),
          py::arg("options") = SolverOptions{},
          py::call_guard<py::gil_scoped_release>());

    py::class_<Constituent>(m, "Constituent")
        .def(py::init([](std::string name, double mass, double threshold) {
                 return Constituent{std::move(name), mass, threshold};
             }),
             py::arg("name"), py::arg("mass"),
             py::arg("rotational_threshold") = 0.0)
        .def_readwrite("name", &Constituent::name)
        .def_readwrite("mass", &Constituent::mass)
        .def_readwrite("rotational_threshold",
                       &Constituent::rotational_threshold);

    py::class_<DimerSpecies>(m, "DimerSpecies")
        .def(py::init<std::string, Constituent, Constituent, bool,
                      std::vector<BoundState>>(),
             py::arg("name"), py::arg("first"), py::arg("second"),
             py::arg("identical"), py::arg("states"))
        .def_static("solve", &DimerSpecies::solve, py::arg("name"),
                    py::arg("first"), py::arg("second"), py::arg("identical"),
                    py::arg("potential"), py::arg("l_max"),
                    py::arg("options") = SolverOptions{},
                    py::call_guard<py::gil_scoped_release>())
        .def_property_readonly("name", &DimerSpecies::name)
        .def_property_readonly("first", &DimerSpecies::first)
        .def_property_readonly("second", &DimerSpecies::second)
        .def_property_readonly("identical", &DimerSpecies::identical)
        .def_property_readonly("total_mass", &DimerSpecies::total_mass)
        .def_property_readonly("reduced_mass", &DimerSpecies::reduced_mass)
        .def_property_readonly("states", &DimerSpecies::states)
        .def("has_state", &DimerSpecies::has_state, py::arg("l"))
        .def("state", &DimerSpecies::state, py::arg("l"),
             py::return_value_policy::reference_internal);

    m.def("transition_energy", &transition_energy, py::arg("species"),
          py::arg("l_from"), py::arg("l_to"));
    m.def(
        "form_factor",
        [](DimerSpecies const& species, std::pair<int, int> final_state,
           std::pair<int, int> initial_state, std::array<double, 3> q) {
            return form_factor(species, {final_state.first, final_state.second},
                               {initial_state.first, initial_state.second}, q);
        },
        py::arg("species"), py::arg("final_state"), py::arg("initial_state"),
        py::arg("wavevector"));

    m.def("pi_function", &pi_function, py::arg("l"), py::arg("lp"),
          py::arg("m"), py::arg("alpha"));
    m.def("gaunt", &gaunt);
}

void bind_grating(py::module_& m)
{
    py::class_<GratingGeometry>(m, "GratingGeometry")
        .def(py::init([](double d, double s, double t, double beta) {
                 GratingGeometry g{d, s, t, beta};
                 g.validate();
                 return g;
             }),
             py::arg("period") = 100.0, py::arg("slit") = 60.0,
             py::arg("thickness") = 120.0, py::arg("wedge") = 0.0)
        .def_readwrite("period", &GratingGeometry::period)
        .def_readwrite("slit", &GratingGeometry::slit)
        .def_readwrite("thickness", &GratingGeometry::thickness)
        .def_readwrite("wedge", &GratingGeometry::wedge)
        .def("validate", &GratingGeometry::validate);

    py::class_<VdwCoupling>(m, "VdwCoupling")
        .def(py::init([](double a, double b) { return VdwCoupling{a, b}; }),
             py::arg("c3_first") = 0.0, py::arg("c3_second") = 0.0)
        .def_readwrite("c3_first", &VdwCoupling::c3_first)
        .def_readwrite("c3_second", &VdwCoupling::c3_second);

    py::class_<ConstituentBeam>(m, "ConstituentBeam")
        .def(py::init([](double mass, double speed, double incidence) {
                 return ConstituentBeam{mass, speed, incidence};
             }),
             py::arg("mass"), py::arg("speed"), py::arg("incidence"))
        .def_readwrite("mass", &ConstituentBeam::mass)
        .def_readwrite("speed", &ConstituentBeam::speed)
        .def_readwrite("incidence", &ConstituentBeam::incidence)
        .def("momentum", &ConstituentBeam::momentum);

    py::class_<OpenInterval>(m, "OpenInterval")
        .def_readonly("lower", &OpenInterval::lower)
        .def_readonly("upper", &OpenInterval::upper)
        .def("width", &OpenInterval::width)
        .def("empty", &OpenInterval::empty)
        .def("contains", &OpenInterval::contains);
    m.def("open_interval", &open_interval, py::arg("geometry"),
          py::arg("incidence"));

    py::class_<PointParticleTransmission>(m, "PointParticleTransmission")
        .def(py::init<GratingGeometry const&, double, double, double>(),
             py::arg("geometry"), py::arg("c3"), py::arg("speed"),
             py::arg("incidence"))
        .def("phase", &PointParticleTransmission::phase, py::arg("y"))
        .def("__call__", &PointParticleTransmission::operator(), py::arg("y"))
        .def_property_readonly("open", &PointParticleTransmission::open)
        .def_property_readonly("analytic", &PointParticleTransmission::analytic);

    m.def("phase_shift", &phase_shift, py::arg("geometry"), py::arg("c3"),
          py::arg("beam"), py::arg("y"));
    m.def("transmission_pp", &transmission_pp, py::arg("geometry"),
          py::arg("c3"), py::arg("beam"), py::arg("y"));

    py::class_<YQuadrature>(m, "YQuadrature")
        .def(py::init<>())
        .def_readwrite("points_per_period", &YQuadrature::points_per_period)
        .def_readwrite("panel_order", &YQuadrature::panel_order)
        .def_readwrite("edge_band", &YQuadrature::edge_band)
        .def_readwrite("offset", &YQuadrature::offset);

    m.def(
        "pp_diffraction_amplitudes",
        [](PointParticleTransmission const& tau, int n_min, int n_max,
           YQuadrature const& quad) {
            std::vector<int> n;
            std::vector<std::complex<double>> c;
            for (auto const& fc :
                 pp_diffraction_amplitudes(tau, n_min, n_max, quad))
            {
                n.push_back(fc.n);
                c.push_back(fc.value);
            }
            return py::make_tuple(n, c);
        },
        py::arg("tau"), py::arg("n_min"), py::arg("n_max"),
        py::arg("quadrature") = YQuadrature{},
        "Return (orders, coefficients)");

    m.def("estimate_c3_hoinkes", &estimate_c3_hoinkes);
}

void bind_kinematics(py::module_& m)
{
    py::class_<BeamSpec>(m, "BeamSpec")
        .def(py::init<>())
        .def_readwrite("speed", &BeamSpec::speed)
        .def_readwrite("velocity_spread", &BeamSpec::velocity_spread)
        .def_readwrite("incidence", &BeamSpec::incidence)
        .def_readwrite("temperature", &BeamSpec::temperature)
        .def_readwrite("w0", &BeamSpec::w0)
        .def_readwrite("dw", &BeamSpec::dw)
        .def("validate", &BeamSpec::validate);

    m.def("dimer_momentum", &dimer_momentum, py::arg("total_mass"),
          py::arg("speed"));
    m.def("kinetic_energy", &kinetic_energy, py::arg("momentum"),
          py::arg("total_mass"));
    m.def("momentum_transfer", &momentum_transfer, py::arg("n"),
          py::arg("period"));
    m.def("diffraction_angle", &diffraction_angle, py::arg("n"),
          py::arg("incidence"), py::arg("momentum"), py::arg("total_mass"),
          py::arg("delta_e"), py::arg("period"));

    py::class_<RegimeReport>(m, "RegimeReport")
        .def_readonly("kinetic_energy", &RegimeReport::kinetic_energy)
        .def_readonly("binding_ratio", &RegimeReport::binding_ratio)
        .def_readonly("wavelength", &RegimeReport::wavelength)
        .def_readonly("slit_ratio", &RegimeReport::slit_ratio)
        .def_readonly("bar_ratio", &RegimeReport::bar_ratio)
        .def_readonly("warnings", &RegimeReport::warnings)
        .def("ok", &RegimeReport::ok);
    m.def("validate_regime", &validate_regime);
}

void bind_engine(py::module_& m)
{
    py::class_<TransitionChannel>(m, "TransitionChannel")
        .def_readonly("l_initial", &TransitionChannel::l_initial)
        .def_readonly("l_final", &TransitionChannel::l_final)
        .def_readonly("delta_e", &TransitionChannel::delta_e)
        .def("elastic", &TransitionChannel::elastic);

    py::class_<QuadratureSpec>(m, "QuadratureSpec")
        .def(py::init<>())
        .def_readwrite("n_y", &QuadratureSpec::n_y)
        .def_readwrite("n_r", &QuadratureSpec::n_r)
        .def_readwrite("n_alpha", &QuadratureSpec::n_alpha)
        .def_readwrite("r_max", &QuadratureSpec::r_max)
        .def_readwrite("radial_cutoff", &QuadratureSpec::radial_cutoff)
        .def_readwrite("edge_band", &QuadratureSpec::edge_band)
        .def_readwrite("y_offset", &QuadratureSpec::y_offset)
        .def("scaled", &QuadratureSpec::scaled, py::arg("factor"));

    py::class_<DiffractionSetup>(m, "DiffractionSetup")
        .def(py::init([](DimerSpecies species, BeamSpec beam,
                         GratingGeometry grating, VdwCoupling coupling) {
                 return DiffractionSetup{std::move(species), beam, grating,
                                         coupling};
             }),
             py::arg("species"), py::arg("beam"), py::arg("grating"),
             py::arg("coupling"))
        .def_readwrite("species", &DiffractionSetup::species)
        .def_readwrite("beam", &DiffractionSetup::beam)
        .def_readwrite("grating", &DiffractionSetup::grating)
        .def_readwrite("coupling", &DiffractionSetup::coupling)
        .def("transmission", &DiffractionSetup::transmission, py::arg("which"));

    m.def("thermal_populations", &thermal_populations, py::arg("species"),
          py::arg("temperature"));
    m.def("intensity", &intensity, py::arg("setup"), py::arg("n"),
          py::arg("l_final"), py::arg("l_initial"),
          py::arg("quadrature") = QuadratureSpec{},
          py::call_guard<py::gil_scoped_release>());

    py::class_<SweepEntry>(m, "SweepEntry")
        .def_readonly("channel", &SweepEntry::channel)
        .def_readonly("n", &SweepEntry::n)
        .def_readonly("intensity", &SweepEntry::intensity)
        .def_readonly("angle", &SweepEntry::angle)
        .def_readonly("flags", &SweepEntry::flags)
        .def_property_readonly("flag_names", [](SweepEntry const& e) {
            return describe_flags(e.flags);
        });

    py::class_<SweepOptions>(m, "SweepOptions")
        .def(py::init<>())
        .def_readwrite("include_forbidden", &SweepOptions::include_forbidden)
        .def_readwrite("check_convergence", &SweepOptions::check_convergence)
        .def_readwrite("convergence_tolerance",
                       &SweepOptions::convergence_tolerance)
        .def_readwrite("significance", &SweepOptions::significance)
        .def_readwrite("threads", &SweepOptions::threads);

    py::class_<SweepResult>(m, "SweepResult")
        .def_readonly("entries", &SweepResult::entries)
        .def_readonly("levels", &SweepResult::levels)
        .def_readonly("populations", &SweepResult::populations)
        .def_readonly("elastic_zeroth", &SweepResult::elastic_zeroth)
        .def_readonly("errors", &SweepResult::errors);

    m.def("channel_sweep", &channel_sweep, py::arg("setup"),
          py::arg("quadrature"), py::arg("n_min"), py::arg("n_max"),
          py::arg("options") = SweepOptions{},
          py::call_guard<py::gil_scoped_release>());
}

void bind_pattern(py::module_& m)
{
    py::class_<Peak>(m, "Peak")
        .def(py::init([](int n, double angle, double area, double width) {
                 Peak p;
                 p.n = n;
                 p.angle = angle;
                 p.area = area;
                 p.width = width;
                 return p;
             }),
             py::arg("n"), py::arg("angle"), py::arg("area"), py::arg("width"))
        .def_readwrite("n", &Peak::n)
        .def_readwrite("channel", &Peak::channel)
        .def_readwrite("angle", &Peak::angle)
        .def_readwrite("area", &Peak::area)
        .def_readwrite("width", &Peak::width)
        .def_property_readonly("label", [](Peak const& p) {
            return channel_label(p.channel);
        });

    m.def("peak_width", &peak_width, py::arg("n"), py::arg("w0"),
          py::arg("dw"));

    py::class_<GridSpec>(m, "GridSpec")
        .def(py::init<>())
        .def_readwrite("step", &GridSpec::step)
        .def_readwrite("margin", &GridSpec::margin)
        .def_readwrite("lower", &GridSpec::lower)
        .def_readwrite("upper", &GridSpec::upper)
        .def_readwrite("components", &GridSpec::components);

    py::class_<Pattern>(m, "Pattern")
        .def_readonly("angle", &Pattern::angle)
        .def_readonly("total", &Pattern::total)
        .def_readonly("component_labels", &Pattern::component_labels)
        .def_readonly("components", &Pattern::components)
        .def_readonly("warnings", &Pattern::warnings);
    m.def("synthesize", &synthesize, py::arg("peaks"),
          py::arg("grid") = GridSpec{});

    using Status = ResolvabilityReport::Status;
    py::class_<Status>(m, "PeakStatus")
        .def_readonly("overlapping", &Status::overlapping)
        .def_readonly("masked", &Status::masked)
        .def_readonly("below_floor", &Status::below_floor)
        .def("resolvable", &Status::resolvable);
    m.def(
        "resolvability",
        [](std::vector<Peak> const& peaks, double floor) {
            return resolvability(peaks, floor).status;
        },
        py::arg("peaks"), py::arg("detection_floor") = 0.0,
        "Per-peak resolvability status");

    m.def("peaks_from_sweep", &peaks_from_sweep, py::arg("sweep"),
          py::arg("beam"), py::arg("population_floor") = 1e-4);
}

void bind_config(py::module_& m)
{
    py::class_<RunConfig>(m, "RunConfig")
        .def_readonly("species_name", &RunConfig::species_name)
        .def_readonly("identical", &RunConfig::identical)
        .def_readonly("l_max", &RunConfig::l_max)
        .def_readwrite("beam", &RunConfig::beam)
        .def_readwrite("grating", &RunConfig::grating)
        .def_readwrite("coupling", &RunConfig::coupling)
        .def_readwrite("quadrature", &RunConfig::quadrature)
        .def_readwrite("solver", &RunConfig::solver);

    m.def("load_config", &load_config, py::arg("path"));
    m.def("parse_config", &parse_config, py::arg("text"),
          py::arg("base_dir") = std::filesystem::path{});
    m.def("solve_species", &solve_species, py::arg("config"),
          py::call_guard<py::gil_scoped_release>());
    m.def("make_setup", &make_setup, py::arg("config"), py::arg("species"));
}
}  // namespace

PYBIND11_MODULE(_core, m)
{
    m.doc() = "Rotational bound states and grating diffraction of weakly "
              "bound dimers";
    m.attr("__version__") = "0.1.0";
    bind_errors(m);
    bind_units(m);
    bind_bound_states(m);
    bind_grating(m);
    bind_kinematics(m);
    bind_engine(m);
    bind_pattern(m);
    bind_config(m);
}
