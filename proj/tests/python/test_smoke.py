# SPDX-License-Identifier: Apache-2.0
"""Smoke tests for the Python bindings."""

import math
from pathlib import Path

import pytest

import dimerdiff as dd

CONFIGS = Path(__file__).resolve().parents[2] / "configs"
D2 = 4.028204
H2 = 2.015650


@pytest.fixture(scope="module")
def d2d2():
    lj = dd.RadialPotential.lennard_jones(3.35, 0.303)
    d2 = dd.Constituent("o-D2", D2, 22.0)
    return dd.DimerSpecies.solve("(o-D2)2", d2, d2, True, lj, 8)


def test_bound_states(d2d2):
    assert [s.l for s in d2d2.states] == [0, 1, 2, 3]
    assert all(s.energy < 0 for s in d2d2.states)
    e02 = dd.transition_energy(d2d2, 0, 2) / dd.units.micro_ev
    assert 320 < e02 < 434
    with pytest.raises(dd.UnknownState):
        d2d2.state(5)


def test_zero_potential_has_no_states():
    states = dd.solve_bound_states(dd.RadialPotential.zero(), 2.0, 4)
    assert states == []


def test_kirchhoff_coefficients():
    g = dd.GratingGeometry(100.0, 60.0, 120.0, 0.0)
    tau = dd.PointParticleTransmission(g, 0.0, 0.5, 0.0)
    orders, coeffs = dd.pp_diffraction_amplitudes(tau, -3, 3)
    c0 = abs(coeffs[orders.index(0)]) ** 2
    x = math.pi * 0.6
    ratio = abs(coeffs[orders.index(1)]) ** 2 / c0
    assert ratio == pytest.approx((math.sin(x) / x) ** 2, abs=1e-6)


def test_grating_validation():
    with pytest.raises(dd.DomainError):
        dd.GratingGeometry(100.0, 120.0, 120.0, 0.0)


def test_small_sweep_and_pattern(d2d2):
    beam = dd.BeamSpec()
    beam.incidence = math.radians(14)
    grating = dd.GratingGeometry(100.0, 60.0, 120.0, math.radians(5))
    setup = dd.DiffractionSetup(d2d2, beam, grating, dd.VdwCoupling(0.32, 0.32))
    quad = dd.QuadratureSpec()
    quad.n_y = 1024
    quad.n_r = 60
    quad.n_alpha = 24
    sweep = dd.channel_sweep(setup, quad, -2, 2)
    elastic = [e for e in sweep.entries if e.channel.elastic() and e.n == 0]
    assert sum(e.intensity for e in elastic) == pytest.approx(1.0, rel=1e-12)
    for e in sweep.entries:
        assert (e.channel.l_initial + e.channel.l_final) % 2 == 0

    peaks = dd.peaks_from_sweep(sweep, beam)
    pattern = dd.synthesize(peaks)
    assert len(pattern.angle) == len(pattern.total) > 0
    status = dd.resolvability(peaks)
    assert len(status) == len(peaks)


def test_kinematics():
    p = dd.dimer_momentum(2 * D2, 0.5)
    assert dd.kinetic_energy(p, 2 * D2) == pytest.approx(0.5 * 2 * D2 * dd.units.amu * 0.25)
    theta = dd.diffraction_angle(0, math.radians(14), p, 2 * D2, 0.0, 100.0)
    assert theta == pytest.approx(math.radians(14), abs=1e-14)
    with pytest.raises(dd.ClosedChannel):
        dd.diffraction_angle(0, 0.0, p, 2 * D2, 1e3, 100.0)


def test_config_round_trip():
    config = dd.load_config(str(CONFIGS / "h2d2_16deg.json"))
    species = dd.solve_species(config)
    assert len(species.states) == 3
    with pytest.raises(dd.ConfigError):
        dd.parse_config("{ not json")
