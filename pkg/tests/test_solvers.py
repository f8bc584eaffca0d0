# Copyright 2026 The anomalab Authors.

import numpy as np
import pytest

from anomalab.distcore import DistExpr
from anomalab.errors import DomainError, ValidationError
from anomalab.regularize import RegFamily, analytic_reg, blowup_constant, friedrichs_reg
from anomalab.solvers import (
    EnergyReport, ReactionSpec, WaveConfig, WaveNonlinearity, closed_form_cubic,
    closed_form_riccati, foot_grid, solve_characteristics, solve_wave_leapfrog,
    verify_energy_identity)


class TestReactionSpec:

    def test_builtins(self):
        u = np.array([1.0, -2.0, 0.5j])
        assert np.allclose(ReactionSpec.riccati()(0.3, u), -u ** 2)
        assert np.allclose(ReactionSpec.cubic_x()(2.0, u), -2.0 * u ** 3)
        assert ReactionSpec.power_p(3).degree == 4

    def test_custom_polynomial(self):
        spec = ReactionSpec.polynomial("x*u - u**2", c=2.0)
        assert spec.c == 2.0
        assert spec(np.array([1.0]), np.array([3.0]))[0] == pytest.approx(-6.0)

    @pytest.mark.parametrize("build", [
        lambda: ReactionSpec.riccati(0),
        lambda: ReactionSpec.power_p(0),
        lambda: ReactionSpec.from_name("burgers"),
        lambda: ReactionSpec.polynomial("sin(u)"),
    ])
    def test_invalid(self, build):
        with pytest.raises(ValidationError):
            build()


def test_foot_grid():
    grid = foot_grid(0.1, 1.0, 16)
    assert grid[0] == -grid[-1]
    assert 1.0 - 1e-12 <= grid[-1] <= 1.0 + 0.1 / 16 + 1e-12
    assert np.diff(grid) == pytest.approx(np.full(len(grid) - 1, 0.1 / 16))


def test_closed_form_riccati_is_stationary():
    x = np.linspace(-1.0, 1.0, 9)
    for t in (0.0, 0.3, 1.0):
        assert np.allclose(closed_form_riccati(0.1, 1.0, x, t), analytic_reg(1, 0.1, x))


def test_closed_form_cubic_is_stationary():
    eps = 0.2
    chi = RegFamily.chi(2)
    x = np.linspace(-1.0, 1.0, 9)
    u = closed_form_cubic(lambda y: chi(y, eps), 1.0, x, 0.7)
    assert np.allclose(u, chi(x, eps))


def test_closed_form_cubic_radicand():
    with pytest.raises(DomainError):
        closed_form_cubic(lambda y: 10.0 + 0.0 * y, 1.0, np.array([0.0]), 1.0)


def test_characteristics_keep_analytic_data_stationary():
    eps, c = 0.1, 1.0
    grid = foot_grid(eps, 1.0)
    field = solve_characteristics(ReactionSpec.riccati(c), analytic_reg(1, eps, grid), grid, 1.0, 1e-3)
    assert field.blowup is None
    assert len(field.t) == 1001
    error = max(np.max(np.abs(u - analytic_reg(1, eps, x))) for _, x, u in field.slices())
    assert error <= 1e-8


def test_characteristics_follow_the_speed():
    grid = np.array([0.0, 1.0])
    field = solve_characteristics(ReactionSpec.polynomial("0"), np.ones(2), grid, 0.5, 0.1)
    assert np.allclose(field.positions(len(field.t) - 1), grid + 0.5)
    assert np.allclose(field.final(), 1.0)


def test_friedrichs_data_blows_up_before_prediction():
    eps, c = 0.05, 1.0
    t_pred = blowup_constant("poly4").t_pred(eps, c)
    grid = foot_grid(eps, 4 * eps)
    data = friedrichs_reg(DistExpr.basis(1), "poly4", eps, grid)
    field = solve_characteristics(ReactionSpec.riccati(c), data, grid, 2 * t_pred, t_pred / 100)
    assert field.blowup is not None
    assert field.blowup.refined
    assert 0.5 * t_pred < field.blowup.time <= 1.05 * t_pred


def test_unbounded_data_is_rejected():
    with pytest.raises(ValidationError):
        solve_characteristics(ReactionSpec.riccati(), np.array([np.inf]), np.array([0.0]), 1.0, 0.1)


def test_energy_report():
    report = EnergyReport.from_series([0.0, 1.0, 2.0], [2.0, 2.1, 1.9], scale=4.0)
    assert report.drift == pytest.approx(0.025)
    assert EnergyReport.from_series([0.0, 1.0], [-2.0, -2.2]).drift == pytest.approx(0.1)


def test_energy_identity_holds_symbolically():
    assert verify_energy_identity(WaveNonlinearity.cubic_quintic())
    assert verify_energy_identity(WaveNonlinearity.linear())
    assert verify_energy_identity(WaveNonlinearity("u**3"))


def test_stationary_net_satisfies_the_wave_equation():
    # (x^2 + eps^2)^(-1/2) has u_xx = g(x, u)
    eps = 0.5
    chi = RegFamily.chi(2)
    x = np.linspace(-2.0, 2.0, 41)
    g = WaveNonlinearity.cubic_quintic()
    assert np.allclose(chi(x, eps, 2), g(x, chi(x, eps)))


def test_cfl_limit():
    with pytest.raises(ValidationError):
        WaveConfig(1.0, WaveNonlinearity.linear(), np.zeros_like, np.zeros_like, 1.0, 0.01, 0.01, 1.0)


def test_linear_standing_wave():
    cfg = WaveConfig(1.0, WaveNonlinearity.linear(), lambda x: np.sin(np.pi * (x + 1.0)),
                     lambda x: 0.0 * x, 1.0, 0.01, 0.009, 0.9)
    field = solve_wave_leapfrog(cfg)
    exact = np.sin(np.pi * (field.x + 1.0)) * np.cos(np.pi * field.t[-1])
    assert np.max(np.abs(field.final() - exact)) <= 5e-3
    assert field.energy.drift <= 1e-2


@pytest.mark.slow
def test_stationary_wave_run():
    g = WaveNonlinearity.cubic_quintic()
    chi = RegFamily.chi(2)
    h = 2.5e-3
    cfg = WaveConfig(1.0, g, lambda x: chi(x, 0.5), lambda x: 0.0 * x, 5.0, h, 0.9 * h, 1.0)
    field = solve_wave_leapfrog(cfg)
    u0 = field.u[0]
    assert np.max(np.abs(field.u - u0)) <= 1e-3 * np.max(np.abs(u0))
    assert field.energy.drift <= 1e-3
