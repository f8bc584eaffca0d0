# Copyright 2026 The anomalab Authors.

import math

import numpy as np
import pytest

from anomalab import settings
from anomalab.errors import ConfigError, QuadratureFailure, ValidationError
from anomalab.quadrature import GaussLegendreRule, adapt_integrate, panel_integrate, scale_breakpoints
from anomalab.regularize import check_eps_list
from anomalab.testfn import TestFn, radial_profiles


@pytest.mark.parametrize("order, degree", [(o, d) for o in (2, 5, 10) for d in range(2 * o)])
def test_gauss_legendre_is_exact_for_polynomials(order, degree):
    rule = GaussLegendreRule(order)
    value = rule.integrate(lambda x: x ** degree, 0.0, 1.0)[0]
    assert value == pytest.approx(1.0 / (degree + 1), abs=1e-14)


def test_adapt_integrate_smooth():
    value, error = adapt_integrate(np.cos, 0.0, math.pi / 2)
    assert value == pytest.approx(1.0, abs=1e-12)
    assert error <= settings.DEFAULT_QUAD_TOL


def test_adapt_integrate_reversed_limits():
    forward, _ = adapt_integrate(np.exp, 0.0, 1.0)
    backward, _ = adapt_integrate(np.exp, 1.0, 0.0)
    assert backward == pytest.approx(-forward, abs=1e-14)


def test_adapt_integrate_kink_with_breakpoint():
    value, _ = adapt_integrate(np.abs, -1.0, 2.0, breakpoints=[0.0])
    assert value == pytest.approx(2.5, abs=1e-12)


def test_adapt_integrate_integrable_singularity():
    value, _ = adapt_integrate(lambda x: x ** -0.5, 0.0, 1.0, tol=1e-6)
    assert value == pytest.approx(2.0, abs=1e-5)


def test_adapt_integrate_gives_up_on_divergent_integral():
    with pytest.raises(QuadratureFailure):
        adapt_integrate(lambda x: 1.0 / x, 0.0, 1.0)


def test_complex_integrand():
    value, _ = adapt_integrate(lambda x: np.exp(1j * x), 0.0, math.pi)
    assert value == pytest.approx(2j, abs=1e-12)


def test_panel_integrate():
    assert panel_integrate(lambda x: x ** 3, np.linspace(0.0, 2.0, 5)) == pytest.approx(4.0)


def test_scale_breakpoints():
    points = scale_breakpoints(0.0, 1e-3, 1.0, decades=8)
    assert points[0] == 0.0
    assert max(abs(p) for p in points) < 1.0
    assert -1e-3 in points and 1e-3 in points


def test_quad_tol_environment(monkeypatch):
    monkeypatch.setenv(settings.QUAD_TOL_ENV, "1e-8")
    assert settings.quad_tol() == 1e-8
    monkeypatch.setenv(settings.QUAD_TOL_ENV, "")
    assert settings.quad_tol() == settings.DEFAULT_QUAD_TOL


@pytest.mark.parametrize("raw", ["abc", "-1", "0", "nan"])
def test_quad_tol_rejects(monkeypatch, raw):
    monkeypatch.setenv(settings.QUAD_TOL_ENV, raw)
    with pytest.raises(ConfigError):
        settings.quad_tol()


def test_geometric_eps():
    assert settings.geometric_eps(0.1, 0.0125) == pytest.approx([0.1, 0.05, 0.025, 0.0125])
    assert len(settings.default_lp_eps()) == 7


@pytest.mark.parametrize("make_list, first, last", [
    (settings.default_sweep_eps, 0.1024, 1e-4),
    (settings.default_weakasym_eps, 1.024e-2, 1e-5),
    (settings.default_growth_eps, 1e-3, 1.25e-4),
])
def test_default_eps_lists_halve_down_to_their_floor(make_list, first, last):
    eps = make_list()
    assert eps[0] == pytest.approx(first)
    assert eps[-1] == pytest.approx(last, rel=1e-12)
    assert np.allclose(np.array(eps[1:]) / np.array(eps[:-1]), 0.5, rtol=1e-12)
    assert check_eps_list(eps) == eps


class TestTestFn:

    def test_bump_values(self, bump):
        assert float(bump(0.0)) == pytest.approx(1.0)
        assert float(bump(1.0)) == 0.0
        assert bump.support == (-1.0, 1.0)
        assert bump.reach == 1.0

    @pytest.mark.parametrize("order", [1, 2, 3])
    def test_derivatives_match_differences(self, shifted_bump, order):
        x, h = 0.1, 1e-4
        lower = shifted_bump.derivative(np.array([x - h, x + h]), order - 1)
        assert float(shifted_bump.derivative(x, order)) == pytest.approx(
            (lower[1] - lower[0]) / (2 * h), rel=1e-5, abs=1e-8)

    def test_pullback_reflects(self, bump):
        psi = bump.pullback(-1.0, 0.5)
        w = np.array([0.2, 0.7, 1.1])
        assert np.allclose(psi(w), bump(0.5 - w))
        assert np.allclose(psi.derivative(w, 1), -bump.derivative(0.5 - w, 1))

    def test_order_limit(self, bump):
        with pytest.raises(ValidationError):
            bump.derivative(0.0, bump.max_order + 1)

    def test_radius_must_be_positive(self):
        with pytest.raises(ValidationError):
            TestFn.bump(0.0, 0.0)


def test_radial_profiles():
    profiles = radial_profiles()
    assert len({phi.name for phi in profiles}) == 5
    for phi in profiles:
        assert float(phi(phi.R)) == 0.0
        assert np.isfinite(phi.laplacian(np.array([0.0, 0.5 * phi.R]), 3)).all()
