# Copyright 2026 The anomalab Authors.

import math

import numpy as np
import pytest
import sympy

from anomalab.distcore import AffineArg, DistExpr, pair
from anomalab.errors import GridUnderResolved, UnsupportedArg, ValidationError
from anomalab.netlab import sweep_report
from anomalab.quadrature import adapt_integrate
from anomalab.regularize import (
    RegFamily, analytic_reg, blowup_constant, check_eps_list, friedrichs_reg, get_mollifier,
    model_product_sweep, mollifier_names, poisson_kernel, poisson_reg, tillmann_product_sweep,
    vp_convolve)


@pytest.fixture
def e1():
    return DistExpr.basis(1)


def test_builtin_mollifiers():
    assert mollifier_names() == ["poly4", "smooth"]
    with pytest.raises(ValidationError):
        get_mollifier("box")


@pytest.mark.parametrize("name", ["poly4", "smooth"])
def test_mollifier_has_unit_mass(name):
    m = get_mollifier(name)
    mass, _ = adapt_integrate(lambda y: m(y), -1.0, 1.0)
    assert mass == pytest.approx(1.0, abs=1e-12)
    assert m.moments()[0] == pytest.approx(1.0, abs=1e-12)


def test_blowup_constant_of_poly4_is_exact():
    prediction = blowup_constant("poly4")
    assert prediction.exact == sympy.Rational(5, 4)
    assert prediction.C_phi == 1.25
    assert prediction.provenance == "symbolic"
    assert prediction.t_pred(0.1, 2.0) == pytest.approx(0.04)


def test_blowup_constant_of_smooth_mollifier():
    prediction = blowup_constant("smooth")
    assert prediction.provenance == "quadrature"
    assert prediction.exact is None
    # Jensen: the mean of 1/(1 + y) under a symmetric density exceeds 1
    assert prediction.C_phi > 1.0


def test_analytic_reg():
    x = np.linspace(-1.0, 1.0, 7)
    assert np.allclose(analytic_reg(1, 0.1, x), 1.0 / (x + 0.1j))
    assert np.allclose(analytic_reg(2, 0.1, x, order=1), -2.0 / (x + 0.1j) ** 3)
    with pytest.raises(ValidationError):
        analytic_reg(1, 0.0, x)


def test_poisson_reg_matches_analytic_reg(e1):
    x = np.linspace(-0.5, 0.5, 11)
    assert np.allclose(poisson_reg(e1, 0.05, x), analytic_reg(1, 0.05, x))
    assert np.allclose(poisson_reg(DistExpr.basis(3), 0.05, x, order=2),
                       analytic_reg(3, 0.05, x, order=2))


def test_poisson_reg_rejects_moving_argument():
    with pytest.raises(UnsupportedArg):
        poisson_reg(DistExpr.basis(1, AffineArg(1, 1, 0)), 0.1, np.zeros(3))


def test_poisson_kernel_mass():
    mass, _ = adapt_integrate(lambda x: poisson_kernel(1e-2, x), -1e4, 1e4, tol=1e-8,
                              breakpoints=[-1.0, -1e-2, 0.0, 1e-2, 1.0])
    assert mass == pytest.approx(1.0, abs=1e-5)


@pytest.mark.parametrize("name", ["poly4", "smooth"])
def test_vp_convolve_is_odd(name):
    eps = 0.1
    x = np.array([0.3 * eps, 2.0 * eps, 6.0 * eps])
    assert np.allclose(vp_convolve(name, eps, x), -vp_convolve(name, eps, -x), atol=1e-10)
    assert vp_convolve(name, eps, 0.0) == pytest.approx(0.0, abs=1e-12)


@pytest.mark.parametrize("name", ["poly4", "smooth"])
def test_vp_convolve_approaches_one_over_x(name):
    assert vp_convolve(name, 1e-3, 0.5) == pytest.approx(2.0, rel=1e-5)


@pytest.mark.parametrize("order", [0, 1])
def test_vp_convolve_near_and_far_fields_agree(order):
    eps = 0.1
    below = vp_convolve("poly4", eps, 4.0 * eps * (1 - 1e-9), order)
    above = vp_convolve("poly4", eps, 4.0 * eps * (1 + 1e-9), order)
    assert below == pytest.approx(above, rel=1e-6)


def test_vp_convolve_at_minus_eps_is_the_blowup_constant():
    eps = 0.02
    assert vp_convolve("poly4", eps, -eps) == pytest.approx(-5.0 / (4.0 * eps), rel=1e-9)


@pytest.mark.parametrize("name", ["poly4", "smooth"])
@pytest.mark.parametrize("y", [-2.5, -0.4, 0.5, 3.9, 4.1, 6.0])
def test_vp_convolve_scales_with_eps(name, y):
    eps = 0.01
    assert vp_convolve(name, eps, y * eps) == pytest.approx(vp_convolve(name, 1.0, y) / eps, rel=1e-9)


def test_friedrichs_reg_delta_part_at_origin(e1):
    eps = 0.1
    value = friedrichs_reg(e1, "poly4", eps, np.array([0.0]))[0]
    assert value.real == pytest.approx(0.0, abs=1e-12)
    assert value.imag == pytest.approx(-math.pi * 15.0 / 16.0 / eps)


def test_friedrichs_reg_parts_add_up(e1):
    x = np.linspace(-0.3, 0.3, 13)
    full = friedrichs_reg(e1, "poly4", 0.1, x)
    parts = friedrichs_reg(e1, "poly4", 0.1, x, part="vp") + friedrichs_reg(e1, "poly4", 0.1, x, part="delta")
    assert np.allclose(full, parts)


@pytest.mark.parametrize("k", [2, 3, 4])
def test_friedrichs_reg_of_higher_powers_far_from_origin(k):
    x = np.array([0.5, 1.0, 2.0])
    ek = DistExpr.basis(k)
    value = friedrichs_reg(ek, "poly4", 1e-3, x)
    assert np.allclose(value, x ** -k, rtol=1e-4, atol=0.0)
    assert np.allclose(value, poisson_reg(ek, 1e-3, x), rtol=1e-2, atol=0.0)


def test_friedrichs_reg_of_e2_is_minus_derivative_of_e1(e1):
    x = np.array([-0.5, -0.15, -0.02, 0.0, 0.03, 0.2, 0.6])
    e2 = DistExpr.basis(2)
    assert np.allclose(friedrichs_reg(e2, "poly4", 0.1, x), -friedrichs_reg(e1, "poly4", 0.1, x, order=1))
    assert np.allclose(friedrichs_reg(e2, "smooth", 0.1, x), -friedrichs_reg(e1, "smooth", 0.1, x, order=1))


def test_reg_family_chi():
    chi = RegFamily.chi(2)
    x = np.array([-0.4, 0.0, 0.25])
    eps = 0.05
    assert np.allclose(chi(x, eps), (x * x + eps * eps) ** -0.5)
    assert np.allclose(chi(x, eps, 1), -x * (x * x + eps * eps) ** -1.5)
    assert repr(chi) == "RegFamily.chi(p=2)"


def test_reg_family_analytic_and_friedrichs(e1):
    x = np.array([0.5, 0.7])
    assert np.allclose(RegFamily.analytic(2)(x, 0.01), analytic_reg(2, 0.01, x))
    family = RegFamily.friedrichs(e1, "poly4")
    assert np.allclose(family(x, 1e-3), 1.0 / x, rtol=1e-5)
    with pytest.raises(ValidationError):
        RegFamily.analytic(0)


@pytest.mark.parametrize("eps_list", [[], [0.1, 0.1], [0.1, 0.2], [0.1, -0.05]])
def test_check_eps_list_rejects(eps_list):
    with pytest.raises(ValidationError):
        check_eps_list(eps_list)


def test_coarse_grid_is_rejected(e1, bump):
    with pytest.raises(GridUnderResolved):
        model_product_sweep(e1, e1, "poly4", bump, [0.1], h=0.025)


def test_tillmann_product_converges_to_e2(e1, shifted_bump):
    table = tillmann_product_sweep(e1, e1, shifted_bump, [4e-3, 2e-3, 1e-3])
    exact = pair(DistExpr.basis(2), shifted_bump)
    errors = [abs(v - exact) / abs(exact) for v in table.values]
    assert errors[-1] < errors[0]
    assert errors[-1] <= 0.02
    assert table.rows()[0][0] == 4e-3


@pytest.mark.slow
@pytest.mark.parametrize("name", ["poly4", "smooth"])
def test_model_product_of_e1_with_itself(e1, bump, name):
    table = model_product_sweep(e1, e1, name, bump, [1.6e-2, 8e-3, 4e-3, 2e-3, 1e-3])
    exact = pair(DistExpr.basis(2), bump)
    assert abs(table.values[-1] - exact) / abs(exact) <= 0.02
    vp_only = model_product_sweep(e1, e1, name, bump, table.eps, part="vp")
    report = sweep_report(vp_only.eps, vp_only.values)
    assert report.verdict == "power-divergent"
    assert report.rho == pytest.approx(1.0, abs=0.1)


def test_tillmann_product_with_e2_factor_converges_to_e3(e1, shifted_bump):
    e2 = DistExpr.basis(2)
    table = tillmann_product_sweep(e1, e2, shifted_bump, [4e-3, 2e-3, 1e-3])
    exact = pair(DistExpr.basis(3), shifted_bump)
    errors = [abs(v - exact) / abs(exact) for v in table.values]
    assert errors[-1] < errors[0]
    assert errors[-1] <= 0.05
    swapped = tillmann_product_sweep(e2, e1, shifted_bump, table.eps)
    assert np.allclose(swapped.values, table.values)


@pytest.mark.slow
@pytest.mark.parametrize("name", ["poly4", "smooth"])
def test_model_product_with_e2_factor(e1, shifted_bump, name):
    e2 = DistExpr.basis(2)
    table = model_product_sweep(e1, e2, name, shifted_bump, [8e-3, 4e-3, 2e-3, 1e-3])
    exact = pair(DistExpr.basis(3), shifted_bump)
    assert abs(table.values[-1] - exact) / abs(exact) <= 0.02
    tillmann = tillmann_product_sweep(e1, e2, shifted_bump, table.eps)
    assert abs(table.values[-1] - exact) <= abs(tillmann.values[-1] - exact)
