# Copyright 2026 The anomalab Authors.

import numpy as np
import pytest

from anomalab.errors import FitDegenerate, ValidationError
from anomalab.netlab import (
    EpsNet, PkTable, Region, classify, classify_sequence, fit_power_law, growth_fit,
    lp_convergence, pairing_sweep, singular_power_pairing, singular_support,
    split_real_imag_limits, term_consistency, weak_asymptotic_residual)
from anomalab.testfn import TestFn, radial_profiles


@pytest.fixture(scope="module")
def chi2():
    return EpsNet.chi(2)


class TestPkTable:

    @pytest.mark.parametrize("k, value", [(0, 1), (1, 0), (2, -1), (3, 0), (4, 9), (6, -225)])
    def test_values_at_zero(self, k, value):
        assert PkTable(6).at_zero(k) == value

    def test_degrees(self):
        table = PkTable(8)
        assert [table.poly(k).degree() for k in range(9)] == list(range(9))

    @pytest.mark.parametrize("k", [1, 2, 3, 5])
    def test_derivatives_match_differences(self, k):
        table = PkTable(k)
        x, h = 0.3, 1e-4
        lower = table.chi_derivative(np.array([x - h, x + h]), k - 1)
        assert table.chi_derivative(x, k) == pytest.approx((lower[1] - lower[0]) / (2 * h), rel=1e-6)

    def test_net_derivative_scaling(self):
        table = PkTable(4)
        x = np.array([0.0, 0.3])
        assert np.allclose(table.net_derivative(x, 0.1, 0), (x * x + 0.01) ** -0.5)


def test_region():
    assert str(Region.point(0.0)) == "{0}"
    assert str(Region(0.5, 1.0)) == "[0.5, 1]"
    samples = Region(-1.0, 1.0).samples(0.1)
    assert len(samples) % 2 == 1
    assert 0.0 in samples
    with pytest.raises(ValidationError):
        Region(1.0, 0.0)


def test_unknown_net():
    with pytest.raises(ValidationError):
        EpsNet.from_name("chi_x")


@pytest.mark.parametrize("alpha", [0, 2, 4, 6])
def test_growth_at_origin(chi2, alpha):
    fit = growth_fit(chi2, Region.point(0.0), alpha)
    assert fit.b == pytest.approx(alpha + 1, abs=0.05)
    assert fit.residual < 1e-8


@pytest.mark.parametrize("alpha", range(7))
def test_growth_away_from_origin(chi2, alpha):
    assert growth_fit(chi2, Region(0.5, 1.0), alpha).b <= 0.05


def test_odd_derivatives_vanish_at_origin(chi2):
    with pytest.raises(FitDegenerate):
        growth_fit(chi2, Region.point(0.0), 1)


def test_growth_of_constant_net():
    assert growth_fit(EpsNet.power(1), Region(0.0, 1.0), 0).b == pytest.approx(-1.0)


@pytest.mark.parametrize("alpha", [0, 2])
def test_growth_of_scaled_bump(alpha):
    fit = growth_fit(EpsNet.scaled_bump(), Region.point(0.0), alpha)
    assert fit.b == pytest.approx(alpha + 1, abs=1e-6)


def test_growth_needs_four_eps():
    with pytest.raises(ValidationError):
        growth_fit(EpsNet.chi(2), Region.point(0.0), 0, [1e-2, 1e-3, 1e-4])


def test_fit_power_law():
    eps = np.array([1e-1, 1e-2, 1e-3, 1e-4])
    b, stderr, residual = fit_power_law(eps, 3.0 * eps ** -1.5)
    assert b == pytest.approx(1.5)
    assert residual < 1e-10
    with pytest.raises(FitDegenerate):
        fit_power_law(eps, np.zeros(4))


def test_classify_chi2(chi2):
    cell, outer = Region.cell(0.0, 0.05), Region(0.5, 1.0)
    report = classify(chi2, [cell, outer], 6)
    assert report.classification == "moderate"
    assert report.region(outer).g_infinity
    assert not report.region(cell).g_infinity
    assert report.certified == "certified up to (K_max=6, a_max=6)"


def test_classify_zero_net():
    report = classify(EpsNet.zero(), [Region(-1.0, 1.0)], 3)
    assert report.classification == "negligible"
    assert report.regions[0].b == (-np.inf,) * 4


def test_singular_support_of_chi2(chi2):
    assert singular_support(chi2, -0.5, 0.5, 0.05) == [pytest.approx((-0.025, 0.025))]


def test_singular_support_moves_with_the_net():
    moving = EpsNet.scaled_bump().advect(1.0)
    (interval,) = singular_support(moving, -0.2, 0.8, 0.05, t=0.5)
    assert interval[0] <= 0.5 <= interval[1]
    assert interval[1] - interval[0] <= 0.1 + 1e-12


class TestPairingSweep:

    def test_trichotomy(self, bump):
        p1 = pairing_sweep(EpsNet.chi(1), bump)
        assert p1.verdict == "power-divergent"
        assert p1.rho == pytest.approx(1.0, abs=0.05)
        p2 = pairing_sweep(EpsNet.chi(2), bump)
        assert p2.verdict == "log-divergent"
        assert p2.r_squared >= 0.99
        p3 = pairing_sweep(EpsNet.chi(3), bump)
        assert p3.verdict == "convergent"
        exact = singular_power_pairing(bump, 2.0 / 3.0)
        assert abs(p3.limit - exact) / abs(exact) <= 1e-3

    def test_constant_sequence_converges(self):
        verdict, _, _, _, limit = classify_sequence([0.1, 0.05, 0.025, 0.0125, 0.00625], [2.0] * 5)
        assert verdict == "convergent"
        assert limit == 2.0

    def test_split_limits(self):
        phi = TestFn.bump(0.3, 1.0)
        split = split_real_imag_limits([1e-2, 5e-3, 2.5e-3, 1.25e-3, 6.25e-4], phi)
        assert split.v_squared.verdict == "power-divergent"
        assert split.w_squared.verdict == "power-divergent"
        assert split.cross.values[-1].real == pytest.approx(split.target, rel=1e-2)

    def test_singular_power_pairing_of_constant(self):
        phi = TestFn.bump()
        value = singular_power_pairing(phi, 0.0)
        assert value == pytest.approx(float(np.sum(phi(np.linspace(-1, 1, 200001)))) * 1e-5, rel=1e-6)


class TestWeakAsymptotics:

    @pytest.mark.parametrize("name, exponent", [("n3p5e", 0.5), ("n4p3e", 1.0)])
    def test_error_term_decay(self, name, exponent):
        report = weak_asymptotic_residual(name, radial_profiles()[0])
        assert report.weak_asymptotic
        assert report.exponent == pytest.approx(exponent, abs=0.05)

    @pytest.mark.parametrize("name", ["n3p5", "n4p3"])
    def test_lp_convergence(self, name):
        report = lp_convergence(name, radial_profiles()[0])
        first = report.row(1)
        assert first.monotone
        assert first.below_tol

    def test_term_identity(self):
        terms = term_consistency("n4p3e", radial_profiles()[0])
        assert max(abs(r) for r in terms.identity_residuals) <= 1e-6

    def test_unknown_example(self):
        with pytest.raises(ValidationError):
            weak_asymptotic_residual("n3p3e", radial_profiles()[0])
