# Copyright 2026 The anomalab Authors.

import math
import random
from fractions import Fraction

import pytest
import sympy

from anomalab.distcore import (
    AffineArg, DistExpr, FourierMonomial, PdeSpec, as_rational, collect, conv_fourier, decompose,
    diff, fourier, from_json, hormander_compatible, mul, pair, pair_classical, pde_residual,
    to_json)
from anomalab.errors import ArgMismatch, UnsupportedArg, ValidationError


@pytest.fixture
def e1():
    return DistExpr.basis(1)


def test_square_of_e1_is_minus_its_derivative(e1):
    assert mul(e1, e1) == -diff(e1, "x")


def test_cube_of_e1(e1):
    assert 2 * e1 ** 3 == diff(diff(e1, "x"), "x")


@pytest.mark.parametrize("j, k", [(1, 1), (1, 4), (2, 3), (5, 7)])
def test_basis_product_adds_orders(j, k):
    assert mul(DistExpr.basis(j), DistExpr.basis(k)) == DistExpr.basis(j + k)


def test_derivative_rule():
    e3 = DistExpr.basis(3)
    assert diff(e3, "x") == DistExpr.basis(4, coeff=-3)
    assert diff(e3, "t").is_zero


def test_argument_is_normalized():
    scaled = DistExpr.basis(1, AffineArg(2, 0, 0))
    assert scaled.arg.is_identity
    assert scaled == DistExpr.basis(1, coeff=sympy.Rational(1, 2))


def test_reflected_argument_keeps_orientation():
    reflected = DistExpr.basis(2, AffineArg(-3, 0, 1))
    assert reflected.arg.orientation == -1
    assert reflected.coefficient(2) == sympy.Rational(1, 9)


def test_mismatched_arguments_raise(e1):
    shifted = DistExpr.basis(1, AffineArg(1, 0, 1))
    with pytest.raises(ArgMismatch):
        mul(e1, shifted)


def test_degenerate_argument_raises():
    with pytest.raises(ValidationError):
        AffineArg(0, 0, 1)


@pytest.mark.parametrize("value, expected", [
    ("1/3", sympy.Rational(1, 3)),
    (Fraction(-2, 5), sympy.Rational(-2, 5)),
    (0.25, sympy.Rational(1, 4)),
    (7, sympy.Integer(7)),
])
def test_as_rational(value, expected):
    assert as_rational(value) == expected


@pytest.mark.parametrize("value", [True, "one", "1/0"])
def test_as_rational_rejects(value):
    with pytest.raises(ValidationError):
        as_rational(value)


def test_bad_power_raises():
    with pytest.raises(ValidationError):
        DistExpr.basis(0)
    with pytest.raises(ValidationError):
        DistExpr.basis(1) ** 0


def test_fourier_of_e1(e1):
    (mono,) = fourier(e1)
    assert mono == FourierMonomial(0, -2 * sympy.pi * sympy.I)
    assert mono.as_parts() == (-2, 1, 1)


def test_fourier_law_for_e3():
    (mono,) = fourier(DistExpr.basis(3))
    assert mono == FourierMonomial(2, 4 * sympy.pi ** 3 * sympy.I)


def test_convolution_of_transforms_of_e1(e1):
    f = fourier(e1)[0]
    square = conv_fourier(f, f)
    assert square.m == 1
    assert square.as_parts() == (-4, 2, 0)


@pytest.mark.parametrize("j, k", [(j, k) for j in range(1, 8) for k in range(1, 9 - j)])
def test_fourier_is_a_homomorphism(j, k):
    product = fourier(mul(DistExpr.basis(j), DistExpr.basis(k)))
    conv = collect([conv_fourier(f, g) for f in fourier(DistExpr.basis(j))
                    for g in fourier(DistExpr.basis(k))])
    assert product == conv


def test_fourier_rejects_shifted_argument():
    with pytest.raises(UnsupportedArg):
        fourier(DistExpr.basis(1, AffineArg(1, 0, 1)))


@pytest.mark.parametrize("a, c", [("1/2", 3), ("-4/3", "1/5"), ("2", -1), (0, "7/2")])
def test_anomalous_speeds_solve_the_riccati_equation(a, c):
    a = as_rational(a)
    u = DistExpr.basis(1, AffineArg.traveling(a, 1 - a, c))
    assert pde_residual(u, PdeSpec.advection_riccati(c)).is_zero


@pytest.mark.parametrize("a, b, c", [(1, 1, 1), ("1/2", "1/3", 2), (-1, 1, "3/2")])
def test_other_speeds_leave_a_residual(a, b, c):
    u = DistExpr.basis(1, AffineArg.traveling(a, b, c))
    assert not pde_residual(u, PdeSpec.advection_riccati(c)).is_zero


def test_e1_solves_the_cubic_wave_equation(e1):
    assert pde_residual(e1, PdeSpec.wave_cubic(1)).is_zero


def test_composed_operator_matches_builtin():
    c = 3
    custom = PdeSpec.from_dict({"terms": [{"coeff": "1/3", "dt": 1}, {"coeff": 1, "dx": 1},
                                          {"coeff": 1, "power": 2}]})
    u = DistExpr.basis(1, AffineArg.traveling("1/4", "3/4", c))
    assert pde_residual(u, custom) == pde_residual(u, PdeSpec.advection_riccati(c))
    with pytest.raises(ValidationError):
        PdeSpec.from_dict({"terms": [{"coeff": 1}]})


def test_hormander_compatibility(e1):
    assert hormander_compatible(e1, e1)
    assert not hormander_compatible(e1, DistExpr.basis(1, AffineArg(-1, 0, 0)))
    assert hormander_compatible(DistExpr.zero(), e1)


def test_pairing_of_e1_with_even_bump(e1, bump):
    value = pair(e1, bump)
    assert value.real == pytest.approx(0.0, abs=1e-10)
    assert value.imag == pytest.approx(-math.pi, abs=1e-10)


@pytest.mark.parametrize("k", [1, 2, 3, 4, 6])
def test_pairing_agrees_with_classical_part(k, shifted_bump):
    u = DistExpr.basis(k)
    assert abs(pair(u, shifted_bump) - pair_classical(decompose(u), shifted_bump)) <= 1e-8


def test_classical_part_of_e2():
    part = decompose(DistExpr.basis(2))
    assert part.pf_terms == {2: 1}
    assert sympy.expand(part.delta_terms[1] - sympy.I * sympy.pi) == 0


def test_pairing_rejects_moving_argument(bump):
    with pytest.raises(UnsupportedArg):
        pair(DistExpr.basis(1, AffineArg(1, 1, 0)), bump)


def test_json_encoding_preserves_exact_coefficients():
    u = DistExpr.basis(2, AffineArg(-3, "1/2", 1), coeff=sympy.Rational(5, 7) + sympy.I)
    assert from_json(to_json(u)) == u
    data = to_json(fourier(DistExpr.basis(1))[0])
    assert data["c"] == {"re": "0/1", "im": "-2/1", "pi": 1}


def _random_rational(rng):
    return sympy.Rational(rng.randint(-9, 9), rng.randint(1, 6))


def _random_expr(rng, arg):
    terms = {}
    for _ in range(rng.randint(1, 4)):
        terms[rng.randint(1, 6)] = _random_rational(rng) + sympy.I * rng.randint(1, 9)
    return DistExpr(arg, terms)


@pytest.fixture(params=range(8))
def random_triple(request):
    rng = random.Random(1000 + request.param)
    arg = AffineArg(1, sympy.Rational(-1, 2), sympy.Rational(1, 3))
    return tuple(_random_expr(rng, arg) for _ in range(3)), _random_rational(rng) + sympy.I


def test_product_is_associative_and_commutative(random_triple):
    (a, b, c), _ = random_triple
    assert mul(mul(a, b), c) == mul(a, mul(b, c))
    assert mul(a, b) == mul(b, a)


def test_product_is_bilinear(random_triple):
    (a, b, c), s = random_triple
    assert mul(a + b, c) == mul(a, c) + mul(b, c)
    assert mul(a, b + c) == mul(a, b) + mul(a, c)
    assert mul(a.scaled(s), b) == mul(a, b).scaled(s)
    assert mul(a, b.scaled(s)) == mul(a, b).scaled(s)


@pytest.mark.parametrize("var", ["x", "t"])
def test_derivatives_obey_the_product_rule(random_triple, var):
    (a, b, _), _ = random_triple
    assert not diff(a, var).is_zero
    assert diff(mul(a, b), var) == mul(diff(a, var), b) + mul(a, diff(b, var))
