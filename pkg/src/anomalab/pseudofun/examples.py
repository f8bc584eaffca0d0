# Copyright 2026 The anomalab Authors.

"""
Stationary solutions u0 = |x|^lambda of the nonlinear wave equation
u_tt - Laplacian u - coeff u^p = 0. Since u0 >= 0, u^p, |u|^p and |u|^(p-1) u
coincide; the u^p form is used throughout.
"""

from dataclasses import dataclass

import sympy

from anomalab.errors import ValidationError
from anomalab.messages import get_message
from anomalab.pseudofun.pseudofn import PseudoFn
from anomalab.pseudofun.radial import RadialResidual, radial_pair


@dataclass(frozen=True)
class StationaryExample:
    name: str
    n: int
    lam: object
    p: int
    coeff: object

    def solution(self):
        return PseudoFn(self.lam, self.n)


EXAMPLES = {
    "n3p5": StationaryExample("n3p5", 3, sympy.Rational(-1, 2), 5, sympy.Rational(1, 4)),
    "n4p3": StationaryExample("n4p3", 4, sympy.Integer(-1), 3, sympy.Integer(1)),
}


def example_names():
    return sorted(EXAMPLES)


def get_example(name):
    if isinstance(name, StationaryExample):
        return name
    try:
        return EXAMPLES[name]
    except KeyError:
        raise ValidationError(get_message('UnknownExample', name, ", ".join(example_names())))


def stationary_wave_residual(example, phi, coeff=None):
    """
    <u0, Laplacian phi> + coeff <u0^p, phi>, which vanishes when
    -Laplacian u0 - coeff u0^p = 0 holds weakly.

    Parameters
        example: "n3p5", "n4p3" or a StationaryExample.
        phi: RadialTestFn.
        coeff: overrides the coefficient of the example.

    Returns
        RadialResidual
    """
    ex = get_example(example)
    coeff = float(ex.coeff if coeff is None else coeff)
    n = ex.n
    lap, lap_err = radial_pair(ex.lam, n, lambda r: phi.laplacian(r, n), phi.R)
    power, power_err = radial_pair(ex.lam * ex.p, n, phi, phi.R)
    return RadialResidual(lap + coeff * power, lap_err + abs(coeff) * power_err)
