# Copyright 2026 The anomalab Authors.

"""
Symbolic PDE residuals in the boundary-value algebra.

A PdeSpec is a linear combination, with rational coefficients, of
derivative terms d_x^i d_t^j u and power terms u^p.
"""

from dataclasses import dataclass

from anomalab.distcore.affinearg import as_rational
from anomalab.distcore.distexpr import DistExpr, diff
from anomalab.errors import ValidationError
from anomalab.messages import get_message


@dataclass(frozen=True)
class DerivTerm:
    coeff: object
    x_order: int = 0
    t_order: int = 0

    def apply(self, u):
        out = u
        for _ in range(self.x_order):
            out = diff(out, "x")
        for _ in range(self.t_order):
            out = diff(out, "t")
        return out.scaled(self.coeff)


@dataclass(frozen=True)
class PowerTerm:
    coeff: object
    power: int = 2

    def apply(self, u):
        if u.is_zero:
            return u
        return (u ** self.power).scaled(self.coeff)


@dataclass(frozen=True)
class PdeSpec:
    name: str
    terms: tuple

    @classmethod
    def advection_riccati(cls, c=1):
        """(1/c) d_t u + d_x u + u^2"""
        c = as_rational(c)
        if c == 0:
            raise ValidationError(get_message('SpeedNonzero'))
        return cls("advection_riccati", (DerivTerm(1 / c, 0, 1), DerivTerm(1, 1, 0), PowerTerm(1, 2)))

    @classmethod
    def wave_cubic(cls, c=1):
        """(1/c^2) d_t^2 u - d_x^2 u + 2 u^3"""
        c = as_rational(c)
        if c == 0:
            raise ValidationError(get_message('SpeedNonzero'))
        return cls("wave_cubic", (DerivTerm(1 / c ** 2, 0, 2), DerivTerm(-1, 2, 0), PowerTerm(2, 3)))

    @classmethod
    def from_dict(cls, spec):
        """
        Build a user-composed operator from
        {"name": ..., "terms": [{"coeff": "1/2", "dx": 1, "dt": 0}, {"coeff": 1, "power": 2}]}.
        """
        terms = []
        for item in spec.get("terms", []):
            coeff = as_rational(item.get("coeff", 1))
            if "power" in item:
                power = int(item["power"])
                if power < 1:
                    raise ValidationError(get_message('BadPower', power))
                terms.append(PowerTerm(coeff, power))
            elif "dx" in item or "dt" in item:
                terms.append(DerivTerm(coeff, int(item.get("dx", 0)), int(item.get("dt", 0))))
            else:
                raise ValidationError(get_message('PdeTerm', item))
        return cls(spec.get("name", "custom"), tuple(terms))


def pde_residual(u, pde):
    """
    Apply the operator to u. A zero result certifies u as an exact solution.

    Raises
        ArgMismatch - propagated from products of mismatched arguments.
    """
    out = DistExpr.zero(u.arg)
    for term in pde.terms:
        out = out + term.apply(u)
    return out
