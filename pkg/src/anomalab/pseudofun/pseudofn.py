# Copyright 2026 The anomalab Authors.

"""
PseudoFn: the radial power R_lambda(x) = |x|^lambda on R^n.
"""

from dataclasses import dataclass

import numpy as np
import sympy

from anomalab.distcore.affinearg import as_rational
from anomalab.errors import ValidationError
from anomalab.messages import get_message


class PseudoFn:
    """
    R_lambda on R^n for lambda > -n, where it is locally integrable and
    away from the poles -n, -n-2, ...

    Attributes
        lam: sympy Rational - the exponent.
        n: int - space dimension.
    """

    def __init__(self, lam, n):
        if not isinstance(n, int) or n < 1:
            raise ValidationError(get_message('LambdaRange', lam, n))
        lam = as_rational(lam)
        if not lam > -n:
            raise ValidationError(get_message('LambdaRange', lam, -n))
        self.lam = lam
        self.n = n

    def __call__(self, r):
        r = np.asarray(r, dtype=float)
        with np.errstate(divide="ignore"):
            return r ** float(self.lam)

    def scaled(self, s, r):
        """R_lambda(s r), equal to s^lambda R_lambda(r)."""
        return self(s * np.asarray(r, dtype=float))

    def shifted(self, shift):
        """R_(lambda + shift) in the same dimension."""
        return PseudoFn(self.lam + as_rational(shift), self.n)

    def __eq__(self, other):
        return isinstance(other, PseudoFn) and (self.lam, self.n) == (other.lam, other.n)

    def __hash__(self):
        return hash((self.lam, self.n))

    def __repr__(self):
        return "PseudoFn(lam=%s, n=%d)" % (self.lam, self.n)


def laplacian_coeff(lam, n):
    """lambda (lambda + n - 2), so that Laplacian R_lambda = coeff R_(lambda-2)."""
    lam = as_rational(lam)
    return lam * (lam + n - 2)


@dataclass(frozen=True)
class NemytskiiReport:
    """
    (R_lambda)^p = R_(lambda p). ``result`` is None when the power is not
    locally integrable.
    """
    lam: object
    n: int
    p: int
    lam_p: object
    in_lp_loc: bool
    result: object


def nemytskii_power(f, p):
    """
    The p-th power of R_lambda and whether R_lambda lies in L^p_loc, that
    is whether int_0 r^(lambda p + n - 1) dr converges.
    """
    if not isinstance(p, int) or p < 1:
        raise ValidationError(get_message('BadPower', p))
    lam_p = f.lam * p
    inside = bool(lam_p > -f.n)
    result = PseudoFn(lam_p, f.n) if inside else None
    return NemytskiiReport(f.lam, f.n, p, lam_p, inside, result)


def self_similarity_defect(p, n, samples=200, seed=0):
    """
    Largest |mu^(2/(p-1)) u(mu x) - u(x)| over random (mu, x) for the
    stationary solution u = R_lambda(|x|), lambda = -2/(p-1), relative to |u(x)|.
    """
    lam = sympy.Rational(-2, p - 1)
    u = PseudoFn(lam, n)
    rng = np.random.default_rng(seed)
    mu = rng.uniform(0.1, 10.0, samples)
    x = rng.normal(size=(samples, n))
    r = np.linalg.norm(x, axis=1)
    lhs = mu ** (2.0 / (p - 1)) * u(mu * r)
    rhs = u(r)
    return float(np.max(np.abs(lhs - rhs) / np.abs(rhs)))
