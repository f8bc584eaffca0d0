# Copyright 2026 The anomalab Authors.

"""
Radial pairings int_{R^n} |x|^mu g(|x|) dx and the weak Laplacian identity
of R_lambda.
"""

import logging
from dataclasses import dataclass

import numpy as np
import sympy
from scipy.special import gamma

from anomalab.errors import IntegrabilityViolation
from anomalab.messages import get_message
from anomalab.pseudofun.pseudofn import laplacian_coeff
from anomalab.quadrature import adapt_integrate, scale_breakpoints

logger = logging.getLogger(__name__)


def sphere_area(n):
    """Area of the unit sphere in R^n, 2 pi^(n/2) / Gamma(n/2)."""
    return 2.0 * np.pi ** (n / 2.0) / gamma(n / 2.0)


def radial_pair(mu, n, g, R, scale=None, tol=None, rel_tol=None):
    """
    sigma_(n-1) int_0^R r^(mu + n - 1) g(r) dr for mu > -n.  ``scale`` is the
    radius where g varies fastest, used to seed the quadrature mesh.

    The substitution r = s^(2/a), a = mu + n, turns the weight into
    (2/a) s ds, so the integrand stays bounded at the origin.

    Returns
        (value, error)
    """
    a = float(mu) + n
    if not a > 0:
        raise IntegrabilityViolation(get_message('LambdaRange', mu, -n))
    upper = R ** (a / 2.0)
    start = upper * 1e-6 if scale is None else min(scale, R) ** (a / 2.0) / 10.0

    def integrand(s):
        return (2.0 / a) * s * g(s ** (2.0 / a))

    value, error = adapt_integrate(integrand, 0.0, upper, tol=tol, rel_tol=rel_tol,
                                   breakpoints=scale_breakpoints(0.0, start, upper, decades=30))
    area = sphere_area(n)
    return area * value, area * error


@dataclass(frozen=True)
class RadialResidual:
    residual: float
    quad_error: float

    def __abs__(self):
        return abs(self.residual)


def weak_laplacian_residual(f, phi):
    """
    <R_lambda, Laplacian phi> - lambda (lambda + n - 2) <R_(lambda-2), phi>.

    Raises
        IntegrabilityViolation - if lambda <= 2 - n.
    """
    lam, n = f.lam, f.n
    if not lam > 2 - n:
        raise IntegrabilityViolation(get_message('LambdaIntegrable', lam, 2 - n))
    left, left_err = radial_pair(lam, n, lambda r: phi.laplacian(r, n), phi.R)
    coeff = float(laplacian_coeff(lam, n))
    right, right_err = radial_pair(lam - 2, n, phi, phi.R)
    residual = left - coeff * right
    logger.debug("weak Laplacian residual of %r against %s: %.3g", f, phi.name, residual)
    return RadialResidual(residual, left_err + abs(coeff) * right_err)


def regularized_laplacian_identity(n, q):
    """
    Check symbolically that the Laplacian of (|x|^2 + eps^2)^q on R^n equals
    ((2qn + 4q(q-1)) |x|^2 + 2qn eps^2) (|x|^2 + eps^2)^(q-2).
    """
    r, eps = sympy.symbols("r epsilon", positive=True)
    q = sympy.nsimplify(q)
    f = (r ** 2 + eps ** 2) ** q
    lap = sympy.diff(f, r, 2) + (n - 1) / r * sympy.diff(f, r)
    claimed = ((2 * q * n + 4 * q * (q - 1)) * r ** 2 + 2 * q * n * eps ** 2) * (r ** 2 + eps ** 2) ** (q - 2)
    return sympy.simplify((lap - claimed) / (r ** 2 + eps ** 2) ** (q - 2)) == 0
