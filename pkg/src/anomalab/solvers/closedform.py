# Copyright 2026 The anomalab Authors.

"""Closed-form solutions used as oracles for the numerical solvers."""

import numpy as np

from anomalab.distcore import DistExpr
from anomalab.errors import DomainError
from anomalab.messages import get_message
from anomalab.regularize.kernels import analytic_reg, friedrichs_reg


def _riccati_quotient(u0, c, t):
    return u0 / (1.0 + c * t * u0)


def closed_form_riccati(eps, c, x, t):
    """u0(x - ct)/(1 + ct u0(x - ct)) with u0 = 1/(x + i eps); equals 1/(x + i eps)."""
    x = np.asarray(x, dtype=float)
    return _riccati_quotient(analytic_reg(1, eps, x - c * t), c, t)


def closed_form_riccati_friedrichs(m, eps, c, x, t):
    """The same quotient with the Friedrichs-regularized e1 as data."""
    x = np.asarray(x, dtype=float)
    u0 = friedrichs_reg(DistExpr.basis(1), m, eps, x - c * t)
    return _riccati_quotient(u0, c, t)


def closed_form_cubic(v0, c, x, t):
    """
    v0(x - ct)/sqrt((x^2 - (x - ct)^2) v0(x - ct)^2 + 1), the solution of
    (1/c) v_t + v_x + x v^3 = 0.

    Raises
        DomainError - if the radicand is not positive.
    """
    x = np.asarray(x, dtype=float)
    y = x - c * t
    v = np.asarray(v0(y))
    radicand = (x * x - y * y) * v * v + 1.0
    bad = np.real(radicand) <= 0
    if np.any(bad):
        i = np.flatnonzero(np.atleast_1d(bad))[0]
        raise DomainError(get_message('Radicand', float(np.real(np.atleast_1d(radicand)[i])),
                                      float(np.atleast_1d(x + 0 * y)[i]), t))
    return v / np.sqrt(radicand)
