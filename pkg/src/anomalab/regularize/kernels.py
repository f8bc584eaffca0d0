# Copyright 2026 The anomalab Authors.

"""
Regularizations of boundary values: analytic (x + i eps)^(-k), Friedrichs
mollification through principal-value convolutions, and Poisson-kernel
smoothing.
"""

import math

import numpy as np

from anomalab.errors import UnsupportedArg, ValidationError
from anomalab.messages import get_message
from anomalab.quadrature import adapt_integrate
from anomalab.regularize.mollifier import get_mollifier

NEAR_FIELD = 4.0


def _check_eps(eps):
    if not eps > 0:
        raise ValidationError(get_message('EpsPositive', eps))


def _rising(n, r):
    out = 1.0
    for i in range(r):
        out *= n + i
    return out


def _vp_near(m, eps, x, order):
    psi = lambda s: m.scaled(s, eps, order)
    upper = abs(x) + eps
    cuts = [abs(x - eps), abs(x + eps)]
    value, _ = adapt_integrate(lambda s: (psi(x - s) - psi(x + s)) / s, 0.0, upper,
                               breakpoints=cuts, rel_tol=1e-13)
    return value


def _vp_far(m, eps, x, order):
    mu = m.moments()
    total = np.zeros_like(x)
    for j, mj in enumerate(mu):
        n = 2 * j + 1
        total += mj * eps ** (2 * j) * (-1) ** order * _rising(n, order) * x ** (-n - order)
    return total


def vp_convolve(m, eps, x, order=0):
    """
    (vp(1/.) * phi_eps^(order))(x) from the symmetrized form
    int_0^inf (phi_eps(x - s) - phi_eps(x + s))/s ds.

    Away from the support (|x| > 4 eps) the even-moment expansion
    sum_j mu_2j eps^2j / x^(2j+1) is used; it converges geometrically there.

    Raises
        QuadratureFailure - if a near-field integral misses its tolerance.
    """
    _check_eps(eps)
    m = get_mollifier(m)
    scalar = np.ndim(x) == 0
    x = np.atleast_1d(np.asarray(x, dtype=float))
    out = np.empty_like(x)
    far = np.abs(x) > NEAR_FIELD * eps
    if far.any():
        out[far] = _vp_far(m, eps, x[far], order)
    for i in np.flatnonzero(~far):
        out[i] = _vp_near(m, eps, x[i], order)
    return float(out[0]) if scalar else out


def analytic_reg(k, eps, x, order=0):
    """(x + i eps)^(-k) and its x-derivatives."""
    _check_eps(eps)
    z = np.asarray(x, dtype=float) + 1j * eps
    return (-1) ** order * _rising(k, order) * z ** (-k - order)


def poisson_kernel(eps, x):
    """psi_eps(x) = eps / (pi (x^2 + eps^2))."""
    _check_eps(eps)
    x = np.asarray(x, dtype=float)
    return eps / (math.pi * (x * x + eps * eps))


def _static_arg(u):
    arg = u.arg
    if not arg.is_static:
        raise UnsupportedArg(get_message('PoissonArg', arg))
    return float(arg.alpha), float(arg.gamma)


def poisson_reg(u, eps, x, order=0):
    """
    u_eps(x) = U(x + i eps) - U(x - i eps) for the analytic representative U
    of u; for e_k on w = alpha x + gamma this is (alpha x + gamma + i eps)^(-k).
    """
    _check_eps(eps)
    x = np.asarray(x, dtype=float)
    if u.is_zero:
        return np.zeros(x.shape, dtype=complex)
    alpha, gamma = _static_arg(u)
    z = alpha * x + gamma + 1j * eps
    total = np.zeros(x.shape, dtype=complex)
    for k, c in u.terms.items():
        total += complex(c) * alpha ** order * (-1) ** order * _rising(k, order) * z ** (-k - order)
    return total


def friedrichs_reg(u, m, eps, x, order=0, part="full"):
    """
    (u * phi_eps)(x) for u in the boundary-value algebra, using
    e_k * phi_eps = ((-1)^(k-1) / (k-1)!) (vp * phi_eps^(k-1) - i pi phi_eps^(k-1)).

    part selects the principal-value part ("vp"), the delta part ("delta")
    or both ("full").
    """
    _check_eps(eps)
    m = get_mollifier(m)
    x = np.asarray(x, dtype=float)
    if u.is_zero:
        return np.zeros(x.shape, dtype=complex)
    alpha, gamma = _static_arg(u)
    w = alpha * x + gamma
    total = np.zeros(x.shape, dtype=complex)
    for k, c in u.terms.items():
        j = k - 1 + order
        piece = np.zeros(x.shape, dtype=complex)
        if part in ("full", "vp"):
            piece += vp_convolve(m, eps, w, j)
        if part in ("full", "delta"):
            piece += -1j * math.pi * m.scaled(w, eps, j)
        total += complex(c) * (-1) ** (k - 1) * alpha ** order * piece / math.factorial(k - 1)
    return total
