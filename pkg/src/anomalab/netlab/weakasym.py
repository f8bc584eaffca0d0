# Copyright 2026 The anomalab Authors.

"""
Weak asymptotic solutions of the stationary equations

    -Laplacian u - coeff u^p = 0

built from u_eps = (|x|^2 + eps^2)^(lambda/2). The regularized net satisfies
Laplacian u_eps + coeff u_eps^p = -e eps^2 u_eps^m exactly; the error term
tends to zero weakly, u_eps -> u and u_eps^p -> u^p in L^1_loc.
"""

import logging
from dataclasses import dataclass

import numpy as np
import sympy

from anomalab import engine, settings
from anomalab.errors import ValidationError
from anomalab.messages import get_message
from anomalab.netlab.growth import fit_power_law
from anomalab.pseudofun.examples import get_example
from anomalab.pseudofun.radial import radial_pair

logger = logging.getLogger(__name__)

LP_TOL = 1e-4


@dataclass(frozen=True)
class WeakExample:
    """Error term -e eps^2 u_eps^m of a regularized stationary example."""
    name: str
    base: str
    e: object
    m: int

    def stationary(self):
        return get_example(self.base)


WEAK_EXAMPLES = {
    "n3p5e": WeakExample("n3p5e", "n3p5", sympy.Rational(5, 4), 9),
    "n4p3e": WeakExample("n4p3e", "n4p3", sympy.Integer(3), 5),
}


def get_weak_example(name):
    if isinstance(name, WeakExample):
        return name
    try:
        return WEAK_EXAMPLES[name]
    except KeyError:
        raise ValidationError(get_message('UnknownExample', name, ", ".join(sorted(WEAK_EXAMPLES))))


def _u_eps(lam, eps):
    q = float(lam) / 2.0
    return lambda r: (r * r + eps * eps) ** q


@dataclass(frozen=True)
class ResidualReport:
    """|<error term, phi>| per eps, the fitted decay exponent and the verdict."""
    example: str
    eps: tuple
    values: tuple
    exponent: float
    stderr: float
    weak_asymptotic: bool

    def rows(self):
        return list(zip(self.eps, self.values))


def _error_pairing(example, phi, eps):
    ex = example.stationary()
    u = _u_eps(ex.lam, eps)
    e = float(example.e)
    value, _ = radial_pair(0, ex.n, lambda r: e * eps * eps * u(r) ** example.m * phi(r), phi.R,
                           scale=eps, tol=1e-14, rel_tol=1e-11)
    return value


def weak_asymptotic_residual(example, phi, eps_list=None):
    """
    Pair the error term of the regularized example with phi for every eps
    and fit |<error, phi>| ~ eps^exponent.

    Returns
        ResidualReport
    """
    example = get_weak_example(example)
    if eps_list is None:
        eps_list = settings.default_weakasym_eps()
    eps_list = [float(v) for v in eps_list]
    values = engine.map_keys(lambda eps: abs(_error_pairing(example, phi, eps)), eps_list)
    if all(v == 0 for v in values):
        return ResidualReport(example.name, tuple(eps_list), tuple(values), np.inf, 0.0, True)
    b, stderr, _ = fit_power_law(eps_list, values)
    exponent = -b
    verdict = bool(exponent > 0 and values[-1] < values[0])
    logger.info("%s: error term decays like eps^%.4f", example.name, exponent)
    return ResidualReport(example.name, tuple(eps_list), tuple(values), exponent, stderr, verdict)


@dataclass(frozen=True)
class LpRow:
    m: int
    eps: tuple
    values: tuple
    rate: float
    monotone: bool
    below_tol: object


@dataclass(frozen=True)
class LpReport:
    """int |u_eps^m - u^m| phi dx for m = 1 and m = p."""
    example: str
    rows: tuple

    def row(self, m):
        for row in self.rows:
            if row.m == m:
                return row
        raise KeyError(m)


def _lp_distance(ex, m, phi, eps):
    a = float(ex.lam) * m / 2.0

    def g(r):
        with np.errstate(divide="ignore", invalid="ignore"):
            gap = np.abs(np.expm1(a * np.log1p((eps / r) ** 2)))
        return np.where(r > 0, gap, 1.0) * phi(r)

    value, _ = radial_pair(ex.lam * m, ex.n, g, phi.R, scale=eps, tol=1e-16, rel_tol=1e-10)
    return value


def lp_convergence(example, phi, eps_list=None):
    """
    L^1_loc distances of u_eps^m to u^m weighted by phi, for m = 1 and m = p.
    The 1e-4 tolerance at the smallest eps is checked for m = 1; for m = p
    the distance decays like eps^(lambda p + n), which the fitted rate shows.

    Returns
        LpReport
    """
    ex = get_example(example)
    if eps_list is None:
        eps_list = settings.default_lp_eps()
    eps_list = [float(v) for v in eps_list]
    rows = []
    for m in (1, ex.p):
        values = engine.map_keys(lambda eps: _lp_distance(ex, m, phi, eps), eps_list)
        b, _, _ = fit_power_law(eps_list, values)
        monotone = bool(np.all(np.diff(values) < 0))
        below = bool(values[-1] < LP_TOL) if m == 1 else None
        rows.append(LpRow(m, tuple(eps_list), tuple(values), -b, monotone, below))
    return LpReport(ex.name, tuple(rows))


@dataclass(frozen=True)
class TermReport:
    """
    Per eps: <u_eps, Laplacian phi>, coeff <u_eps^p, phi> and e eps^2 <u_eps^m, phi>, the
    limits of the first two, and the residual of the eps-identity.
    """
    example: str
    eps: tuple
    laplacian_terms: tuple
    power_terms: tuple
    error_terms: tuple
    identity_residuals: tuple
    laplacian_limit: float
    power_limit: float


def term_consistency(example, phi, eps_list=None):
    """
    Pair every term of Laplacian u_eps + coeff u_eps^p + e eps^2 u_eps^m = 0
    with phi and compare with the terms of the limit equation.
    """
    example = get_weak_example(example)
    ex = example.stationary()
    n, coeff = ex.n, float(ex.coeff)
    if eps_list is None:
        eps_list = settings.default_weakasym_eps()
    eps_list = [float(v) for v in eps_list]
    lap_phi = lambda r: phi.laplacian(r, n)

    def terms(eps):
        u = _u_eps(ex.lam, eps)
        lap, _ = radial_pair(0, n, lambda r: u(r) * lap_phi(r), phi.R, scale=eps)
        power, _ = radial_pair(0, n, lambda r: coeff * u(r) ** ex.p * phi(r), phi.R, scale=eps)
        error = _error_pairing(example, phi, eps)
        return lap, power, error

    rows = engine.map_keys(terms, eps_list)
    lap_limit, _ = radial_pair(ex.lam, n, lap_phi, phi.R)
    power_limit, _ = radial_pair(ex.lam * ex.p, n, phi, phi.R)
    return TermReport(
        example.name, tuple(eps_list),
        tuple(r[0] for r in rows), tuple(r[1] for r in rows), tuple(r[2] for r in rows),
        tuple(r[0] + r[1] + r[2] for r in rows),
        lap_limit, coeff * power_limit)
