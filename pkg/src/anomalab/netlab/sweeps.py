# Copyright 2026 The anomalab Authors.

"""
Weak convergence of nets: pairings <u_eps, phi> over a decreasing eps list
and a verdict from their successive increments.

With increments d_j = P(eps_(j+1)) - P(eps_j) and eps halving, a pairing
growing like eps^(-rho) has increment ratio 2^rho, a logarithmic divergence
has ratio 1, and a convergent pairing has ratio below 1.
"""

import logging
from dataclasses import dataclass

import numpy as np

from anomalab import engine, settings
from anomalab.quadrature import adapt_integrate, scale_breakpoints
from anomalab.regularize.products import check_eps_list

logger = logging.getLogger(__name__)

POWER_RATIO = 1.2
LOG_R2 = 0.99
TAIL = 4


@dataclass(frozen=True)
class PairingReport:
    """
    verdict is "power-divergent", "log-divergent" or "convergent"; rho is
    the fitted growth exponent of the increments, limit the Aitken
    extrapolation for convergent pairings.
    """
    eps: tuple
    values: tuple
    verdict: str
    ratio: float
    rho: float
    r_squared: float
    limit: complex = None

    def rows(self):
        return [(e, v.real, v.imag) for e, v in zip(self.eps, self.values)]


def _r_squared(X, values):
    ss_res = ss_tot = 0.0
    for part in (values.real, values.imag):
        coeffs = np.polyfit(X, part, 1)
        ss_res += float(np.sum((part - np.polyval(coeffs, X)) ** 2))
        ss_tot += float(np.sum((part - part.mean()) ** 2))
    return 1.0 - ss_res / ss_tot if ss_tot > 0 else 1.0


def _aitken(values):
    p0, p1, p2 = values[-3:]
    denom = (p2 - p1) - (p1 - p0)
    if denom == 0:
        return p2
    return p2 - (p2 - p1) ** 2 / denom


def classify_sequence(eps, values):
    """
    Verdict on a pairing sequence over decreasing eps, from the increments
    of the last TAIL + 1 values.
    """
    eps = np.asarray(eps, dtype=float)
    values = np.asarray(values, dtype=complex)
    tail = slice(-(TAIL + 1), None)
    e, v = eps[tail], values[tail]
    steps = np.abs(np.diff(v))
    mids = np.sqrt(e[1:] * e[:-1])
    X = np.log(1.0 / mids)
    if np.all(steps == 0):
        return "convergent", 0.0, 0.0, 1.0, complex(values[-1])
    rho = float(np.polyfit(X, np.log(np.maximum(steps, 1e-300)), 1)[0])
    ratio = float(np.exp(rho * np.log(e[0] / e[1])))
    r2 = _r_squared(np.log(1.0 / e), v)
    if ratio > POWER_RATIO:
        verdict = "power-divergent"
    elif ratio >= 1.0 / POWER_RATIO and r2 >= LOG_R2:
        verdict = "log-divergent"
    else:
        verdict = "convergent"
    limit = complex(_aitken(values)) if verdict == "convergent" else None
    return verdict, ratio, rho, r2, limit


def sweep_report(eps, values):
    verdict, ratio, rho, r2, limit = classify_sequence(eps, values)
    logger.info("pairing sweep: %s (ratio %.3f, rho %.3f, R^2 %.4f)", verdict, ratio, rho, r2)
    return PairingReport(tuple(eps), tuple(complex(v) for v in values), verdict, ratio, rho, r2, limit)


def _pair_at(func, phi, eps, focus):
    a, b = phi.support
    cuts = [p for p in scale_breakpoints(focus, eps, b - a, decades=12) if a < p < b]
    value, _ = adapt_integrate(lambda x: func(x) * phi(x), a, b, breakpoints=cuts)
    return complex(value)


def pairing_sweep(net, phi, eps_list=None, t=0.0):
    """
    <u_eps, phi> for every eps and the convergence verdict.

    Returns
        PairingReport
    """
    if eps_list is None:
        eps_list = settings.default_sweep_eps()
    eps_list = check_eps_list(eps_list)
    focus = net.focus(t)
    values = engine.map_keys(
        lambda eps: _pair_at(lambda x: net(x, eps, 0, t), phi, eps, focus), eps_list)
    return sweep_report(eps_list, values)


def singular_power_pairing(phi, a):
    """
    <|x|^(-a), phi> for 0 <= a < 1, with x = s^(1/(1-a)) on each half line
    so the integrand is bounded.
    """
    k = 1.0 / (1.0 - a)
    lo, hi = phi.support
    total = 0.0
    for sign, reach in ((1.0, max(hi, 0.0)), (-1.0, max(-lo, 0.0))):
        if reach == 0:
            continue
        value, _ = adapt_integrate(lambda s: k * phi(sign * s ** k), 0.0, reach ** (1.0 / k))
        total += value
    return total


@dataclass(frozen=True)
class SplitReport:
    """Pairings of v_eps^2, w_eps^2 and -2 v_eps w_eps, and the limit pi phi'(0)."""
    v_squared: PairingReport
    w_squared: PairingReport
    cross: PairingReport
    target: float


def split_real_imag_limits(eps_list, phi):
    """
    With 1/(x + i eps) = v_eps + i w_eps, v = x/(x^2 + eps^2) and
    w = -eps/(x^2 + eps^2): v^2 and w^2 diverge like 1/eps while -2vw
    converges to -pi delta', whose pairing with phi is pi phi'(0).
    """
    eps_list = check_eps_list(eps_list)
    v = lambda x, eps: x / (x * x + eps * eps)
    w = lambda x, eps: -eps / (x * x + eps * eps)
    terms = {
        "v2": lambda x, eps: v(x, eps) ** 2,
        "w2": lambda x, eps: w(x, eps) ** 2,
        "cross": lambda x, eps: -2.0 * v(x, eps) * w(x, eps),
    }
    reports = {}
    for name, term in terms.items():
        values = engine.map_keys(
            lambda eps: _pair_at(lambda x: term(x, eps), phi, eps, 0.0), eps_list)
        reports[name] = sweep_report(eps_list, values)
    target = float(np.pi * phi.derivative(0.0, 1))
    return SplitReport(reports["v2"], reports["w2"], reports["cross"], target)
