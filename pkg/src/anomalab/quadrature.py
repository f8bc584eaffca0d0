# Copyright 2026 The anomalab Authors.

"""
Composite Gauss–Legendre quadrature.

``adapt_integrate`` refines a partition of [a, b] until the difference between
one Gauss–Legendre panel and its two halves, summed over all panels, meets the
requested tolerance. Integrands are vectorized: they take a 1-D array of
abscissae and return an array (real or complex) of the same length.
"""

import logging

import numpy as np
from numpy.polynomial.legendre import leggauss

from anomalab import settings
from anomalab.errors import QuadratureFailure
from anomalab.messages import get_message

logger = logging.getLogger(__name__)

MAX_ADAPT_ITERATIONS = 60
MAX_ELEMENTS = 200000


class GaussLegendreRule:
    """Gauss–Legendre rule of a fixed order on the reference interval [-1, 1]."""

    _cache = {}

    def __init__(self, order=10):
        if order not in self._cache:
            self._cache[order] = leggauss(order)
        self.order = order
        self.nodes, self.weights = self._cache[order]

    def integrate(self, f, left, right):
        """
        Apply the rule on every element [left[i], right[i]].

        Returns
            ndarray - one integral per element.
        """
        left = np.atleast_1d(np.asarray(left, dtype=float))
        right = np.atleast_1d(np.asarray(right, dtype=float))
        mid = 0.5 * (left + right)
        half = 0.5 * (right - left)
        x = mid[:, None] + half[:, None] * self.nodes[None, :]
        flat = x.ravel()
        values = np.broadcast_to(np.asarray(f(flat)), flat.shape).reshape(x.shape)
        return half * (values @ self.weights)


def _initial_mesh(a, b, breakpoints):
    pts = [a, b]
    lo, hi = min(a, b), max(a, b)
    pts.extend(p for p in breakpoints if lo < p < hi)
    pts = np.unique(np.asarray(pts, dtype=float))
    return pts[:-1], pts[1:]


def adapt_integrate(f, a, b, tol=None, rel_tol=None, breakpoints=(), order=10):
    """
    Integrate f over [a, b] adaptively.

    Parameters
        f: callable - vectorized integrand.
        a, b: float - integration limits.
        tol: float - absolute tolerance; defaults to settings.quad_tol().
        rel_tol: float - relative tolerance on the integral value.
        breakpoints: iterable of float - points where f is not smooth or varies
            on a small scale; they seed the initial partition.
        order: int - Gauss–Legendre order per panel.

    Returns
        (value, error) - the integral and the estimated absolute error.

    Raises
        QuadratureFailure - if the tolerance is not met within the refinement
        budget.
    """
    if tol is None:
        tol = settings.quad_tol()
    if rel_tol is None:
        rel_tol = settings.DEFAULT_REL_TOL
    if a == b:
        return 0.0, 0.0
    sign = 1.0
    if a > b:
        a, b, sign = b, a, -1.0

    rule = GaussLegendreRule(order)
    length = b - a
    left, right = _initial_mesh(a, b, breakpoints)

    def estimate(lo, hi):
        mid = 0.5 * (lo + hi)
        coarse = rule.integrate(f, lo, hi)
        fine = rule.integrate(f, np.concatenate([lo, mid]), np.concatenate([mid, hi]))
        n = len(lo)
        fine = fine[:n] + fine[n:]
        return fine, np.abs(fine - coarse)

    values, errors = estimate(left, right)
    for iteration in range(MAX_ADAPT_ITERATIONS):
        total = values.sum()
        err_total = errors.sum()
        target = max(tol, rel_tol * abs(total))
        if err_total <= target:
            return sign * total, err_total
        marked = errors > target * (right - left) / length
        if not marked.any():
            marked = errors >= errors.max()
        if len(left) + marked.sum() > MAX_ELEMENTS:
            break
        mid = 0.5 * (left[marked] + right[marked])
        new_left = np.concatenate([left[marked], mid])
        new_right = np.concatenate([mid, right[marked]])
        new_values, new_errors = estimate(new_left, new_right)
        keep = ~marked
        left = np.concatenate([left[keep], new_left])
        right = np.concatenate([right[keep], new_right])
        values = np.concatenate([values[keep], new_values])
        errors = np.concatenate([errors[keep], new_errors])

    total = values.sum()
    err_total = errors.sum()
    target = max(tol, rel_tol * abs(total))
    if err_total <= target:
        return sign * total, err_total
    logger.debug("quadrature gave up with %d panels", len(left))
    raise QuadratureFailure(get_message('QuadNotConverged', a, b, err_total, target))


def panel_integrate(f, edges, order=4):
    """
    Fixed composite Gauss–Legendre rule on the panels defined by ``edges``.
    """
    edges = np.asarray(edges, dtype=float)
    rule = GaussLegendreRule(order)
    return rule.integrate(f, edges[:-1], edges[1:]).sum()


def scale_breakpoints(center, scale, limit, decades=8):
    """
    Breakpoints center +/- scale*10**j for j = 0..decades, clipped to |x - center| < limit.
    """
    pts = [center]
    for j in range(decades + 1):
        d = scale * 10.0 ** j
        if d >= limit:
            break
        pts.extend([center - d, center + d])
    return pts
