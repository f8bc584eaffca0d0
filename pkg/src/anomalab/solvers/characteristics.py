# Copyright 2026 The anomalab Authors.

"""
Method of characteristics for (1/c) u_t + u_x = f(x, u).

Along x = x0 + c t the equation reduces to du/dt = c f(x0 + c t, u), which is
integrated for all foot points at once with the classical Runge-Kutta scheme.
Substeps shrink with the relative growth rate |c f/u| so the pole of a
Riccati-type blow-up is approached in steps of bounded relative change.
"""

import logging

import numpy as np

from anomalab import settings
from anomalab.errors import StepUnderflow, ValidationError
from anomalab.messages import get_message
from anomalab.solvers.field import BlowupRecord, Field1D

logger = logging.getLogger(__name__)

KAPPA = 0.05
BISECT_RTOL = 1e-5
MAX_BISECTIONS = 200


def foot_grid(eps, half_width, points_per_eps=16):
    """Foot points h*i, h = eps/points_per_eps, covering [-half_width, half_width]."""
    h = eps / points_per_eps
    n = int(np.ceil(half_width / h))
    return h * np.arange(-n, n + 1)


def _rk4(rhs, t, u, dt):
    k1 = rhs(t, u)
    k2 = rhs(t + 0.5 * dt, u + 0.5 * dt * k1)
    k3 = rhs(t + 0.5 * dt, u + 0.5 * dt * k2)
    k4 = rhs(t + dt, u + dt * k3)
    return u + dt / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4)


def _crossed(u, threshold):
    return ~np.isfinite(u) | (np.abs(u) > threshold)


def _substep(reaction, rhs, t, u):
    moving = np.abs(u) > 0
    if not moving.any():
        return np.inf
    rate = np.max(np.abs(rhs(t, u)[moving]) / np.abs(u[moving]))
    if rate == 0:
        return np.inf
    return KAPPA / (rate * max(reaction.degree - 1, 1))


def _bisect(rhs, t, u, dt, threshold):
    lo, hi = 0.0, dt
    for _ in range(MAX_BISECTIONS):
        if hi - lo <= BISECT_RTOL * (t + hi):
            trial = _rk4(rhs, t, u, hi)
            return t + hi, int(np.argmax(np.where(np.isfinite(trial), np.abs(trial), np.inf)))
        mid = 0.5 * (lo + hi)
        with np.errstate(all="ignore"):
            trial = _rk4(rhs, t, u, mid)
        if _crossed(trial, threshold).any():
            hi = mid
        else:
            lo = mid
    raise StepUnderflow(get_message('BisectStalled', t + hi))


def solve_characteristics(reaction, u0, grid, T, tau, threshold=None):
    """
    Integrate along the characteristics through the foot points ``grid``.

    Parameters
        reaction: ReactionSpec
        u0: callable or array - initial data at the foot points.
        grid: array of foot points x0.
        T: float - final time.
        tau: float - output step; samples are stored at multiples of tau.
        threshold: float - |u| above this counts as blow-up; 1e6 by default.

    Returns
        Field1D - speed c, stopped at the first blow-up if one occurs.

    Raises
        StepUnderflow - if a substep or the blow-up bisection stalls.
    """
    if threshold is None:
        threshold = settings.BLOWUP_THRESHOLD
    x0 = np.asarray(grid, dtype=float)
    u = np.asarray(u0(x0) if callable(u0) else u0, dtype=complex).copy()
    if not np.all(np.isfinite(u)):
        raise ValidationError(get_message('DataUnbounded'))
    c = reaction.c

    def rhs(t, v):
        return c * reaction(x0 + c * t, v)

    levels = int(round(T / tau))
    times = [0.0]
    rows = [u.copy()]
    t = 0.0
    for j in range(1, levels + 1):
        target = j * tau
        while t < target:
            dt = min(target - t, _substep(reaction, rhs, t, u))
            if dt <= 1e-14 * max(t, tau):
                raise StepUnderflow(get_message('StepStalled', t))
            with np.errstate(all="ignore"):
                trial = _rk4(rhs, t, u, dt)
            if _crossed(trial, threshold).any():
                t_blow, i = _bisect(rhs, t, u, dt, threshold)
                record = BlowupRecord(t_blow, float(x0[i] + c * t_blow), True)
                logger.info("blow-up at t=%.8g, x=%.6g", record.time, record.location)
                return Field1D(x0, np.array(times), np.array(rows), c, record)
            u = trial
            t = target if target - (t + dt) <= 1e-15 * target else t + dt
        times.append(target)
        rows.append(u.copy())
    return Field1D(x0, np.array(times), np.array(rows), c)
