# Copyright 2026 The anomalab Authors.

"""
Leapfrog scheme for the semilinear wave equation

    (1/c^2) u_tt - u_xx + g(x, u) = 0,    u(x, 0) = u0,  u_t(x, 0) = u1,

on [-L, L] with Dirichlet values pinned to the initial data, and the
discrete energy

    E_d = int 1/2 u_t^2 + 1/2 c^2 u_x^2 + c^2 G(x, u) dx,   dG/du = g,

which is conserved by the continuous equation.
"""

import logging
from dataclasses import dataclass

import numpy as np
import sympy

from anomalab import settings
from anomalab.errors import Instability, ValidationError
from anomalab.messages import get_message
from anomalab.solvers.field import EnergyReport, Field1D
from anomalab.solvers.reaction import U, X

logger = logging.getLogger(__name__)


class WaveNonlinearity:
    """g(x, u) polynomial in u, with its potential G(x, u) = int_0^u g du."""

    def __init__(self, expr, name="custom"):
        self.expr = sympy.sympify(expr, locals={"x": X, "u": U})
        self.potential = sympy.integrate(self.expr, (U, 0, U))
        self.name = name
        self._g = sympy.lambdify((X, U), self.expr, modules="numpy")
        self._G = sympy.lambdify((X, U), self.potential, modules="numpy")

    @classmethod
    def cubic_quintic(cls):
        """
        3 x^2 u^5 - u^3.  The net (x^2 + eps^2)^(-1/2) has u_xx = 3 x^2 u^5 - u^3,
        so it is a stationary solution.
        """
        return cls(3 * X ** 2 * U ** 5 - U ** 3, "cubic_quintic")

    @classmethod
    def linear(cls):
        return cls(sympy.Integer(0), "linear")

    def __call__(self, x, u):
        return self._g(x, u) + 0 * u

    def G(self, x, u):
        return self._G(x, u) + 0 * u


@dataclass(frozen=True)
class WaveConfig:
    """
    Attributes
        c: float - wave speed, positive.
        g: WaveNonlinearity
        u0, u1: callables - initial position and velocity.
        L, h, tau, T: domain half-width, grid spacing, time step, horizon.
    """
    c: float
    g: WaveNonlinearity
    u0: object
    u1: object
    L: float
    h: float
    tau: float
    T: float

    def __post_init__(self):
        if not self.c > 0:
            raise ValidationError(get_message('SpeedNonzero'))
        cfl = self.c * self.tau / self.h
        if cfl > settings.CFL_MAX:
            raise ValidationError(get_message('CflViolated', cfl, settings.CFL_MAX))

    def grid(self):
        n = int(round(2 * self.L / self.h))
        return np.linspace(-self.L, self.L, n + 1)


def _second_difference(u, h):
    d2 = np.zeros_like(u)
    d2[1:-1] = (u[2:] - 2.0 * u[1:-1] + u[:-2]) / (h * h)
    return d2


def _trapezoid(values, h):
    return h * (values.sum() - 0.5 * (values[0] + values[-1]))


def discrete_energy(x, u, ut, c, g, h, absolute=False):
    """
    E_d with forward differences for u_x and the trapezoidal rule.  With
    absolute=True the potential density enters as |G|, which gives the
    scale drifts are measured against.
    """
    ux = np.diff(u) / h
    kinetic = _trapezoid(0.5 * ut * ut, h)
    gradient = h * np.sum(0.5 * c * c * ux * ux)
    density = g.G(x, u)
    if absolute:
        density = np.abs(density)
    potential = _trapezoid(c * c * density, h)
    return float(kinetic + gradient + potential)


def solve_wave_leapfrog(cfg):
    """
    Three-level leapfrog with a Taylor first step.

    Returns
        Field1D - samples at every time level, with the EnergyReport attached.

    Raises
        Instability - if a sample exceeds 1e12.
    """
    x = cfg.grid()
    h, tau, c = cfg.h, cfg.tau, cfg.c
    u_prev = np.asarray(cfg.u0(x), dtype=float) + 0 * x
    velocity = np.asarray(cfg.u1(x), dtype=float) + 0 * x
    if not (np.all(np.isfinite(u_prev)) and np.all(np.isfinite(velocity))):
        raise ValidationError(get_message('DataUnbounded'))
    left, right = u_prev[0], u_prev[-1]
    levels = int(round(cfg.T / tau))
    c2 = c * c

    def accel(u):
        return c2 * (_second_difference(u, h) - cfg.g(x, u))

    u_now = u_prev + tau * velocity + 0.5 * tau * tau * accel(u_prev)
    u_now[0], u_now[-1] = left, right

    rows = [u_prev, u_now]
    energies = [discrete_energy(x, u_prev, velocity, c, cfg.g, h)]
    for n in range(1, levels):
        u_next = 2.0 * u_now - u_prev + tau * tau * accel(u_now)
        u_next[0], u_next[-1] = left, right
        if not np.all(np.abs(u_next) <= settings.INSTABILITY_BOUND):
            raise Instability(get_message('WaveUnstable', settings.INSTABILITY_BOUND, (n + 1) * tau))
        energies.append(discrete_energy(x, u_now, (u_next - u_prev) / (2.0 * tau), c, cfg.g, h))
        rows.append(u_next)
        u_prev, u_now = u_now, u_next
    times = tau * np.arange(len(rows))
    scale = discrete_energy(x, rows[0], velocity, c, cfg.g, h, absolute=True)
    report = EnergyReport.from_series(times[:len(energies)], energies, scale)
    logger.info("leapfrog to T=%g: energy drift %.3g", times[-1], report.drift)
    return Field1D(x, times, np.array(rows), 0.0, None, report)


def verify_energy_identity(g=None):
    """
    Check symbolically that
    d/dt (1/2 u_t^2 + 1/2 c^2 u_x^2 + c^2 G) - d/dx (c^2 u_x u_t)
    equals c^2 u_t ((1/c^2) u_tt - u_xx + g), so E_d is conserved by
    solutions of the wave equation.
    """
    if g is None:
        g = WaveNonlinearity.cubic_quintic()
    t, c = sympy.symbols("t c", positive=True)
    u = sympy.Function("u")(X, t)
    G = g.potential.subs(U, u)
    density = sympy.Rational(1, 2) * u.diff(t) ** 2 + sympy.Rational(1, 2) * c ** 2 * u.diff(X) ** 2 + c ** 2 * G
    flux = c ** 2 * u.diff(X) * u.diff(t)
    pde = u.diff(t, 2) / c ** 2 - u.diff(X, 2) + g.expr.subs(U, u)
    return sympy.simplify(density.diff(t) - flux.diff(X) - c ** 2 * u.diff(t) * pde) == 0
