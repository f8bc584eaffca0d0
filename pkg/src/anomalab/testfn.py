# Copyright 2026 The anomalab Authors.

"""
Test functions used as pairing weights: compactly supported profiles on the
line (TestFn) and radial profiles on R^n (RadialTestFn). Derivatives come from
sympy closed forms compiled with lambdify, never from differencing.
"""

import threading

import numpy as np
import sympy

from anomalab.errors import ValidationError
from anomalab.messages import get_message


class SymbolicProfile:
    """
    A closed-form profile g(y) supported in |y| < 1 (or 0 <= y < 1 for radial
    use) with compiled derivatives of every order.
    """

    def __init__(self, expr, symbol, name=""):
        self.expr = sympy.sympify(expr)
        self.symbol = symbol
        self.name = name
        self._lock = threading.Lock()
        self._exprs = [self.expr]
        self._funcs = {}

    def derivative_expr(self, order):
        with self._lock:
            while len(self._exprs) <= order:
                self._exprs.append(sympy.diff(self._exprs[-1], self.symbol))
            return self._exprs[order]

    def _compiled(self, order):
        func = self._funcs.get(order)
        if func is None:
            func = sympy.lambdify(self.symbol, self.derivative_expr(order), modules="numpy")
            self._funcs[order] = func
        return func

    def __call__(self, y, order=0):
        """Evaluate the order-th derivative at y, zero outside |y| < 1."""
        y = np.asarray(y, dtype=float)
        out = np.zeros(y.shape)
        inside = np.abs(y) < 1.0
        if inside.any():
            with np.errstate(all="ignore"):
                vals = np.broadcast_to(
                    np.asarray(self._compiled(order)(y[inside]), dtype=float), y[inside].shape)
            out[inside] = np.where(np.isfinite(vals), vals, 0.0)
        return out


_y = sympy.Symbol("y", real=True)

BUMP = SymbolicProfile(sympy.exp(1 - 1 / (1 - _y ** 2)), _y, "bump")


class TestFn:
    """
    A test function phi(x) = height * g((x - center)/radius) for a profile g
    supported in (-1, 1).

    Attributes
        center, radius: support is [center - radius, center + radius].
        max_order: highest derivative order available.
        smoothness: "C^inf" or "C^m".
    """

    __test__ = False

    def __init__(self, profile, center=0.0, radius=1.0, height=1.0, max_order=12,
                 smoothness="C^inf", scale=1.0):
        if radius <= 0:
            raise ValidationError(get_message('EpsPositive', radius))
        self.profile = profile
        self.center = float(center)
        self.radius = float(radius)
        self.height = float(height)
        self.max_order = max_order
        self.smoothness = smoothness
        # orientation of the argument, +1 or -1 after a pullback
        self._scale = float(scale)

    @classmethod
    def bump(cls, center=0.0, radius=1.0, height=1.0):
        """exp(1 - 1/(1 - y^2)) scaled so that phi(center) = height."""
        return cls(BUMP, center, radius, height)

    @classmethod
    def from_expr(cls, expr, symbol, center=0.0, radius=1.0, max_order=12, smoothness="C^inf"):
        return cls(SymbolicProfile(expr, symbol), center, radius, 1.0, max_order, smoothness)

    @property
    def support(self):
        return (self.center - self.radius, self.center + self.radius)

    @property
    def reach(self):
        """Largest |x| in the support."""
        return abs(self.center) + self.radius

    def derivative(self, x, order=0):
        if order > self.max_order:
            raise ValidationError(get_message('TestFnOrder', self.max_order, order))
        x = np.asarray(x, dtype=float)
        y = self._scale * (x - self.center) / self.radius
        factor = self.height * (self._scale / self.radius) ** order
        return factor * self.profile(y, order)

    def __call__(self, x):
        return self.derivative(x, 0)

    def pullback(self, alpha, gamma):
        """
        The test function psi(w) = phi((w - gamma)/alpha) for alpha = +1 or -1.
        """
        alpha = float(alpha)
        return TestFn(self.profile, alpha * self.center + gamma, self.radius * abs(alpha),
                      self.height, self.max_order, self.smoothness,
                      scale=self._scale * np.sign(alpha))


class RadialTestFn:
    """
    A radial profile phi(r) on [0, R], two or more times continuously
    differentiable, even in r so that phi(|x|) is C^2 on R^n.
    """

    __test__ = False

    def __init__(self, expr, symbol, R=1.0, name=""):
        self.R = float(R)
        self.name = name or str(expr)
        self._profile = SymbolicProfile(expr, symbol, self.name)
        self._symbol = symbol

    def derivative(self, r, order=0):
        r = np.asarray(r, dtype=float)
        return self.R ** (-order) * self._profile(r / self.R, order)

    def __call__(self, r):
        return self.derivative(r, 0)

    def laplacian(self, r, n):
        """phi'' + (n - 1) phi'/r, the Laplacian of phi(|x|) in R^n."""
        r = np.asarray(r, dtype=float)
        with np.errstate(divide="ignore", invalid="ignore"):
            first = np.where(r > 0, self.derivative(r, 1) / r, self.derivative(0.0 * r, 2))
        return self.derivative(r, 2) + (n - 1) * first


def radial_profiles():
    """Five independent radial test profiles."""
    s = sympy.Symbol("s", real=True)
    return [
        RadialTestFn((1 - s ** 2) ** 3, s, 1.0, "poly3"),
        RadialTestFn((1 - s ** 2) ** 4, s, 2.0, "poly4-wide"),
        RadialTestFn(sympy.exp(1 - 1 / (1 - s ** 2)), s, 1.5, "bump"),
        RadialTestFn((1 + s ** 2) * (1 - s ** 2) ** 4, s, 1.0, "poly-mixed"),
        RadialTestFn(s ** 2 * (1 - s ** 2) ** 3, s, 1.2, "ring"),
    ]
