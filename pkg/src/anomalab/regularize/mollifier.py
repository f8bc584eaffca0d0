# Copyright 2026 The anomalab Authors.

"""
Friedrichs mollifiers: symmetric nonnegative bumps on (-1, 1) with unit mass
and closed-form derivatives, plus the blow-up constant
C_phi = int phi(y)/(1 + y) dy.
"""

import logging
import threading
from dataclasses import dataclass

import numpy as np
import sympy

from anomalab.errors import ValidationError
from anomalab.messages import get_message
from anomalab.quadrature import adapt_integrate
from anomalab.testfn import SymbolicProfile

logger = logging.getLogger(__name__)

_y = sympy.Symbol("y", real=True)
MOMENT_COUNT = 16


class Mollifier:
    """
    A mollifier phi on (-1, 1). ``exact`` is the sympy expression of the
    normalized profile when its integrals are available in closed form.
    """

    def __init__(self, name, expr, polynomial=False):
        self.name = name
        self.polynomial = polynomial
        self._profile = SymbolicProfile(expr, _y, name)
        self._lock = threading.Lock()
        self._moments = None
        if polynomial:
            mass = sympy.integrate(expr, (_y, -1, 1))
            self.exact = sympy.simplify(expr / mass)
            self.normalization = float(1 / mass)
        else:
            self.exact = None
            mass, _ = adapt_integrate(lambda y: self._profile(y), -1.0, 1.0, tol=1e-14, rel_tol=1e-13)
            self.normalization = 1.0 / mass
        logger.debug("mollifier %s normalization %.17g", name, self.normalization)

    def __call__(self, y, order=0):
        return self.normalization * self._profile(y, order)

    def scaled(self, x, eps, order=0):
        """phi_eps^(order)(x) with phi_eps(x) = phi(x/eps)/eps."""
        x = np.asarray(x, dtype=float)
        return eps ** (-1 - order) * self(x / eps, order)

    def moments(self):
        """Even moments int y^(2j) phi(y) dy for j < MOMENT_COUNT."""
        with self._lock:
            if self._moments is None:
                values = []
                for j in range(MOMENT_COUNT):
                    value, _ = adapt_integrate(lambda y, j=j: y ** (2 * j) * self(y), -1.0, 1.0,
                                               tol=1e-14, rel_tol=1e-13)
                    values.append(value)
                self._moments = np.array(values)
            return self._moments

    def __repr__(self):
        return "Mollifier(%r)" % self.name


_registry = {}
_registry_lock = threading.Lock()

_BUILTINS = {
    "poly4": lambda: Mollifier("poly4", sympy.Rational(15, 16) * (1 - _y ** 2) ** 2, polynomial=True),
    "smooth": lambda: Mollifier("smooth", sympy.exp(-1 / (1 - _y ** 2))),
}


def mollifier_names():
    return sorted(_BUILTINS)


def get_mollifier(name):
    """Built-in mollifier by name ("poly4" or "smooth")."""
    if isinstance(name, Mollifier):
        return name
    if name not in _BUILTINS:
        raise ValidationError(get_message('UnknownMollifier', name, ", ".join(mollifier_names())))
    with _registry_lock:
        if name not in _registry:
            _registry[name] = _BUILTINS[name]()
        return _registry[name]


@dataclass(frozen=True)
class BlowupPrediction:
    """
    C_phi and the predicted blow-up time t_pred = eps/(c C_phi) of the
    Friedrichs-regularized Riccati problem.
    """
    C_phi: float
    exact: object
    provenance: str

    def t_pred(self, eps, c=1.0):
        return eps / (c * self.C_phi)


def blowup_constant(m):
    """
    Compute C_phi = int phi(y)/(1 + y) dy, symbolically for polynomial
    mollifiers and by quadrature otherwise.
    """
    m = get_mollifier(m)
    if m.exact is not None:
        exact = sympy.integrate(sympy.cancel(m.exact / (1 + _y)), (_y, -1, 1))
        return BlowupPrediction(float(exact), exact, "symbolic")
    value, _ = adapt_integrate(lambda y: m(y) / (1.0 + y), -1.0, 1.0, tol=1e-12, rel_tol=1e-13)
    return BlowupPrediction(value, None, "quadrature")
