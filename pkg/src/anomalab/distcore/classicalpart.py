# Copyright 2026 The anomalab Authors.

"""
Classical form of boundary values:  e_1 = vp(1/w) - i*pi*delta(w)  and, by
differentiation,

    e_k = Pf(1/w^k) + c_k delta^(k-1)(w),   c_k = -i*pi*(-1)^(k-1)/(k-1)!
"""

import math

import numpy as np
import sympy

from anomalab.distcore.distexpr import as_coefficient
from anomalab.errors import UnsupportedArg
from anomalab.messages import get_message
from anomalab.quadrature import adapt_integrate, scale_breakpoints


class ClassicalPart:
    """
    sum_k p_k Pf(1/w^k) + sum_j d_j delta^(j)(w) on the argument of the source
    DistExpr. Pf(1/w) is the principal value vp(1/w).
    """

    __slots__ = ("arg", "pf_terms", "delta_terms")

    def __init__(self, arg, pf_terms=None, delta_terms=None):
        self.arg = arg
        self.pf_terms = {int(k): as_coefficient(c) for k, c in (pf_terms or {}).items()
                         if as_coefficient(c) != 0}
        self.delta_terms = {int(j): as_coefficient(c) for j, c in (delta_terms or {}).items()
                            if as_coefficient(c) != 0}

    def __eq__(self, other):
        if not isinstance(other, ClassicalPart):
            return NotImplemented
        if set(self.pf_terms) != set(other.pf_terms) or set(self.delta_terms) != set(other.delta_terms):
            return False
        same = all(sympy.expand(c - other.pf_terms[k]) == 0 for k, c in self.pf_terms.items())
        return same and all(sympy.expand(c - other.delta_terms[j]) == 0
                            for j, c in self.delta_terms.items())

    def __repr__(self):
        return "ClassicalPart(pf=%s, delta=%s)" % (self.pf_terms, self.delta_terms)


def delta_coefficient(k):
    """Coefficient of delta^(k-1) in the classical form of e_k."""
    return -sympy.I * sympy.pi * sympy.Integer(-1) ** (k - 1) / sympy.factorial(k - 1)


def decompose(a):
    """Split a DistExpr into finite parts and delta derivatives."""
    pf, delta = {}, {}
    for k, c in a.terms.items():
        pf[k] = c
        delta[k - 1] = sympy.expand(c * delta_coefficient(k))
    return ClassicalPart(a.arg, pf, delta)


SERIES_CUTOFF = 1e-2


def _finite_part(k, psi, reach):
    """
    <Pf(1/w^k), psi> by subtracting the even/odd Taylor polynomial of
    psi(w) + (-1)^k psi(-w) below degree k - 1 and adding back its
    finite-part integral over [0, reach].  Below SERIES_CUTOFF * reach the
    remainder is summed from its own Taylor terms, since the subtraction
    cancels to rounding there.
    """
    parity = (-1) ** k

    def coefficients(orders):
        return [(j, 2.0 * float(psi.derivative(0.0, j)) / math.factorial(j))
                for j in orders if (j + k) % 2 == 0 and j <= psi.max_order]

    taylor = coefficients(range(k - 1))
    series = coefficients(range(k, k + 5))
    cutoff = SERIES_CUTOFF * reach

    def integrand(w):
        w = np.asarray(w, dtype=float)
        g = psi(w) + parity * psi(-w)
        for j, a in taylor:
            g = g - a * w ** j
        with np.errstate(divide="ignore", invalid="ignore"):
            out = g / w ** k
        near = np.abs(w) < cutoff
        if near.any():
            out[near] = sum(a * w[near] ** (j - k) for j, a in series)
        return out

    breakpoints = scale_breakpoints(0.0, reach * 1e-3, reach, 3) + [cutoff]
    body, _ = adapt_integrate(integrand, 0.0, reach, breakpoints=breakpoints)
    tail = sum(a * reach ** (j - k + 1) / (j - k + 1) for j, a in taylor)
    return body + tail


def pair_classical(part, phi):
    """
    Pair a ClassicalPart with a test function on x; the argument must be
    t-independent.
    """
    arg = part.arg
    if not arg.is_static:
        raise UnsupportedArg(get_message('PairArg', arg))
    psi = phi.pullback(float(arg.alpha), float(arg.gamma))
    reach = psi.reach
    total = 0j
    for k, c in part.pf_terms.items():
        total += complex(sympy.N(c, 30)) * _finite_part(k, psi, reach)
    for j, c in part.delta_terms.items():
        total += complex(sympy.N(c, 30)) * (-1) ** j * float(psi.derivative(np.array(0.0), j))
    return total
