# Copyright 2026 The anomalab Authors.

"""
PkTable: the polynomials P_k with chi^(k)(x) = P_k(x) (x^2 + 1)^(-k-1/2) for
chi(x) = (x^2 + 1)^(-1/2), from P_0 = 1 and
P_(k+1) = (x^2 + 1) P_k' - (2k + 1) x P_k.
"""

import threading

import numpy as np
import sympy

_x = sympy.Symbol("x")


class PkTable:

    def __init__(self, K=8):
        self._lock = threading.Lock()
        self._polys = [sympy.Poly(1, _x, domain="ZZ")]
        self._coeffs = []
        self.extend(K)

    def extend(self, K):
        with self._lock:
            while len(self._polys) <= K:
                k = len(self._polys) - 1
                p = self._polys[-1]
                nxt = sympy.Poly(_x ** 2 + 1, _x) * p.diff(_x) - (2 * k + 1) * sympy.Poly(_x, _x) * p
                self._polys.append(nxt)
            self._coeffs = [np.array([float(c) for c in p.all_coeffs()]) for p in self._polys]

    def poly(self, k):
        self.extend(k)
        return self._polys[k]

    def at_zero(self, k):
        """P_k(0) as an exact integer."""
        return self.poly(k).eval(0)

    def chi_derivative(self, x, k):
        """chi^(k)(x)."""
        self.extend(k)
        x = np.asarray(x, dtype=float)
        return np.polyval(self._coeffs[k], x) * (x * x + 1.0) ** (-k - 0.5)

    def net_derivative(self, x, eps, k):
        """d^k/dx^k of (x^2 + eps^2)^(-1/2) = eps^(-1-k) chi^(k)(x/eps)."""
        x = np.asarray(x, dtype=float)
        return eps ** (-1.0 - k) * self.chi_derivative(x / eps, k)

    def __len__(self):
        return len(self._polys)


_shared = PkTable()


def shared_table():
    return _shared
