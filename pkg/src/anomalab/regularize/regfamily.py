# Copyright 2026 The anomalab Authors.

"""
RegFamily: a one-parameter family of smooth functions u_eps indexed by
eps > 0, together with its x-derivatives.
"""

import threading

import numpy as np
import sympy

from anomalab.errors import ValidationError
from anomalab.messages import get_message
from anomalab.regularize.kernels import _check_eps, analytic_reg, friedrichs_reg, poisson_reg
from anomalab.regularize.mollifier import get_mollifier

_s = sympy.Symbol("s", real=True)


class _ScaledPower:
    """
    (s^2 + 1)^q with cached compiled derivatives; eps^(2q) g(x/eps) then
    gives (x^2 + eps^2)^q.
    """

    def __init__(self, q):
        self.q = sympy.nsimplify(q)
        self._lock = threading.Lock()
        self._funcs = [sympy.lambdify(_s, (_s ** 2 + 1) ** self.q, modules="numpy")]
        self._last = (_s ** 2 + 1) ** self.q

    def __call__(self, x, eps, order=0):
        with self._lock:
            while len(self._funcs) <= order:
                self._last = sympy.diff(self._last, _s)
                self._funcs.append(sympy.lambdify(_s, self._last, modules="numpy"))
            func = self._funcs[order]
        y = np.asarray(x, dtype=float) / eps
        values = np.broadcast_to(np.asarray(func(y), dtype=float), y.shape)
        return eps ** (2 * float(self.q) - order) * values


class RegFamily:
    """
    Attributes
        kind: str - "analytic", "friedrichs", "poisson", "chi" or "radial".
        meta: dict - the family parameters (k, p, n, q, mollifier, part).
    """

    def __init__(self, kind, evaluator, **meta):
        self.kind = kind
        self.meta = meta
        self._evaluator = evaluator

    @classmethod
    def analytic(cls, k):
        """(x + i eps)^(-k)."""
        if not isinstance(k, int) or k < 1:
            raise ValidationError(get_message('BadPower', k))
        return cls("analytic", lambda x, eps, order: analytic_reg(k, eps, x, order), k=k)

    @classmethod
    def friedrichs(cls, u, m="poly4", part="full"):
        m = get_mollifier(m)
        return cls("friedrichs",
                   lambda x, eps, order: friedrichs_reg(u, m, eps, x, order, part),
                   u=u, mollifier=m.name, part=part)

    @classmethod
    def poisson(cls, u):
        return cls("poisson", lambda x, eps, order: poisson_reg(u, eps, x, order), u=u)

    @classmethod
    def chi(cls, p):
        """
        (x^2 + eps^2)^(-1/p), the stationary solution of
        (1/c) u_t + u_x + (2/p) x u^(p+1) = 0.
        """
        if not p > 0:
            raise ValidationError(get_message('BadPower', p))
        power = _ScaledPower(-sympy.Rational(1) / sympy.nsimplify(p))
        return cls("chi", power, p=p)

    @classmethod
    def radial(cls, n, q):
        """(|x|^2 + eps^2)^q as a function of r = |x| on R^n."""
        return cls("radial", _ScaledPower(q), n=n, q=q)

    def __call__(self, x, eps, order=0):
        _check_eps(eps)
        return self._evaluator(x, eps, order)

    def __repr__(self):
        params = ", ".join("%s=%r" % item for item in sorted(self.meta.items()) if item[0] != "u")
        return "RegFamily.%s(%s)" % (self.kind, params)


def family_names():
    return ["analytic", "friedrichs", "poisson", "chi", "radial"]
