# Copyright 2026 The anomalab Authors.

"""
ReactionSpec: the advection-reaction equation (1/c) u_t + u_x = f(x, u)
with a polynomial reaction term f.
"""

import sympy

from anomalab.errors import ValidationError
from anomalab.messages import get_message

X, U = sympy.symbols("x u")


class ReactionSpec:
    """
    Attributes
        name: str - "riccati", "cubic_x", "power_p" or "custom".
        c: float - advection speed, nonzero.
        expr: sympy expression of f(x, u), polynomial in both.
        degree: int - degree of f in u.
    """

    def __init__(self, name, expr, c=1.0, **meta):
        if c == 0:
            raise ValidationError(get_message('SpeedNonzero'))
        expr = sympy.sympify(expr)
        if not expr.is_polynomial(X, U):
            raise ValidationError(get_message('UnknownReaction', str(expr)))
        self.name = name
        self.expr = expr
        self.c = float(c)
        self.meta = meta
        self.degree = int(sympy.degree(expr, U)) if expr != 0 else 0
        self._func = sympy.lambdify((X, U), expr, modules="numpy")

    @classmethod
    def riccati(cls, c=1.0):
        """f = -u^2."""
        return cls("riccati", -U ** 2, c)

    @classmethod
    def cubic_x(cls, c=1.0):
        """f = -x u^3."""
        return cls("cubic_x", -X * U ** 3, c)

    @classmethod
    def power_p(cls, p, c=1.0):
        """f = -(2/p) x u^(p+1); its stationary net is (x^2 + eps^2)^(-1/p)."""
        if not isinstance(p, int) or p < 1:
            raise ValidationError(get_message('BadPower', p))
        return cls("power_p", -sympy.Rational(2, p) * X * U ** (p + 1), c, p=p)

    @classmethod
    def polynomial(cls, expr, c=1.0):
        """A custom reaction given as a sympy expression or string in x and u."""
        return cls("custom", sympy.sympify(expr, locals={"x": X, "u": U}), c)

    @classmethod
    def from_name(cls, name, c=1.0, p=None):
        if name == "riccati":
            return cls.riccati(c)
        if name == "cubic_x":
            return cls.cubic_x(c)
        if name == "power_p":
            return cls.power_p(p, c)
        raise ValidationError(get_message('UnknownReaction', name))

    def __call__(self, x, u):
        return self._func(x, u) + 0 * u

    def __repr__(self):
        return "ReactionSpec(%s, f=%s, c=%g)" % (self.name, self.expr, self.c)
