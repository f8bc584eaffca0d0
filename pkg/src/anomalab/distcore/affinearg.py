# Copyright 2026 The anomalab Authors.

"""
AffineArg: the argument w = alpha*x + beta*t + gamma of a boundary value
(w + i0)^(-k), with exact rational coefficients.
"""

from fractions import Fraction

import sympy

from anomalab.errors import ValidationError
from anomalab.messages import get_message


def as_rational(value):
    """
    Read an exact rational from an int, Fraction, sympy Rational, a decimal
    float or a "p/q" string.
    """
    if isinstance(value, sympy.Rational):
        return value
    if isinstance(value, bool):
        raise ValidationError(get_message('BadRational', value))
    if isinstance(value, int):
        return sympy.Integer(value)
    if isinstance(value, Fraction):
        return sympy.Rational(value.numerator, value.denominator)
    if isinstance(value, (float, str)):
        try:
            frac = Fraction(str(value).strip())
        except (ValueError, ZeroDivisionError):
            raise ValidationError(get_message('BadRational', value))
        return sympy.Rational(frac.numerator, frac.denominator)
    value = sympy.sympify(value)
    if value.is_Rational:
        return value
    raise ValidationError(get_message('BadRational', value))


class AffineArg:
    """
    w = alpha*x + beta*t + gamma.

    The canonical form divides by |first nonzero of (alpha, beta)|, so the
    leading coefficient is +1 or -1. A leading -1 is the conjugate
    orientation: (w + i0)^(-k) is then a boundary value from the lower half
    plane in x.
    """

    __slots__ = ("alpha", "beta", "gamma")

    def __init__(self, alpha=1, beta=0, gamma=0):
        alpha, beta, gamma = as_rational(alpha), as_rational(beta), as_rational(gamma)
        if alpha == 0 and beta == 0:
            raise ValidationError(get_message('ArgDegenerate'))
        object.__setattr__(self, "alpha", alpha)
        object.__setattr__(self, "beta", beta)
        object.__setattr__(self, "gamma", gamma)

    def __setattr__(self, name, value):
        raise AttributeError(get_message('AttrCannotBeAdded', type(self).__name__))

    @classmethod
    def x(cls):
        return cls(1, 0, 0)

    @classmethod
    def traveling(cls, a, b, c):
        """w = a*x + b*c*t, the argument of 1/(ax + bct + i0)."""
        a, b, c = as_rational(a), as_rational(b), as_rational(c)
        return cls(a, b * c, 0)

    @property
    def lead(self):
        return self.alpha if self.alpha != 0 else self.beta

    def scale(self):
        """The positive factor s with self = s * self.normalized()."""
        return abs(self.lead)

    def normalized(self):
        s = self.scale()
        if s == 1:
            return self
        return AffineArg(self.alpha / s, self.beta / s, self.gamma / s)

    @property
    def orientation(self):
        return 1 if self.lead > 0 else -1

    @property
    def is_static(self):
        return self.beta == 0

    @property
    def is_identity(self):
        return self.alpha == 1 and self.beta == 0 and self.gamma == 0

    def as_tuple(self):
        return (self.alpha, self.beta, self.gamma)

    def __eq__(self, other):
        if not isinstance(other, AffineArg):
            return NotImplemented
        return self.as_tuple() == other.as_tuple()

    def __hash__(self):
        return hash(self.as_tuple())

    def __repr__(self):
        x, t = sympy.symbols("x t")
        return "w = %s" % (self.alpha * x + self.beta * t + self.gamma)
