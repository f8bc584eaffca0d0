# Copyright 2026 The anomalab Authors.

"""
DistExpr: finite sums  sum_k c_k (w + i0)^(-k)  on a single affine argument.

With e_k = (w + i0)^(-k) the algebra is governed by

    e_j * e_k = e_(j+k)        d/dw e_k = -k e_(k+1)

and the chain rule d/dx = alpha d/dw, d/dt = beta d/dw. Coefficients are
exact sympy numbers (complex rationals times powers of pi).

>>> from anomalab.distcore import DistExpr, mul, diff
>>> u0 = DistExpr.basis(1)
>>> mul(u0, u0) == -diff(u0, 'x')
True
"""

from fractions import Fraction

import sympy

from anomalab.distcore.affinearg import AffineArg
from anomalab.errors import ArgMismatch, ValidationError
from anomalab.messages import get_message


def as_coefficient(value):
    if isinstance(value, Fraction):
        return sympy.Rational(value.numerator, value.denominator)
    return sympy.expand(sympy.sympify(value))


def _is_scalar(value):
    return isinstance(value, (int, Fraction, sympy.Basic)) and not isinstance(value, bool)


class DistExpr:
    """
    Immutable element of the algebra generated by (w + i0)^(-1).

    Attributes
        arg: AffineArg in canonical form.
        terms: dict k -> coefficient, no zero coefficients stored.
    """

    __slots__ = ("arg", "terms", "_key")

    def __init__(self, arg=None, terms=None):
        arg = AffineArg.x() if arg is None else arg
        s = arg.scale()
        canon = {}
        for k, c in (terms or {}).items():
            k = int(k)
            if k < 1:
                raise ValidationError(get_message('BadPower', k))
            c = as_coefficient(c)
            if s != 1:
                c = sympy.expand(c * s ** (-k))
            if c != 0:
                canon[k] = c
        object.__setattr__(self, "arg", arg.normalized())
        object.__setattr__(self, "terms", canon)
        object.__setattr__(self, "_key", None)

    def __setattr__(self, name, value):
        raise AttributeError(get_message('AttrCannotBeAdded', type(self).__name__))

    @classmethod
    def basis(cls, k, arg=None, coeff=1):
        """coeff * e_k on the argument arg (default w = x)."""
        if not isinstance(k, int) or k < 1:
            raise ValidationError(get_message('BadPower', k))
        return cls(arg, {k: coeff})

    @classmethod
    def zero(cls, arg=None):
        return cls(arg, {})

    @property
    def is_zero(self):
        return not self.terms

    @property
    def max_order(self):
        return max(self.terms) if self.terms else 0

    def coefficient(self, k):
        return self.terms.get(k, sympy.Integer(0))

    def scaled(self, factor):
        factor = as_coefficient(factor)
        return DistExpr(self.arg, {k: c * factor for k, c in self.terms.items()})

    def _check_same_arg(self, other):
        if self.is_zero or other.is_zero:
            return
        if self.arg != other.arg:
            raise ArgMismatch(get_message('ArgMismatch', self.arg, other.arg))

    def __add__(self, other):
        if not isinstance(other, DistExpr):
            return NotImplemented
        self._check_same_arg(other)
        if self.is_zero:
            return other
        terms = dict(self.terms)
        for k, c in other.terms.items():
            terms[k] = terms.get(k, 0) + c
        return DistExpr(self.arg, terms)

    def __neg__(self):
        return self.scaled(-1)

    def __sub__(self, other):
        if not isinstance(other, DistExpr):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, DistExpr):
            return mul(self, other)
        if _is_scalar(other):
            return self.scaled(other)
        return NotImplemented

    def __rmul__(self, other):
        if _is_scalar(other):
            return self.scaled(other)
        return NotImplemented

    def __pow__(self, p):
        if not isinstance(p, int) or p < 1:
            raise ValidationError(get_message('BadPower', p))
        out = self
        for _ in range(p - 1):
            out = mul(out, self)
        return out

    def _canonical_key(self):
        if self._key is None:
            key = (self.arg if self.terms else None,
                   tuple(sorted((k, sympy.srepr(c)) for k, c in self.terms.items())))
            object.__setattr__(self, "_key", key)
        return self._key

    def __eq__(self, other):
        if not isinstance(other, DistExpr):
            return NotImplemented
        if self.is_zero or other.is_zero:
            return self.is_zero and other.is_zero
        if self.arg != other.arg or set(self.terms) != set(other.terms):
            return False
        return all(sympy.expand(c - other.terms[k]) == 0 for k, c in self.terms.items())

    def __hash__(self):
        return hash(self._canonical_key())

    def __repr__(self):
        if self.is_zero:
            return "DistExpr(0)"
        body = " + ".join("(%s)*e_%d" % (c, k) for k, c in sorted(self.terms.items()))
        return "DistExpr(%s; %s)" % (body, self.arg)


def mul(a, b):
    """
    Product in the algebra: bilinear extension of e_j * e_k = e_(j+k).

    Raises
        ArgMismatch - if the two arguments differ; the product of boundary
        values on different arguments is not defined here.
    """
    if a.is_zero or b.is_zero:
        return DistExpr.zero(a.arg)
    a._check_same_arg(b)
    terms = {}
    for j, cj in a.terms.items():
        for k, ck in b.terms.items():
            terms[j + k] = terms.get(j + k, 0) + cj * ck
    return DistExpr(a.arg, terms)


def diff(a, var="x"):
    """Partial derivative in x or t through d/dw e_k = -k e_(k+1)."""
    if var not in ("x", "t"):
        raise ValidationError(get_message('BadVariable', var))
    factor = a.arg.alpha if var == "x" else a.arg.beta
    if factor == 0 or a.is_zero:
        return DistExpr.zero(a.arg)
    return DistExpr(a.arg, {k + 1: -k * factor * c for k, c in a.terms.items()})


def hormander_compatible(a, b):
    """
    True when the product of a and b is covered by the wavefront criterion
    in this algebra: one factor vanishes or both share the oriented argument.
    """
    if a.is_zero or b.is_zero:
        return True
    return a.arg == b.arg
