# Copyright 2026 The anomalab Authors.

"""
Fourier side of the algebra, with F phi(xi) = int exp(-2 pi i x xi) phi(x) dx.

Every e_k transforms to a monomial supported on the half line:
F e_(k+1) = ((-2 pi i)^(k+1)/k!) xi^k H(xi), and products become one-sided
convolutions (c1 xi^m H) * (c2 xi^n H) = c1 c2 m! n!/(m+n+1)! xi^(m+n+1) H.
"""

import sympy

from anomalab.distcore.distexpr import as_coefficient
from anomalab.errors import UnsupportedArg
from anomalab.messages import get_message


class FourierMonomial:
    """c * xi^m * H(xi) with an exact coefficient."""

    __slots__ = ("m", "c")

    def __init__(self, m, c):
        self.m = int(m)
        self.c = as_coefficient(c)

    def as_parts(self):
        """
        (rational, pi_power, i_power) with c = rational * pi**pi_power * i**i_power,
        or None when c is not such a monomial.
        """
        for q in range(4):
            d = sympy.expand(self.c / sympy.I ** q)
            if not d.is_real:
                continue
            r, rest = d.as_coeff_Mul()
            if rest == 1:
                return (r, 0, q)
            base, exp = rest.as_base_exp()
            if base == sympy.pi and exp.is_Integer:
                return (r, int(exp), q)
        return None

    def __eq__(self, other):
        if not isinstance(other, FourierMonomial):
            return NotImplemented
        return self.m == other.m and sympy.expand(self.c - other.c) == 0

    def __hash__(self):
        return hash((self.m, sympy.srepr(self.c)))

    def __repr__(self):
        return "FourierMonomial((%s)*xi^%d*H)" % (self.c, self.m)


def fourier(a):
    """
    Transform a DistExpr on w = x into Fourier monomials, one per term,
    ordered by degree.

    Raises
        UnsupportedArg - for t-dependent, shifted or reflected arguments.
    """
    if not a.is_zero and not a.arg.is_identity:
        raise UnsupportedArg(get_message('FourierArg', a.arg))
    out = []
    for k, c in sorted(a.terms.items()):
        coeff = c * (-2 * sympy.pi * sympy.I) ** k / sympy.factorial(k - 1)
        out.append(FourierMonomial(k - 1, coeff))
    return out


def conv_fourier(f, g):
    """One-sided convolution of two monomials."""
    m, n = f.m, g.m
    factor = sympy.factorial(m) * sympy.factorial(n) / sympy.factorial(m + n + 1)
    return FourierMonomial(m + n + 1, f.c * g.c * factor)


def collect(monomials):
    """Merge monomials of equal degree, dropping zeros; sorted by degree."""
    acc = {}
    for mono in monomials:
        acc[mono.m] = acc.get(mono.m, 0) + mono.c
    return [FourierMonomial(m, c) for m, c in sorted(acc.items()) if sympy.expand(c) != 0]
