# Copyright 2026 The anomalab Authors.

"""
Exact-algebra pairings <a, phi> evaluated by quadrature on regular integrands.
"""

import math

import numpy as np
import sympy

from anomalab.errors import UnsupportedArg, ValidationError
from anomalab.messages import get_message
from anomalab.quadrature import adapt_integrate, scale_breakpoints


def pair_e1(f, reach):
    """
    <(w + i0)^(-1), f> = int_0^inf (f(w) - f(-w))/w dw - i*pi*f(0)
    for a function f supported in [-reach, reach].
    """
    value, _ = adapt_integrate(lambda w: (f(w) - f(-w)) / w, 0.0, reach,
                               breakpoints=scale_breakpoints(0.0, reach * 1e-3, reach, 3))
    return complex(value, -math.pi * float(f(np.array(0.0))))


def pair(a, phi):
    """
    Pair a DistExpr with a test function.

    Higher poles are reduced to e_1 against derivatives of phi:
    <e_(k+1), phi> = <e_1, phi^(k)>/k!.

    Parameters
        a: DistExpr - on a t-independent argument.
        phi: TestFn - with derivatives up to a.max_order - 1.

    Returns
        complex

    Raises
        UnsupportedArg - if the argument depends on t.
        QuadratureFailure - if the tolerance cannot be met.
    """
    if a.is_zero:
        return 0j
    if not a.arg.is_static:
        raise UnsupportedArg(get_message('PairArg', a.arg))
    if phi.max_order < a.max_order - 1:
        raise ValidationError(get_message('TestFnOrder', phi.max_order, a.max_order - 1))
    psi = phi.pullback(float(a.arg.alpha), float(a.arg.gamma))
    total = 0j
    for k, c in sorted(a.terms.items()):
        order = k - 1
        value = pair_e1(lambda w, order=order: psi.derivative(w, order), psi.reach)
        total += complex(sympy.N(c, 30)) * value / math.factorial(order)
    return total
